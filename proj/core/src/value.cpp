#include "hullx/value.hpp"

#include <charconv>

namespace hullx {

std::string Value::to_string() const {
  if (is_exact()) return exact().get_str();
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, std::get<double>(v_));
  return std::string(buf, res.ptr);
}

Value& Value::operator+=(const Value& other) {
  if (is_exact() && other.is_exact()) {
    std::get<Rational>(v_) += other.exact();
  } else {
    v_ = approx() + other.approx();
  }
  return *this;
}

Value& Value::operator*=(int factor) {
  if (is_exact()) {
    std::get<Rational>(v_) *= factor;
  } else {
    std::get<double>(v_) *= factor;
  }
  return *this;
}

}  // namespace hullx
