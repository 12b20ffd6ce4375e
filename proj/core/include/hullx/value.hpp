#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "hullx/rational.hpp"

namespace hullx {

/// A number that is exact when every contribution was exact and a double as
/// soon as one contribution was not.
class Value {
 public:
  Value() : v_(Rational(0)) {}
  Value(Rational q) : v_(std::move(q)) {}
  Value(double x) : v_(x) {}
  Value(std::int64_t n) : v_(Rational(static_cast<long>(n))) {}
  Value(int n) : v_(Rational(n)) {}

  bool is_exact() const { return std::holds_alternative<Rational>(v_); }
  const Rational& exact() const { return std::get<Rational>(v_); }
  double approx() const { return is_exact() ? exact().get_d() : std::get<double>(v_); }

  /// "p/q" for exact values, shortest round-trip decimal otherwise.
  std::string to_string() const;

  Value& operator+=(const Value& other);
  Value& operator*=(int factor);

  friend Value operator+(Value a, const Value& b) { return a += b; }
  friend Value operator*(int factor, Value v) { return v *= factor; }

 private:
  std::variant<Rational, double> v_;
};

}  // namespace hullx
