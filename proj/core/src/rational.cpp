#include "hullx/rational.hpp"

#include <algorithm>
#include <cctype>

#include "hullx/errors.hpp"

namespace hullx {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// "-1.25" -> "-5/4", or empty when the literal is not a plain decimal.
std::string decimal_as_fraction(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto dot = s.find('.');
  if (dot == std::string_view::npos) return {};
  std::string_view whole = s.substr(0, dot);
  std::string_view frac = s.substr(dot + 1);
  if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
      (whole.empty() && frac.empty())) {
    return {};
  }
  mpz_class num(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  Rational q(num, den);
  q.canonicalize();
  if (negative) q = -q;
  return q.get_str();
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty rational literal");
  std::string_view body = s;
  if (body.front() == '-' || body.front() == '+') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    if (const auto fraction = decimal_as_fraction(s); !fraction.empty()) {
      throw ParseError("floating-point literal '" + std::string(s) +
                       "' is not accepted in exact mode; write it as \"" + fraction + "\"");
    }
    throw ParseError("malformed rational '" + std::string(s) + "'; expected p or p/q");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(1);
  if (slash != std::string_view::npos) {
    d = mpz_class(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  }
  if (s.front() == '-') n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(std::span<const Rational> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + ")";
}

RatVector parse_vector(std::string_view text) {
  RatVector out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

RatVector sub(std::span<const Rational> a, std::span<const Rational> b) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVector add(std::span<const Rational> a, std::span<const Rational> b) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVector scale(std::span<const Rational> a, const Rational& s) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) acc += a[i] * b[i];
  }
  return acc;
}

bool is_zero(std::span<const Rational> a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return sgn(x) == 0; });
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix RatMatrix::from_rows(std::span<const RatVector> rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidArgument("ragged matrix rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVector RatMatrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw InvalidArgument("matrix-vector shape mismatch");
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = dot(row(r), x);
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

}  // namespace hullx
