#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hullx {

/// Exact rational scalar. GMP keeps every result in canonical form
/// (positive denominator, coprime numerator and denominator).
using Rational = mpq_class;

/// A point or direction in R^d with exact coordinates.
using RatVector = std::vector<Rational>;

/// num/den in canonical form. (The two-argument mpq_class constructor leaves
/// common factors in place, and comparisons assume canonical operands.)
inline Rational make_rational(const mpz_class& num, const mpz_class& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "-p" or "p/q". Decimal and exponent literals are rejected with
/// a message suggesting the equivalent fraction.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" for integers).
std::string to_string(const Rational& value);
std::string to_string(std::span<const Rational> v);

/// Parses a comma separated coordinate list such as "1/2,3".
RatVector parse_vector(std::string_view text);

RatVector sub(std::span<const Rational> a, std::span<const Rational> b);
RatVector add(std::span<const Rational> a, std::span<const Rational> b);
RatVector scale(std::span<const Rational> a, const Rational& s);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
bool is_zero(std::span<const Rational> a);

/// Dense row-major rational matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix from_rows(std::span<const RatVector> rows, std::size_t cols);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  RatVector apply(std::span<const Rational> x) const;
  RatMatrix transpose() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace hullx
