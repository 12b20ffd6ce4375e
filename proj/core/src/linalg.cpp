#include "hullx/linalg.hpp"

#include <utility>

#include "hullx/errors.hpp"

namespace hullx {

RowEchelon row_reduce(const RatMatrix& m) {
  RatMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    }
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(a(r, j)) != 0) a(i, j) -= f * a(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  RatMatrix reduced(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) reduced(i, j) = a(i, j);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const RatMatrix& m) { return row_reduce(m).pivots.size(); }

std::size_t affine_rank(std::span<const RatVector> points) {
  if (points.empty()) throw InvalidArgument("empty point set");
  const std::size_t d = points.front().size();
  std::vector<RatVector> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].size() != d) throw InvalidArgument("points of unequal length");
    diffs.push_back(sub(points[i], points.front()));
  }
  return rank(RatMatrix::from_rows(diffs, d));
}

std::optional<RatVector> solve_linear(const RatMatrix& a, std::span<const Rational> b) {
  if (a.rows() != b.size()) throw InvalidArgument("solve_linear: shape mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const RowEchelon e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  RatVector x(a.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, a.cols());
  return x;
}

std::vector<RatVector> nullspace(const RatMatrix& a) {
  const RowEchelon e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(a.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

AffineChart::AffineChart(std::span<const RatVector> points) {
  if (points.empty()) throw InvalidArgument("empty point set");
  origin_ = points.front();
  std::vector<RatVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].size() != origin_.size()) throw InvalidArgument("points of unequal length");
    diffs.push_back(sub(points[i], origin_));
  }
  RowEchelon e = row_reduce(RatMatrix::from_rows(diffs, origin_.size()));
  basis_ = std::move(e.reduced);
  pivots_ = std::move(e.pivots);
  if (basis_.rows() == 0) basis_ = RatMatrix(0, origin_.size());
}

RatVector AffineChart::project(std::span<const Rational> x) const {
  RatVector y(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) y[i] = x[pivots_[i]] - origin_[pivots_[i]];
  return y;
}

RatVector AffineChart::project_direction(std::span<const Rational> v) const {
  RatVector y(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) y[i] = v[pivots_[i]];
  return y;
}

RatVector AffineChart::lift(std::span<const Rational> y) const {
  RatVector x = origin_;
  for (std::size_t i = 0; i < pivots_.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += y[i] * basis_(i, j);
  return x;
}

Rational AffineChart::metric() const {
  const std::size_t k = dim();
  RatMatrix gram(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(basis_.row(i), basis_.row(j));
  return determinant(gram);
}

}  // namespace hullx
