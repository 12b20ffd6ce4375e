#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hullx/rational.hpp"

namespace hullx {

/// Reduced row echelon form. `pivots[i]` is the pivot column of row i; rows
/// beyond `pivots.size()` are zero and have been dropped.
struct RowEchelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon row_reduce(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Dimension of the affine hull of `points`. Throws on an empty list.
std::size_t affine_rank(std::span<const RatVector> points);

/// One exact solution of a x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero, so the result is deterministic.
std::optional<RatVector> solve_linear(const RatMatrix& a, std::span<const Rational> b);

/// Basis of {x : a x = 0}, one vector per free column of the echelon form.
std::vector<RatVector> nullspace(const RatMatrix& a);

Rational determinant(const RatMatrix& m);

/// Coordinates on the affine hull of a point set.
///
/// The chart selects `dim()` pivot axes on which the projection is injective
/// over the hull, so `project` is an affine isomorphism from the hull onto
/// R^dim. `basis` rows span the hull's direction space and restrict to the
/// identity on the pivot axes, hence x = origin + sum_i project(x)_i basis_i.
class AffineChart {
 public:
  AffineChart(std::span<const RatVector> points);

  std::size_t dim() const { return pivots_.size(); }
  std::size_t ambient_dim() const { return origin_.size(); }
  const RatVector& origin() const { return origin_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const RatMatrix& basis() const { return basis_; }

  RatVector project(std::span<const Rational> x) const;
  RatVector project_direction(std::span<const Rational> v) const;
  RatVector lift(std::span<const Rational> y) const;

  /// det(B B^T): the squared factor by which the chart shrinks k-volumes.
  Rational metric() const;

 private:
  RatVector origin_;
  std::vector<std::size_t> pivots_;
  RatMatrix basis_;
};

}  // namespace hullx
