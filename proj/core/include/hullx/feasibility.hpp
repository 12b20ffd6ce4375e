#pragma once

#include <optional>
#include <vector>

#include "hullx/rational.hpp"

namespace hullx {

/// Linear feasibility problem { x : A x = b } with per-variable sign
/// constraints. A variable is free, non-negative, or strictly positive
/// (strict implies non-negative).
struct FeasibilitySystem {
  RatMatrix eq_matrix;
  RatVector rhs;
  std::vector<bool> nonneg;
  std::vector<bool> strict;

  /// A system over `vars` variables, all non-negative and non-strict.
  static FeasibilitySystem with_vars(std::size_t rows, std::size_t vars);
};

struct FeasibilityResult {
  bool feasible = false;
  /// Exact solution respecting every constraint; empty when infeasible.
  RatVector witness;
};

/// Decides feasibility exactly with a two-phase simplex on a rational tableau
/// using Bland's rule (lowest index enters, lowest basic index leaves on ties).
///
/// Strict variables are handled by writing x_j = s_j + t with s_j >= 0 and
/// maximising the shared slack t subject to t + w = 1, w >= 0. The strict
/// system is feasible iff the exact optimum t* is positive.
FeasibilityResult lp_feasible(const FeasibilitySystem& sys);

/// Exact re-evaluation of every constraint at `x`.
bool satisfies(const FeasibilitySystem& sys, const RatVector& x);

}  // namespace hullx
