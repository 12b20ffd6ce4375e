#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "hullx/geometry.hpp"
#include "hullx/identities.hpp"

namespace hullx {

enum class DistributionKind { kUniformBall, kUniformCube, kGaussian };

std::string_view distribution_name(DistributionKind kind);
/// "uniform-ball", "uniform-cube" or "gaussian".
DistributionKind parse_distribution(std::string_view name);

/// i.i.d. law of the sample points. The ball is the closed unit ball at the
/// origin and the cube is [0,1]^d. Every coordinate is rounded to a multiple
/// of 1/precision.
struct Distribution {
  DistributionKind kind = DistributionKind::kUniformCube;
  std::size_t dim = 2;
  std::uint64_t precision = std::uint64_t{1} << 32;
};

/// n points drawn from stream `stream` of `seed`. Points that round onto an
/// earlier one are drawn again; `duplicates` (if given) receives how many.
Configuration sample_config(const Distribution& dist, std::size_t n, std::uint64_t seed,
                            std::uint64_t stream = 0, std::size_t* duplicates = nullptr);

/// Mean and standard error of a sample, summed pairwise.
struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
};
Estimate estimate(const std::vector<double>& values);

struct TrialSummary {
  std::size_t trials = 0;
  /// Identity-specific point estimate and its standard error. For the
  /// expectation identities this is the mean per-sample difference of the
  /// two sides, which has expectation zero.
  double estimate = 0.0;
  double std_error = 0.0;
  /// Per-sample deterministic identities that did not hold. Must be zero.
  std::size_t exact_violations = 0;
  /// Samples discarded because a hypothesis failed after rounding.
  std::size_t rejections = 0;
  double lhs_mean = 0.0;
  double lhs_std_error = 0.0;
  double rhs_mean = 0.0;
  double rhs_std_error = 0.0;
  bool pass = false;
};

using ViolationHandler = std::function<void(const Configuration&, const IdentityReport&)>;

enum class ExpectationKind { kIntrinsic, kFaces };

struct TrialOptions {
  /// Tolerance for the per-sample intrinsic-volume identity when 0 < r < d.
  double tolerance = 5e-3;
  AngleOptions angles;
  EngineOptions engine;
  /// Resampling attempts per trial before giving up.
  std::size_t max_attempts = 1000;
  ViolationHandler on_violation;
};

/// Samples `trials` configurations, checks the per-sample identity exactly on
/// each, and estimates both sides of the expectation identity, with v_r(k) or
/// F_r(k) estimated from the first k points of each sample. Passes when
/// there are no violations and the mean difference is within three standard
/// errors of zero.
TrialSummary expectation_identity_trial(ExpectationKind kind, const Distribution& dist,
                                        std::size_t n, std::size_t r, std::size_t trials,
                                        std::uint64_t seed, const TrialOptions& opts = {});

/// Probability that exactly l of n points are vertices of their hull,
/// estimated directly (LHS) and through the probability contents M_j of the
/// hulls of the first j points (RHS). Uniform distributions only. Passes when
/// there are no violations of the pointwise identity and the two estimates
/// differ by at most three combined standard errors.
TrialSummary buchta_distribution_check(const Distribution& dist, std::size_t n, std::size_t l,
                                       std::size_t trials, std::uint64_t seed,
                                       const TrialOptions& opts = {});

}  // namespace hullx
