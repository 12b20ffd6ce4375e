#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hullx/face_lattice.hpp"
#include "hullx/geometry.hpp"
#include "hullx/intrinsic.hpp"
#include "hullx/value.hpp"

namespace hullx {

enum class IdentityKind {
  kCowan,
  kDualCowan,
  kEulerCut,
  kEulerTouch,
  kCowanAffine,
  kIntrinsic,
  kFaces,
  kFacesClean,
  kFaceCounts,
  kBuchtaPointwise,
  kSimplexLift,
};

/// Command-line spelling, e.g. "dual-cowan".
std::string_view identity_name(IdentityKind kind);

/// Outcome of one identity evaluation.
struct IdentityReport {
  IdentityKind identity = IdentityKind::kCowan;
  std::map<std::string, std::string> parameters;
  Value lhs;
  Value rhs;
  std::map<std::string, std::vector<std::int64_t>> side_data;
  bool pass = false;
  /// Zero for exact comparisons.
  double tolerance = 0.0;
};

/// Sets `pass`: exact equality when both sides are exact, otherwise
/// |lhs - rhs| <= tolerance.
void settle(IdentityReport& report);

struct EngineOptions {
  /// Largest n for which all 2^n - 1 sub-hulls are enumerated.
  std::size_t subset_limit = 20;
  /// Work inside aff(X_1..X_n) instead of rejecting lower-dimensional hulls
  /// where a theorem assumes dim P = d.
  bool project_to_affine_hull = false;
  FaceOptions faces;
};

/// Table over all masks of {0..n-1}: entry m is 1 iff X lies in P_m.
/// Only Caratheodory-minimal sets (size <= dim P + 1) are decided by a
/// feasibility query; larger sets inherit from their (|m|-1)-subsets.
std::vector<std::uint8_t> containment_table(const Configuration& cfg, const RatVector& x,
                                            const EngineOptions& opts = {});

/// sum_k (-1)^(k-1) c_k(X) against (-1)^dim P [X in relint P].
IdentityReport cowan_check(const Configuration& cfg, const RatVector& x,
                           const EngineOptions& opts = {});

/// sum_I (-1)^(|I|-1) (-1)^dim P_I [X in relint P_I] against [X in P].
IdentityReport dual_cowan_check(const Configuration& cfg, const RatVector& x,
                                const EngineOptions& opts = {});

/// sum_k (-1)^k a_k for the faces of the full-dimensional P_J cut by the
/// flat, against (-1)^(d - dim flat) [flat meets int P_J].
IdentityReport euler_intersection_check(const Configuration& cfg, const IndexSet& set,
                                        const AffineFlat& flat, const EngineOptions& opts = {});

/// Alternating count of faces of P_{J1} meeting P_{J2} when the two hulls
/// touch (relative interiors disjoint, hulls not). Against 0.
IdentityReport euler_touch_check(const Configuration& cfg1, const IndexSet& set1,
                                 const Configuration& cfg2, const IndexSet& set2,
                                 const EngineOptions& opts = {});

/// sum_k (-1)^(k-1) c_k(F) against (-1)^(d - dim F) [F meets int P].
IdentityReport cowan_affine_check(const Configuration& cfg, const AffineFlat& flat,
                                  const EngineOptions& opts = {});

/// sum_I (-1)^(|I|-1) V_r(P_I) against (-1)^r V_r(P).
IdentityReport intrinsic_identity_check(const Configuration& cfg, std::size_t r, double tol,
                                        const AngleOptions& angles = {},
                                        const EngineOptions& opts = {});

/// b_j(I) (or b*_j(I) when `clean`) for j = #I..n, entry 0 being j = #I.
std::vector<std::int64_t> b_counts(const Configuration& cfg, const IndexSet& set, bool clean);

/// sum_j (-1)^(j-1) b_j(I), b_j counting j-sets J containing I with P_I a
/// face of P_J. Requires that no X_k, k outside I, lies in P_I.
IdentityReport b_sum_check(const Configuration& cfg, const IndexSet& set,
                           const EngineOptions& opts = {});

/// As b_sum_check with "clean face" in place of "face"; no extra hypothesis.
IdentityReport b_star_sum_check(const Configuration& cfg, const IndexSet& set,
                                const EngineOptions& opts = {});

/// sum_J (-1)^(|J|-1) f_r(P_J) against (-1)^d (C(n, r+1) - f_r(P)), plus the
/// parity corollary for n - d odd or even.
IdentityReport face_count_identity_check(const Configuration& cfg, std::size_t r,
                                         const EngineOptions& opts = {});

/// Lifts the configuration to the standard simplex and checks that c_k(X)
/// equals the number of (k-1)-faces of the simplex met by the preimage flat,
/// and that the lifted Euler intersection sum reproduces the Cowan sum.
IdentityReport simplex_lift_crosscheck(const Configuration& cfg, const RatVector& x,
                                       const EngineOptions& opts = {});

/// Indicator that the vertices of P are exactly X_1..X_l against the signed
/// sum over J in {1..l} of [every X_i, i not in J, lies in P_J]. Points must
/// be pairwise distinct.
IdentityReport buchta_pointwise_check(const Configuration& cfg, std::size_t l,
                                      const EngineOptions& opts = {});

/// buchta_pointwise_check for l = 1..n sharing one membership table.
std::vector<IdentityReport> buchta_pointwise_all(const Configuration& cfg,
                                                 const EngineOptions& opts = {});

}  // namespace hullx
