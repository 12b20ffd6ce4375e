#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hullx/face_lattice.hpp"
#include "hullx/geometry.hpp"
#include "hullx/value.hpp"

namespace hullx {

/// coefficient * sqrt(radicand), radicand >= 0.
struct Surd {
  Rational coefficient;
  Rational radicand;

  double approx() const;
  /// Exact value when the radicand is the square of a rational.
  std::optional<Rational> exact() const;
};

/// Monte Carlo estimation of external angles.
///
/// The angle of the normal cone of a face F of P is estimated over the unit
/// sphere of the orthogonal complement of F's direction space inside P's.
/// On a circle the directions are a randomly shifted stratified grid; in any
/// other dimension they are antithetic pairs of Gaussian vectors. A
/// direction u belongs to the cone iff u.(X_v - x_F) <= 0 for every vertex
/// X_v of P, with x_F a point of F.
struct AngleOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 1'000'000;
};

/// Volume of P_J inside its own affine hull (dimension dim P_J).
Surd relative_volume(const Configuration& cfg, const IndexSet& set, const FaceOptions& opts = {});

/// Normalised external angle of the face `face` (a generator set of a face of
/// P_J) with respect to P_J.
double external_angle(const Configuration& cfg, const IndexSet& face, const IndexSet& set,
                      const AngleOptions& angles = {}, const FaceOptions& opts = {});

/// V_r(P_J). Exact for r = 0, r > dim P_J (zero) and r = dim P_J when the
/// volume is rational; otherwise sum over r-faces of volume times external
/// angle, in floating point.
Value intrinsic_volume(const Configuration& cfg, const IndexSet& set, std::size_t r,
                       const AngleOptions& angles = {}, const FaceOptions& opts = {});

/// Memoising evaluator for many sub-hulls of one configuration. Results are
/// keyed by the hull's vertex set, and each face's angle draws from a random
/// stream keyed by (face vertices, hull vertices), so values do not depend
/// on evaluation order.
class IntrinsicVolumes {
 public:
  explicit IntrinsicVolumes(const Configuration& cfg, AngleOptions angles = {},
                            FaceOptions faces = {});

  Value operator()(const IndexSet& set, std::size_t r);

 private:
  const Configuration& cfg_;
  AngleOptions angles_;
  FaceOptions faces_;
  std::vector<std::size_t> rep_;  // lowest label carrying the same point
  std::map<std::pair<std::uint64_t, std::size_t>, Value> cache_;
};

}  // namespace hullx
