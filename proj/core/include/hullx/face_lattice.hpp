#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hullx/geometry.hpp"

namespace hullx {

/// A nonempty closed face of P_J. `generators` is canonical: every label of J
/// whose point lies in the face. Two faces are equal iff their generator sets
/// are equal.
struct FaceRecord {
  IndexSet generators;
  std::size_t dim = 0;

  friend bool operator==(const FaceRecord&, const FaceRecord&) = default;
};

/// f_0, ..., f_dim.
using FVector = std::vector<std::int64_t>;

struct FaceOptions {
  /// Refuse to enumerate hulls with more distinct points than this.
  std::size_t vertex_limit = 16;
};

/// All faces of P_J including P_J itself, sorted by dimension and then by
/// generator set.
///
/// Facets come from hyperplanes through affinely independent point tuples in
/// a chart of aff P_J that leave every point on one side; every proper face
/// is an intersection of facets, so the lattice is the intersection closure
/// of the facet generator sets.
std::vector<FaceRecord> enumerate_faces(const Configuration& cfg, const IndexSet& set,
                                        const FaceOptions& opts = {});

FVector f_vector(const std::vector<FaceRecord>& faces);
FVector f_vector(const Configuration& cfg, const IndexSet& set, const FaceOptions& opts = {});

/// a_k = #{k-faces of P_J meeting the flat}, k = 0..d. P_J must be
/// full-dimensional in R^d.
std::vector<std::int64_t> faces_meeting_flat(const Configuration& cfg, const IndexSet& set,
                                             const AffineFlat& flat,
                                             const FaceOptions& opts = {});

/// Counts by dimension of the faces of P_{J1} that meet P_{J2}.
std::vector<std::int64_t> faces_meeting_polytope(const Configuration& cfg1, const IndexSet& set1,
                                                 const Configuration& cfg2, const IndexSet& set2,
                                                 const FaceOptions& opts = {});

/// sum_k (-1)^k counts[k].
std::int64_t alternating_sum(const std::vector<std::int64_t>& counts);

}  // namespace hullx
