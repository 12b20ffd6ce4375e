#pragma once

#include <cstddef>
#include <optional>

#include "hullx/geometry.hpp"

namespace hullx {

// Exact predicates on sub-hulls P_I = conv(X_i : i in I). Each one is a single
// feasibility query (or a rank computation) over exact rationals.

/// X in P_I.
bool hull_contains(const Configuration& cfg, const IndexSet& set, const RatVector& x);

/// X in relint P_I (for a single point, X equal to it).
bool relint_contains(const Configuration& cfg, const IndexSet& set, const RatVector& x);

/// flat meets P_I.
bool flat_meets_hull(const Configuration& cfg, const IndexSet& set, const AffineFlat& flat);

/// flat meets relint P_I.
bool flat_meets_relint(const Configuration& cfg, const IndexSet& set, const AffineFlat& flat);

/// X_i is a vertex of P_J. Points of J coinciding with X_i are ignored, so a
/// doubled vertex is still a vertex.
bool is_vertex(const Configuration& cfg, const IndexSet& set, std::size_t i);

/// P_I is a clean face of P_J: aff(X_i : i in I) misses conv(X_k : k in J\I).
/// True when I = J.
bool is_clean_face(const Configuration& cfg, const IndexSet& face, const IndexSet& set);

/// {k in J : X_k in P_I}. P_I equals the hull of the closure.
IndexSet face_closure(const Configuration& cfg, const IndexSet& face, const IndexSet& set);

/// P_I is a (closed, possibly improper) face of P_J.
bool is_face(const Configuration& cfg, const IndexSet& face, const IndexSet& set);

/// Every r-flat holds at most r+1 of the points, 1 <= r <= d.
bool is_r_general_position(const Configuration& cfg, std::size_t r);

/// P_A (in cfg_a) and P_B (in cfg_b) share a point.
bool hulls_intersect(const Configuration& cfg_a, const IndexSet& a, const Configuration& cfg_b,
                     const IndexSet& b);

/// relint P_A and relint P_B share a point.
bool relints_intersect(const Configuration& cfg_a, const IndexSet& a,
                       const Configuration& cfg_b, const IndexSet& b);

/// Intersection of two flats, or nullopt when they are disjoint.
std::optional<AffineFlat> intersect(const AffineFlat& f, const AffineFlat& g);

}  // namespace hullx
