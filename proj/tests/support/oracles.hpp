#pragma once

// Reference implementations used only by tests. They follow the textbook
// definitions directly and share no code paths with the library beyond the
// LP solver and exact rank.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "hullx/feasibility.hpp"
#include "hullx/face_lattice.hpp"
#include "hullx/geometry.hpp"
#include "hullx/linalg.hpp"

namespace hullx::testing {

/// Small integer coordinates in [lo, hi], so collisions and collinear
/// triples are common.
inline Configuration random_grid_config(std::mt19937_64& rng, std::size_t dim, std::size_t n, int lo = 0,
                                        int hi = 3) {
  std::uniform_int_distribution<int> coord(lo, hi);
  std::vector<RatVector> pts(n, RatVector(dim));
  for (auto& p : pts) {
    for (auto& c : p) c = coord(rng);
  }
  return Configuration(dim, std::move(pts));
}

/// Random rational in [-k, k] with denominator up to `den`.
inline Rational random_rational(std::mt19937_64& rng, int k = 3, int den = 4) {
  std::uniform_int_distribution<int> d(1, den);
  const int q = d(rng);
  std::uniform_int_distribution<int> p(-k * q, k * q);
  return make_rational(p(rng), q);
}

/// S (a subset of J) is the generator set of a face of P_J iff some affine
/// functional is zero on S and at least one on J \ S. Such a functional is
/// the separating-hyperplane definition of an exposed face; every face of a
/// polytope is exposed, and J itself is exposed by the zero functional.
inline bool exposes_face(const Configuration& cfg, const IndexSet& s, const IndexSet& j) {
  const std::size_t d = cfg.dim();
  std::vector<std::size_t> outside;
  for (auto k : j) {
    if (!s.contains(k)) outside.push_back(k);
  }
  const std::size_t vars = d + 1 + outside.size();
  auto sys = FeasibilitySystem::with_vars(j.size(), vars);
  for (std::size_t v = 0; v <= d; ++v) sys.nonneg[v] = false;
  std::size_t row = 0;
  for (auto i : s) {
    for (std::size_t c = 0; c < d; ++c) sys.eq_matrix(row, c) = cfg.point(i)[c];
    sys.eq_matrix(row, d) = -1;
    sys.rhs[row] = 0;
    ++row;
  }
  for (std::size_t t = 0; t < outside.size(); ++t) {
    for (std::size_t c = 0; c < d; ++c) sys.eq_matrix(row, c) = cfg.point(outside[t])[c];
    sys.eq_matrix(row, d) = -1;
    sys.eq_matrix(row, d + 1 + t) = -1;
    sys.rhs[row] = 1;
    ++row;
  }
  return lp_feasible(sys).feasible;
}

/// Every face of P_J by trying all nonempty subsets of J.
inline std::vector<FaceRecord> brute_force_faces(const Configuration& cfg, const IndexSet& j) {
  std::vector<FaceRecord> faces;
  const auto& members = j.members();
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << members.size()); ++m) {
    std::vector<std::size_t> picked;
    for (std::size_t b = 0; b < members.size(); ++b) {
      if (m >> b & 1) picked.push_back(members[b]);
    }
    IndexSet s(picked);
    if (!exposes_face(cfg, s, j)) continue;
    faces.push_back({s, affine_rank(select(cfg, s))});
  }
  std::sort(faces.begin(), faces.end(), [](const FaceRecord& a, const FaceRecord& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.generators < b.generators;
  });
  return faces;
}

/// x -> M x + t with M invertible.
struct AffineMap {
  RatMatrix m;
  RatVector t;

  RatVector operator()(const RatVector& x) const { return add(m.apply(x), t); }
  RatVector direction(const RatVector& u) const { return m.apply(u); }

  Configuration operator()(const Configuration& cfg) const {
    std::vector<RatVector> pts;
    for (const auto& p : cfg.points()) pts.push_back((*this)(p));
    return Configuration(cfg.dim(), std::move(pts));
  }

  AffineFlat operator()(const AffineFlat& f) const {
    std::vector<RatVector> dirs;
    for (const auto& u : f.directions()) dirs.push_back(direction(u));
    return AffineFlat((*this)(f.anchor()), std::move(dirs));
  }
};

inline AffineMap random_affine_map(std::mt19937_64& rng, std::size_t dim) {
  while (true) {
    AffineMap map{RatMatrix(dim, dim), RatVector(dim)};
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) map.m(r, c) = random_rational(rng, 2, 3);
      map.t[r] = random_rational(rng);
    }
    if (determinant(map.m) != 0) return map;
  }
}

}  // namespace hullx::testing
