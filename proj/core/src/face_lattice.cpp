#include "hullx/face_lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hullx/combinatorics.hpp"
#include "hullx/errors.hpp"
#include "hullx/linalg.hpp"
#include "hullx/predicates.hpp"

namespace hullx {

std::vector<FaceRecord> enumerate_faces(const Configuration& cfg, const IndexSet& set,
                                        const FaceOptions& opts) {
  check_index_set(cfg, set);
  const auto& labels = set.members();
  const std::size_t m = labels.size();
  if (m > 64) throw LimitError("face enumeration limit: more than 64 generators");

  // Distinct points and the local labels sitting on each of them.
  std::vector<std::size_t> distinct;
  std::vector<std::uint64_t> group;
  for (std::size_t p = 0; p < m; ++p) {
    std::size_t g = 0;
    while (g < distinct.size() && cfg.point(labels[distinct[g]]) != cfg.point(labels[p])) ++g;
    if (g == distinct.size()) {
      distinct.push_back(p);
      group.push_back(0);
    }
    group[g] |= std::uint64_t{1} << p;
  }
  const std::size_t v = distinct.size();
  if (v > opts.vertex_limit) {
    throw LimitError("face enumeration limit: " + std::to_string(v) +
                     " distinct points exceed the limit of " + std::to_string(opts.vertex_limit));
  }

  std::vector<RatVector> points;
  for (auto p : distinct) points.push_back(cfg.point(labels[p]));
  const AffineChart chart(points);
  const std::size_t k = chart.dim();

  std::vector<RatVector> proj;
  for (const auto& x : points) proj.push_back(chart.project(x));

  auto expand = [&](std::uint64_t rep_mask) {
    std::uint64_t out = 0;
    for (std::size_t g = 0; g < v; ++g) {
      if (rep_mask >> g & 1) out |= group[g];
    }
    return out;
  };

  std::vector<std::uint64_t> facet_reps;  // over distinct-point indices
  if (k > 0) {
    std::vector<RatVector> rows(k - 1);
    for_each_combination(v, k, [&](const std::vector<std::size_t>& idx) {
      std::uint64_t combo = 0;
      for (auto i : idx) combo |= std::uint64_t{1} << i;
      for (auto f : facet_reps) {
        if ((combo & f) == combo) return;  // spans a facet already found
      }
      for (std::size_t i = 1; i < k; ++i) rows[i - 1] = sub(proj[idx[i]], proj[idx[0]]);
      const auto normals = nullspace(RatMatrix::from_rows(rows, k));
      if (normals.size() != 1) return;
      bool pos = false;
      bool neg = false;
      std::uint64_t on = 0;
      for (std::size_t g = 0; g < v && !(pos && neg); ++g) {
        const int s = sgn(dot(normals[0], sub(proj[g], proj[idx[0]])));
        if (s > 0) pos = true;
        if (s < 0) neg = true;
        if (s == 0) on |= std::uint64_t{1} << g;
      }
      if (pos && neg) return;
      facet_reps.push_back(on);
    });
  }

  std::vector<std::uint64_t> faces = facet_reps;
  std::set<std::uint64_t> seen(faces.begin(), faces.end());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (auto f : facet_reps) {
      const std::uint64_t h = faces[i] & f;
      if (h && seen.insert(h).second) faces.push_back(h);
    }
  }

  std::vector<FaceRecord> out;
  out.reserve(faces.size() + 1);
  for (auto rep_mask : faces) {
    std::vector<RatVector> pts;
    for (std::size_t g = 0; g < v; ++g) {
      if (rep_mask >> g & 1) pts.push_back(proj[g]);
    }
    const std::uint64_t local = expand(rep_mask);
    std::vector<std::size_t> gens;
    for (std::size_t p = 0; p < m; ++p) {
      if (local >> p & 1) gens.push_back(labels[p]);
    }
    out.push_back({IndexSet(std::move(gens)), affine_rank(pts)});
  }
  out.push_back({set, k});
  std::sort(out.begin(), out.end(), [](const FaceRecord& a, const FaceRecord& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.generators < b.generators;
  });
  return out;
}

FVector f_vector(const std::vector<FaceRecord>& faces) {
  std::size_t top = 0;
  for (const auto& f : faces) top = std::max(top, f.dim);
  FVector counts(top + 1, 0);
  for (const auto& f : faces) ++counts[f.dim];
  if (alternating_sum(counts) != 1)
    throw std::logic_error("face enumeration violates the Euler relation");
  return counts;
}

FVector f_vector(const Configuration& cfg, const IndexSet& set, const FaceOptions& opts) {
  return f_vector(enumerate_faces(cfg, set, opts));
}

std::vector<std::int64_t> faces_meeting_flat(const Configuration& cfg, const IndexSet& set,
                                             const AffineFlat& flat, const FaceOptions& opts) {
  check_index_set(cfg, set);
  if (affine_rank(select(cfg, set)) != cfg.dim())
    throw HypothesisError("theorem requires full dimension: P_J is not full-dimensional");
  std::vector<std::int64_t> a(cfg.dim() + 1, 0);
  for (const auto& face : enumerate_faces(cfg, set, opts)) {
    if (flat_meets_hull(cfg, face.generators, flat)) ++a[face.dim];
  }
  return a;
}

std::vector<std::int64_t> faces_meeting_polytope(const Configuration& cfg1, const IndexSet& set1,
                                                 const Configuration& cfg2, const IndexSet& set2,
                                                 const FaceOptions& opts) {
  if (cfg1.dim() != cfg2.dim()) throw InvalidArgument("polytopes live in different spaces");
  check_index_set(cfg2, set2);
  const auto faces = enumerate_faces(cfg1, set1, opts);
  std::vector<std::int64_t> counts(faces.back().dim + 1, 0);
  for (const auto& face : faces) {
    if (hulls_intersect(cfg1, face.generators, cfg2, set2)) ++counts[face.dim];
  }
  return counts;
}

std::int64_t alternating_sum(const std::vector<std::int64_t>& counts) {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) s += sign_of_power(k) * counts[k];
  return s;
}

}  // namespace hullx
