#include "hullx/predicates.hpp"

#include <algorithm>

#include "hullx/combinatorics.hpp"
#include "hullx/errors.hpp"
#include "hullx/feasibility.hpp"
#include "hullx/linalg.hpp"

namespace hullx {
namespace {

void check_point(const Configuration& cfg, const RatVector& x) {
  if (x.size() != cfg.dim()) {
    throw InvalidArgument("query point has " + std::to_string(x.size()) +
                          " coordinates, configuration has dimension " +
                          std::to_string(cfg.dim()));
  }
}

void check_flat(const Configuration& cfg, const AffineFlat& flat) {
  if (flat.ambient_dim() != cfg.dim()) {
    throw InvalidArgument("flat lives in R^" + std::to_string(flat.ambient_dim()) +
                          ", configuration in R^" + std::to_string(cfg.dim()));
  }
}

// sum_i lambda_i X_i - sum_j mu_j u_j = target, sum lambda = 1, lambda >= 0
// (or > 0), mu free.
bool convex_combination_meets(const Configuration& cfg, const IndexSet& set,
                              const RatVector& target, std::span<const RatVector> free_dirs,
                              bool strict) {
  const std::size_t d = cfg.dim();
  const std::size_t k = set.size();
  FeasibilitySystem sys = FeasibilitySystem::with_vars(d + 1, k + free_dirs.size());
  std::size_t col = 0;
  for (auto i : set) {
    const RatVector& p = cfg.point(i);
    for (std::size_t c = 0; c < d; ++c) sys.eq_matrix(c, col) = p[c];
    sys.eq_matrix(d, col) = 1;
    sys.strict[col] = strict;
    ++col;
  }
  for (const auto& u : free_dirs) {
    for (std::size_t c = 0; c < d; ++c) sys.eq_matrix(c, col) = -u[c];
    sys.nonneg[col] = false;
    ++col;
  }
  for (std::size_t c = 0; c < d; ++c) sys.rhs[c] = target[c];
  sys.rhs[d] = 1;
  return lp_feasible(sys).feasible;
}

bool outside_bounding_box(const Configuration& cfg, const IndexSet& set, const RatVector& x) {
  for (std::size_t c = 0; c < cfg.dim(); ++c) {
    bool below = true;
    bool above = true;
    for (auto i : set) {
      const Rational& v = cfg.point(i)[c];
      if (v <= x[c]) below = false;
      if (v >= x[c]) above = false;
    }
    if (below || above) return true;
  }
  return false;
}

bool two_hulls_meet(const Configuration& cfg_a, const IndexSet& a, const Configuration& cfg_b,
                    const IndexSet& b, bool strict) {
  check_index_set(cfg_a, a);
  check_index_set(cfg_b, b);
  if (cfg_a.dim() != cfg_b.dim()) throw InvalidArgument("polytopes live in different spaces");
  const std::size_t d = cfg_a.dim();
  FeasibilitySystem sys = FeasibilitySystem::with_vars(d + 2, a.size() + b.size());
  std::size_t col = 0;
  for (auto i : a) {
    for (std::size_t c = 0; c < d; ++c) sys.eq_matrix(c, col) = cfg_a.point(i)[c];
    sys.eq_matrix(d, col) = 1;
    sys.strict[col] = strict;
    ++col;
  }
  for (auto j : b) {
    for (std::size_t c = 0; c < d; ++c) sys.eq_matrix(c, col) = -cfg_b.point(j)[c];
    sys.eq_matrix(d + 1, col) = 1;
    sys.strict[col] = strict;
    ++col;
  }
  sys.rhs[d] = 1;
  sys.rhs[d + 1] = 1;
  return lp_feasible(sys).feasible;
}

}  // namespace

bool hull_contains(const Configuration& cfg, const IndexSet& set, const RatVector& x) {
  check_index_set(cfg, set);
  check_point(cfg, x);
  for (auto i : set) {
    if (cfg.point(i) == x) return true;
  }
  if (set.size() == 1 || outside_bounding_box(cfg, set, x)) return false;
  return convex_combination_meets(cfg, set, x, {}, false);
}

bool relint_contains(const Configuration& cfg, const IndexSet& set, const RatVector& x) {
  check_index_set(cfg, set);
  check_point(cfg, x);
  if (set.size() == 1) return cfg.point(set.members().front()) == x;
  if (outside_bounding_box(cfg, set, x)) return false;
  return convex_combination_meets(cfg, set, x, {}, true);
}

bool flat_meets_hull(const Configuration& cfg, const IndexSet& set, const AffineFlat& flat) {
  check_index_set(cfg, set);
  check_flat(cfg, flat);
  return convex_combination_meets(cfg, set, flat.anchor(), flat.directions(), false);
}

bool flat_meets_relint(const Configuration& cfg, const IndexSet& set, const AffineFlat& flat) {
  check_index_set(cfg, set);
  check_flat(cfg, flat);
  return convex_combination_meets(cfg, set, flat.anchor(), flat.directions(), true);
}

bool is_vertex(const Configuration& cfg, const IndexSet& set, std::size_t i) {
  check_index_set(cfg, set);
  if (!set.contains(i)) throw InvalidArgument("label " + std::to_string(i + 1) + " not in J");
  std::vector<std::size_t> others;
  for (auto k : set) {
    if (cfg.point(k) != cfg.point(i)) others.push_back(k);
  }
  if (others.empty()) return true;
  return !hull_contains(cfg, IndexSet(std::move(others)), cfg.point(i));
}

bool is_clean_face(const Configuration& cfg, const IndexSet& face, const IndexSet& set) {
  check_index_set(cfg, face);
  check_index_set(cfg, set);
  if (!face.is_subset_of(set)) throw InvalidArgument("face index set is not a subset of J");
  if (face.size() == set.size()) return true;
  std::vector<std::size_t> rest;
  std::set_difference(set.begin(), set.end(), face.begin(), face.end(), std::back_inserter(rest));
  const auto pts = select(cfg, face);
  return !flat_meets_hull(cfg, IndexSet(std::move(rest)), AffineFlat::through(pts));
}

IndexSet face_closure(const Configuration& cfg, const IndexSet& face, const IndexSet& set) {
  check_index_set(cfg, face);
  check_index_set(cfg, set);
  if (!face.is_subset_of(set)) throw InvalidArgument("face index set is not a subset of J");
  std::vector<std::size_t> closure = face.members();
  for (auto k : set) {
    if (!face.contains(k) && hull_contains(cfg, face, cfg.point(k))) closure.push_back(k);
  }
  return IndexSet(std::move(closure));
}

bool is_face(const Configuration& cfg, const IndexSet& face, const IndexSet& set) {
  return is_clean_face(cfg, face_closure(cfg, face, set), set);
}

bool is_r_general_position(const Configuration& cfg, std::size_t r) {
  if (r < 1 || r > cfg.dim()) {
    throw InvalidArgument("r must lie in [1, " + std::to_string(cfg.dim()) + "], got " +
                          std::to_string(r));
  }
  bool ok = true;
  std::vector<RatVector> pts(r + 2);
  for_each_combination(cfg.size(), r + 2, [&](const std::vector<std::size_t>& idx) {
    if (!ok) return;
    for (std::size_t i = 0; i < idx.size(); ++i) pts[i] = cfg.point(idx[i]);
    if (affine_rank(pts) < r + 1) ok = false;
  });
  return ok;
}

bool hulls_intersect(const Configuration& cfg_a, const IndexSet& a, const Configuration& cfg_b,
                     const IndexSet& b) {
  return two_hulls_meet(cfg_a, a, cfg_b, b, false);
}

bool relints_intersect(const Configuration& cfg_a, const IndexSet& a,
                       const Configuration& cfg_b, const IndexSet& b) {
  return two_hulls_meet(cfg_a, a, cfg_b, b, true);
}

std::optional<AffineFlat> intersect(const AffineFlat& f, const AffineFlat& g) {
  if (f.ambient_dim() != g.ambient_dim()) throw InvalidArgument("flats in different spaces");
  const std::size_t d = f.ambient_dim();
  const std::size_t p = f.dim();
  const std::size_t q = g.dim();
  RatMatrix m(d, p + q);
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t j = 0; j < p; ++j) m(c, j) = f.directions()[j][c];
    for (std::size_t j = 0; j < q; ++j) m(c, p + j) = -g.directions()[j][c];
  }
  const auto coeffs = solve_linear(m, sub(g.anchor(), f.anchor()));
  if (!coeffs) return std::nullopt;
  RatVector anchor = f.anchor();
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t c = 0; c < d; ++c) anchor[c] += (*coeffs)[j] * f.directions()[j][c];
  std::vector<RatVector> spans;
  for (const auto& z : nullspace(m)) {
    RatVector u(d);
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t c = 0; c < d; ++c) u[c] += z[j] * f.directions()[j][c];
    spans.push_back(std::move(u));
  }
  const RowEchelon e = row_reduce(RatMatrix::from_rows(spans, d));
  std::vector<RatVector> dirs;
  for (std::size_t i = 0; i < e.reduced.rows(); ++i) {
    const auto row = e.reduced.row(i);
    dirs.emplace_back(row.begin(), row.end());
  }
  return AffineFlat(std::move(anchor), std::move(dirs));
}

}  // namespace hullx
