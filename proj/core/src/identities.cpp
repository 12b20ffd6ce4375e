#include "hullx/identities.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>

#include "hullx/combinatorics.hpp"
#include "hullx/errors.hpp"
#include "hullx/linalg.hpp"
#include "hullx/predicates.hpp"

namespace hullx {
namespace {

constexpr std::size_t kHardSubsetLimit = 30;

void guard(std::size_t n, const EngineOptions& opts) {
  const std::size_t limit = std::min(opts.subset_limit, kHardSubsetLimit);
  if (n > limit) {
    throw LimitError("subset enumeration limit: n = " + std::to_string(n) + " exceeds " +
                     std::to_string(limit));
  }
}

std::uint64_t full_mask(std::size_t n) { return (std::uint64_t{1} << n) - 1; }

std::int64_t signed_count(std::size_t exponent) { return sign_of_power(exponent); }

/// Upward-closed predicate over all subsets. `decide` is consulted only for
/// masks of size <= threshold none of whose maximal proper subsets already
/// satisfy it; bigger masks inherit from their (|m|-1)-subsets.
template <class Decide>
std::vector<std::uint8_t> monotone_table(std::size_t n, std::size_t threshold, Decide&& decide) {
  std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
  for (std::uint64_t m = 1; m <= full_mask(n); ++m) {
    bool inherited = false;
    for (std::uint64_t rest = m; rest != 0; rest &= rest - 1) {
      if (table[m & ~(rest & -rest)]) {
        inherited = true;
        break;
      }
    }
    if (inherited) {
      table[m] = 1;
    } else if (popcount(m) <= threshold) {
      table[m] = decide(m) ? 1 : 0;
    }
  }
  return table;
}

std::size_t hull_dim(const Configuration& cfg) { return affine_rank(cfg.points()); }

std::string dim_message(const char* what, std::size_t k, std::size_t d) {
  return std::string(what) + " requires a full-dimensional hull (dim P = " + std::to_string(k) +
         ", d = " + std::to_string(d) + "); use the project-to-affine-hull option to work inside aff P";
}

/// The configuration itself when it is full-dimensional, otherwise its image
/// in a chart of its affine hull (only when the caller asked for that).
struct Working {
  Configuration cfg;
  std::optional<AffineChart> chart;
};

Working full_dimensional(const Configuration& cfg, const EngineOptions& opts, const char* what) {
  AffineChart chart(cfg.points());
  if (chart.dim() == cfg.dim()) return {cfg, std::nullopt};
  if (!opts.project_to_affine_hull) throw HypothesisError(dim_message(what, chart.dim(), cfg.dim()));
  if (chart.dim() == 0) {
    throw HypothesisError(std::string(what) + " is undefined when every point coincides");
  }
  std::vector<RatVector> pts;
  pts.reserve(cfg.size());
  for (const auto& p : cfg.points()) pts.push_back(chart.project(p));
  return {Configuration(chart.dim(), std::move(pts)), std::move(chart)};
}

std::vector<std::int64_t> counts_by_size(const std::vector<std::uint8_t>& table, std::size_t n) {
  std::vector<std::int64_t> c(n, 0);
  for (std::uint64_t m = 1; m < table.size(); ++m) {
    if (table[m]) ++c[popcount(m) - 1];
  }
  return c;
}

/// sum_k (-1)^(k-1) c_k with c indexed from k = 1.
std::int64_t alternating_from_one(const std::vector<std::int64_t>& c) {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < c.size(); ++k) s += signed_count(k) * c[k];
  return s;
}

IdentityReport make_report(IdentityKind kind, std::int64_t lhs, std::int64_t rhs) {
  IdentityReport r;
  r.identity = kind;
  r.lhs = Value(lhs);
  r.rhs = Value(rhs);
  settle(r);
  return r;
}

}  // namespace

std::vector<std::int64_t> b_counts(const Configuration& cfg, const IndexSet& set, bool clean) {
  check_index_set(cfg, set);
  const std::size_t n = cfg.size();
  std::vector<std::size_t> outside;
  for (std::size_t k = 0; k < n; ++k) {
    if (!set.contains(k)) outside.push_back(k);
  }
  std::vector<std::int64_t> b(n - set.size() + 1, 0);
  for (std::uint64_t extra = 0; extra < (std::uint64_t{1} << outside.size()); ++extra) {
    std::vector<std::size_t> members = set.members();
    for (std::size_t t = 0; t < outside.size(); ++t) {
      if (extra >> t & 1) members.push_back(outside[t]);
    }
    const IndexSet j(std::move(members));
    const bool hit = clean ? is_clean_face(cfg, set, j) : is_face(cfg, set, j);
    if (hit) ++b[j.size() - set.size()];
  }
  return b;
}

namespace {

IdentityReport b_check(const Configuration& cfg, const IndexSet& set, bool clean,
                       const EngineOptions& opts) {
  check_index_set(cfg, set);
  guard(cfg.size() - set.size(), opts);
  if (!clean) {
    for (std::size_t k = 0; k < cfg.size(); ++k) {
      if (!set.contains(k) && hull_contains(cfg, set, cfg.point(k))) {
        throw HypothesisError("hypothesis P_I ∩ (X_k : k∉I) = ∅ fails: X_" + std::to_string(k + 1) +
                              " lies in P_I for I = " + set.to_string());
      }
    }
  }
  const auto b = b_counts(cfg, set, clean);
  std::int64_t lhs = 0;
  for (std::size_t t = 0; t < b.size(); ++t) lhs += signed_count(set.size() + t - 1) * b[t];

  const auto pts = select(cfg, set);
  const std::size_t dim_p = hull_dim(cfg);
  const std::size_t dim_i = affine_rank(pts);
  const std::int64_t sign = signed_count(dim_p + set.size() - 1 - dim_i);
  const bool face_of_p = is_face(cfg, set, IndexSet::all(cfg.size()));
  const bool flat_meets = flat_meets_relint(cfg, IndexSet::all(cfg.size()), AffineFlat::through(pts));
  const std::int64_t stated = face_of_p ? 0 : sign;
  const std::int64_t proven = flat_meets ? sign : 0;
  if (stated != proven) {
    throw HypothesisError(
        "the stated right-hand side is " + std::to_string(stated) + " because P_I is " +
        (face_of_p ? "" : "not ") + "a face of P, but aff(X_i : i in I) " +
        (flat_meets ? "meets" : "misses") + " relint P; the sum then equals " +
        std::to_string(proven) + " (I = " + set.to_string() + ")");
  }
  IdentityReport r = make_report(clean ? IdentityKind::kFacesClean : IdentityKind::kFaces, lhs, stated);
  r.parameters["index_set"] = set.to_string();
  r.side_data[clean ? "b_star" : "b"] = b;
  r.side_data["b_offset"] = {static_cast<std::int64_t>(set.size())};
  return r;
}

}  // namespace

std::string_view identity_name(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::kCowan: return "cowan";
    case IdentityKind::kDualCowan: return "dual-cowan";
    case IdentityKind::kEulerCut: return "euler-cut";
    case IdentityKind::kEulerTouch: return "euler-touch";
    case IdentityKind::kCowanAffine: return "cowan-affine";
    case IdentityKind::kIntrinsic: return "intrinsic";
    case IdentityKind::kFaces: return "faces";
    case IdentityKind::kFacesClean: return "faces-clean";
    case IdentityKind::kFaceCounts: return "face-counts";
    case IdentityKind::kBuchtaPointwise: return "buchta-pointwise";
    case IdentityKind::kSimplexLift: return "simplex-lift";
  }
  return "unknown";
}

void settle(IdentityReport& report) {
  if (report.lhs.is_exact() && report.rhs.is_exact()) {
    report.pass = report.lhs.exact() == report.rhs.exact();
  } else {
    report.pass = std::abs(report.lhs.approx() - report.rhs.approx()) <= report.tolerance;
  }
}

std::vector<std::uint8_t> containment_table(const Configuration& cfg, const RatVector& x,
                                            const EngineOptions& opts) {
  guard(cfg.size(), opts);
  if (x.size() != cfg.dim()) throw InvalidArgument("query point has the wrong dimension");
  const std::size_t threshold = hull_dim(cfg) + 1;
  return monotone_table(cfg.size(), threshold, [&](std::uint64_t m) {
    return hull_contains(cfg, IndexSet::from_mask(m), x);
  });
}

IdentityReport cowan_check(const Configuration& cfg, const RatVector& x, const EngineOptions& opts) {
  const auto table = containment_table(cfg, x, opts);
  const auto c = counts_by_size(table, cfg.size());
  const bool inside = relint_contains(cfg, IndexSet::all(cfg.size()), x);
  IdentityReport r = make_report(IdentityKind::kCowan, alternating_from_one(c),
                                 inside ? signed_count(hull_dim(cfg)) : 0);
  r.parameters["point"] = to_string(x);
  r.side_data["c"] = c;
  return r;
}

IdentityReport dual_cowan_check(const Configuration& cfg, const RatVector& x,
                                const EngineOptions& opts) {
  const auto table = containment_table(cfg, x, opts);
  std::vector<std::int64_t> relint_by_size(cfg.size(), 0);
  std::int64_t lhs = 0;
  for (std::uint64_t m = 1; m < table.size(); ++m) {
    if (!table[m]) continue;
    const IndexSet set = IndexSet::from_mask(m);
    if (!relint_contains(cfg, set, x)) continue;
    const std::size_t k = set.size();
    ++relint_by_size[k - 1];
    lhs += signed_count(k - 1) * signed_count(affine_rank(select(cfg, set)));
  }
  IdentityReport r = make_report(IdentityKind::kDualCowan, lhs, table.back() ? 1 : 0);
  r.parameters["point"] = to_string(x);
  r.side_data["relint_by_size"] = relint_by_size;
  return r;
}

IdentityReport euler_intersection_check(const Configuration& cfg, const IndexSet& set,
                                        const AffineFlat& flat, const EngineOptions& opts) {
  check_index_set(cfg, set);
  if (flat.ambient_dim() != cfg.dim()) throw InvalidArgument("flat has the wrong ambient dimension");
  const auto a = faces_meeting_flat(cfg, set, flat, opts.faces);
  const bool cuts = flat_meets_relint(cfg, set, flat);
  IdentityReport r = make_report(IdentityKind::kEulerCut, alternating_sum(a),
                                 cuts ? signed_count(cfg.dim() - flat.dim()) : 0);
  r.parameters["index_set"] = set.to_string();
  r.parameters["flat"] = flat.to_string();
  r.side_data["a"] = a;
  return r;
}

IdentityReport euler_touch_check(const Configuration& cfg1, const IndexSet& set1,
                                 const Configuration& cfg2, const IndexSet& set2,
                                 const EngineOptions& opts) {
  check_index_set(cfg1, set1);
  check_index_set(cfg2, set2);
  if (cfg1.dim() != cfg2.dim()) throw InvalidArgument("polytopes live in different dimensions");
  if (!hulls_intersect(cfg1, set1, cfg2, set2) || relints_intersect(cfg1, set1, cfg2, set2)) {
    throw HypothesisError("polytopes do not touch");
  }
  const auto counts = faces_meeting_polytope(cfg1, set1, cfg2, set2, opts.faces);
  IdentityReport r = make_report(IdentityKind::kEulerTouch, alternating_sum(counts), 0);
  r.parameters["index_set"] = set1.to_string();
  r.parameters["partner_index_set"] = set2.to_string();
  r.side_data["counts"] = counts;
  return r;
}

IdentityReport cowan_affine_check(const Configuration& cfg, const AffineFlat& flat,
                                  const EngineOptions& opts) {
  if (flat.ambient_dim() != cfg.dim()) throw InvalidArgument("flat has the wrong ambient dimension");
  guard(cfg.size(), opts);
  const Working w = full_dimensional(cfg, opts, "the affine Cowan identity");
  std::optional<AffineFlat> local = flat;
  if (w.chart) {
    const auto cut = intersect(flat, AffineFlat::through(cfg.points()));
    if (!cut) {
      local.reset();
    } else {
      std::vector<RatVector> dirs;
      for (const auto& u : cut->directions()) dirs.push_back(w.chart->project_direction(u));
      local = AffineFlat(w.chart->project(cut->anchor()), std::move(dirs));
    }
  }
  const std::size_t n = cfg.size();
  const std::size_t d = w.cfg.dim();
  std::vector<std::int64_t> c(n, 0);
  std::int64_t rhs = 0;
  if (local) {
    const std::size_t threshold = d - local->dim() + 1;
    const auto table = monotone_table(n, threshold, [&](std::uint64_t m) {
      return flat_meets_hull(w.cfg, IndexSet::from_mask(m), *local);
    });
    c = counts_by_size(table, n);
    if (flat_meets_relint(w.cfg, IndexSet::all(n), *local)) rhs = signed_count(d - local->dim());
  }
  IdentityReport r = make_report(IdentityKind::kCowanAffine, alternating_from_one(c), rhs);
  r.parameters["flat"] = flat.to_string();
  r.side_data["c"] = c;
  return r;
}

IdentityReport intrinsic_identity_check(const Configuration& cfg, std::size_t r, double tol,
                                        const AngleOptions& angles, const EngineOptions& opts) {
  const std::size_t n = cfg.size();
  guard(n, opts);
  const std::size_t k = hull_dim(cfg);
  if (k != cfg.dim() && !opts.project_to_affine_hull) {
    throw HypothesisError(dim_message("the intrinsic-volume identity", k, cfg.dim()));
  }
  // Intrinsic volumes do not depend on the ambient space, so the hull is
  // measured where it lies; a chart would distort lengths.
  IntrinsicVolumes volumes(cfg, angles, opts.faces);
  Value lhs;
  for (std::uint64_t m = 1; m <= full_mask(n); ++m) {
    Value v = volumes(IndexSet::from_mask(m), r);
    if (popcount(m) % 2 == 0) v *= -1;
    lhs += v;
  }
  Value rhs = volumes(IndexSet::all(n), r);
  if (r % 2 == 1) rhs *= -1;
  IdentityReport report;
  report.identity = IdentityKind::kIntrinsic;
  report.lhs = lhs;
  report.rhs = rhs;
  report.tolerance = (lhs.is_exact() && rhs.is_exact()) ? 0.0 : tol;
  settle(report);
  report.parameters["r"] = std::to_string(r);
  report.parameters["seed"] = std::to_string(angles.seed);
  report.parameters["samples"] = std::to_string(angles.samples);
  return report;
}

IdentityReport b_sum_check(const Configuration& cfg, const IndexSet& set, const EngineOptions& opts) {
  return b_check(cfg, set, false, opts);
}

IdentityReport b_star_sum_check(const Configuration& cfg, const IndexSet& set,
                                const EngineOptions& opts) {
  return b_check(cfg, set, true, opts);
}

IdentityReport face_count_identity_check(const Configuration& cfg, std::size_t r,
                                         const EngineOptions& opts) {
  const std::size_t n = cfg.size();
  guard(n, opts);
  if (r < 1 || r > cfg.dim()) throw InvalidArgument("r must lie in 1..d = " + std::to_string(cfg.dim()));
  const Working w = full_dimensional(cfg, opts, "the face-count identity");
  const std::size_t d = w.cfg.dim();
  if (r > d) throw HypothesisError("r exceeds dim P = " + std::to_string(d));
  if (!is_r_general_position(w.cfg, r)) {
    throw HypothesisError("points are not in " + std::to_string(r) + "-general position");
  }

  std::int64_t lhs = 0;
  std::int64_t proper = 0;
  std::int64_t f_full = 0;
  for (std::uint64_t m = 1; m <= full_mask(n); ++m) {
    const IndexSet set = IndexSet::from_mask(m);
    const auto f = f_vector(w.cfg, set, opts.faces);
    const std::int64_t fr = r < f.size() ? f[r] : 0;
    const std::int64_t term = signed_count(set.size() - 1) * fr;
    lhs += term;
    if (m == full_mask(n)) {
      f_full = fr;
    } else {
      proper += term;
    }
  }

  // Every r-face is spanned by exactly r+1 points here, and the alternating
  // sum over J counts the (r+1)-sets whose affine hull meets relint P. The
  // stated right-hand side replaces that count by C(n, r+1) - f_r(P).
  std::int64_t missing = 0;
  for_each_combination(n, r + 1, [&](const std::vector<std::size_t>& idx) {
    const auto pts = select(w.cfg, IndexSet(idx));
    if (!flat_meets_relint(w.cfg, IndexSet::all(n), AffineFlat::through(pts))) ++missing;
  });
  const std::int64_t subsets = binomial(n, r + 1);
  const std::int64_t sign = signed_count(d);
  if (missing != f_full) {
    throw HypothesisError(
        "the face-count identity needs the (r+1)-point flats missing relint P to be exactly the "
        "r-faces of P, but " + std::to_string(missing) + " flats miss it and f_r(P) = " +
        std::to_string(f_full) + "; the sum then equals " +
        std::to_string(sign * (subsets - missing)));
  }

  IdentityReport report = make_report(IdentityKind::kFaceCounts, lhs, sign * (subsets - f_full));
  bool parity_ok = true;
  if ((n - d) % 2 == 1) {
    parity_ok = 2 * f_full == subsets + signed_count(n) * proper;
  } else {
    parity_ok = proper == sign * subsets;
  }
  report.pass = report.pass && parity_ok;
  report.parameters["r"] = std::to_string(r);
  report.side_data["f_r_full"] = {f_full};
  report.side_data["proper_sum"] = {proper};
  report.side_data["parity_ok"] = {parity_ok ? 1 : 0};
  return report;
}

IdentityReport simplex_lift_crosscheck(const Configuration& cfg, const RatVector& x,
                                       const EngineOptions& opts) {
  const std::size_t n = cfg.size();
  guard(n, opts);
  if (x.size() != cfg.dim()) throw InvalidArgument("query point has the wrong dimension");
  const auto c = counts_by_size(containment_table(cfg, x, opts), n);
  const std::int64_t cowan_lhs = alternating_from_one(c);
  const bool inside = relint_contains(cfg, IndexSet::all(n), x);
  const std::int64_t cowan_rhs = inside ? signed_count(hull_dim(cfg)) : 0;

  std::vector<std::int64_t> a(n, 0);
  std::int64_t euler_lhs = 0;
  std::int64_t euler_rhs = 0;
  if (n == 1) {
    // The simplex is a point and the lifted flat is that point or empty.
    a[0] = cfg.point(0) == x ? 1 : 0;
    euler_lhs = a[0];
    euler_rhs = a[0];
  } else {
    // Coordinates alpha_1..alpha_{n-1} on the hyperplane sum alpha = 1, so
    // the simplex has vertices e_1..e_{n-1} and the origin (for X_n).
    const std::size_t m = n - 1;
    std::vector<RatVector> vertices;
    for (std::size_t i = 0; i < m; ++i) {
      RatVector e(m);
      e[i] = 1;
      vertices.push_back(std::move(e));
    }
    vertices.emplace_back(m);
    const Configuration simplex(m, std::move(vertices));

    RatMatrix lift(cfg.dim(), m);
    for (std::size_t i = 0; i < m; ++i) {
      const RatVector diff = sub(cfg.point(i), cfg.point(m));
      for (std::size_t t = 0; t < cfg.dim(); ++t) lift(t, i) = diff[t];
    }
    const auto anchor = solve_linear(lift, sub(x, cfg.point(m)));
    if (anchor) {
      const AffineFlat preimage(*anchor, nullspace(lift));
      EngineOptions simplex_opts = opts;
      simplex_opts.faces.vertex_limit = std::max(opts.faces.vertex_limit, n);
      const IdentityReport euler =
          euler_intersection_check(simplex, IndexSet::all(n), preimage, simplex_opts);
      a = euler.side_data.at("a");
      euler_lhs = euler.lhs.exact().get_num().get_si();
      euler_rhs = euler.rhs.exact().get_num().get_si();
    }
  }

  IdentityReport report = make_report(IdentityKind::kSimplexLift, cowan_lhs, euler_lhs);
  report.pass = report.pass && c == a && cowan_rhs == euler_rhs;
  report.parameters["point"] = to_string(x);
  report.side_data["c"] = c;
  report.side_data["a"] = a;
  report.side_data["rhs"] = {cowan_rhs, euler_rhs};
  return report;
}

namespace {

void check_distinct(const Configuration& cfg) {
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (cfg.point(i) == cfg.point(j)) {
        throw HypothesisError("the pointwise vertex identity needs distinct points; X_" +
                              std::to_string(j + 1) + " = X_" + std::to_string(i + 1));
      }
    }
  }
}

/// covered[J] = 1 iff every X_i with i outside J lies in P_J.
std::vector<std::uint8_t> covered_table(const Configuration& cfg, const EngineOptions& opts) {
  const std::size_t n = cfg.size();
  std::vector<std::uint8_t> covered(std::size_t{1} << n, 1);
  covered[0] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto table = containment_table(cfg, cfg.point(i), opts);
    for (std::uint64_t m = 1; m < table.size(); ++m) {
      if (!(m >> i & 1) && !table[m]) covered[m] = 0;
    }
  }
  return covered;
}

IdentityReport buchta_from_tables(const Configuration& cfg, std::size_t l,
                                  const std::vector<bool>& vertex,
                                  const std::vector<std::uint8_t>& covered) {
  bool exact_set = true;
  for (std::size_t i = 0; i < cfg.size(); ++i) exact_set = exact_set && vertex[i] == (i < l);
  std::int64_t rhs = 0;
  for (std::uint64_t m = 1; m <= full_mask(l); ++m) {
    if (covered[m]) rhs += signed_count(l - popcount(m));
  }
  IdentityReport report = make_report(IdentityKind::kBuchtaPointwise, exact_set ? 1 : 0, rhs);
  report.parameters["l"] = std::to_string(l);
  return report;
}

std::vector<bool> vertex_flags(const Configuration& cfg) {
  std::vector<bool> v(cfg.size());
  for (std::size_t i = 0; i < cfg.size(); ++i) v[i] = is_vertex(cfg, IndexSet::all(cfg.size()), i);
  return v;
}

}  // namespace

IdentityReport buchta_pointwise_check(const Configuration& cfg, std::size_t l,
                                      const EngineOptions& opts) {
  if (l < 1 || l > cfg.size()) throw InvalidArgument("l must lie in 1..n");
  guard(cfg.size(), opts);
  check_distinct(cfg);
  return buchta_from_tables(cfg, l, vertex_flags(cfg), covered_table(cfg, opts));
}

std::vector<IdentityReport> buchta_pointwise_all(const Configuration& cfg, const EngineOptions& opts) {
  guard(cfg.size(), opts);
  check_distinct(cfg);
  const auto vertex = vertex_flags(cfg);
  const auto covered = covered_table(cfg, opts);
  std::vector<IdentityReport> out;
  for (std::size_t l = 1; l <= cfg.size(); ++l) out.push_back(buchta_from_tables(cfg, l, vertex, covered));
  return out;
}

}  // namespace hullx
