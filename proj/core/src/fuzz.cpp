#include "hullx/fuzz.hpp"

#include <algorithm>
#include <utility>

#include "hullx/errors.hpp"
#include "hullx/face_lattice.hpp"
#include "hullx/linalg.hpp"
#include "hullx/predicates.hpp"
#include "hullx/random.hpp"

namespace hullx {
namespace {

class Dice {
 public:
  Dice(std::uint64_t seed, std::uint64_t stream) : rng_(seed, stream) {}

  long between(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_.next_u64() % span);
  }
  bool coin() { return between(0, 1) == 1; }

  Rational fraction(long range, long max_den) {
    return make_rational(between(-range, range), between(1, max_den));
  }

  RatVector point(std::size_t d, long range) {
    RatVector p(d);
    for (auto& c : p) c = between(-range, range);
    return p;
  }

  RatVector direction(std::size_t d, long range) {
    while (true) {
      RatVector u = point(d, range);
      if (!is_zero(u)) return u;
    }
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(between(0, static_cast<long>(i) - 1))]);
  }

 private:
  CounterRng rng_;
};

RatVector along(const RatVector& a, const RatVector& u, const Rational& t) { return add(a, scale(u, t)); }

RatVector midpoint(const RatVector& a, const RatVector& b) { return scale(add(a, b), Rational(1, 2)); }

RatVector centroid(const std::vector<RatVector>& pts) {
  RatVector c(pts.front().size());
  for (const auto& p : pts) c = add(c, p);
  return scale(c, Rational(1, static_cast<long>(pts.size())));
}

std::vector<RatVector> random_full_dimensional(Dice& dice, std::size_t d, std::size_t n, long range) {
  while (true) {
    std::vector<RatVector> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(dice.point(d, range));
    if (affine_rank(pts) == d) return pts;
  }
}

std::vector<IndexSet> random_index_sets(Dice& dice, std::size_t n, std::size_t count) {
  std::vector<IndexSet> out;
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t size = static_cast<std::size_t>(dice.between(1, static_cast<long>(std::min<std::size_t>(n, 3))));
    std::vector<std::size_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = i;
    dice.shuffle(labels);
    labels.resize(size);
    out.emplace_back(std::move(labels));
  }
  return out;
}

void add_partner(FuzzCase& c) {
  const auto all = IndexSet::all(c.cfg.size());
  const RatVector mid = centroid(c.cfg.points());
  for (std::size_t i = 0; i < c.cfg.size(); ++i) {
    const RatVector& v = c.cfg.point(i);
    if (v == mid || !is_vertex(c.cfg, all, i)) continue;
    c.partner = Configuration(c.cfg.dim(), {v, sub(scale(v, 2), mid)});
    return;
  }
}

FuzzCase collinear(Dice& dice) {
  const std::size_t d = static_cast<std::size_t>(dice.between(2, 3));
  const RatVector a = dice.point(d, 3);
  const RatVector u = dice.direction(d, 2);
  std::vector<RatVector> pts;
  std::vector<Rational> ts;
  const long k = dice.between(3, 5);
  while (static_cast<long>(ts.size()) < k) {
    const Rational t = dice.fraction(4, 2);
    if (std::find(ts.begin(), ts.end(), t) == ts.end()) ts.push_back(t);
  }
  for (const auto& t : ts) pts.push_back(along(a, u, t));
  const long extra = dice.between(0, 3);
  for (long i = 0; i < extra; ++i) pts.push_back(dice.point(d, 4));
  dice.shuffle(pts);

  FuzzCase c{Configuration(d, pts), {}, {}, {}, std::nullopt};
  std::sort(ts.begin(), ts.end());
  for (const auto& t : ts) c.queries.push_back(along(a, u, t));
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) c.queries.push_back(along(a, u, (ts[i] + ts[i + 1]) / 2));
  c.queries.push_back(along(a, u, ts.back() + 1));
  c.queries.push_back(dice.point(d, 4));
  c.flats.emplace_back(a, std::vector<RatVector>{u});
  c.flats.push_back(AffineFlat::point(along(a, u, ts.front())));
  c.flats.push_back(AffineFlat::whole_space(d));
  c.index_sets = random_index_sets(dice, pts.size(), 4);
  return c;
}

FuzzCase point_on_facet(Dice& dice) {
  const std::size_t d = static_cast<std::size_t>(dice.between(2, 3));
  std::vector<RatVector> pts = random_full_dimensional(dice, d, d + static_cast<std::size_t>(dice.between(1, 3)), 4);
  const Configuration base(d, pts);
  std::vector<FaceRecord> facets;
  std::vector<FaceRecord> edges;
  for (auto& f : enumerate_faces(base, IndexSet::all(base.size()))) {
    if (f.dim + 1 == d) facets.push_back(f);
    if (f.dim == 1) edges.push_back(f);
  }
  std::vector<RatVector> added;
  const long count = dice.between(1, 3);
  for (long k = 0; k < count; ++k) {
    const bool on_edge = d == 3 && dice.coin();
    const auto& face = on_edge ? edges[static_cast<std::size_t>(dice.between(0, static_cast<long>(edges.size()) - 1))]
                               : facets[static_cast<std::size_t>(dice.between(0, static_cast<long>(facets.size()) - 1))];
    RatVector p(d);
    Rational total = 0;
    for (auto g : face.generators) {
      const Rational w = dice.between(1, 4);
      p = add(p, scale(base.point(g), w));
      total += w;
    }
    added.push_back(scale(p, 1 / total));
  }
  const std::size_t n0 = pts.size();
  pts.insert(pts.end(), added.begin(), added.end());

  FuzzCase c{Configuration(d, pts), {}, {}, {}, std::nullopt};
  c.queries = added;
  c.queries.push_back(pts.front());
  c.queries.push_back(centroid(pts));
  c.queries.push_back(midpoint(added.front(), pts.front()));
  c.flats.push_back(AffineFlat::through(std::vector<RatVector>{added.front(), pts.front()}));
  c.flats.push_back(AffineFlat::through(select(base, facets.front().generators)));
  c.index_sets.push_back(facets.front().generators);
  for (std::size_t i = n0; i < pts.size(); ++i) c.index_sets.push_back(IndexSet{i});
  c.index_sets.push_back(IndexSet{0, n0});
  return c;
}

FuzzCase flat_through_vertex(Dice& dice) {
  const std::size_t d = static_cast<std::size_t>(dice.between(2, 3));
  RatVector width(d);
  for (auto& w : width) w = dice.between(1, 3);
  std::vector<RatVector> pts;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << d); ++m) {
    RatVector p(d);
    for (std::size_t i = 0; i < d; ++i) p[i] = (m >> i & 1) ? width[i] : Rational(0);
    pts.push_back(std::move(p));
  }
  if (dice.coin()) pts.push_back(scale(width, Rational(1, 2)));
  const std::size_t v = static_cast<std::size_t>(dice.between(0, (1L << d) - 1));
  const std::size_t w = static_cast<std::size_t>(dice.between(0, (1L << d) - 1));
  const RatVector& vertex = pts[v];

  FuzzCase c{Configuration(d, pts), {}, {}, {}, std::nullopt};
  c.flats.emplace_back(vertex, std::vector<RatVector>{dice.direction(d, 2)});
  if (v != w) c.flats.push_back(AffineFlat::through(std::vector<RatVector>{vertex, pts[w]}));
  if (d == 3) {
    const RatVector u1 = dice.direction(d, 2);
    const RatVector u2 = dice.direction(d, 2);
    if (rank(RatMatrix::from_rows(std::vector<RatVector>{u1, u2}, d)) == 2) {
      c.flats.emplace_back(vertex, std::vector<RatVector>{u1, u2});
    }
  }
  c.flats.push_back(AffineFlat::point(vertex));
  c.queries.push_back(vertex);
  c.queries.push_back(midpoint(vertex, pts[w]));
  c.queries.push_back(scale(width, Rational(1, 2)));
  c.index_sets = {IndexSet{v}};
  if (v != w) c.index_sets.push_back(IndexSet{std::min(v, w), std::max(v, w)});
  return c;
}

FuzzCase duplicated_points(Dice& dice) {
  const std::size_t d = static_cast<std::size_t>(dice.between(1, 3));
  const std::size_t m = static_cast<std::size_t>(dice.between(2, 5));
  std::vector<RatVector> pts;
  for (std::size_t i = 0; i < m; ++i) pts.push_back(dice.point(d, 3));
  const long copies = dice.between(1, 3);
  std::vector<RatVector> doubled;
  for (long k = 0; k < copies; ++k) doubled.push_back(pts[static_cast<std::size_t>(dice.between(0, static_cast<long>(m) - 1))]);
  pts.insert(pts.end(), doubled.begin(), doubled.end());
  dice.shuffle(pts);

  FuzzCase c{Configuration(d, pts), {}, {}, {}, std::nullopt};
  c.queries = doubled;
  c.queries.push_back(midpoint(pts[0], pts[1]));
  c.queries.push_back(centroid(pts));
  c.queries.push_back(dice.point(d, 3));
  c.flats.emplace_back(doubled.front(), std::vector<RatVector>{dice.direction(d, 2)});
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i] == pts[j]) c.index_sets.push_back(IndexSet{i});
      if (pts[i] == pts[j]) c.index_sets.push_back(IndexSet{i, j});
    }
  }
  const auto extra = random_index_sets(dice, pts.size(), 2);
  c.index_sets.insert(c.index_sets.end(), extra.begin(), extra.end());
  return c;
}

FuzzCase simplex_degenerate(Dice& dice) {
  const std::size_t d = static_cast<std::size_t>(dice.between(2, 3));
  const std::size_t k = static_cast<std::size_t>(dice.between(1, static_cast<long>(d) - 1));
  const RatVector a = dice.point(d, 3);
  std::vector<RatVector> dirs;
  for (std::size_t i = 0; i < k; ++i) dirs.push_back(dice.direction(d, 2));
  std::vector<RatVector> pts;
  for (std::size_t i = 0; i <= d; ++i) {
    RatVector p = a;
    for (const auto& u : dirs) p = add(p, scale(u, dice.fraction(3, 2)));
    pts.push_back(std::move(p));
  }

  FuzzCase c{Configuration(d, pts), {}, {}, {}, std::nullopt};
  c.queries.push_back(centroid(pts));
  c.queries.push_back(pts.front());
  c.queries.push_back(midpoint(pts[0], pts[1]));
  c.queries.push_back(add(a, scale(dirs.front(), dice.fraction(4, 3))));
  c.queries.push_back(dice.point(d, 3));
  c.flats.emplace_back(centroid(pts), std::vector<RatVector>{dice.direction(d, 2)});
  c.flats.push_back(AffineFlat::whole_space(d));
  c.index_sets = random_index_sets(dice, pts.size(), 3);
  return c;
}

FuzzCase exceptional(Dice& dice) {
  const std::size_t d = static_cast<std::size_t>(dice.between(2, 3));
  const std::size_t n = static_cast<std::size_t>(dice.between(static_cast<long>(d) + 1, 8));
  const auto pts = random_full_dimensional(dice, d, n, 5);
  FuzzCase c{Configuration(d, pts), {}, {}, {}, std::nullopt};
  const auto i = static_cast<std::size_t>(dice.between(0, static_cast<long>(n) - 1));
  auto j = static_cast<std::size_t>(dice.between(0, static_cast<long>(n) - 2));
  if (j >= i) ++j;
  if (d == 2) {
    // The codimension-two flats of the plane are points.
    c.queries.push_back(pts[i]);
    c.queries.push_back(pts[j]);
    c.flats.push_back(AffineFlat::point(pts[i]));
  } else {
    const RatVector u = sub(pts[j], pts[i]);
    for (const Rational t : {Rational(1, 2), Rational(1, 3), Rational(-1), Rational(2), dice.fraction(3, 4)}) {
      c.queries.push_back(along(pts[i], u, t));
    }
  }
  c.flats.push_back(AffineFlat::through(std::vector<RatVector>{pts[i], pts[j]}));
  c.index_sets = {IndexSet{std::min(i, j), std::max(i, j)}, IndexSet{i}};
  return c;
}

template <class Fn>
void attempt(CaseResult& out, Fn&& fn) {
  try {
    fn();
  } catch (const HypothesisError&) {
    ++out.skipped;
  }
}

}  // namespace

std::string_view profile_name(FuzzProfile profile) {
  switch (profile) {
    case FuzzProfile::kCollinear: return "collinear";
    case FuzzProfile::kPointOnFacet: return "point-on-facet";
    case FuzzProfile::kFlatThroughVertex: return "flat-through-vertex";
    case FuzzProfile::kDuplicatedPoints: return "duplicated-points";
    case FuzzProfile::kSimplexDegenerate: return "simplex-degenerate";
    case FuzzProfile::kExceptional: return "exceptional";
  }
  return "unknown";
}

std::vector<FuzzProfile> all_profiles() {
  return {FuzzProfile::kCollinear,         FuzzProfile::kPointOnFacet,
          FuzzProfile::kFlatThroughVertex, FuzzProfile::kDuplicatedPoints,
          FuzzProfile::kSimplexDegenerate, FuzzProfile::kExceptional};
}

FuzzProfile parse_profile(std::string_view name) {
  for (auto p : all_profiles()) {
    if (profile_name(p) == name) return p;
  }
  throw InvalidArgument("unknown fuzz profile '" + std::string(name) + "'");
}

FuzzCase generate_case(FuzzProfile profile, std::uint64_t seed, std::size_t index) {
  Dice dice(seed, hash_combine(static_cast<std::uint64_t>(profile), index));
  FuzzCase c = [&] {
    switch (profile) {
      case FuzzProfile::kCollinear: return collinear(dice);
      case FuzzProfile::kPointOnFacet: return point_on_facet(dice);
      case FuzzProfile::kFlatThroughVertex: return flat_through_vertex(dice);
      case FuzzProfile::kDuplicatedPoints: return duplicated_points(dice);
      case FuzzProfile::kSimplexDegenerate: return simplex_degenerate(dice);
      case FuzzProfile::kExceptional: return exceptional(dice);
    }
    throw InvalidArgument("unknown fuzz profile");
  }();
  add_partner(c);
  return c;
}

CaseResult run_exact_identities(const FuzzCase& c, const EngineOptions& opts) {
  CaseResult out;
  const Configuration& cfg = c.cfg;
  const auto all = IndexSet::all(cfg.size());
  const bool full = affine_rank(cfg.points()) == cfg.dim();
  auto keep = [&](IdentityReport r) { out.reports.push_back(std::move(r)); };

  for (const auto& x : c.queries) {
    attempt(out, [&] { keep(cowan_check(cfg, x, opts)); });
    attempt(out, [&] { keep(dual_cowan_check(cfg, x, opts)); });
    attempt(out, [&] { keep(simplex_lift_crosscheck(cfg, x, opts)); });
  }
  for (const auto& flat : c.flats) {
    attempt(out, [&] { keep(cowan_affine_check(cfg, flat, opts)); });
    if (full) {
      attempt(out, [&] { keep(euler_intersection_check(cfg, all, flat, opts)); });
    } else {
      ++out.skipped;
    }
  }
  if (c.partner) {
    attempt(out, [&] {
      keep(euler_touch_check(cfg, all, *c.partner, IndexSet::all(c.partner->size()), opts));
    });
  }
  for (const auto& set : c.index_sets) {
    attempt(out, [&] { keep(b_sum_check(cfg, set, opts)); });
    attempt(out, [&] { keep(b_star_sum_check(cfg, set, opts)); });
  }
  for (std::size_t r = 1; r <= cfg.dim(); ++r) {
    attempt(out, [&] { keep(face_count_identity_check(cfg, r, opts)); });
  }
  if (full) {
    attempt(out, [&] { keep(intrinsic_identity_check(cfg, 0, 0.0, {}, opts)); });
    attempt(out, [&] { keep(intrinsic_identity_check(cfg, cfg.dim(), 0.0, {}, opts)); });
  }
  attempt(out, [&] {
    for (auto& r : buchta_pointwise_all(cfg, opts)) keep(std::move(r));
  });
  return out;
}

}  // namespace hullx
