#include "hullx/intrinsic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hullx/errors.hpp"
#include "hullx/linalg.hpp"
#include "hullx/random.hpp"

namespace hullx {
namespace {

using Simplex = std::vector<std::size_t>;

struct Lattice {
  std::vector<FaceRecord> faces;
  std::vector<std::uint64_t> masks;

  std::size_t top() const { return faces.size() - 1; }
  bool within(std::size_t h, std::size_t g) const { return (masks[h] & masks[g]) == masks[h]; }
};

Lattice build_lattice(const Configuration& cfg, const IndexSet& set, const FaceOptions& opts) {
  Lattice lat;
  lat.faces = enumerate_faces(cfg, set, opts);
  for (const auto& f : lat.faces) lat.masks.push_back(f.generators.mask());
  return lat;
}

std::vector<std::size_t> representatives(const Configuration& cfg) {
  std::vector<std::size_t> rep(cfg.size());
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    rep[i] = i;
    for (std::size_t j = 0; j < i; ++j) {
      if (cfg.point(j) == cfg.point(i)) {
        rep[i] = rep[j];
        break;
      }
    }
  }
  return rep;
}

std::uint64_t vertex_key(const Lattice& lat, std::size_t g, const std::vector<std::size_t>& rep) {
  std::uint64_t key = 0;
  for (std::size_t h = 0; h < lat.faces.size() && lat.faces[h].dim == 0; ++h) {
    if (lat.within(h, g)) key |= std::uint64_t{1} << rep[lat.faces[h].generators.members().front()];
  }
  return key;
}

const std::vector<Simplex>& triangulate(const Lattice& lat, std::size_t g,
                                        std::map<std::size_t, std::vector<Simplex>>& memo) {
  if (auto it = memo.find(g); it != memo.end()) return it->second;
  std::vector<Simplex> out;
  const std::size_t dim = lat.faces[g].dim;
  if (dim == 0) {
    out.push_back({lat.faces[g].generators.members().front()});
  } else {
    std::size_t apex = SIZE_MAX;
    for (std::size_t h = 0; h < lat.faces.size() && lat.faces[h].dim == 0; ++h) {
      if (lat.within(h, g)) apex = std::min(apex, lat.faces[h].generators.members().front());
    }
    for (std::size_t h = 0; h < lat.faces.size(); ++h) {
      if (lat.faces[h].dim != dim - 1 || !lat.within(h, g) || (lat.masks[h] >> apex & 1)) continue;
      for (const auto& s : triangulate(lat, h, memo)) {
        Simplex t = s;
        t.push_back(apex);
        out.push_back(std::move(t));
      }
    }
  }
  return memo.emplace(g, std::move(out)).first->second;
}

Surd face_volume(const Configuration& cfg, const Lattice& lat, std::size_t g,
                 std::map<std::size_t, std::vector<Simplex>>& memo) {
  const std::size_t k = lat.faces[g].dim;
  if (k == 0) return {Rational(1), Rational(1)};
  const AffineChart chart(select(cfg, lat.faces[g].generators));
  Rational total = 0;
  RatMatrix edges(k, k);
  for (const auto& s : triangulate(lat, g, memo)) {
    const RatVector base = chart.project(cfg.point(s[0]));
    for (std::size_t i = 1; i <= k; ++i) {
      const RatVector y = chart.project(cfg.point(s[i]));
      for (std::size_t c = 0; c < k; ++c) edges(i - 1, c) = y[c] - base[c];
    }
    total += abs(determinant(edges));
  }
  mpz_class fact = 1;
  for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<unsigned long>(i);
  total /= fact;
  return {total, chart.metric()};
}

std::vector<std::vector<double>> orthonormalise(const std::vector<RatVector>& vecs) {
  std::vector<std::vector<double>> out;
  for (const auto& v : vecs) {
    std::vector<double> u(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) u[i] = v[i].get_d();
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& e : out) {
        double p = 0;
        for (std::size_t i = 0; i < u.size(); ++i) p += u[i] * e[i];
        for (std::size_t i = 0; i < u.size(); ++i) u[i] -= p * e[i];
      }
    }
    double norm = 0;
    for (double x : u) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : u) x /= norm;
    out.push_back(std::move(u));
  }
  return out;
}

bool in_cone(const double* u, const std::vector<std::vector<double>>& walls, double sign) {
  for (const auto& w : walls) {
    double s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += u[i] * w[i];
    if (sign * s > 0) return false;
  }
  return true;
}

double estimate_angle(const std::vector<std::vector<double>>& walls, std::size_t q,
                      CounterRng& rng, std::size_t samples) {
  std::size_t hits = 0;
  if (q == 2) {
    const double step = 2.0 * std::numbers::pi / static_cast<double>(samples);
    const double shift = rng.uniform();
    const double cs = std::cos(step);
    const double ss = std::sin(step);
    double u[2] = {0, 0};
    for (std::size_t i = 0; i < samples; ++i) {
      if (i % 1024 == 0) {
        const double phi = step * (static_cast<double>(i) + shift);
        u[0] = std::cos(phi);
        u[1] = std::sin(phi);
      }
      if (in_cone(u, walls, 1.0)) ++hits;
      const double c = u[0] * cs - u[1] * ss;
      u[1] = u[0] * ss + u[1] * cs;
      u[0] = c;
    }
    return static_cast<double>(hits) / static_cast<double>(samples);
  }
  // A normal cone of dimension one is a half-line, and exactly one of u and
  // -u falls in it, so the antithetic estimator below would return 1/2 on
  // any draw.
  if (q == 1) return 0.5;
  std::vector<double> u(q);
  const std::size_t pairs = std::max<std::size_t>(1, samples / 2);
  for (std::size_t i = 0; i < pairs; ++i) {
    for (auto& x : u) x = rng.normal();
    if (in_cone(u.data(), walls, 1.0)) ++hits;
    if (in_cone(u.data(), walls, -1.0)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(2 * pairs);
}

double angle_of(const Configuration& cfg, const Lattice& lat, std::size_t f, std::size_t p,
                std::uint64_t stream, const AngleOptions& angles) {
  if (angles.samples == 0) throw InvalidArgument("external angle needs at least one sample");
  const std::size_t k = lat.faces[p].dim;
  const std::size_t r = lat.faces[f].dim;
  if (r == k) return 1.0;
  const AffineChart poly(select(cfg, lat.faces[p].generators));
  const AffineChart face(select(cfg, lat.faces[f].generators));
  const std::size_t d = cfg.dim();

  // Normal space: combinations of the hull's basis orthogonal to the face's.
  RatMatrix cross(r, k);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < k; ++j) cross(i, j) = dot(face.basis().row(i), poly.basis().row(j));
  std::vector<RatVector> normals;
  for (const auto& c : nullspace(cross)) {
    RatVector n(d);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t t = 0; t < d; ++t) n[t] += c[j] * poly.basis()(j, t);
    normals.push_back(std::move(n));
  }
  const auto frame = orthonormalise(normals);
  const std::size_t q = frame.size();

  const RatVector& anchor = cfg.point(lat.faces[f].generators.members().front());
  std::vector<std::vector<double>> walls;
  for (std::size_t h = 0; h < lat.faces.size() && lat.faces[h].dim == 0; ++h) {
    if (!lat.within(h, p) || lat.within(h, f)) continue;
    const RatVector diff = sub(cfg.point(lat.faces[h].generators.members().front()), anchor);
    std::vector<double> w(q, 0.0);
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t t = 0; t < d; ++t) w[a] += frame[a][t] * diff[t].get_d();
    walls.push_back(std::move(w));
  }
  CounterRng rng(angles.seed, stream);
  return estimate_angle(walls, q, rng, angles.samples);
}

Value volume_value(const Surd& s) {
  if (auto e = s.exact()) return Value(*e);
  return Value(s.approx());
}

Value evaluate(const Configuration& cfg, const Lattice& lat, std::size_t r,
               const std::vector<std::size_t>& rep, const AngleOptions& angles) {
  const std::size_t p = lat.top();
  const std::size_t k = lat.faces[p].dim;
  if (r > k) return Value(0);
  if (r == 0) return Value(1);
  std::map<std::size_t, std::vector<Simplex>> memo;
  if (r == k) return volume_value(face_volume(cfg, lat, p, memo));
  const std::uint64_t poly_key = vertex_key(lat, p, rep);
  double total = 0;
  for (std::size_t f = 0; f < lat.faces.size(); ++f) {
    if (lat.faces[f].dim != r) continue;
    const double vol = face_volume(cfg, lat, f, memo).approx();
    const std::uint64_t stream = hash_combine(vertex_key(lat, f, rep), poly_key);
    total += vol * angle_of(cfg, lat, f, p, stream, angles);
  }
  return Value(total);
}

}  // namespace

double Surd::approx() const { return coefficient.get_d() * std::sqrt(radicand.get_d()); }

std::optional<Rational> Surd::exact() const {
  const mpz_class& num = radicand.get_num();
  const mpz_class& den = radicand.get_den();
  if (sgn(num) < 0 || !mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn;
  mpz_class rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational root(rn, rd);
  root.canonicalize();
  return coefficient * root;
}

Surd relative_volume(const Configuration& cfg, const IndexSet& set, const FaceOptions& opts) {
  const Lattice lat = build_lattice(cfg, set, opts);
  std::map<std::size_t, std::vector<Simplex>> memo;
  return face_volume(cfg, lat, lat.top(), memo);
}

double external_angle(const Configuration& cfg, const IndexSet& face, const IndexSet& set,
                      const AngleOptions& angles, const FaceOptions& opts) {
  const Lattice lat = build_lattice(cfg, set, opts);
  const auto it = std::find_if(lat.faces.begin(), lat.faces.end(),
                               [&](const FaceRecord& f) { return f.generators == face; });
  if (it == lat.faces.end()) throw InvalidArgument("index set is not a face generator set of P_J");
  const auto f = static_cast<std::size_t>(it - lat.faces.begin());
  const auto rep = representatives(cfg);
  const std::uint64_t stream = hash_combine(vertex_key(lat, f, rep), vertex_key(lat, lat.top(), rep));
  return angle_of(cfg, lat, f, lat.top(), stream, angles);
}

Value intrinsic_volume(const Configuration& cfg, const IndexSet& set, std::size_t r,
                       const AngleOptions& angles, const FaceOptions& opts) {
  return IntrinsicVolumes(cfg, angles, opts)(set, r);
}

IntrinsicVolumes::IntrinsicVolumes(const Configuration& cfg, AngleOptions angles,
                                   FaceOptions faces)
    : cfg_(cfg), angles_(angles), faces_(faces), rep_(representatives(cfg)) {}

Value IntrinsicVolumes::operator()(const IndexSet& set, std::size_t r) {
  check_index_set(cfg_, set);
  if (r == 0) return Value(1);
  const Lattice lat = build_lattice(cfg_, set, faces_);
  const auto key = std::make_pair(vertex_key(lat, lat.top(), rep_), r);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  Value v = evaluate(cfg_, lat, r, rep_, angles_);
  cache_.emplace(key, v);
  return v;
}

}  // namespace hullx
