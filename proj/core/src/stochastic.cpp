#include "hullx/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hullx/combinatorics.hpp"
#include "hullx/errors.hpp"
#include "hullx/linalg.hpp"
#include "hullx/predicates.hpp"
#include "hullx/random.hpp"

namespace hullx {
namespace {

Rational round_to(double x, std::uint64_t precision) {
  const long num = std::lround(x * static_cast<double>(precision));
  return make_rational(num, static_cast<unsigned long>(precision));
}

RatVector draw_point(const Distribution& dist, CounterRng& rng) {
  RatVector p(dist.dim);
  switch (dist.kind) {
    case DistributionKind::kUniformCube:
      for (auto& c : p) c = round_to(rng.uniform(), dist.precision);
      return p;
    case DistributionKind::kGaussian:
      for (auto& c : p) c = round_to(rng.normal(), dist.precision);
      return p;
    case DistributionKind::kUniformBall:
      while (true) {
        Rational norm2 = 0;
        for (auto& c : p) {
          c = round_to(2.0 * rng.uniform() - 1.0, dist.precision);
          norm2 += c * c;
        }
        if (norm2 <= 1) return p;
      }
  }
  return p;
}

double pairwise_sum(const double* v, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

IndexSet prefix(std::size_t k) { return IndexSet::all(k); }

double ball_volume(std::size_t d) {
  const double h = static_cast<double>(d) / 2.0;
  return std::pow(std::numbers::pi, h) / std::tgamma(h + 1.0);
}

void validate(const Distribution& dist) {
  if (dist.dim == 0) throw InvalidArgument("distribution dimension must be positive");
  if (dist.precision < (std::uint64_t{1} << 16)) {
    throw InvalidArgument("sampling precision must be at least 2^16");
  }
  if (dist.precision > (std::uint64_t{1} << 52)) {
    throw InvalidArgument("sampling precision must be at most 2^52");
  }
}

struct Sampled {
  Configuration cfg;
  IdentityReport report;
};

/// Draws trial `t`, retrying on hypothesis failures, and evaluates `check`.
template <class Check>
Sampled sample_checked(const Distribution& dist, std::size_t n, std::uint64_t seed, std::size_t t,
                       const TrialOptions& opts, std::size_t& rejections, Check&& check) {
  for (std::size_t attempt = 0; attempt < opts.max_attempts; ++attempt) {
    Configuration cfg = sample_config(dist, n, seed, hash_combine(t, attempt));
    try {
      IdentityReport rep = check(cfg);
      return {std::move(cfg), std::move(rep)};
    } catch (const HypothesisError&) {
      ++rejections;
    }
  }
  throw HypothesisError("no sample satisfied the hypotheses after " +
                        std::to_string(opts.max_attempts) + " attempts");
}

void record(const Sampled& s, TrialSummary& summary, const TrialOptions& opts) {
  if (s.report.pass) return;
  ++summary.exact_violations;
  if (opts.on_violation) opts.on_violation(s.cfg, s.report);
}

}  // namespace

std::string_view distribution_name(DistributionKind kind) {
  switch (kind) {
    case DistributionKind::kUniformBall: return "uniform-ball";
    case DistributionKind::kUniformCube: return "uniform-cube";
    case DistributionKind::kGaussian: return "gaussian";
  }
  return "unknown";
}

DistributionKind parse_distribution(std::string_view name) {
  if (name == "uniform-ball") return DistributionKind::kUniformBall;
  if (name == "uniform-cube") return DistributionKind::kUniformCube;
  if (name == "gaussian") return DistributionKind::kGaussian;
  throw InvalidArgument("unknown distribution '" + std::string(name) +
                        "'; expected uniform-ball, uniform-cube or gaussian");
}

Configuration sample_config(const Distribution& dist, std::size_t n, std::uint64_t seed,
                            std::uint64_t stream, std::size_t* duplicates) {
  validate(dist);
  if (n == 0) throw InvalidArgument("need at least one sample point");
  CounterRng rng(seed, stream);
  std::vector<RatVector> pts;
  std::size_t redraws = 0;
  while (pts.size() < n) {
    RatVector p = draw_point(dist, rng);
    if (std::find(pts.begin(), pts.end(), p) != pts.end()) {
      ++redraws;
      continue;
    }
    pts.push_back(std::move(p));
  }
  if (duplicates) *duplicates = redraws;
  return Configuration(dist.dim, std::move(pts));
}

Estimate estimate(const std::vector<double>& values) {
  Estimate e;
  const std::size_t n = values.size();
  if (n == 0) return e;
  e.mean = pairwise_sum(values.data(), n) / static_cast<double>(n);
  if (n < 2) return e;
  std::vector<double> sq(n);
  for (std::size_t i = 0; i < n; ++i) sq[i] = (values[i] - e.mean) * (values[i] - e.mean);
  const double var = pairwise_sum(sq.data(), n) / static_cast<double>(n - 1);
  e.std_error = std::sqrt(var / static_cast<double>(n));
  return e;
}

TrialSummary expectation_identity_trial(ExpectationKind kind, const Distribution& dist,
                                        std::size_t n, std::size_t r, std::size_t trials,
                                        std::uint64_t seed, const TrialOptions& opts) {
  validate(dist);
  if (r > dist.dim) throw InvalidArgument("r must not exceed the dimension");
  TrialSummary summary;
  summary.trials = trials;
  std::vector<double> lhs(trials);
  std::vector<double> rhs(trials);
  std::vector<double> diff(trials);
  const std::size_t d = dist.dim;

  for (std::size_t t = 0; t < trials; ++t) {
    if (kind == ExpectationKind::kIntrinsic) {
      const auto s = sample_checked(dist, n, seed, t, opts, summary.rejections, [&](const Configuration& cfg) {
        return intrinsic_identity_check(cfg, r, opts.tolerance, opts.angles, opts.engine);
      });
      record(s, summary, opts);
      IntrinsicVolumes volumes(s.cfg, opts.angles, opts.engine.faces);
      double sum = 0.0;
      for (std::size_t k = 1; k <= n; ++k) {
        sum += static_cast<double>(sign_of_power(k - 1) * binomial(n, k)) * volumes(prefix(k), r).approx();
      }
      lhs[t] = sum;
      rhs[t] = sign_of_power(r) * volumes(prefix(n), r).approx();
    } else {
      const auto s = sample_checked(dist, n, seed, t, opts, summary.rejections, [&](const Configuration& cfg) {
        return face_count_identity_check(cfg, r, opts.engine);
      });
      record(s, summary, opts);
      auto f_r = [&](std::size_t k) -> std::int64_t {
        const auto f = f_vector(s.cfg, prefix(k), opts.engine.faces);
        return r < f.size() ? f[r] : 0;
      };
      std::int64_t sum = 0;
      for (std::size_t k = 1; k <= n; ++k) sum += sign_of_power(k - 1) * binomial(n, k) * f_r(k);
      lhs[t] = static_cast<double>(sum);
      rhs[t] = static_cast<double>(sign_of_power(d) * (binomial(n, r + 1) - f_r(n)));
    }
    diff[t] = lhs[t] - rhs[t];
  }

  const Estimate el = estimate(lhs);
  const Estimate er = estimate(rhs);
  const Estimate ed = estimate(diff);
  summary.lhs_mean = el.mean;
  summary.lhs_std_error = el.std_error;
  summary.rhs_mean = er.mean;
  summary.rhs_std_error = er.std_error;
  summary.estimate = ed.mean;
  summary.std_error = ed.std_error;
  summary.pass = summary.exact_violations == 0 && std::abs(ed.mean) <= 3.0 * ed.std_error;
  return summary;
}

TrialSummary buchta_distribution_check(const Distribution& dist, std::size_t n, std::size_t l,
                                       std::size_t trials, std::uint64_t seed,
                                       const TrialOptions& opts) {
  validate(dist);
  if (l < 1 || l > n) throw InvalidArgument("l must lie in 1..n");
  double body_volume = 1.0;
  switch (dist.kind) {
    case DistributionKind::kUniformCube: body_volume = 1.0; break;
    case DistributionKind::kUniformBall: body_volume = ball_volume(dist.dim); break;
    case DistributionKind::kGaussian:
      throw InvalidArgument("probability contents M_j are only available for uniform distributions");
  }
  const std::size_t d = dist.dim;
  TrialSummary summary;
  summary.trials = trials;
  std::vector<double> lhs(trials);
  std::vector<double> rhs(trials);

  for (std::size_t t = 0; t < trials; ++t) {
    const auto s = sample_checked(dist, n, seed, t, opts, summary.rejections, [&](const Configuration& cfg) {
      return buchta_pointwise_check(cfg, l, opts.engine);
    });
    record(s, summary, opts);

    std::size_t vertices = 0;
    for (std::size_t i = 0; i < n; ++i) vertices += is_vertex(s.cfg, prefix(n), i) ? 1 : 0;
    lhs[t] = vertices == l ? 1.0 : 0.0;

    double sum = 0.0;
    for (std::size_t j = 1; j <= l; ++j) {
      double content = 0.0;
      const auto first = select(s.cfg, prefix(j));
      if (affine_rank(first) == d) {
        content = relative_volume(s.cfg, prefix(j), opts.engine.faces).approx() / body_volume;
      }
      sum += static_cast<double>(sign_of_power(j) * binomial(l, j)) *
             std::pow(content, static_cast<double>(n - j));
    }
    rhs[t] = static_cast<double>(sign_of_power(l) * binomial(n, l)) * sum;
  }

  const Estimate el = estimate(lhs);
  const Estimate er = estimate(rhs);
  summary.lhs_mean = el.mean;
  summary.lhs_std_error = el.std_error;
  summary.rhs_mean = er.mean;
  summary.rhs_std_error = er.std_error;
  summary.estimate = el.mean - er.mean;
  summary.std_error = std::hypot(el.std_error, er.std_error);
  summary.pass = summary.exact_violations == 0 && std::abs(summary.estimate) <= 3.0 * summary.std_error;
  return summary;
}

}  // namespace hullx
