#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hullx/errors.hpp"
#include "hullx/face_lattice.hpp"
#include "hullx/fuzz.hpp"
#include "hullx/identities.hpp"
#include "hullx/io.hpp"
#include "hullx/stochastic.hpp"

namespace hullx::cli {
namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string identity;
  std::string config;
  std::vector<std::string> points;
  std::vector<std::string> flats;
  std::vector<std::string> index_sets;
  std::optional<std::size_t> r;
  std::optional<std::size_t> l;
  double tol = 5e-3;
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  std::size_t samples = 1'000'000;
  std::optional<std::size_t> limit_n;
  bool project = false;
  std::string out;
  std::string repro_dir;

  std::string sample_kind;
  std::string distribution = "uniform-ball";
  std::string quantity = "intrinsic";
  std::size_t dim = 2;
  std::size_t n = 4;
  std::uint64_t precision = std::uint64_t{1} << 32;

  std::string fuzz_kind;
  std::vector<std::string> profiles;
  std::size_t count = 20;
};

/// A report plus the input that reproduces it.
struct Item {
  IdentityReport report;
  ConfigFile repro;
};

RatVector parse_point(const std::string& text, std::size_t dim) {
  RatVector v = parse_vector(text);
  if (v.size() != dim) {
    throw UsageError("point \"" + text + "\" has " + std::to_string(v.size()) + " coordinates, expected " +
                     std::to_string(dim));
  }
  return v;
}

AffineFlat parse_flat(const std::string& text, std::size_t dim) {
  AffineFlat flat = AffineFlat::parse(text);
  if (flat.ambient_dim() != dim) {
    throw UsageError("flat \"" + text + "\" lives in dimension " + std::to_string(flat.ambient_dim()) +
                     ", expected " + std::to_string(dim));
  }
  return flat;
}

IndexSet parse_index_set(const std::string& text, const Configuration& cfg) {
  std::vector<std::size_t> labels;
  std::istringstream parts(text);
  for (std::string part; std::getline(parts, part, ',');) {
    std::size_t value = 0;
    const auto res = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || res.ec != std::errc{} || res.ptr != part.data() + part.size() || value == 0) {
      throw UsageError("index set \"" + text + "\": labels are positive integers");
    }
    labels.push_back(value);
  }
  IndexSet set = IndexSet::from_labels(labels);
  check_index_set(cfg, set);
  return set;
}

std::size_t default_limit() {
  const char* env = std::getenv("HULLX_LIMIT_N");
  if (env == nullptr || *env == '\0') return EngineOptions{}.subset_limit;
  std::size_t value = 0;
  const std::string_view s(env);
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || value == 0) {
    throw UsageError("HULLX_LIMIT_N must be a positive integer, got \"" + std::string(s) + "\"");
  }
  return value;
}

EngineOptions engine_options(const Options& o) {
  EngineOptions eng;
  eng.subset_limit = o.limit_n ? *o.limit_n : default_limit();
  eng.project_to_affine_hull = o.project;
  return eng;
}

/// The digest covers the config bytes and every other argument that can
/// change the result. File locations are left out, so the same input read
/// from or written to two places yields the same report.
std::string input_digest(const std::vector<std::string>& args, const std::string& config_bytes) {
  std::string material = config_bytes;
  material.push_back('\0');
  for (std::size_t i = 0; i < args.size(); ++i) {
    const auto& a = args[i];
    if (a == "--out" || a == "--repro-dir" || a == "--config") {
      ++i;
      continue;
    }
    if (a.starts_with("--out=") || a.starts_with("--repro-dir=") || a.starts_with("--config=")) continue;
    material += a;
    material.push_back('\0');
  }
  return sha256_hex(material);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open config " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path repro_dir(const Options& o) {
  if (!o.repro_dir.empty()) return o.repro_dir;
  if (!o.out.empty() && o.out != "-") {
    const auto parent = std::filesystem::path(o.out).parent_path();
    if (!parent.empty()) return parent;
  }
  return std::filesystem::current_path();
}

std::string describe(const IdentityReport& r) {
  std::string s(identity_name(r.identity));
  for (const auto& [k, v] : r.parameters) s += " " + k + "=" + v;
  s += ": lhs = " + r.lhs.to_string() + ", rhs = " + r.rhs.to_string();
  s += r.pass ? "  PASS" : "  FAIL";
  return s;
}

void emit(const Options& o, const std::string& json_text, std::ostream& out) {
  if (o.out.empty()) return;
  if (o.out == "-") {
    out << json_text;
  } else {
    write_atomically(o.out, json_text);
  }
}

int finish(const Options& o, ReportFile& file, std::ostream& out) {
  const std::string text = serialize_report(file);
  emit(o, text, out);
  return file.pass() ? kExitPass : kExitViolation;
}

std::vector<Item> verify_items(const Options& o, const ConfigFile& file, const EngineOptions& eng) {
  const Configuration& cfg = file.cfg;
  std::vector<RatVector> points;
  for (const auto& p : o.points) points.push_back(parse_point(p, cfg.dim()));
  if (points.empty()) points = file.query_points;
  std::vector<AffineFlat> flats;
  for (const auto& f : o.flats) flats.push_back(parse_flat(f, cfg.dim()));
  if (flats.empty()) flats = file.flats;
  std::vector<IndexSet> sets;
  for (const auto& s : o.index_sets) sets.push_back(parse_index_set(s, cfg));
  if (sets.empty()) sets = file.index_sets;

  auto need = [](bool ok, const std::string& what) {
    if (!ok) throw UsageError(what);
  };
  auto with_point = [&](const RatVector& x) { return ConfigFile{cfg, {}, {}, {x}}; };

  std::vector<Item> items;
  const std::string& id = o.identity;
  if (id == "cowan" || id == "dual-cowan" || id == "simplex-lift") {
    need(!points.empty(), id + " needs --point or query_points in the config");
    for (const auto& x : points) {
      IdentityReport rep = id == "cowan"        ? cowan_check(cfg, x, eng)
                           : id == "dual-cowan" ? dual_cowan_check(cfg, x, eng)
                                                : simplex_lift_crosscheck(cfg, x, eng);
      items.push_back({std::move(rep), with_point(x)});
    }
  } else if (id == "cowan-affine") {
    need(!flats.empty(), "cowan-affine needs --flat or flats in the config");
    for (const auto& f : flats) items.push_back({cowan_affine_check(cfg, f, eng), ConfigFile{cfg, {f}, {}, {}}});
  } else if (id == "euler-cut") {
    need(!flats.empty(), "euler-cut needs --flat or flats in the config");
    if (sets.empty()) sets.push_back(IndexSet::all(cfg.size()));
    for (const auto& s : sets) {
      for (const auto& f : flats) {
        items.push_back({euler_intersection_check(cfg, s, f, eng), ConfigFile{cfg, {f}, {s}, {}}});
      }
    }
  } else if (id == "euler-touch") {
    need(sets.size() == 2, "euler-touch needs exactly two index sets");
    items.push_back({euler_touch_check(cfg, sets[0], cfg, sets[1], eng), ConfigFile{cfg, {}, sets, {}}});
  } else if (id == "intrinsic") {
    need(o.r.has_value(), "intrinsic needs --r");
    const AngleOptions angles{o.seed, o.samples};
    items.push_back({intrinsic_identity_check(cfg, *o.r, o.tol, angles, eng), ConfigFile{cfg, {}, {}, {}}});
  } else if (id == "faces" || id == "faces-clean") {
    need(!sets.empty(), id + " needs --index-set or index_sets in the config");
    for (const auto& s : sets) {
      IdentityReport rep = id == "faces" ? b_sum_check(cfg, s, eng) : b_star_sum_check(cfg, s, eng);
      items.push_back({std::move(rep), ConfigFile{cfg, {}, {s}, {}}});
    }
  } else if (id == "face-counts") {
    need(o.r.has_value(), "face-counts needs --r");
    items.push_back({face_count_identity_check(cfg, *o.r, eng), ConfigFile{cfg, {}, {}, {}}});
  } else if (id == "buchta-pointwise") {
    if (o.l) {
      items.push_back({buchta_pointwise_check(cfg, *o.l, eng), ConfigFile{cfg, {}, {}, {}}});
    } else {
      for (auto& rep : buchta_pointwise_all(cfg, eng)) items.push_back({std::move(rep), ConfigFile{cfg, {}, {}, {}}});
    }
  }
  return items;
}

int run_verify(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  if (o.config.empty()) throw UsageError("verify needs --config");
  const std::string bytes = read_file(o.config);
  const ConfigFile file = parse_config(bytes, o.config);
  const auto items = verify_items(o, file, engine_options(o));

  ReportFile report;
  report.input_digest = input_digest(args, bytes);
  const auto dir = repro_dir(o);
  for (const auto& item : items) {
    if (o.out != "-") out << describe(item.report) << "\n";
    if (!item.report.pass) {
      const auto path = write_repro(dir, item.repro, item.report);
      if (o.out != "-") out << "  repro written to " << path.string() << "\n";
    }
    report.reports.push_back(item.report);
  }
  return finish(o, report, out);
}

int run_enumerate(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  if (o.config.empty()) throw UsageError("enumerate needs --config");
  const std::string bytes = read_file(o.config);
  const ConfigFile file = parse_config(bytes, o.config);
  std::vector<IndexSet> sets;
  for (const auto& s : o.index_sets) sets.push_back(parse_index_set(s, file.cfg));
  if (sets.empty()) sets = file.index_sets;
  if (sets.empty()) sets.push_back(IndexSet::all(file.cfg.size()));

  nlohmann::ordered_json doc;
  doc["tool_version"] = std::string(kToolVersion);
  doc["input_digest"] = "sha256:" + input_digest(args, bytes);
  doc["polytopes"] = nlohmann::ordered_json::array();
  for (const auto& set : sets) {
    const auto faces = enumerate_faces(file.cfg, set);
    const auto f = f_vector(faces);
    nlohmann::ordered_json poly;
    poly["index_set"] = nlohmann::ordered_json::array();
    for (auto i : set) poly["index_set"].push_back(i + 1);
    poly["f_vector"] = f;
    poly["faces"] = nlohmann::ordered_json::array();
    for (const auto& face : faces) {
      nlohmann::ordered_json entry;
      entry["dim"] = face.dim;
      entry["generators"] = nlohmann::ordered_json::array();
      for (auto i : face.generators) entry["generators"].push_back(i + 1);
      poly["faces"].push_back(std::move(entry));
    }
    doc["polytopes"].push_back(std::move(poly));

    if (o.out != "-") {
      out << "P" << set.to_string() << ": f =";
      for (auto k : f) out << " " << k;
      out << "\n";
      for (const auto& face : faces) out << "  dim " << face.dim << "  " << face.generators.to_string() << "\n";
    }
  }
  doc["pass"] = true;
  emit(o, doc.dump(2) + "\n", out);
  return kExitPass;
}

void print_summary(const NamedSummary& s, std::ostream& out) {
  const auto& t = s.summary;
  out << s.name << ": trials = " << t.trials << ", estimate = " << t.estimate << " +- " << t.std_error
      << ", lhs = " << t.lhs_mean << " +- " << t.lhs_std_error << ", rhs = " << t.rhs_mean << " +- "
      << t.rhs_std_error << ", exact violations = " << t.exact_violations
      << ", rejections = " << t.rejections << (t.pass ? "  PASS" : "  FAIL") << "\n";
}

int run_sample(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  Distribution dist{parse_distribution(o.distribution), o.dim, o.precision};
  TrialOptions topts;
  topts.tolerance = o.tol;
  topts.angles.samples = o.samples;
  topts.engine = engine_options(o);
  const auto dir = repro_dir(o);
  topts.on_violation = [&](const Configuration& cfg, const IdentityReport& rep) {
    const auto path = write_repro(dir, ConfigFile{cfg, {}, {}, {}}, rep);
    if (o.out != "-") out << "violation: " << describe(rep) << "\n  repro written to " << path.string() << "\n";
  };

  NamedSummary named;
  named.parameters = {{"distribution", o.distribution},
                      {"dim", std::to_string(o.dim)},
                      {"n", std::to_string(o.n)},
                      {"trials", std::to_string(o.trials)},
                      {"seed", std::to_string(o.seed)}};
  if (o.sample_kind == "expectation") {
    if (!o.r) throw UsageError("sample expectation needs --r");
    ExpectationKind kind;
    if (o.quantity == "intrinsic") {
      kind = ExpectationKind::kIntrinsic;
    } else if (o.quantity == "faces") {
      kind = ExpectationKind::kFaces;
    } else {
      throw UsageError("--quantity must be intrinsic or faces");
    }
    named.name = "expectation-" + o.quantity;
    named.parameters["r"] = std::to_string(*o.r);
    named.summary = expectation_identity_trial(kind, dist, o.n, *o.r, o.trials, o.seed, topts);
  } else {
    if (!o.l) throw UsageError("sample buchta needs --l");
    named.name = "buchta";
    named.parameters["l"] = std::to_string(*o.l);
    named.summary = buchta_distribution_check(dist, o.n, *o.l, o.trials, o.seed, topts);
  }
  if (o.out != "-") print_summary(named, out);

  ReportFile report;
  report.input_digest = input_digest(args, {});
  report.summaries.push_back(std::move(named));
  return finish(o, report, out);
}

int run_fuzz(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  std::vector<FuzzProfile> profiles;
  for (const auto& p : o.profiles) profiles.push_back(parse_profile(p));
  if (profiles.empty()) profiles = all_profiles();
  const EngineOptions eng = engine_options(o);
  const auto dir = repro_dir(o);

  ReportFile report;
  report.input_digest = input_digest(args, {});
  for (auto profile : profiles) {
    std::size_t checks = 0;
    std::size_t skipped = 0;
    std::size_t failures = 0;
    for (std::size_t i = 0; i < o.count; ++i) {
      const FuzzCase c = generate_case(profile, o.seed, i);
      CaseResult result = run_exact_identities(c, eng);
      checks += result.reports.size();
      skipped += result.skipped;
      for (auto& rep : result.reports) {
        rep.parameters["profile"] = std::string(profile_name(profile));
        rep.parameters["case"] = std::to_string(i);
        if (!rep.pass) {
          ++failures;
          const auto path = write_repro(dir, ConfigFile{c.cfg, c.flats, c.index_sets, c.queries}, rep);
          if (o.out != "-") out << "violation: " << describe(rep) << "\n  repro written to " << path.string() << "\n";
        }
        report.reports.push_back(std::move(rep));
      }
    }
    if (o.out != "-") {
      out << profile_name(profile) << ": " << o.count << " cases, " << checks << " checks, " << skipped
          << " skipped, " << failures << " failures\n";
    }
  }
  return finish(o, report, out);
}

void add_engine_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--limit-n", o.limit_n, "Refuse subset enumeration beyond this many points (default 20, or HULLX_LIMIT_N)")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--project-to-affine-hull", o.project,
                "Work inside the affine hull when the points do not span the ambient space");
}

void add_output_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--out", o.out, "Write the JSON report here ('-' for standard output)");
  cmd->add_option("--repro-dir", o.repro_dir, "Directory for repro files (default: next to --out)");
}

template <typename T>
CLI::Option* add_repeated(CLI::App* cmd, const std::string& name, T& target, const std::string& help) {
  return cmd->add_option(name, target, help)->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact verification of inclusion-exclusion identities for convex hulls", "hullx"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  static const std::vector<std::string> identities = {
      "cowan",       "dual-cowan",  "euler-cut",   "euler-touch",      "cowan-affine", "intrinsic",
      "faces",       "faces-clean", "face-counts", "buchta-pointwise", "simplex-lift"};

  auto* verify = app.add_subcommand("verify", "Check one identity on a configuration file");
  verify->add_option("identity", o.identity, "Identity to check")->required()->check(CLI::IsMember(identities));
  verify->add_option("--config", o.config, "Configuration JSON")->required();
  add_repeated(verify, "--point", o.points, "Query point, comma separated (repeatable)");
  add_repeated(verify, "--flat", o.flats, "Flat as \"anchor;dir1;dir2\" (repeatable)");
  add_repeated(verify, "--index-set", o.index_sets, "1-based labels, comma separated (repeatable)");
  verify->add_option("--r", o.r, "Degree for intrinsic and face-counts");
  verify->add_option("--l", o.l, "Vertex count for buchta-pointwise (default: all)");
  verify->add_option("--tol", o.tol, "Tolerance for inexact intrinsic volumes")->capture_default_str();
  verify->add_option("--seed", o.seed, "Seed for Monte Carlo external angles")->capture_default_str();
  verify->add_option("--samples", o.samples, "Monte Carlo samples per external angle")->capture_default_str();
  add_engine_flags(verify, o);
  add_output_flags(verify, o);

  auto* enumerate = app.add_subcommand("enumerate", "List the faces of hulls of a configuration");
  enumerate->add_option("what", o.identity, "What to enumerate")->required()->check(CLI::IsMember({"faces"}));
  enumerate->add_option("--config", o.config, "Configuration JSON")->required();
  add_repeated(enumerate, "--index-set", o.index_sets, "1-based labels, comma separated (repeatable)");
  add_output_flags(enumerate, o);

  auto* sample = app.add_subcommand("sample", "Monte Carlo checks of the expectation identities");
  sample->add_option("kind", o.sample_kind, "expectation or buchta")
      ->required()
      ->check(CLI::IsMember({"expectation", "buchta"}));
  sample->add_option("--distribution", o.distribution, "uniform-ball, uniform-cube or gaussian")
      ->capture_default_str();
  sample->add_option("--dim", o.dim, "Ambient dimension")->capture_default_str()->check(CLI::PositiveNumber);
  sample->add_option("--n", o.n, "Points per sample")->capture_default_str()->check(CLI::PositiveNumber);
  sample->add_option("--quantity", o.quantity, "intrinsic or faces (expectation only)")->capture_default_str();
  sample->add_option("--r", o.r, "Degree (expectation only)");
  sample->add_option("--l", o.l, "Vertex count (buchta only)");
  sample->add_option("--trials", o.trials, "Number of samples")->capture_default_str()->check(CLI::PositiveNumber);
  sample->add_option("--seed", o.seed, "Base seed")->capture_default_str();
  sample->add_option("--tol", o.tol, "Per-sample tolerance for inexact intrinsic volumes")->capture_default_str();
  sample->add_option("--samples", o.samples, "Monte Carlo samples per external angle")->capture_default_str();
  sample->add_option("--precision", o.precision, "Coordinates are rounded to multiples of 1/precision")
      ->capture_default_str();
  add_engine_flags(sample, o);
  add_output_flags(sample, o);

  auto* fuzz = app.add_subcommand("fuzz", "Run every exact identity on adversarial configurations");
  fuzz->add_option("kind", o.fuzz_kind, "Fuzzer family")->required()->check(CLI::IsMember({"degenerate"}));
  add_repeated(fuzz, "--profile", o.profiles, "Profile to run (repeatable, default: all)");
  fuzz->add_option("--count", o.count, "Cases per profile")->capture_default_str();
  fuzz->add_option("--seed", o.seed, "Base seed")->capture_default_str();
  add_engine_flags(fuzz, o);
  add_output_flags(fuzz, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (verify->parsed()) return run_verify(o, args, out);
    if (enumerate->parsed()) return run_enumerate(o, args, out);
    if (sample->parsed()) return run_sample(o, args, out);
    return run_fuzz(o, args, out);
  } catch (const HypothesisError& e) {
    err << "hypothesis error: " << e.what() << "\n";
  } catch (const LimitError& e) {
    err << "limit exceeded: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace hullx::cli
