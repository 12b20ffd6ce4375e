#include "hullx/io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hullx/errors.hpp"

namespace hullx {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Rational coordinate(const json& value, const std::string& where) {
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (value.is_number_integer()) return parse_rational(value.dump());
  if (value.is_number_float()) {
    // Re-parse the literal text so the advice shows the exact fraction.
    try {
      parse_rational(value.dump());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": expected a coordinate string such as \"1/2\"");
}

RatVector coordinates(const json& value, const std::string& where, std::size_t dim) {
  if (!value.is_array()) throw ParseError(where + ": expected a list of coordinates");
  if (value.size() != dim) {
    throw ParseError(where + ": has " + std::to_string(value.size()) + " coordinates, expected " +
                     std::to_string(dim));
  }
  RatVector v;
  for (std::size_t i = 0; i < value.size(); ++i) {
    v.push_back(coordinate(value[i], where + ", coordinate " + std::to_string(i + 1)));
  }
  return v;
}

std::string coordinate_text(const Rational& q) { return q.get_str(); }

ordered_json vector_json(const RatVector& v) {
  ordered_json out = ordered_json::array();
  for (const auto& c : v) out.push_back(coordinate_text(c));
  return out;
}

ordered_json value_json(const Value& v) {
  if (v.is_exact()) return v.exact().get_str();
  return v.approx();
}

ordered_json report_json(const IdentityReport& r) {
  ordered_json out;
  out["identity"] = std::string(identity_name(r.identity));
  out["parameters"] = ordered_json::object();
  for (const auto& [k, v] : r.parameters) out["parameters"][k] = v;
  out["lhs"] = value_json(r.lhs);
  out["rhs"] = value_json(r.rhs);
  out["side_data"] = ordered_json::object();
  for (const auto& [k, v] : r.side_data) out["side_data"][k] = v;
  out["pass"] = r.pass;
  out["tolerance"] = r.tolerance;
  return out;
}

ordered_json summary_json(const NamedSummary& s) {
  const TrialSummary& t = s.summary;
  ordered_json out;
  out["name"] = s.name;
  out["parameters"] = ordered_json::object();
  for (const auto& [k, v] : s.parameters) out["parameters"][k] = v;
  out["trials"] = t.trials;
  out["estimate"] = t.estimate;
  out["stderr"] = t.std_error;
  out["exact_violations"] = t.exact_violations;
  out["rejections"] = t.rejections;
  out["lhs_mean"] = t.lhs_mean;
  out["lhs_stderr"] = t.lhs_std_error;
  out["rhs_mean"] = t.rhs_mean;
  out["rhs_stderr"] = t.rhs_std_error;
  out["pass"] = t.pass;
  return out;
}

}  // namespace

ConfigFile parse_config(std::string_view json_text, std::string_view source) {
  const std::string where(source);
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(where + ": invalid JSON: " + e.what());
  }
  if (!doc.is_object()) throw ParseError(where + ": top level must be an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long>() < 1) {
    throw ParseError(where + ": \"dim\" must be a positive integer");
  }
  const auto dim = doc["dim"].get<std::size_t>();
  if (!doc.contains("points") || !doc["points"].is_array() || doc["points"].empty()) {
    throw ParseError(where + ": \"points\" must be a nonempty list");
  }
  std::vector<RatVector> pts;
  for (std::size_t i = 0; i < doc["points"].size(); ++i) {
    pts.push_back(coordinates(doc["points"][i], where + ": point " + std::to_string(i + 1), dim));
  }
  ConfigFile file{Configuration(dim, std::move(pts)), {}, {}, {}};

  if (doc.contains("flats")) {
    const auto& flats = doc["flats"];
    if (!flats.is_array()) throw ParseError(where + ": \"flats\" must be a list");
    for (std::size_t i = 0; i < flats.size(); ++i) {
      const std::string at = where + ": flat " + std::to_string(i + 1);
      if (!flats[i].is_object() || !flats[i].contains("anchor")) throw ParseError(at + ": needs an anchor");
      RatVector anchor = coordinates(flats[i]["anchor"], at + " anchor", dim);
      std::vector<RatVector> dirs;
      if (flats[i].contains("directions")) {
        const auto& ds = flats[i]["directions"];
        if (!ds.is_array()) throw ParseError(at + ": \"directions\" must be a list");
        for (std::size_t j = 0; j < ds.size(); ++j) {
          dirs.push_back(coordinates(ds[j], at + " direction " + std::to_string(j + 1), dim));
        }
      }
      try {
        file.flats.emplace_back(std::move(anchor), std::move(dirs));
      } catch (const InvalidArgument& e) {
        throw ParseError(at + ": " + e.what());
      }
    }
  }
  if (doc.contains("index_sets")) {
    const auto& sets = doc["index_sets"];
    if (!sets.is_array()) throw ParseError(where + ": \"index_sets\" must be a list");
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const std::string at = where + ": index set " + std::to_string(i + 1);
      if (!sets[i].is_array()) throw ParseError(at + ": expected a list of labels");
      std::vector<std::size_t> labels;
      for (const auto& l : sets[i]) {
        if (!l.is_number_integer() || l.get<long>() < 1) throw ParseError(at + ": labels are positive integers");
        labels.push_back(l.get<std::size_t>());
      }
      try {
        IndexSet set = IndexSet::from_labels(labels);
        check_index_set(file.cfg, set);
        file.index_sets.push_back(std::move(set));
      } catch (const InvalidArgument& e) {
        throw ParseError(at + ": " + e.what());
      }
    }
  }
  if (doc.contains("query_points")) {
    const auto& qs = doc["query_points"];
    if (!qs.is_array()) throw ParseError(where + ": \"query_points\" must be a list");
    for (std::size_t i = 0; i < qs.size(); ++i) {
      file.query_points.push_back(coordinates(qs[i], where + ": query point " + std::to_string(i + 1), dim));
    }
  }
  return file;
}

ConfigFile load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path.string());
}

std::string serialize_config(const ConfigFile& file) {
  ordered_json doc;
  doc["dim"] = file.cfg.dim();
  doc["points"] = ordered_json::array();
  for (const auto& p : file.cfg.points()) doc["points"].push_back(vector_json(p));
  if (!file.flats.empty()) {
    doc["flats"] = ordered_json::array();
    for (const auto& f : file.flats) {
      ordered_json flat;
      flat["anchor"] = vector_json(f.anchor());
      flat["directions"] = ordered_json::array();
      for (const auto& u : f.directions()) flat["directions"].push_back(vector_json(u));
      doc["flats"].push_back(std::move(flat));
    }
  }
  if (!file.index_sets.empty()) {
    doc["index_sets"] = ordered_json::array();
    for (const auto& s : file.index_sets) {
      ordered_json labels = ordered_json::array();
      for (auto i : s) labels.push_back(i + 1);
      doc["index_sets"].push_back(std::move(labels));
    }
  }
  if (!file.query_points.empty()) {
    doc["query_points"] = ordered_json::array();
    for (const auto& q : file.query_points) doc["query_points"].push_back(vector_json(q));
  }
  return doc.dump(2) + "\n";
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 15]);
  }
  return out;
}

bool ReportFile::pass() const {
  for (const auto& r : reports) {
    if (!r.pass) return false;
  }
  for (const auto& s : summaries) {
    if (!s.summary.pass) return false;
  }
  return true;
}

std::string serialize_report(const ReportFile& file) {
  ordered_json doc;
  doc["tool_version"] = file.tool_version;
  doc["input_digest"] = "sha256:" + file.input_digest;
  doc["reports"] = ordered_json::array();
  for (const auto& r : file.reports) doc["reports"].push_back(report_json(r));
  if (!file.summaries.empty()) {
    doc["summaries"] = ordered_json::array();
    for (const auto& s : file.summaries) doc["summaries"].push_back(summary_json(s));
  }
  doc["pass"] = file.pass();
  return doc.dump(2) + "\n";
}

void write_atomically(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw Error("cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
  }
}

std::filesystem::path write_repro(const std::filesystem::path& dir, const ConfigFile& file,
                                  const IdentityReport& report) {
  std::filesystem::create_directories(dir);
  const std::string body = serialize_config(file);
  const auto name = "repro-" + std::string(identity_name(report.identity)) + "-" +
                    sha256_hex(body).substr(0, 12) + ".json";
  const auto path = dir / name;
  write_atomically(path, body);
  return path;
}

}  // namespace hullx
