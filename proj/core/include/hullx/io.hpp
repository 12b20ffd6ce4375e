#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hullx/geometry.hpp"
#include "hullx/identities.hpp"
#include "hullx/stochastic.hpp"

namespace hullx {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Input file contents. Coordinates are strings "p/q" or "p" (JSON integers
/// are accepted too); index sets use 1-based labels.
///
///   {"dim": 2,
///    "points": [["0","0"], ["1","0"], ["1","1"], ["0","1"]],
///    "flats": [{"anchor": ["0","0"], "directions": [["2","1"]]}],
///    "index_sets": [[1, 3]],
///    "query_points": [["1/2","1/2"]]}
struct ConfigFile {
  Configuration cfg;
  std::vector<AffineFlat> flats;
  std::vector<IndexSet> index_sets;
  std::vector<RatVector> query_points;
};

/// `source` names the input in error messages.
ConfigFile parse_config(std::string_view json_text, std::string_view source = "<input>");
ConfigFile load_config(const std::filesystem::path& path);
std::string serialize_config(const ConfigFile& file);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

struct NamedSummary {
  std::string name;
  std::map<std::string, std::string> parameters;
  TrialSummary summary;
};

struct ReportFile {
  std::string tool_version = std::string(kToolVersion);
  std::string input_digest;
  std::vector<IdentityReport> reports;
  std::vector<NamedSummary> summaries;

  /// Every report and every summary passes.
  bool pass() const;
};

std::string serialize_report(const ReportFile& file);

/// Writes to a sibling temporary file and renames it into place.
void write_atomically(const std::filesystem::path& path, std::string_view contents);

/// Dumps `file` (which should reproduce the violation when fed back to the
/// command line) into `dir` as repro-<identity>-<digest prefix>.json and
/// returns the path.
std::filesystem::path write_repro(const std::filesystem::path& dir, const ConfigFile& file,
                                  const IdentityReport& report);

}  // namespace hullx
