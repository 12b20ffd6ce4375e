#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hullx/geometry.hpp"
#include "hullx/identities.hpp"

namespace hullx {

/// Families of adversarial configurations.
///
///  collinear            three or more points on one line, queries on it
///  point-on-facet       a polytope with extra points placed on its facets
///  flat-through-vertex  squares and boxes cut by flats through a vertex
///  duplicated-points    repeated labels for the same point
///  simplex-degenerate   d+1 points that fail to span R^d
///  exceptional          queries on (d-2)-flats spanned by the points
enum class FuzzProfile {
  kCollinear,
  kPointOnFacet,
  kFlatThroughVertex,
  kDuplicatedPoints,
  kSimplexDegenerate,
  kExceptional,
};

std::string_view profile_name(FuzzProfile profile);
FuzzProfile parse_profile(std::string_view name);
std::vector<FuzzProfile> all_profiles();

/// One generated configuration with the auxiliary objects the identities
/// are evaluated on.
struct FuzzCase {
  Configuration cfg;
  std::vector<RatVector> queries;
  std::vector<AffineFlat> flats;
  std::vector<IndexSet> index_sets;
  /// A polytope touching P at a single vertex, when P has one.
  std::optional<Configuration> partner;
};

FuzzCase generate_case(FuzzProfile profile, std::uint64_t seed, std::size_t index);

/// Reports of every exact identity whose hypotheses hold on the case.
/// Identities whose hypotheses fail are counted in `skipped`.
struct CaseResult {
  std::vector<IdentityReport> reports;
  std::size_t skipped = 0;
};

CaseResult run_exact_identities(const FuzzCase& c, const EngineOptions& opts = {});

}  // namespace hullx
