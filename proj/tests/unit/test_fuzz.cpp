#include <doctest.h>

#include "hullx/fuzz.hpp"
#include "hullx/linalg.hpp"
#include "hullx/predicates.hpp"

using namespace hullx;

TEST_CASE("every profile yields passing exact identities") {
  for (auto profile : all_profiles()) {
    CAPTURE(profile_name(profile));
    std::size_t reports = 0;
    for (std::size_t i = 0; i < 12; ++i) {
      CAPTURE(i);
      const auto c = generate_case(profile, 3, i);
      EngineOptions opts;
      opts.project_to_affine_hull = true;
      const auto result = run_exact_identities(c, opts);
      for (const auto& r : result.reports) {
        CAPTURE(identity_name(r.identity));
        CHECK(r.pass);
      }
      reports += result.reports.size();
    }
    CHECK(reports > 0);
  }
}

TEST_CASE("profiles produce the advertised degeneracy") {
  for (std::size_t i = 0; i < 10; ++i) {
    const auto col = generate_case(FuzzProfile::kCollinear, 1, i);
    CHECK(col.queries.size() >= 3);
    const auto deg = generate_case(FuzzProfile::kSimplexDegenerate, 1, i);
    CHECK(affine_rank(deg.cfg.points()) < deg.cfg.dim());
    const auto dup = generate_case(FuzzProfile::kDuplicatedPoints, 1, i);
    bool repeated = false;
    for (std::size_t a = 0; a < dup.cfg.size(); ++a)
      for (std::size_t b = 0; b < a; ++b) repeated = repeated || dup.cfg.point(a) == dup.cfg.point(b);
    CHECK(repeated);
    const auto ex = generate_case(FuzzProfile::kExceptional, 1, i);
    CHECK(affine_rank(ex.cfg.points()) == ex.cfg.dim());
  }
}

TEST_CASE("generation is deterministic") {
  const auto a = generate_case(FuzzProfile::kPointOnFacet, 9, 4);
  const auto b = generate_case(FuzzProfile::kPointOnFacet, 9, 4);
  CHECK(a.cfg == b.cfg);
  CHECK(a.queries == b.queries);
  CHECK(parse_profile("flat-through-vertex") == FuzzProfile::kFlatThroughVertex);
}
