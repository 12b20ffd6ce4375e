#include <doctest.h>

#include "fixtures.hpp"
#include "hullx/errors.hpp"
#include "hullx/identities.hpp"
#include "hullx/predicates.hpp"

using namespace hullx;
using namespace hullx::testing;

namespace {

// Counts k-subsets containing x with one membership query per subset.
std::vector<std::int64_t> naive_c(const Configuration& cfg, const RatVector& x) {
  std::vector<std::int64_t> c(cfg.size(), 0);
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << cfg.size()); ++m) {
    const IndexSet s = IndexSet::from_mask(m);
    if (hull_contains(cfg, s, x)) ++c[s.size() - 1];
  }
  return c;
}

std::int64_t as_int(const Value& v) { return v.exact().get_num().get_si(); }

}  // namespace

TEST_CASE("cowan on the square centre") {
  const auto sq = unit_square();
  const auto rep = cowan_check(sq, vec({"1/2", "1/2"}));
  CHECK(rep.pass);
  CHECK(rep.side_data.at("c") == std::vector<std::int64_t>{0, 2, 4, 1});
  CHECK(as_int(rep.lhs) == 1);
  CHECK(rep.side_data.at("c") == naive_c(sq, vec({"1/2", "1/2"})));
}

TEST_CASE("cowan far outside and at a vertex of a segment") {
  const auto sq = unit_square();
  const auto far = cowan_check(sq, vec({"5", "5"}));
  CHECK(far.pass);
  CHECK(as_int(far.lhs) == 0);

  const auto seg = points(2, {{"0", "0"}, {"2", "1"}});
  const auto at = cowan_check(seg, vec({"0", "0"}));
  CHECK(at.side_data.at("c") == std::vector<std::int64_t>{1, 1});
  CHECK(as_int(at.lhs) == 0);
  CHECK(as_int(at.rhs) == 0);
}

TEST_CASE("cowan agrees with naive counting on edge and vertex queries") {
  const auto cfg = points(2, {{"0", "0"}, {"3", "0"}, {"0", "3"}, {"1", "1"}, {"3/2", "3/2"}});
  for (const auto& x : {vec({"1", "1"}), vec({"3/2", "0"}), vec({"3/2", "3/2"}), vec({"1/2", "1/2"}),
                        vec({"0", "0"}), vec({"-1", "0"})}) {
    const auto rep = cowan_check(cfg, x);
    CHECK(rep.pass);
    CHECK(rep.side_data.at("c") == naive_c(cfg, x));
  }
}

TEST_CASE("dual cowan examples") {
  const auto line = points(1, {{"1"}, {"3"}});
  const auto mid = dual_cowan_check(line, vec({"2"}));
  CHECK(mid.pass);
  CHECK(as_int(mid.lhs) == 1);
  CHECK(as_int(dual_cowan_check(line, vec({"7"})).lhs) == 0);
  const auto single = points(1, {{"4"}});
  const auto at = dual_cowan_check(single, vec({"4"}));
  CHECK(at.pass);
  CHECK(as_int(at.lhs) == 1);
}

TEST_CASE("euler intersection on the square") {
  const auto sq = unit_square();
  const auto all = IndexSet::all(4);
  const auto diagonal_cut = euler_intersection_check(sq, all, AffineFlat::parse("0,0;2,1"));
  CHECK(diagonal_cut.pass);
  CHECK(diagonal_cut.side_data.at("a") == std::vector<std::int64_t>{1, 3, 1});
  CHECK(as_int(diagonal_cut.lhs) == -1);

  const auto along_edge = euler_intersection_check(sq, all, AffineFlat::parse("0,0;1,0"));
  CHECK(along_edge.pass);
  CHECK(along_edge.side_data.at("a") == std::vector<std::int64_t>{2, 3, 1});
  CHECK(as_int(along_edge.lhs) == 0);

  const auto plane = euler_intersection_check(sq, all, AffineFlat::whole_space(2));
  CHECK(plane.pass);
  CHECK(as_int(plane.lhs) == 1);

  const auto seg = points(2, {{"0", "0"}, {"1", "0"}});
  CHECK_THROWS_AS(euler_intersection_check(seg, IndexSet::all(2), AffineFlat::whole_space(2)),
                  HypothesisError);
}

TEST_CASE("euler touch") {
  const auto a = unit_square();
  const auto b = points(2, {{"1", "0"}, {"2", "0"}, {"2", "1"}, {"1", "1"}});
  const auto rep = euler_touch_check(a, IndexSet::all(4), b, IndexSet::all(4));
  CHECK(rep.pass);
  CHECK(rep.side_data.at("counts") == std::vector<std::int64_t>{2, 3, 1});

  const auto corner = points(2, {{"1", "1"}});
  const auto pt = euler_touch_check(a, IndexSet::all(4), corner, IndexSet::all(1));
  CHECK(pt.side_data.at("counts") == std::vector<std::int64_t>{1, 2, 1});
  CHECK(pt.pass);

  const auto u = points(1, {{"0"}, {"1"}});
  const auto v = points(1, {{"1"}, {"2"}});
  CHECK(euler_touch_check(u, IndexSet::all(2), v, IndexSet::all(2)).pass);

  const auto apart = points(2, {{"5", "5"}, {"6", "6"}});
  CHECK_THROWS_WITH_AS(euler_touch_check(a, IndexSet::all(4), apart, IndexSet::all(2)),
                       "polytopes do not touch", HypothesisError);
  const auto overlap = points(2, {{"1/2", "1/2"}, {"3", "3"}});
  CHECK_THROWS_AS(euler_touch_check(a, IndexSet::all(4), overlap, IndexSet::all(2)), HypothesisError);
}

TEST_CASE("affine cowan") {
  const auto sq = unit_square();
  const auto vertical = cowan_affine_check(sq, AffineFlat::parse("1/2,0;0,1"));
  CHECK(vertical.pass);
  CHECK(as_int(vertical.lhs) == -1);

  const auto plane = cowan_affine_check(sq, AffineFlat::whole_space(2));
  CHECK(plane.pass);
  CHECK(as_int(plane.lhs) == 1);
  CHECK(plane.side_data.at("c") == std::vector<std::int64_t>{4, 6, 4, 1});

  const auto point = cowan_affine_check(sq, AffineFlat::point(vec({"1/2", "1/2"})));
  CHECK(point.side_data.at("c") == cowan_check(sq, vec({"1/2", "1/2"})).side_data.at("c"));

  const auto seg = points(2, {{"0", "0"}, {"2", "0"}, {"1", "0"}});
  CHECK_THROWS_AS(cowan_affine_check(seg, AffineFlat::parse("1,-1;0,1")), HypothesisError);
  EngineOptions project;
  project.project_to_affine_hull = true;
  const auto projected = cowan_affine_check(seg, AffineFlat::parse("1/2,-1;0,1"), project);
  CHECK(projected.pass);
  CHECK(projected.side_data.at("c") == std::vector<std::int64_t>{0, 2, 1});
  const auto missed = cowan_affine_check(seg, AffineFlat::parse("0,1;1,0"), project);
  CHECK(missed.pass);
  CHECK(as_int(missed.lhs) == 0);
}

TEST_CASE("b sums on the integer line") {
  const auto line = integer_line(5);
  const auto I = labels({2, 4});
  CHECK(b_counts(line, I, false) == std::vector<std::int64_t>{1, 1, 0, 0});
  CHECK_THROWS_AS(b_sum_check(line, I), HypothesisError);
  const auto clean = b_star_sum_check(line, I);
  CHECK(clean.pass);
  CHECK(clean.side_data.at("b_star") == std::vector<std::int64_t>{1, 0, 0, 0});
  CHECK(as_int(clean.lhs) == -1);
}

TEST_CASE("b sums at a square vertex") {
  const auto sq = unit_square();
  const auto plain = b_sum_check(sq, labels({1}));
  const auto clean = b_star_sum_check(sq, labels({1}));
  CHECK(plain.pass);
  CHECK(clean.pass);
  CHECK(as_int(plain.lhs) == 0);
  CHECK(as_int(clean.lhs) == 0);
}

TEST_CASE("b sums where the stated right-hand side disagrees with the proof") {
  // I = all labels: P_I is the improper face of P, yet the sum is nonzero.
  const auto sq = unit_square();
  CHECK(b_counts(sq, IndexSet::all(4), false) == std::vector<std::int64_t>{1});
  CHECK_THROWS_AS(b_sum_check(sq, IndexSet::all(4)), HypothesisError);

  // Two points inside the bottom edge: not a face of P, but their line
  // misses the interior, and the sum vanishes.
  const auto cfg = points(2, {{"0", "0"}, {"2", "0"}, {"2", "2"}, {"0", "2"}, {"1/2", "0"}, {"3/2", "0"}});
  const auto I = labels({5, 6});
  CHECK(b_counts(cfg, I, false) == std::vector<std::int64_t>{1, 2, 1, 0, 0});
  CHECK_THROWS_AS(b_sum_check(cfg, I), HypothesisError);
}

TEST_CASE("face counts on the square") {
  const auto rep = face_count_identity_check(unit_square(), 1);
  CHECK(rep.pass);
  CHECK(as_int(rep.lhs) == 2);
  CHECK(as_int(rep.rhs) == 2);
  CHECK(rep.side_data.at("proper_sum") == std::vector<std::int64_t>{6});
}

TEST_CASE("face counts on simplices") {
  const auto tri = points(2, {{"0", "0"}, {"1", "0"}, {"0", "1"}});
  CHECK(face_count_identity_check(tri, 1).pass);
  const auto tet = points(3, {{"0", "0", "0"}, {"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}});
  CHECK(face_count_identity_check(tet, 2).pass);
  CHECK(face_count_identity_check(tet, 1).pass);
  // At r = d the full hull is its own r-face, which the stated count misses.
  CHECK_THROWS_AS(face_count_identity_check(tri, 2), HypothesisError);
}

TEST_CASE("face counts fail on a square pyramid despite general position") {
  const auto pyramid = points(3, {{"0", "0", "0"}, {"1", "0", "0"}, {"1", "1", "0"}, {"0", "1", "0"},
                                  {"1/2", "1/2", "1"}});
  CHECK(is_r_general_position(pyramid, 1));
  CHECK_THROWS_AS(face_count_identity_check(pyramid, 1), HypothesisError);
}

TEST_CASE("face counts reject points off general position") {
  const auto cfg = points(2, {{"0", "0"}, {"2", "0"}, {"1", "0"}, {"0", "1"}});
  CHECK_THROWS_AS(face_count_identity_check(cfg, 1), HypothesisError);
}

TEST_CASE("simplex lift") {
  const auto sq = unit_square();
  const auto rep = simplex_lift_crosscheck(sq, vec({"1/2", "1/2"}));
  CHECK(rep.pass);
  CHECK(rep.side_data.at("a") == std::vector<std::int64_t>{0, 2, 4, 1});

  const auto line = points(1, {{"1"}, {"3"}});
  const auto mid = simplex_lift_crosscheck(line, vec({"2"}));
  CHECK(mid.pass);
  CHECK(mid.side_data.at("c") == std::vector<std::int64_t>{0, 1});

  const auto one = points(2, {{"1", "2"}});
  CHECK(simplex_lift_crosscheck(one, vec({"1", "2"})).side_data.at("a") == std::vector<std::int64_t>{1});
  CHECK(simplex_lift_crosscheck(one, vec({"0", "2"})).side_data.at("a") == std::vector<std::int64_t>{0});

  const auto seg = points(2, {{"0", "0"}, {"2", "0"}, {"1", "0"}});
  CHECK(simplex_lift_crosscheck(seg, vec({"1/2", "0"})).pass);
  CHECK(simplex_lift_crosscheck(seg, vec({"1/2", "1"})).pass);
}

TEST_CASE("pointwise vertex identity") {
  const auto cfg = points(2, {{"0", "0"}, {"4", "0"}, {"0", "4"}, {"1", "1"}});
  const auto three = buchta_pointwise_check(cfg, 3);
  CHECK(three.pass);
  CHECK(as_int(three.lhs) == 1);
  const auto four = buchta_pointwise_check(cfg, 4);
  CHECK(four.pass);
  CHECK(as_int(four.lhs) == 0);
  for (const auto& rep : buchta_pointwise_all(cfg)) CHECK(rep.pass);

  const auto tri = points(2, {{"0", "0"}, {"4", "0"}, {"0", "4"}});
  CHECK(as_int(buchta_pointwise_check(tri, 3).rhs) == 1);

  const auto dup = points(2, {{"0", "0"}, {"0", "0"}, {"1", "0"}});
  CHECK_THROWS_AS(buchta_pointwise_check(dup, 2), HypothesisError);
  CHECK_THROWS_AS(buchta_pointwise_check(tri, 0), InvalidArgument);
}

TEST_CASE("subset limit") {
  std::vector<RatVector> pts;
  for (int i = 0; i < 6; ++i) pts.push_back({Rational(i)});
  const Configuration cfg(1, pts);
  EngineOptions opts;
  opts.subset_limit = 5;
  CHECK_THROWS_AS(cowan_check(cfg, {Rational(1)}, opts), LimitError);
}
