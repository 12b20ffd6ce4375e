#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "hullx/identities.hpp"
#include "hullx/intrinsic.hpp"

using namespace hullx;
using namespace hullx::testing;

TEST_CASE("square intrinsic volumes") {
  const auto sq = unit_square();
  const auto all = IndexSet::all(4);
  CHECK(intrinsic_volume(sq, all, 0).exact() == 1);
  CHECK(intrinsic_volume(sq, all, 2).exact() == 1);
  CHECK(intrinsic_volume(sq, all, 3).exact() == 0);
  const Value v1 = intrinsic_volume(sq, all, 1);
  CHECK_FALSE(v1.is_exact());
  CHECK(std::abs(v1.approx() - 2.0) < 1e-3);
}

TEST_CASE("segment length is exact when rational") {
  const auto seg = points(2, {{"0", "0"}, {"3", "4"}});
  CHECK(intrinsic_volume(seg, IndexSet::all(2), 1).exact() == 5);
  const auto diag = points(2, {{"0", "0"}, {"1", "1"}});
  CHECK(std::abs(intrinsic_volume(diag, IndexSet::all(2), 1).approx() - std::numbers::sqrt2) < 1e-12);
}

TEST_CASE("relative volume of a tilted triangle") {
  // Right triangle with legs sqrt(2) and sqrt(6) in the plane x + y + z = 1.
  const auto tri = points(3, {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}});
  const Surd area = relative_volume(tri, IndexSet::all(3));
  CHECK(std::abs(area.approx() - std::sqrt(3.0) / 2.0) < 1e-12);
  CHECK_FALSE(area.exact().has_value());
}

TEST_CASE("external angles") {
  const auto sq = unit_square();
  const auto all = IndexSet::all(4);
  CHECK(external_angle(sq, IndexSet{0, 1}, all) == doctest::Approx(0.5));
  CHECK(external_angle(sq, IndexSet{0}, all) == doctest::Approx(0.25).epsilon(1e-4));
  const auto tet = points(3, {{"0", "0", "0"}, {"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}});
  // The normal cone of the origin is the negative orthant.
  AngleOptions angles;
  angles.samples = 400'000;
  CHECK(external_angle(tet, IndexSet{0}, IndexSet::all(4), angles) ==
        doctest::Approx(0.125).epsilon(0.01));
}

TEST_CASE("cube mean width") {
  const auto cube = points(3, {{"0", "0", "0"}, {"1", "0", "0"}, {"0", "1", "0"}, {"1", "1", "0"},
                               {"0", "0", "1"}, {"1", "0", "1"}, {"0", "1", "1"}, {"1", "1", "1"}});
  const auto all = IndexSet::all(8);
  CHECK(intrinsic_volume(cube, all, 3).exact() == 1);
  CHECK(intrinsic_volume(cube, all, 2).approx() == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(intrinsic_volume(cube, all, 1).approx() == doctest::Approx(3.0).epsilon(1e-3));
}

TEST_CASE("intrinsic identity on the square") {
  const auto sq = unit_square();
  const auto exact = intrinsic_identity_check(sq, 2, 5e-3);
  CHECK(exact.pass);
  CHECK(exact.tolerance == 0.0);
  CHECK(exact.lhs.exact() == 1);
  const auto zero = intrinsic_identity_check(sq, 0, 5e-3);
  CHECK(zero.pass);
  CHECK(zero.lhs.exact() == 1);
  const auto perimeter = intrinsic_identity_check(sq, 1, 1e-3);
  CHECK(perimeter.pass);
  CHECK(std::abs(perimeter.lhs.approx() + 2.0) < 1e-3);
}

TEST_CASE("angles are reproducible from the seed") {
  const auto tet = points(3, {{"0", "0", "0"}, {"2", "0", "0"}, {"0", "3", "0"}, {"1", "1", "5"}});
  AngleOptions angles;
  angles.samples = 10'000;
  angles.seed = 7;
  const double a = intrinsic_volume(tet, IndexSet::all(4), 1, angles).approx();
  const double b = intrinsic_volume(tet, IndexSet::all(4), 1, angles).approx();
  CHECK(a == b);
  angles.seed = 8;
  CHECK(intrinsic_volume(tet, IndexSet::all(4), 1, angles).approx() != a);
}
