#pragma once

#include <string>
#include <vector>

#include "hullx/geometry.hpp"
#include "hullx/rational.hpp"

namespace hullx::testing {

inline RatVector vec(std::initializer_list<const char*> coords) {
  RatVector v;
  for (const char* c : coords) v.push_back(parse_rational(c));
  return v;
}

inline Configuration points(std::size_t dim, std::initializer_list<std::initializer_list<const char*>> pts) {
  std::vector<RatVector> out;
  for (auto p : pts) out.push_back(vec(p));
  return Configuration(dim, std::move(out));
}

/// A = (0,0), B = (1,0), C = (1,1), D = (0,1).
inline Configuration unit_square() {
  return points(2, {{"0", "0"}, {"1", "0"}, {"1", "1"}, {"0", "1"}});
}

/// X_i = i on the real line, i = 1..n.
inline Configuration integer_line(int n) {
  std::vector<RatVector> out;
  for (int i = 1; i <= n; ++i) out.push_back({Rational(i)});
  return Configuration(1, std::move(out));
}

inline IndexSet labels(std::initializer_list<std::size_t> one_based) {
  std::vector<std::size_t> v(one_based);
  return IndexSet::from_labels(v);
}

}  // namespace hullx::testing
