#include "hullx/feasibility.hpp"

#include <cassert>
#include <limits>

#include "hullx/errors.hpp"

namespace hullx {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// How an original variable maps onto standard-form columns.
struct ColumnMap {
  std::size_t pos = kNone;  // x_j = y_pos (- y_neg) (+ t when strict)
  std::size_t neg = kNone;
  bool strict = false;
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : cols_(cols), rows_(rows, RatVector(cols + 1)), basis_(rows, kNone), obj_(cols + 1) {}

  Rational& at(std::size_t r, std::size_t c) { return rows_[r][c]; }
  Rational& rhs(std::size_t r) { return rows_[r][cols_]; }
  std::size_t num_rows() const { return rows_.size(); }
  std::size_t basic(std::size_t r) const { return basis_[r]; }
  void set_basic(std::size_t r, std::size_t c) { basis_[r] = c; }

  // Reduced costs for minimising c.x with the current basis.
  void set_objective(const RatVector& cost) {
    for (std::size_t j = 0; j <= cols_; ++j) obj_[j] = j < cols_ ? cost[j] : Rational(0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (sgn(rows_[i][j]) != 0) obj_[j] -= cb * rows_[i][j];
      }
    }
  }

  // Current objective value.
  Rational objective() const { return -obj_[cols_]; }

  void pivot(std::size_t r, std::size_t c) {
    RatVector& prow = rows_[r];
    const Rational inv = 1 / prow[c];
    for (auto& v : prow) {
      if (sgn(v) != 0) v *= inv;
    }
    auto eliminate = [&](RatVector& row) {
      if (sgn(row[c]) == 0) return;
      const Rational f = row[c];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (sgn(prow[j]) != 0) row[j] -= f * prow[j];
      }
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != r) eliminate(rows_[i]);
    }
    eliminate(obj_);
    basis_[r] = c;
  }

  // Bland's rule over columns [0, allowed). Returns false when unbounded.
  bool minimise(std::size_t allowed) {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (sgn(obj_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (sgn(rows_[i][enter]) <= 0) continue;
        Rational ratio = rows_[i][cols_] / rows_[i][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }

  void erase_row(std::size_t r) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  Rational value_of(std::size_t col) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] == col) return rows_[i][cols_];
    }
    return 0;
  }

 private:
  std::size_t cols_;
  std::vector<RatVector> rows_;
  std::vector<std::size_t> basis_;
  RatVector obj_;
};

void validate(const FeasibilitySystem& sys) {
  const std::size_t n = sys.eq_matrix.cols();
  if (sys.rhs.size() != sys.eq_matrix.rows())
    throw InvalidArgument("feasibility system: rhs length differs from row count");
  if (sys.nonneg.size() != n || sys.strict.size() != n)
    throw InvalidArgument("feasibility system: mask length differs from column count");
  for (std::size_t j = 0; j < n; ++j) {
    if (sys.strict[j] && !sys.nonneg[j])
      throw InvalidArgument("feasibility system: strict variable must be non-negative");
  }
}

}  // namespace

FeasibilitySystem FeasibilitySystem::with_vars(std::size_t rows, std::size_t vars) {
  return {RatMatrix(rows, vars), RatVector(rows), std::vector<bool>(vars, true),
          std::vector<bool>(vars, false)};
}

FeasibilityResult lp_feasible(const FeasibilitySystem& sys) {
  validate(sys);
  const std::size_t m = sys.eq_matrix.rows();
  const std::size_t n = sys.eq_matrix.cols();

  std::vector<ColumnMap> map(n);
  std::size_t cols = 0;
  bool any_strict = false;
  for (std::size_t j = 0; j < n; ++j) {
    map[j].pos = cols++;
    if (!sys.nonneg[j]) map[j].neg = cols++;
    map[j].strict = sys.strict[j];
    any_strict = any_strict || sys.strict[j];
  }
  std::size_t t_col = kNone;
  std::size_t w_col = kNone;
  if (any_strict) {
    t_col = cols++;
    w_col = cols++;
  }
  const std::size_t rows = m + (any_strict ? 1 : 0);
  const std::size_t structural = cols;
  const std::size_t total = structural + rows;  // one artificial per row

  Tableau tab(rows, total);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& a = sys.eq_matrix(i, j);
      if (sgn(a) == 0) continue;
      tab.at(i, map[j].pos) = a;
      if (map[j].neg != kNone) tab.at(i, map[j].neg) = -a;
      if (map[j].strict) tab.at(i, t_col) += a;
    }
    tab.rhs(i) = sys.rhs[i];
  }
  if (any_strict) {
    tab.at(m, t_col) = 1;
    tab.at(m, w_col) = 1;
    tab.rhs(m) = 1;
  }
  for (std::size_t i = 0; i < rows; ++i) {
    if (sgn(tab.rhs(i)) < 0) {
      for (std::size_t j = 0; j < structural; ++j) tab.at(i, j) = -tab.at(i, j);
      tab.rhs(i) = -tab.rhs(i);
    }
    tab.at(i, structural + i) = 1;
    tab.set_basic(i, structural + i);
  }

  // Phase 1: minimise the sum of artificials.
  RatVector cost(total);
  for (std::size_t i = 0; i < rows; ++i) cost[structural + i] = 1;
  tab.set_objective(cost);
  [[maybe_unused]] const bool bounded = tab.minimise(total);
  assert(bounded);
  if (sgn(tab.objective()) != 0) return {};

  // Drive remaining (zero-valued) artificials out; drop redundant rows.
  for (std::size_t i = tab.num_rows(); i-- > 0;) {
    if (tab.basic(i) < structural) continue;
    std::size_t col = kNone;
    for (std::size_t j = 0; j < structural; ++j) {
      if (sgn(tab.at(i, j)) != 0) {
        col = j;
        break;
      }
    }
    if (col == kNone) {
      tab.erase_row(i);
    } else {
      tab.pivot(i, col);
    }
  }

  if (any_strict) {
    // Phase 2: maximise t, i.e. minimise -t, never re-entering artificials.
    RatVector phase2(total);
    phase2[t_col] = -1;
    tab.set_objective(phase2);
    [[maybe_unused]] const bool ok = tab.minimise(structural);
    assert(ok);  // t <= 1 bounds the objective
    if (sgn(tab.value_of(t_col)) <= 0) return {};
  }

  RatVector y(structural);
  for (std::size_t i = 0; i < tab.num_rows(); ++i) y[tab.basic(i)] = tab.rhs(i);
  FeasibilityResult result{true, RatVector(n)};
  for (std::size_t j = 0; j < n; ++j) {
    Rational x = y[map[j].pos];
    if (map[j].neg != kNone) x -= y[map[j].neg];
    if (map[j].strict) x += y[t_col];
    result.witness[j] = std::move(x);
  }
  return result;
}

bool satisfies(const FeasibilitySystem& sys, const RatVector& x) {
  if (x.size() != sys.eq_matrix.cols()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (sys.nonneg[j] && sgn(x[j]) < 0) return false;
    if (sys.strict[j] && sgn(x[j]) <= 0) return false;
  }
  for (std::size_t i = 0; i < sys.eq_matrix.rows(); ++i) {
    if (dot(sys.eq_matrix.row(i), x) != sys.rhs[i]) return false;
  }
  return true;
}

}  // namespace hullx
