#include "molp/lp.hpp"

#include <optional>
#include <utility>

#include "molp/errors.hpp"

namespace molp {

LpProblem LpProblem::maximize(RatVector objective) {
  LpProblem p;
  p.variable_kinds.assign(objective.size(), VarKind::NonNegative);
  p.objective = std::move(objective);
  return p;
}

LpProblem& LpProblem::add(RatVector row, Relation relation, Rational rhs) {
  constraints.push_back({std::move(row), relation, std::move(rhs)});
  return *this;
}

LpProblem& LpProblem::set_free(std::size_t var) {
  variable_kinds.at(var) = VarKind::Free;
  return *this;
}

namespace {

void validate(const LpProblem& p) {
  if (p.num_vars() == 0) throw DimensionError("LP needs at least one variable");
  if (p.objective.size() != p.num_vars()) throw DimensionError("LP objective length mismatch");
  for (const auto& c : p.constraints) {
    if (c.row.size() != p.num_vars()) throw DimensionError("LP constraint row length mismatch");
  }
}

/// Dense simplex tableau over standard-form columns
/// [structural | slack | artificial] with one extra rhs column.
class Tableau {
 public:
  explicit Tableau(const LpProblem& p) {
    // Structural columns: one per nonnegative variable, two per free variable.
    for (std::size_t j = 0; j < p.num_vars(); ++j) {
      plus_col_.push_back(structural_++);
      minus_col_.push_back(p.variable_kinds[j] == VarKind::Free ? std::optional(structural_++)
                                                                 : std::nullopt);
    }
    std::size_t slacks = 0;
    for (const auto& c : p.constraints) {
      if (c.relation != Relation::Equal) ++slacks;
    }
    slack_begin_ = structural_;
    // Every row whose slack cannot start basic receives an artificial.
    std::vector<RatVector> rows;
    std::vector<Rational> rhs;
    std::vector<std::optional<std::size_t>> slack_of_row;
    std::size_t next_slack = slack_begin_;
    for (const auto& c : p.constraints) {
      RatVector row(structural_);
      Rational b = c.rhs;
      const bool flip_ge = c.relation == Relation::GreaterEqual;
      for (std::size_t j = 0; j < p.num_vars(); ++j) {
        Rational a = flip_ge ? Rational(-c.row[j]) : c.row[j];
        row[plus_col_[j]] = a;
        if (minus_col_[j]) row[*minus_col_[j]] = -a;
      }
      if (flip_ge) b = -b;
      rows.push_back(std::move(row));
      rhs.push_back(std::move(b));
      slack_of_row.push_back(c.relation == Relation::Equal ? std::nullopt
                                                           : std::optional(next_slack++));
    }
    artificial_begin_ = slack_begin_ + slacks;

    std::size_t artificials = 0;
    std::vector<bool> needs_artificial(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      needs_artificial[i] = !slack_of_row[i] || rhs[i] < 0;
      if (needs_artificial[i]) ++artificials;
    }
    cols_ = artificial_begin_ + artificials;

    rows_ = rows.size();
    t_ = RatMatrix(rows_, cols_ + 1);
    basic_.resize(rows_);
    std::size_t next_art = artificial_begin_;
    for (std::size_t i = 0; i < rows_; ++i) {
      const bool negate = rhs[i] < 0;
      auto put = [&](std::size_t col, const Rational& v) { t_(i, col) = negate ? Rational(-v) : v; };
      for (std::size_t j = 0; j < structural_; ++j) put(j, rows[i][j]);
      if (slack_of_row[i]) put(*slack_of_row[i], Rational(1));
      put(cols_, rhs[i]);
      if (needs_artificial[i]) {
        t_(i, next_art) = 1;
        basic_[i] = next_art++;
      } else {
        basic_[i] = *slack_of_row[i];
      }
    }
  }

  /// Phase 1; returns false iff the constraints are infeasible.
  bool find_feasible_basis() {
    std::vector<Rational> cost(cols_);
    for (std::size_t j = artificial_begin_; j < cols_; ++j) cost[j] = -1;
    price(cost);
    run(cols_);  // phase-1 objective is bounded above by 0
    if (objective_value() < 0) return false;
    drive_out_artificials();
    return true;
  }

  /// Phase 2; returns false iff the objective is unbounded.
  bool optimize(const LpProblem& p) {
    std::vector<Rational> cost(cols_);
    for (std::size_t j = 0; j < p.num_vars(); ++j) {
      cost[plus_col_[j]] = p.objective[j];
      if (minus_col_[j]) cost[*minus_col_[j]] = -p.objective[j];
    }
    price(cost);
    return run(artificial_begin_);
  }

  RatVector original_point(std::size_t num_vars) const {
    RatVector col_value(cols_);
    for (std::size_t i = 0; i < rows_; ++i) col_value[basic_[i]] = t_(i, cols_);
    RatVector x(num_vars);
    for (std::size_t j = 0; j < num_vars; ++j) {
      x[j] = col_value[plus_col_[j]];
      if (minus_col_[j]) x[j] -= col_value[*minus_col_[j]];
    }
    return x;
  }

 private:
  // reduced_[j] = c_j - c_B B^-1 A_j; reduced_[cols_] = -(current objective).
  void price(const std::vector<Rational>& cost) {
    reduced_.assign(cols_ + 1, Rational(0));
    for (std::size_t j = 0; j < cols_; ++j) reduced_[j] = cost[j];
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational& cb = cost[basic_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) reduced_[j] -= cb * t_(i, j);
    }
  }

  Rational objective_value() const { return -reduced_[cols_]; }

  /// Bland's rule over columns [0, limit). Returns false on unboundedness.
  bool run(std::size_t limit) {
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (reduced_[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter == limit) return true;

      std::optional<std::size_t> leave;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (t_(i, enter) <= 0) continue;
        Rational ratio = t_(i, cols_) / t_(i, enter);
        if (!leave || ratio < best_ratio || (ratio == best_ratio && basic_[i] < basic_[*leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leave) return false;
      pivot(*leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / t_(r, c);
    for (std::size_t j = 0; j <= cols_; ++j) t_(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || t_(i, c) == 0) continue;
      Rational f = t_(i, c);
      for (std::size_t j = 0; j <= cols_; ++j) t_(i, j) -= f * t_(r, j);
    }
    if (reduced_[c] != 0) {
      Rational f = reduced_[c];
      for (std::size_t j = 0; j <= cols_; ++j) reduced_[j] -= f * t_(r, j);
    }
    basic_[r] = c;
  }

  // Artificials left basic at level zero are pivoted out; rows where that
  // is impossible are linearly dependent and dropped.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_;) {
      if (basic_[i] < artificial_begin_) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < artificial_begin_; ++j) {
        if (t_(i, j) != 0) {
          col = j;
          break;
        }
      }
      if (col) {
        pivot(i, *col);
        ++i;
      } else {
        remove_row(i);
      }
    }
  }

  void remove_row(std::size_t r) {
    RatMatrix kept(rows_ - 1, cols_ + 1);
    for (std::size_t i = 0, k = 0; i < rows_; ++i) {
      if (i == r) continue;
      for (std::size_t j = 0; j <= cols_; ++j) kept(k, j) = t_(i, j);
      ++k;
    }
    t_ = std::move(kept);
    basic_.erase(basic_.begin() + static_cast<std::ptrdiff_t>(r));
    --rows_;
  }

  std::size_t structural_ = 0;
  std::size_t slack_begin_ = 0;
  std::size_t artificial_begin_ = 0;
  std::size_t cols_ = 0;
  std::size_t rows_ = 0;
  std::vector<std::size_t> plus_col_;
  std::vector<std::optional<std::size_t>> minus_col_;
  RatMatrix t_;
  std::vector<std::size_t> basic_;
  std::vector<Rational> reduced_;
};

}  // namespace

LpOutcome solve(const LpProblem& problem) {
  validate(problem);
  Tableau tableau(problem);
  if (!tableau.find_feasible_basis()) return {LpStatus::Infeasible, 0, {}};
  if (!tableau.optimize(problem)) return {LpStatus::Unbounded, 0, {}};
  RatVector x = tableau.original_point(problem.num_vars());
  Rational value = dot(problem.objective, x);
  return {LpStatus::Optimal, std::move(value), std::move(x)};
}

LpOutcome feasible_point(const std::vector<LinearConstraint>& constraints,
                         const std::vector<VarKind>& variable_kinds) {
  LpProblem p;
  p.objective.assign(variable_kinds.size(), Rational(0));
  p.constraints = constraints;
  p.variable_kinds = variable_kinds;
  return solve(p);
}

bool satisfies(const LpProblem& problem, const RatVector& point) {
  if (point.size() != problem.num_vars()) return false;
  for (std::size_t j = 0; j < point.size(); ++j) {
    if (problem.variable_kinds[j] == VarKind::NonNegative && point[j] < 0) return false;
  }
  for (const auto& c : problem.constraints) {
    Rational lhs = dot(c.row, point);
    switch (c.relation) {
      case Relation::LessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Relation::Equal:
        if (lhs != c.rhs) return false;
        break;
      case Relation::GreaterEqual:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

}  // namespace molp
