#pragma once

#include <cstddef>
#include <vector>

#include "molp/linalg.hpp"

namespace molp {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class VarKind { NonNegative, Free };

struct LinearConstraint {
  RatVector row;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

/// maximize objective·x subject to the constraints, with per-variable sign
/// restrictions.
struct LpProblem {
  RatVector objective;
  std::vector<LinearConstraint> constraints;
  std::vector<VarKind> variable_kinds;

  std::size_t num_vars() const { return variable_kinds.size(); }

  /// All variables nonnegative, no constraints yet.
  static LpProblem maximize(RatVector objective);

  LpProblem& add(RatVector row, Relation relation, Rational rhs);
  LpProblem& set_free(std::size_t var);
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Rational value;   // meaningful when Optimal
  RatVector point;  // empty unless Optimal

  bool optimal() const { return status == LpStatus::Optimal; }
  friend bool operator==(const LpOutcome&, const LpOutcome&) = default;
};

/// Exact two-phase primal simplex with Bland's smallest-index rule.
/// Throws DimensionError if the problem is malformed.
LpOutcome solve(const LpProblem& problem);

/// Any point satisfying the constraints (status Optimal, value 0) or Infeasible.
LpOutcome feasible_point(const std::vector<LinearConstraint>& constraints,
                         const std::vector<VarKind>& variable_kinds);

/// Exact check of every constraint and sign restriction at `point`.
bool satisfies(const LpProblem& problem, const RatVector& point);

}  // namespace molp
