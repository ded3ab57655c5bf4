#include "molp/efficiency.hpp"

#include <utility>

#include "molp/errors.hpp"

namespace molp {

std::optional<RatVector> cone_witness(const RatMatrix& c) {
  // Variables (x, v): x free, v >= 0. maximize sum(v) s.t. -Cx + v = 0, sum(v) <= 1.
  // The feasible directions form a cone, so the capped optimum is 0 or 1.
  const std::size_t k = c.cols();
  const std::size_t r = c.rows();
  if (r == 0) return std::nullopt;
  RatVector objective(k + r);
  for (std::size_t i = 0; i < r; ++i) objective[k + i] = 1;
  LpProblem lp = LpProblem::maximize(objective);
  for (std::size_t j = 0; j < k; ++j) lp.set_free(j);
  for (std::size_t i = 0; i < r; ++i) {
    RatVector row(k + r);
    for (std::size_t j = 0; j < k; ++j) row[j] = -c(i, j);
    row[k + i] = 1;
    lp.add(std::move(row), Relation::Equal, 0);
  }
  lp.add(objective, Relation::LessEqual, 1);

  LpOutcome out = solve(lp);
  if (!out.optimal() || out.value <= 0) return std::nullopt;
  out.point.resize(k);
  return out.point;
}

bool cone_nonempty(const RatMatrix& c) { return cone_witness(c).has_value(); }

EfficiencyTest test_efficiency(const RatVector& x0, const RatMatrix& objectives, const Polytope& p) {
  if (!p.contains(x0)) throw InfeasibleInput("tested point is not in the feasible region");
  if (objectives.cols() != p.num_vars()) throw DimensionError("objective width differs from k");
  const std::size_t k = p.num_vars();
  const std::size_t n = objectives.rows();

  RatVector objective(k + n);
  for (std::size_t i = 0; i < n; ++i) objective[k + i] = 1;
  LpProblem lp = LpProblem::maximize(std::move(objective));
  for (std::size_t i = 0; i < p.num_constraints(); ++i) {
    RatVector row = p.a().row(i);
    row.resize(k + n);
    lp.add(std::move(row), Relation::LessEqual, p.b()[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    RatVector crow = objectives.row(i);
    Rational level = dot(crow, x0);
    crow.resize(k + n);
    crow[k + i] = -1;
    lp.add(std::move(crow), Relation::Equal, std::move(level));
  }

  LpOutcome out = solve(lp);
  EfficiencyTest result;
  switch (out.status) {
    case LpStatus::Infeasible:
      // x = x0, eps = 0 is always feasible.
      throw InfeasibleInput("efficiency LP infeasible at a feasible point");
    case LpStatus::Unbounded:
      result.efficient = false;
      break;
    case LpStatus::Optimal:
      result.efficient = out.value == 0;
      if (!result.efficient) {
        out.point.resize(k);
        result.dominating_point = std::move(out.point);
      }
      break;
  }
  return result;
}

bool is_efficient_vertex(const RatVector& x0, const RatMatrix& objectives, const Polytope& p) {
  return test_efficiency(x0, objectives, p).efficient;
}

VertexSet efficient_vertices(const RatMatrix& objectives, const Polytope& p) {
  VertexSet all = enumerate_vertices(p);
  VertexSet out;
  for (const auto& v : all) {
    if (is_efficient_vertex(v, objectives, p)) out.vertices.push_back(v);
  }
  return out;
}

std::optional<RatVector> equal_value_weights(const RatMatrix& objectives, const VertexSet& vs) {
  if (vs.empty()) throw DimensionError("equal_value_weights: empty vertex set");
  // Variables (w_1..w_n, t), all free. maximize t s.t. sum(w) = 1, w_i - t >= 0,
  // w·(F(x^1) - F(x^j)) = 0 for j >= 2.
  const std::size_t n = objectives.rows();
  RatVector objective(n + 1);
  objective[n] = 1;
  LpProblem lp = LpProblem::maximize(std::move(objective));
  for (std::size_t j = 0; j <= n; ++j) lp.set_free(j);

  RatVector sum_row(n + 1, Rational(1));
  sum_row[n] = 0;
  lp.add(std::move(sum_row), Relation::Equal, 1);
  for (std::size_t i = 0; i < n; ++i) {
    RatVector row(n + 1);
    row[i] = 1;
    row[n] = -1;
    lp.add(std::move(row), Relation::GreaterEqual, 0);
  }
  const RatVector first = objectives * vs.vertices.front();
  for (std::size_t j = 1; j < vs.size(); ++j) {
    RatVector diff = first - objectives * vs.vertices[j];
    diff.push_back(0);
    lp.add(std::move(diff), Relation::Equal, 0);
  }

  LpOutcome out = solve(lp);
  if (!out.optimal() || out.value <= 0) return std::nullopt;
  out.point.resize(n);
  return out.point;
}

bool equal_value_weights_exist(const RatMatrix& objectives, const VertexSet& vs) {
  return equal_value_weights(objectives, vs).has_value();
}

bool dominates(const RatVector& a, const RatVector& b) {
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
    if (a[i] > b[i]) strict = true;
  }
  return strict;
}

}  // namespace molp
