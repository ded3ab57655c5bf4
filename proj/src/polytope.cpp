#include "molp/polytope.hpp"

#include <algorithm>
#include <utility>

#include "molp/errors.hpp"

namespace molp {

Polytope::Polytope(RatMatrix a, RatVector b, std::size_t num_vars)
    : a_(std::move(a)), b_(std::move(b)), k_(num_vars) {
  if (a_.rows() != b_.size()) throw DimensionError("polytope: A and b row counts differ");
  if (a_.rows() > 0 && a_.cols() != k_) throw DimensionError("polytope: A width differs from k");
  if (a_.rows() == 0) a_ = RatMatrix(0, k_);
}

bool Polytope::contains(const RatVector& x) const {
  if (x.size() != k_) return false;
  for (const auto& xi : x) {
    if (xi < 0) return false;
  }
  for (std::size_t i = 0; i < b_.size(); ++i) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < k_; ++j) lhs += a_(i, j) * x[j];
    if (lhs > b_[i]) return false;
  }
  return true;
}

Polytope Polytope::with_row(const RatVector& row, const Rational& rhs) const {
  if (row.size() != k_) throw DimensionError("polytope: appended row has wrong length");
  Polytope out = *this;
  out.a_.append_row(row);
  out.b_.push_back(rhs);
  return out;
}

Polytope Polytope::with_equality(const RatVector& row, const Rational& rhs) const {
  return with_row(row, rhs).with_row(scaled(row, -1), -rhs);
}

std::vector<LinearConstraint> Polytope::constraints() const {
  std::vector<LinearConstraint> out;
  out.reserve(b_.size());
  for (std::size_t i = 0; i < b_.size(); ++i) {
    out.push_back({a_.row(i), Relation::LessEqual, b_[i]});
  }
  return out;
}

bool VertexSet::contains(const RatVector& v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v, lex_less);
}

bool lex_less(const RatVector& a, const RatVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

VertexSet make_vertex_set(std::vector<RatVector> points) {
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return {std::move(points)};
}

bool is_nonempty(const Polytope& p) {
  std::vector<VarKind> kinds(p.num_vars(), VarKind::NonNegative);
  return feasible_point(p.constraints(), kinds).optimal();
}

VertexSet enumerate_vertices(const Polytope& p) {
  if (!is_nonempty(p)) throw InfeasibleRegion("feasible region is empty");
  const std::size_t k = p.num_vars();
  const std::size_t m = p.num_constraints();
  const std::size_t total = k + m;
  // [A | I] always has rank m, so each basic solution fixes k of the k + m
  // variables (x, s) to zero. Index j < k is x_j = 0; index k + i is row i tight.
  std::vector<std::size_t> zero_set(k);
  for (std::size_t i = 0; i < k; ++i) zero_set[i] = i;

  std::vector<RatVector> found;
  for (;;) {
    std::vector<bool> fixed_zero(k, false);
    std::vector<std::size_t> tight;
    for (auto idx : zero_set) {
      if (idx < k) {
        fixed_zero[idx] = true;
      } else {
        tight.push_back(idx - k);
      }
    }
    std::vector<std::size_t> open;
    for (std::size_t j = 0; j < k; ++j) {
      if (!fixed_zero[j]) open.push_back(j);
    }
    // |open| == |tight| by construction.
    RatMatrix sys(tight.size(), open.size());
    RatVector rhs(tight.size());
    for (std::size_t r = 0; r < tight.size(); ++r) {
      for (std::size_t c = 0; c < open.size(); ++c) sys(r, c) = p.a()(tight[r], open[c]);
      rhs[r] = p.b()[tight[r]];
    }
    if (auto sol = solve_square(sys, rhs)) {
      RatVector x(k);
      for (std::size_t c = 0; c < open.size(); ++c) x[open[c]] = (*sol)[c];
      if (p.contains(x)) found.push_back(std::move(x));
    }

    // Next k-combination of {0 .. total-1} in lexicographic order.
    std::size_t i = k;
    while (i > 0 && zero_set[i - 1] == total - k + (i - 1)) --i;
    if (i == 0) break;
    ++zero_set[i - 1];
    for (std::size_t j = i; j < k; ++j) zero_set[j] = zero_set[j - 1] + 1;
  }
  return make_vertex_set(std::move(found));
}

RatMatrix active_constraints(const Polytope& p, const RatVector& x) {
  const std::size_t k = p.num_vars();
  RatMatrix active(0, k);
  for (std::size_t i = 0; i < p.num_constraints(); ++i) {
    RatVector row = p.a().row(i);
    if (dot(row, x) == p.b()[i]) active.append_row(row);
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (x[j] == 0) {
      RatVector unit(k);
      unit[j] = 1;
      active.append_row(unit);
    }
  }
  return active;
}

std::optional<RatVector> interior_point(const Polytope& p) {
  // maximize a  s.t.  Ax + a·1 <= b (nonzero rows),  x - a·1 >= 0,  a <= 1,  (x, a) >= 0.
  const std::size_t k = p.num_vars();
  RatVector objective(k + 1);
  objective[k] = 1;
  LpProblem lp = LpProblem::maximize(std::move(objective));
  for (std::size_t i = 0; i < p.num_constraints(); ++i) {
    RatVector row = p.a().row(i);
    // 0·x <= b constrains nothing when b >= 0 and empties X otherwise.
    if (is_zero(row)) {
      if (p.b()[i] < 0) return std::nullopt;
      continue;
    }
    row.push_back(1);
    lp.add(std::move(row), Relation::LessEqual, p.b()[i]);
  }
  for (std::size_t j = 0; j < k; ++j) {
    RatVector row(k + 1);
    row[j] = 1;
    row[k] = -1;
    lp.add(std::move(row), Relation::GreaterEqual, 0);
  }
  RatVector cap(k + 1);
  cap[k] = 1;
  lp.add(std::move(cap), Relation::LessEqual, 1);

  LpOutcome out = solve(lp);
  if (!out.optimal() || out.value <= 0) return std::nullopt;
  out.point.pop_back();
  return out.point;
}

bool interior_nonempty(const Polytope& p) { return interior_point(p).has_value(); }

bool is_bounded(const Polytope& p) {
  LpProblem lp = LpProblem::maximize(RatVector(p.num_vars(), Rational(1)));
  lp.constraints = p.constraints();
  LpOutcome out = solve(lp);
  if (out.status == LpStatus::Infeasible) throw InfeasibleRegion("feasible region is empty");
  return out.optimal();
}

Rational maximize_over(const RatVector& c, const Polytope& p) {
  if (c.size() != p.num_vars()) throw DimensionError("objective length differs from k");
  LpProblem lp = LpProblem::maximize(c);
  lp.constraints = p.constraints();
  LpOutcome out = solve(lp);
  switch (out.status) {
    case LpStatus::Infeasible:
      throw InfeasibleRegion("feasible region is empty");
    case LpStatus::Unbounded:
      throw UnboundedObjective("objective is unbounded over the region");
    case LpStatus::Optimal:
      break;
  }
  return out.value;
}

VertexSet optimal_face_vertices(const RatVector& c, const Polytope& p) {
  Rational best = maximize_over(c, p);
  return enumerate_vertices(p.with_equality(c, best));
}

}  // namespace molp
