#include <random>

#include <gtest/gtest.h>

#include "molp/errors.hpp"
#include "molp/lp.hpp"
#include "support/oracles.hpp"
#include "support/random_instances.hpp"

namespace molp {
namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

TEST(Simplex, SmallOptimum) {
  // max x1 + x2 s.t. x1 + 2x2 <= 4, 3x1 + x2 <= 6
  LpProblem lp = LpProblem::maximize({1, 1});
  lp.add({1, 2}, Relation::LessEqual, 4).add({3, 1}, Relation::LessEqual, 6);
  const LpOutcome out = solve(lp);
  ASSERT_TRUE(out.optimal());
  EXPECT_EQ(out.value, q(14, 5));
  EXPECT_EQ(out.point, (RatVector{q(8, 5), q(6, 5)}));
  EXPECT_TRUE(satisfies(lp, out.point));
}

TEST(Simplex, UnboundedAndInfeasible) {
  LpProblem unbounded = LpProblem::maximize({1, 0});
  unbounded.add({0, 1}, Relation::LessEqual, 1);
  EXPECT_EQ(solve(unbounded).status, LpStatus::Unbounded);

  LpProblem infeasible = LpProblem::maximize({1});
  infeasible.add({1}, Relation::LessEqual, 1).add({1}, Relation::GreaterEqual, 2);
  EXPECT_EQ(solve(infeasible).status, LpStatus::Infeasible);

  LpProblem negative_rhs = LpProblem::maximize({1, 1});
  negative_rhs.add({1, 1}, Relation::LessEqual, -1);
  EXPECT_EQ(solve(negative_rhs).status, LpStatus::Infeasible);
}

TEST(Simplex, EqualityAndGreaterEqualRows) {
  // max -x1 - x2 s.t. x1 + x2 >= 2, x1 - x2 = 1
  LpProblem lp = LpProblem::maximize({-1, -1});
  lp.add({1, 1}, Relation::GreaterEqual, 2).add({1, -1}, Relation::Equal, 1);
  const LpOutcome out = solve(lp);
  ASSERT_TRUE(out.optimal());
  EXPECT_EQ(out.value, -2);
  EXPECT_EQ(out.point, (RatVector{q(3, 2), q(1, 2)}));
}

TEST(Simplex, RedundantEqualitiesAreTolerated) {
  LpProblem lp = LpProblem::maximize({1, 2});
  lp.add({1, 1}, Relation::Equal, 1).add({2, 2}, Relation::Equal, 2).add({-1, -1}, Relation::LessEqual, -1);
  const LpOutcome out = solve(lp);
  ASSERT_TRUE(out.optimal());
  EXPECT_EQ(out.value, 2);
  EXPECT_EQ(out.point, (RatVector{0, 1}));
}

TEST(Simplex, MalformedProblemThrows) {
  LpProblem lp = LpProblem::maximize({1, 1});
  lp.add({1}, Relation::LessEqual, 1);
  EXPECT_THROW(solve(lp), DimensionError);
  EXPECT_THROW(solve(LpProblem::maximize({})), DimensionError);
}

TEST(Simplex, BealeCyclingInstanceTerminates) {
  // Cycles under the largest-coefficient rule without anti-cycling.
  LpProblem lp = LpProblem::maximize({q(3, 4), -20, q(1, 2), -6});
  lp.add({q(1, 4), -8, -1, 9}, Relation::LessEqual, 0)
      .add({q(1, 2), -12, q(-1, 2), 3}, Relation::LessEqual, 0)
      .add({0, 0, 1, 0}, Relation::LessEqual, 1);
  const LpOutcome out = solve(lp);
  ASSERT_TRUE(out.optimal());
  EXPECT_EQ(out.value, q(5, 4));
  EXPECT_EQ(out.point, (RatVector{1, 0, 1, 0}));
}

TEST(Simplex, KuhnCyclingInstanceTerminates) {
  LpProblem lp = LpProblem::maximize({2, 3, -1, -12});
  lp.add({-2, -9, 1, 9}, Relation::LessEqual, 0)
      .add({q(1, 3), 1, q(-1, 3), -2}, Relation::LessEqual, 0)
      .add({2, 3, -1, -12}, Relation::LessEqual, 2);
  const LpOutcome out = solve(lp);
  ASSERT_TRUE(out.optimal());
  EXPECT_EQ(out.value, 2);
  EXPECT_TRUE(satisfies(lp, out.point));
}

TEST(Simplex, HighlyDegenerateVertex) {
  // Many constraints tight at the origin and at the optimum.
  LpProblem lp = LpProblem::maximize({1, 1, 1});
  for (int i = 0; i < 6; ++i) lp.add({1, i % 2 ? 1 : 0, i % 3 ? 1 : 0}, Relation::LessEqual, 1);
  lp.add({0, 1, 1}, Relation::LessEqual, 1).add({1, 1, 1}, Relation::LessEqual, 1);
  const LpOutcome out = solve(lp);
  ASSERT_TRUE(out.optimal());
  EXPECT_EQ(out.value, 1);
}

TEST(Simplex, FreeVariables) {
  LpProblem neg = LpProblem::maximize({1});
  neg.add({1}, Relation::LessEqual, -3).set_free(0);
  const LpOutcome out = solve(neg);
  ASSERT_TRUE(out.optimal());
  EXPECT_EQ(out.value, -3);
  EXPECT_EQ(out.point, (RatVector{-3}));

  LpProblem down = LpProblem::maximize({-1});
  down.add({1}, Relation::LessEqual, 5).set_free(0);
  EXPECT_EQ(solve(down).status, LpStatus::Unbounded);

  // max x1 - x2, x1 + x2 = 0, x1 <= 2, both free.
  LpProblem pair = LpProblem::maximize({1, -1});
  pair.add({1, 1}, Relation::Equal, 0).add({1, 0}, Relation::LessEqual, 2).set_free(0).set_free(1);
  const LpOutcome p = solve(pair);
  ASSERT_TRUE(p.optimal());
  EXPECT_EQ(p.value, 4);
  EXPECT_EQ(p.point, (RatVector{2, -2}));
}

TEST(Simplex, FreeVariableConeFormulation) {
  // max sum v s.t. -Cx + v = 0, v >= 0, sum v <= 1, x free:
  // positive iff some x has Cx >= 0, Cx != 0.
  auto cone_lp = [](const RatMatrix& c) {
    const std::size_t n = c.rows(), k = c.cols();
    RatVector obj(k + n);
    for (std::size_t i = 0; i < n; ++i) obj[k + i] = 1;
    LpProblem lp = LpProblem::maximize(obj);
    for (std::size_t j = 0; j < k; ++j) lp.set_free(j);
    for (std::size_t i = 0; i < n; ++i) {
      RatVector row(k + n);
      for (std::size_t j = 0; j < k; ++j) row[j] = -c(i, j);
      row[k + i] = 1;
      lp.add(row, Relation::Equal, 0);
    }
    RatVector cap(k + n);
    for (std::size_t i = 0; i < n; ++i) cap[k + i] = 1;
    lp.add(cap, Relation::LessEqual, 1);
    return solve(lp);
  };
  const LpOutcome empty = cone_lp(RatMatrix{{1, 3}, {3, 0}, {2, 1}, {-3, -1}});
  ASSERT_TRUE(empty.optimal());
  EXPECT_EQ(empty.value, 0);
  const LpOutcome nonempty = cone_lp(RatMatrix{{1, 1, 1}, {-1, 1, 1}, {1, 1, 0}});
  ASSERT_TRUE(nonempty.optimal());
  EXPECT_EQ(nonempty.value, 1);
}

TEST(Simplex, GalLeberlingSystemIsFeasible) {
  // alpha1 (1,3) + alpha2 (3,0) + alpha3 (-3,-1) = (2,1), alpha >= 0.
  std::vector<LinearConstraint> rows{{{1, 3, -3}, Relation::Equal, 2}, {{3, 0, -1}, Relation::Equal, 1}};
  const std::vector<VarKind> kinds(3, VarKind::NonNegative);
  const LpOutcome out = feasible_point(rows, kinds);
  ASSERT_TRUE(out.optimal());
  LpProblem check = LpProblem::maximize(RatVector(3));
  check.constraints = rows;
  EXPECT_TRUE(satisfies(check, out.point));
  EXPECT_TRUE(satisfies(check, RatVector{q(1, 3), q(5, 9), 0}));

  // The reordered system with candidate -3x1 - x2 has no solution.
  std::vector<LinearConstraint> bad{{{1, 3, 2}, Relation::Equal, -3}, {{3, 0, 1}, Relation::Equal, -1}};
  EXPECT_EQ(feasible_point(bad, kinds).status, LpStatus::Infeasible);
}

TEST(Simplex, SatisfiesChecksSigns) {
  LpProblem lp = LpProblem::maximize({1, 1});
  lp.add({1, 1}, Relation::LessEqual, 1);
  EXPECT_TRUE(satisfies(lp, {q(1, 2), q(1, 2)}));
  EXPECT_FALSE(satisfies(lp, {-1, 1}));
  lp.set_free(0);
  EXPECT_TRUE(satisfies(lp, {-1, 1}));
  EXPECT_FALSE(satisfies(lp, {1, 1}));
}

// max c·x, Ax <= b, x >= 0 against its dual min b·y, A^T y >= c, y >= 0.
TEST(SimplexProperties, StrongDualityOnRandomLps) {
  std::mt19937 rng(1234);
  int optimal = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto k = static_cast<std::size_t>(testing::uniform_int(rng, 1, 4));
    const auto m = static_cast<std::size_t>(testing::uniform_int(rng, 1, 5));
    RatMatrix a(0, k);
    RatVector b;
    for (std::size_t i = 0; i < m; ++i) {
      a.append_row(testing::random_row(rng, k, 3));
      b.push_back(testing::uniform_int(rng, -2, 6));
    }
    const RatVector c = testing::random_row(rng, k, 3);

    LpProblem primal = LpProblem::maximize(c);
    for (std::size_t i = 0; i < m; ++i) primal.add(a.row(i), Relation::LessEqual, b[i]);
    LpProblem dual = LpProblem::maximize(scaled(b, -1));
    for (std::size_t j = 0; j < k; ++j) dual.add(a.col(j), Relation::GreaterEqual, c[j]);

    const LpOutcome p = solve(primal);
    const LpOutcome d = solve(dual);
    if (p.optimal()) {
      ++optimal;
      ASSERT_TRUE(d.optimal()) << trial;
      EXPECT_EQ(p.value, -d.value) << trial;
      EXPECT_TRUE(satisfies(primal, p.point));
      EXPECT_TRUE(satisfies(dual, d.point));
      EXPECT_EQ(dot(c, p.point), p.value);
    } else if (p.status == LpStatus::Unbounded) {
      EXPECT_EQ(d.status, LpStatus::Infeasible) << trial;
    } else {
      EXPECT_NE(d.status, LpStatus::Optimal) << trial;
    }
  }
  EXPECT_GT(optimal, 100);
}

TEST(SimplexProperties, OptimumMatchesBruteForceVertexMaximum) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto k = static_cast<std::size_t>(testing::uniform_int(rng, 1, 4));
    const Polytope p = testing::random_bounded_region(rng, k, {});
    const RatVector c = testing::random_row(rng, k, 3);
    LpProblem lp = LpProblem::maximize(c);
    lp.constraints = p.constraints();
    const LpOutcome out = solve(lp);
    ASSERT_TRUE(out.optimal());
    const auto vertices = testing::brute_force_vertices(p);
    ASSERT_FALSE(vertices.empty());
    EXPECT_EQ(out.value, testing::vertex_max(c, make_vertex_set(vertices))) << trial;
    EXPECT_EQ(solve(lp), out);  // deterministic
  }
}

}  // namespace
}  // namespace molp
