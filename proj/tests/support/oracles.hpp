#pragma once

// Test-only reference computations. None of these reuse the code path they
// are used to check.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "molp/efficiency.hpp"
#include "molp/linalg.hpp"
#include "molp/lp.hpp"
#include "molp/polytope.hpp"

namespace molp::testing {

/// Determinant by cofactor expansion (independent of Gaussian elimination).
inline Rational cofactor_det(const std::vector<RatVector>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<RatVector> minor;
    for (std::size_t r = 1; r < n; ++r) {
      RatVector row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) row.push_back(m[r][j]);
      }
      minor.push_back(std::move(row));
    }
    Rational term = m[0][c] * cofactor_det(minor);
    det += (c % 2 == 0) ? term : Rational(-term);
  }
  return det;
}

/// Calls f(indices) for every size-r subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t r, F&& f) {
  if (r > n) return;
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    f(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Rank as the size of the largest nonvanishing minor.
inline std::size_t minor_rank(const RatMatrix& m) {
  for (std::size_t r = std::min(m.rows(), m.cols()); r > 0; --r) {
    bool found = false;
    for_each_subset(m.rows(), r, [&](const std::vector<std::size_t>& rows) {
      if (found) return;
      for_each_subset(m.cols(), r, [&](const std::vector<std::size_t>& cols) {
        if (found) return;
        std::vector<RatVector> sub;
        for (auto i : rows) {
          RatVector row;
          for (auto j : cols) row.push_back(m(i, j));
          sub.push_back(std::move(row));
        }
        if (cofactor_det(sub) != 0) found = true;
      });
    });
    if (found) return r;
  }
  return 0;
}

/// V-representation dominance test: x0 is inefficient iff some convex
/// combination of the vertices has objective vector >= F(x0) with at least
/// one strict component.
inline bool vrep_efficient(const RatVector& x0, const RatMatrix& objectives, const VertexSet& vertices) {
  const std::size_t q = vertices.size();
  const std::size_t n = objectives.rows();
  const RatVector f0 = objectives * x0;
  std::vector<RatVector> fv;
  for (const auto& v : vertices) fv.push_back(objectives * v);

  // maximize sum_i (sum_j lambda_j F_i(v^j) - F_i(x0)) over the simplex,
  // subject to each bracket >= 0.
  RatVector objective(q);
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t i = 0; i < n; ++i) objective[j] += fv[j][i];
  LpProblem lp = LpProblem::maximize(objective);
  lp.add(RatVector(q, Rational(1)), Relation::Equal, 1);
  for (std::size_t i = 0; i < n; ++i) {
    RatVector row(q);
    for (std::size_t j = 0; j < q; ++j) row[j] = fv[j][i];
    lp.add(std::move(row), Relation::GreaterEqual, f0[i]);
  }
  LpOutcome out = solve(lp);
  Rational base = 0;
  for (const auto& x : f0) base += x;
  return out.optimal() && out.value - base == 0;
}

/// Brute-force efficiency over a vertex list: efficient iff no vertex
/// dominates (valid for vertices only when used as a sanity filter).
inline bool dominated_by_some_vertex(const RatVector& x0, const RatMatrix& objectives,
                                     const VertexSet& vertices) {
  const RatVector f0 = objectives * x0;
  for (const auto& v : vertices) {
    if (dominates(objectives * v, f0)) return true;
  }
  return false;
}

/// Maximum of c·x over the vertices of a bounded polytope.
inline Rational vertex_max(const RatVector& c, const VertexSet& vertices) {
  std::optional<Rational> best;
  for (const auto& v : vertices) {
    Rational val = dot(c, v);
    if (!best || val > *best) best = val;
  }
  return *best;
}

/// Solution of a square system by Cramer's rule, or nullopt if singular.
inline std::optional<RatVector> cramer_solve(const std::vector<RatVector>& m, const RatVector& rhs) {
  const Rational det = cofactor_det(m);
  if (det == 0) return std::nullopt;
  RatVector x(m.size());
  for (std::size_t j = 0; j < m.size(); ++j) {
    std::vector<RatVector> replaced = m;
    for (std::size_t i = 0; i < m.size(); ++i) replaced[i][j] = rhs[i];
    x[j] = cofactor_det(replaced) / det;
  }
  return x;
}

/// Vertices of {Ax <= b, x >= 0} by brute force: every k-subset of the
/// m + k inequality hyperplanes with a nonsingular system whose solution
/// is feasible.
inline std::vector<RatVector> brute_force_vertices(const Polytope& p) {
  const std::size_t k = p.num_vars();
  const std::size_t m = p.num_constraints();
  std::vector<RatVector> out;
  for_each_subset(m + k, k, [&](const std::vector<std::size_t>& chosen) {
    std::vector<RatVector> sys;
    RatVector rhs;
    for (auto r : chosen) {
      if (r < m) {
        sys.push_back(p.a().row(r));
        rhs.push_back(p.b()[r]);
      } else {
        RatVector unit(k);
        unit[r - m] = 1;
        sys.push_back(unit);
        rhs.push_back(0);
      }
    }
    auto x = cramer_solve(sys, rhs);
    if (x && p.contains(*x) && std::find(out.begin(), out.end(), *x) == out.end()) out.push_back(*x);
  });
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace molp::testing
