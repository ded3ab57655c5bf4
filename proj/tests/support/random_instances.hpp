#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <vector>

#include "molp/engine.hpp"

namespace molp::testing {

struct InstanceShape {
  std::size_t max_vars = 4;
  std::size_t max_constraints = 6;
  std::size_t max_objectives = 4;
  int coeff_range = 3;
};

inline int uniform_int(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline RatVector random_row(std::mt19937& rng, std::size_t k, int range) {
  RatVector row(k);
  for (auto& x : row) x = uniform_int(rng, -range, range);
  return row;
}

/// Nonempty bounded region: the first row has strictly positive coefficients
/// (so it caps every coordinate); about a quarter of instances carry an
/// equality pair so the region has empty interior.
inline Polytope random_bounded_region(std::mt19937& rng, std::size_t k, const InstanceShape& shape) {
  for (;;) {
    const std::size_t m = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(shape.max_constraints)));
    RatMatrix a(0, k);
    RatVector b;
    RatVector cap(k);
    for (auto& x : cap) x = uniform_int(rng, 1, 3);
    a.append_row(cap);
    b.push_back(uniform_int(rng, 2, 8));
    const bool thin = m >= 3 && uniform_int(rng, 0, 3) == 0;
    std::size_t remaining = m - 1;
    if (thin) {
      RatVector row = random_row(rng, k, shape.coeff_range);
      Rational rhs = uniform_int(rng, 0, 4);
      a.append_row(row);
      b.push_back(rhs);
      a.append_row(scaled(row, -1));
      b.push_back(-rhs);
      remaining -= 2;
    }
    for (std::size_t i = 0; i < remaining; ++i) {
      a.append_row(random_row(rng, k, shape.coeff_range));
      b.push_back(uniform_int(rng, -2, 6));
    }
    Polytope p(std::move(a), std::move(b), k);
    if (is_nonempty(p)) return p;
  }
}

inline RatMatrix random_objectives(std::mt19937& rng, std::size_t count, std::size_t k, int range) {
  RatMatrix c(0, k);
  while (c.rows() < count) {
    RatVector row = random_row(rng, k, range);
    if (!is_zero(row)) c.append_row(row);
  }
  return c;
}

inline MolpProblem random_problem(std::mt19937& rng, const InstanceShape& shape = {}) {
  const std::size_t k = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(shape.max_vars)));
  const std::size_t objectives =
      static_cast<std::size_t>(uniform_int(rng, 2, static_cast<int>(shape.max_objectives)));
  Polytope region = random_bounded_region(rng, k, shape);
  return MolpProblem(random_objectives(rng, objectives, k, shape.coeff_range), std::move(region));
}

/// Instance whose last objective is sum alpha_i c^i with random alpha >= 0
/// (some alpha_i may be zero, but not all).
inline MolpProblem planted_problem(std::mt19937& rng, const InstanceShape& shape = {}) {
  const std::size_t k = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(shape.max_vars)));
  const std::size_t others =
      static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(shape.max_objectives) - 1));
  RatMatrix c = random_objectives(rng, others, k, shape.coeff_range);
  RatVector planted(k);
  bool any = false;
  while (!any) {
    planted.assign(k, Rational(0));
    for (std::size_t i = 0; i < others; ++i) {
      Rational alpha(uniform_int(rng, 0, 3), uniform_int(rng, 1, 3));
      if (alpha != 0) any = true;
      planted = planted + scaled(c.row(i), alpha);
    }
  }
  c.append_row(planted);
  return MolpProblem(std::move(c), random_bounded_region(rng, k, shape));
}

/// Random permutation of {0..n-1}.
inline std::vector<std::size_t> random_permutation(std::mt19937& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace molp::testing
