#pragma once

// Problem data from the worked examples; objective rows and constraint rows
// are written as coefficient lists over x1..xk.

#include <initializer_list>
#include <vector>

#include "molp/engine.hpp"

namespace molp::testing {

using Rows = std::vector<RatVector>;

inline RatMatrix rows_matrix(const Rows& rows, std::size_t k) {
  RatMatrix m(0, k);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

inline Polytope region(std::size_t k, const Rows& a, const RatVector& b) {
  return Polytope(rows_matrix(a, k), b, k);
}

inline MolpProblem problem(std::size_t k, const Rows& objectives, const Rows& a, const RatVector& b) {
  return MolpProblem(rows_matrix(objectives, k), region(k, a, b));
}

/// {x1 + x2 <= 1, -x1 - x2 <= -1}: the segment from (1,0) to (0,1).
inline Polytope segment() { return region(2, {{1, 1}, {-1, -1}}, {1, -1}); }
inline Polytope unit_square() { return region(2, {{1, 0}, {0, 1}}, {1, 1}); }
inline Polytope unit_cube() { return region(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {1, 1, 1}); }

inline Rows four_objectives_2d() { return {{1, 3}, {3, 0}, {2, 1}, {-3, -1}}; }
inline Rows cube_objectives() { return {{1, 1, 1}, {-1, 1, 1}, {1, 1, 0}}; }

inline MolpProblem square_problem() {
  return MolpProblem(rows_matrix(four_objectives_2d(), 2), unit_square());
}

inline MolpProblem segment_three() {
  return MolpProblem(rows_matrix({{1, 1}, {1, 0}, {-3, -1}}, 2), segment());
}

inline MolpProblem segment_chain() {
  return MolpProblem(rows_matrix({{1, 3}, {2, 1}, {3, 0}, {-3, -1}}, 2), segment());
}

inline MolpProblem thin_3d() {
  return problem(3, {{-1, -2, 2}, {2, 3, 0}, {-1, -1, -2}},
                 {{0, 1, 1}, {0, -1, -1}, {1, 1, 1}, {-1, -1, -1}, {1, 1, 0}}, {2, -2, 3, -2, 2});
}

inline MolpProblem cube_problem() { return MolpProblem(rows_matrix(cube_objectives(), 3), unit_cube()); }

inline MolpProblem seven_var_problem() {
  return problem(7,
                 {{1, 2, -1, 3, 2, 0, 1}, {0, 1, 1, 2, 3, 1, 0}, {1, 0, 1, -1, 0, -1, -1}},
                 {{1, 2, 1, 1, 2, 1, 2}, {-2, -1, 0, 1, 2, 0, 1}, {-1, 0, 1, 0, 2, 0, -2},
                  {0, 1, 2, -1, 1, -2, -1}},
                 {16, 16, 16, 1});
}

inline MolpProblem session_simplex() {
  return problem(3, {{1, 1, 0}, {1, 1, 1}, {-3, -3, -1}}, {{1, 1, 1}}, {1});
}

inline MolpProblem session_box5() {
  Rows box;
  for (std::size_t i = 0; i < 5; ++i) {
    RatVector r(5);
    r[i] = 1;
    box.push_back(r);
  }
  return problem(5, {{1, 1, 1, 1, 1}, {-1, 1, 1, 1, 1}, {-1, -1, 1, 1, 1}, {1, 1, 0, 0, 0}}, box,
                 {1, 1, 1, 1, 1});
}

inline MolpProblem session_six_var() {
  return problem(6, {{0, 0, -1, -1, 0, 0}, {0, 0, 0, 0, -1, -1}, {0, 0, 0, -1, 0, -1}},
                 {{1, 3, 0, 0, 0, 0}, {3, 1, 0, 0, 0, 0}, {1, 4, 1, -1, 0, 0}, {-1, -4, -1, 1, 0, 0},
                  {4, 1, 0, 0, 1, -1}, {-4, -1, 0, 0, -1, 1}},
                 {24, 24, 40, -40, 40, -40});
}

}  // namespace molp::testing
