#pragma once

#include <optional>

#include "molp/linalg.hpp"
#include "molp/polytope.hpp"

namespace molp {

/// Point x (free) with Cx >= 0 componentwise and Cx != 0, or nullopt when
/// that cone is empty.
std::optional<RatVector> cone_witness(const RatMatrix& c);
bool cone_nonempty(const RatMatrix& c);

/// Result of the dominance-slack LP for a single point.
struct EfficiencyTest {
  bool efficient = false;
  /// When not efficient and the LP was bounded: a feasible point whose
  /// objective vector dominates that of the tested point.
  std::optional<RatVector> dominating_point;
};

/// Benson's test: maximize sum(eps) s.t. x in P, c^i·x - eps_i = c^i·x0,
/// eps >= 0. x0 is efficient iff the optimum is exactly zero.
/// Throws InfeasibleInput if x0 is not in P.
EfficiencyTest test_efficiency(const RatVector& x0, const RatMatrix& objectives, const Polytope& p);
bool is_efficient_vertex(const RatVector& x0, const RatMatrix& objectives, const Polytope& p);

/// Vertices of P that pass the test above.
VertexSet efficient_vertices(const RatMatrix& objectives, const Polytope& p);

/// Weight vector w > 0 with sum(w) = 1 giving every vertex the same weighted
/// objective value, or nullopt if none exists.
std::optional<RatVector> equal_value_weights(const RatMatrix& objectives, const VertexSet& vs);
bool equal_value_weights_exist(const RatMatrix& objectives, const VertexSet& vs);

/// Componentwise "a >= b with at least one strict component".
bool dominates(const RatVector& a, const RatVector& b);

}  // namespace molp
