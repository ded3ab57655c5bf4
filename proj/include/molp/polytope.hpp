#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "molp/linalg.hpp"
#include "molp/lp.hpp"

namespace molp {

/// X = {x in R^k : Ax <= b, x >= 0}. Nonnegativity is always implied and is
/// never stored as rows of A.
class Polytope {
 public:
  Polytope() = default;
  Polytope(RatMatrix a, RatVector b, std::size_t num_vars);

  const RatMatrix& a() const { return a_; }
  const RatVector& b() const { return b_; }
  std::size_t num_vars() const { return k_; }
  std::size_t num_constraints() const { return b_.size(); }

  bool contains(const RatVector& x) const;

  /// Adds a·x <= rhs.
  Polytope with_row(const RatVector& row, const Rational& rhs) const;
  /// Adds a·x = rhs as the pair a·x <= rhs, -a·x <= -rhs.
  Polytope with_equality(const RatVector& row, const Rational& rhs) const;

  /// Ax <= b as LE constraints for the LP solver (x >= 0 via variable kinds).
  std::vector<LinearConstraint> constraints() const;

  friend bool operator==(const Polytope&, const Polytope&) = default;

 private:
  RatMatrix a_;
  RatVector b_;
  std::size_t k_ = 0;
};

/// Deduplicated vertices in lexicographic order.
struct VertexSet {
  std::vector<RatVector> vertices;

  std::size_t size() const { return vertices.size(); }
  bool empty() const { return vertices.empty(); }
  bool contains(const RatVector& v) const;
  auto begin() const { return vertices.begin(); }
  auto end() const { return vertices.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

/// Builds a VertexSet from arbitrary points (sorts and deduplicates).
VertexSet make_vertex_set(std::vector<RatVector> points);

/// Lexicographic order on equal-length vectors.
bool lex_less(const RatVector& a, const RatVector& b);

/// All vertices of P via basic solutions of Ax + s = b, (x, s) >= 0.
/// Throws InfeasibleRegion if P is empty.
VertexSet enumerate_vertices(const Polytope& p);

/// Rows of the active set at x: tight rows of A plus unit rows for x_j = 0.
RatMatrix active_constraints(const Polytope& p, const RatVector& x);

/// Point with x > 0 and a·x < b on every nonzero row of A, or nullopt.
std::optional<RatVector> interior_point(const Polytope& p);
bool interior_nonempty(const Polytope& p);

bool is_nonempty(const Polytope& p);

/// True iff max sum(x) over P is finite; requires P nonempty.
bool is_bounded(const Polytope& p);

/// max c·x over P; throws InfeasibleRegion / UnboundedObjective.
Rational maximize_over(const RatVector& c, const Polytope& p);

/// Vertices of the face of maximizers of c over P.
VertexSet optimal_face_vertices(const RatVector& c, const Polytope& p);

}  // namespace molp
