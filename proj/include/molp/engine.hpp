#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "molp/efficiency.hpp"
#include "molp/linalg.hpp"
#include "molp/polytope.hpp"

namespace molp {

/// max {Cx : x in X} with n+1 >= 2 objective rows.
///
/// The step functions below treat the LAST row of `objectives` as the
/// candidate f_{n+1} and the other rows as the reduced stack; `classify`
/// rotates any chosen candidate into that position first.
struct MolpProblem {
  RatMatrix objectives;
  Polytope region;
  std::vector<std::string> names;

  MolpProblem() = default;
  MolpProblem(RatMatrix objectives, Polytope region, std::vector<std::string> names = {});

  std::size_t num_objectives() const { return objectives.rows(); }
  std::size_t num_vars() const { return region.num_vars(); }

  const std::string& name(std::size_t i) const { return names.at(i); }
  RatVector candidate() const { return objectives.row(objectives.rows() - 1); }
  /// First n rows (everything but the candidate).
  RatMatrix reduced_objectives() const;

  /// Copy with objective `index` moved to the last position; the remaining
  /// rows keep their relative order.
  MolpProblem with_candidate_last(std::size_t index) const;
  /// Copy with objective `index` deleted.
  MolpProblem without_objective(std::size_t index) const;
};

enum class Outcome { Nonessential, Essential, Inconclusive };

const char* to_string(Outcome outcome);

/// Exact evidence for a step answer; only the fields relevant to the step
/// are filled.
struct Certificate {
  std::optional<RatVector> alpha;               // step 0: c^{n+1} = sum alpha_i c^i
  std::optional<RatVector> cone_point;          // steps 1, 2: Cx >= 0, Cx != 0
  std::optional<RatVector> interior_point;      // step 3
  std::optional<RatVector> inefficient_vertex;  // step 4
  std::optional<RatVector> dominating_point;    // step 4: beats inefficient_vertex
  std::optional<RatVector> weights;             // step 4: equal weighted values
  std::vector<RatVector> vertices;              // step 5: optimal face; step 7: efficient vertices
  std::optional<RatVector> efficient_vertex;    // step 6
  std::vector<RatVector> kernel_basis;          // step 7
  std::vector<RatVector> span_basis;            // step 7
  std::vector<RatVector> intersection_basis;    // step 7

  bool empty() const;
};

struct StepRecord {
  int step = 0;
  bool answer = false;
  Certificate certificate;
  std::string detail;
};

struct StepResult {
  bool answer = false;
  Certificate certificate;
};

inline constexpr const char* kRelationInconclusive = "X_E^{n+1} ⊆ X_E^n";
inline constexpr const char* kRelationStep4 = "X_E^n ⊆ X_E^{n+1}";

struct Verdict {
  std::size_t candidate = 0;  // index into the caller's objective list
  std::string candidate_name;
  Outcome outcome = Outcome::Inconclusive;
  int decided_at = 0;
  /// Containment reported alongside the outcome: kRelationInconclusive for
  /// step-7 inconclusive results, kRelationStep4 for the step-4 essential
  /// branch.
  std::optional<std::string> relation;
  std::vector<StepRecord> trace;
};

StepResult step0_gal_leberling(const MolpProblem& prob);
StepResult step1(const MolpProblem& prob);
StepResult step2(const MolpProblem& prob);
StepResult step3(const MolpProblem& prob);
StepResult step4(const MolpProblem& prob);
VertexSet step5(const MolpProblem& prob);
StepResult step6(const MolpProblem& prob, const VertexSet& optimal_face);
StepResult step7(const MolpProblem& prob);

struct ClassifyOptions {
  /// Skip the Gal-Leberling shortcut and route straight into steps 1-7.
  bool skip_gal_leberling = false;
};

/// Full decision procedure for objective `candidate` (0-based).
/// Throws InfeasibleRegion for an empty region and UnboundedRegion for an
/// unbounded one unless step 0 already decided.
Verdict classify(const MolpProblem& prob, std::size_t candidate, ClassifyOptions options = {});

struct Removal {
  std::string name;
  std::size_t original_index = 0;
  int step = 0;
};

struct Reduction {
  MolpProblem reduced;
  std::vector<Removal> removed;
  /// Every classify call made, in order.
  std::vector<Verdict> history;
};

/// Drops nonessential objectives one at a time until every remaining one is
/// essential or undecided. Each pass tests objectives from the last to the
/// first and removes the first nonessential one found.
Reduction reduce(const MolpProblem& prob);

}  // namespace molp
