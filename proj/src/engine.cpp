#include "molp/engine.hpp"

#include <utility>

#include "molp/errors.hpp"

namespace molp {

MolpProblem::MolpProblem(RatMatrix objectives_, Polytope region_, std::vector<std::string> names_)
    : objectives(std::move(objectives_)), region(std::move(region_)), names(std::move(names_)) {
  if (objectives.rows() < 2) throw DimensionError("at least two objective functions are required");
  if (objectives.cols() != region.num_vars()) {
    throw DimensionError("objective width differs from the number of variables");
  }
  if (names.empty()) {
    for (std::size_t i = 0; i < objectives.rows(); ++i) names.push_back("f" + std::to_string(i + 1));
  }
  if (names.size() != objectives.rows()) throw DimensionError("one name per objective required");
}

RatMatrix MolpProblem::reduced_objectives() const {
  RatMatrix out(0, objectives.cols());
  for (std::size_t i = 0; i + 1 < objectives.rows(); ++i) out.append_row(objectives.row(i));
  return out;
}

MolpProblem MolpProblem::with_candidate_last(std::size_t index) const {
  if (index >= objectives.rows()) throw DimensionError("candidate index out of range");
  MolpProblem out = *this;
  out.objectives = RatMatrix(0, objectives.cols());
  out.names.clear();
  for (std::size_t i = 0; i < objectives.rows(); ++i) {
    if (i == index) continue;
    out.objectives.append_row(objectives.row(i));
    out.names.push_back(names[i]);
  }
  out.objectives.append_row(objectives.row(index));
  out.names.push_back(names[index]);
  return out;
}

MolpProblem MolpProblem::without_objective(std::size_t index) const {
  if (index >= objectives.rows()) throw DimensionError("objective index out of range");
  MolpProblem out = *this;
  out.objectives = RatMatrix(0, objectives.cols());
  out.names.clear();
  for (std::size_t i = 0; i < objectives.rows(); ++i) {
    if (i == index) continue;
    out.objectives.append_row(objectives.row(i));
    out.names.push_back(names[i]);
  }
  return out;
}

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Nonessential:
      return "nonessential";
    case Outcome::Essential:
      return "essential";
    case Outcome::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

bool Certificate::empty() const {
  return !alpha && !cone_point && !interior_point && !inefficient_vertex && !dominating_point &&
         !weights && vertices.empty() && !efficient_vertex && kernel_basis.empty() &&
         span_basis.empty() && intersection_basis.empty();
}

StepResult step0_gal_leberling(const MolpProblem& prob) {
  // alpha >= 0 with sum alpha_i c^i = c^{n+1}: one equality per variable.
  const RatMatrix others = prob.reduced_objectives();
  const RatVector target = prob.candidate();
  const std::size_t n = others.rows();
  std::vector<LinearConstraint> rows;
  for (std::size_t j = 0; j < prob.num_vars(); ++j) {
    rows.push_back({others.col(j), Relation::Equal, target[j]});
  }
  LpOutcome out = feasible_point(rows, std::vector<VarKind>(n, VarKind::NonNegative));
  StepResult r;
  r.answer = out.optimal();
  if (r.answer) r.certificate.alpha = std::move(out.point);
  return r;
}

StepResult step1(const MolpProblem& prob) {
  StepResult r;
  r.certificate.cone_point = cone_witness(prob.objectives);
  r.answer = r.certificate.cone_point.has_value();
  return r;
}

StepResult step2(const MolpProblem& prob) {
  StepResult r;
  r.certificate.cone_point = cone_witness(prob.reduced_objectives());
  r.answer = r.certificate.cone_point.has_value();
  return r;
}

StepResult step3(const MolpProblem& prob) {
  StepResult r;
  r.certificate.interior_point = interior_point(prob.region);
  r.answer = r.certificate.interior_point.has_value();
  return r;
}

StepResult step4(const MolpProblem& prob) {
  const RatMatrix reduced = prob.reduced_objectives();
  const VertexSet vertices = enumerate_vertices(prob.region);
  StepResult r;
  for (const auto& v : vertices) {
    EfficiencyTest t = test_efficiency(v, reduced, prob.region);
    if (!t.efficient) {
      r.answer = false;
      r.certificate.inefficient_vertex = v;
      r.certificate.dominating_point = std::move(t.dominating_point);
      return r;
    }
  }
  r.certificate.weights = equal_value_weights(reduced, vertices);
  r.answer = r.certificate.weights.has_value();
  return r;
}

VertexSet step5(const MolpProblem& prob) {
  return optimal_face_vertices(prob.candidate(), prob.region);
}

StepResult step6(const MolpProblem& prob, const VertexSet& optimal_face) {
  const RatMatrix reduced = prob.reduced_objectives();
  StepResult r;
  for (const auto& v : optimal_face) {
    if (is_efficient_vertex(v, reduced, prob.region)) {
      r.answer = true;
      r.certificate.efficient_vertex = v;
      return r;
    }
  }
  return r;
}

StepResult step7(const MolpProblem& prob) {
  const RatMatrix reduced = prob.reduced_objectives();
  StepResult r;
  r.certificate.kernel_basis = null_space(reduced);
  if (r.certificate.kernel_basis.empty()) {
    r.answer = true;
    return r;
  }
  // Differences against the lexicographically smallest efficient vertex.
  const VertexSet efficient = efficient_vertices(reduced, prob.region);
  r.certificate.vertices = efficient.vertices;
  std::vector<RatVector> differences;
  for (std::size_t i = 1; i < efficient.size(); ++i) {
    differences.push_back(efficient.vertices[i] - efficient.vertices.front());
  }
  r.certificate.span_basis = span_basis(differences);
  r.certificate.intersection_basis =
      intersect_spans(r.certificate.span_basis, r.certificate.kernel_basis);
  r.answer = r.certificate.intersection_basis.empty();
  return r;
}

namespace {

class VerdictBuilder {
 public:
  VerdictBuilder(const MolpProblem& original, std::size_t candidate) {
    verdict_.candidate = candidate;
    verdict_.candidate_name = original.name(candidate);
  }

  void record(int step, const StepResult& r, std::string detail = {}) {
    verdict_.trace.push_back({step, r.answer, r.certificate, std::move(detail)});
  }

  Verdict finish(Outcome outcome, int step, std::optional<std::string> relation = std::nullopt) {
    verdict_.outcome = outcome;
    verdict_.decided_at = step;
    verdict_.relation = std::move(relation);
    return std::move(verdict_);
  }

 private:
  Verdict verdict_;
};

}  // namespace

Verdict classify(const MolpProblem& prob, std::size_t candidate, ClassifyOptions options) {
  const MolpProblem p = prob.with_candidate_last(candidate);
  VerdictBuilder v(prob, candidate);

  if (!is_nonempty(p.region)) throw InfeasibleRegion("feasible region is empty");

  if (!options.skip_gal_leberling) {
    StepResult s0 = step0_gal_leberling(p);
    v.record(0, s0);
    if (s0.answer) return v.finish(Outcome::Nonessential, 0);
  }

  if (!is_bounded(p.region)) {
    throw UnboundedRegion("feasible region is unbounded; only the Gal-Leberling test applies");
  }

  StepResult s1 = step1(p);
  v.record(1, s1);
  if (s1.answer) {
    StepResult s5;
    s5.answer = true;
    s5.certificate.vertices = step5(p).vertices;
    v.record(5, s5, std::to_string(s5.certificate.vertices.size()) + " optimal-face vertices");

    StepResult s6 = step6(p, VertexSet{s5.certificate.vertices});
    v.record(6, s6);
    if (!s6.answer) return v.finish(Outcome::Essential, 6);

    StepResult s7 = step7(p);
    if (s7.answer) {
      v.record(7, s7);
      return v.finish(Outcome::Nonessential, 7);
    }
    v.record(7, s7, "kernel meets the efficient-vertex span; containment reported, not proven");
    return v.finish(Outcome::Inconclusive, 7, kRelationInconclusive);
  }

  StepResult s2 = step2(p);
  v.record(2, s2);
  if (!s2.answer) return v.finish(Outcome::Nonessential, 2);

  StepResult s3 = step3(p);
  v.record(3, s3);
  if (s3.answer) return v.finish(Outcome::Essential, 3);

  StepResult s4 = step4(p);
  v.record(4, s4,
           s4.certificate.inefficient_vertex ? "vertex not efficient for the reduced stack"
           : s4.answer                       ? "all vertices efficient; equalizing weights found"
                                             : "all vertices efficient; no positive equalizing weights");
  if (s4.answer) return v.finish(Outcome::Nonessential, 4);
  return v.finish(Outcome::Essential, 4, kRelationStep4);
}

Reduction reduce(const MolpProblem& prob) {
  Reduction out;
  out.reduced = prob;
  std::vector<std::size_t> original_index(prob.num_objectives());
  for (std::size_t i = 0; i < original_index.size(); ++i) original_index[i] = i;

  bool removed_one = true;
  while (removed_one && out.reduced.num_objectives() >= 2) {
    removed_one = false;
    for (std::size_t i = out.reduced.num_objectives(); i-- > 0;) {
      Verdict verdict = classify(out.reduced, i);
      const bool drop = verdict.outcome == Outcome::Nonessential;
      const int step = verdict.decided_at;
      out.history.push_back(std::move(verdict));
      if (drop) {
        out.removed.push_back({out.reduced.name(i), original_index[i], step});
        out.reduced = out.reduced.without_objective(i);
        original_index.erase(original_index.begin() + static_cast<std::ptrdiff_t>(i));
        removed_one = true;
        break;
      }
    }
  }
  return out;
}

}  // namespace molp
