#include "molp/io.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "molp/errors.hpp"

namespace molp {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& value, const std::string& where) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return parse_rational(value.dump());
  if (value.is_number_float()) {
    throw ParseError(where + ": floating-point literal; write rationals as strings such as \"1/3\"");
  }
  throw ParseError(where + ": expected a rational literal");
}

std::vector<Rational> coeffs_from_json(const json& value, std::size_t expected,
                                       const std::string& where) {
  if (!value.is_array()) throw ParseError(where + ": \"coeffs\" must be an array");
  if (value.size() != expected) {
    throw DimensionError(where + ": " + std::to_string(value.size()) + " coefficients for " +
                         std::to_string(expected) + " variables");
  }
  std::vector<Rational> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(rational_from_json(value[i], where + " coefficient " + std::to_string(i + 1)));
  }
  return out;
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing \"" + key + "\"");
  return *it;
}

json string_array(std::span<const Rational> values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(to_string(v));
  return arr;
}

json vector_list(const std::vector<RatVector>& vs) {
  json arr = json::array();
  for (const auto& v : vs) arr.push_back(string_array(v));
  return arr;
}

}  // namespace

ProblemDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("problem document must be a JSON object");

  ProblemDocument doc;
  const json& vars = require(root, "variables", "document");
  if (!vars.is_array() || vars.empty()) throw ParseError("\"variables\" must be a nonempty array");
  for (const auto& v : vars) {
    if (!v.is_string()) throw ParseError("variable names must be strings");
    doc.variables.push_back(v.get<std::string>());
  }
  const std::size_t k = doc.variables.size();

  const json& objs = require(root, "objectives", "document");
  if (!objs.is_array()) throw ParseError("\"objectives\" must be an array");
  for (std::size_t i = 0; i < objs.size(); ++i) {
    const std::string where = "objective " + std::to_string(i + 1);
    const json& o = objs[i];
    if (!o.is_object()) throw ParseError(where + ": expected an object");
    ProblemDocument::Objective obj;
    if (auto it = o.find("name"); it != o.end()) {
      if (!it->is_string()) throw ParseError(where + ": \"name\" must be a string");
      obj.name = it->get<std::string>();
    } else {
      obj.name = "f" + std::to_string(i + 1);
    }
    obj.coeffs = coeffs_from_json(require(o, "coeffs", where), k, where);
    doc.objectives.push_back(std::move(obj));
  }

  if (auto it = root.find("constraints"); it != root.end()) {
    if (!it->is_array()) throw ParseError("\"constraints\" must be an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = "constraint " + std::to_string(i + 1);
      const json& c = (*it)[i];
      if (!c.is_object()) throw ParseError(where + ": expected an object");
      const json& rel = require(c, "relation", where);
      if (!rel.is_string()) throw ParseError(where + ": \"relation\" must be a string");
      if (rel.get<std::string>() != "<=") {
        throw RelationError(where + ": relation \"" + rel.get<std::string>() +
                            "\" not supported; write every constraint as \"<=\"");
      }
      ProblemDocument::Constraint con;
      con.coeffs = coeffs_from_json(require(c, "coeffs", where), k, where);
      con.rhs = rational_from_json(require(c, "rhs", where), where + " rhs");
      doc.constraints.push_back(std::move(con));
    }
  }

  if (auto it = root.find("metadata"); it != root.end()) doc.metadata = *it;
  return doc;
}

std::string serialize_document(const ProblemDocument& doc) {
  json root;
  root["variables"] = doc.variables;
  json objs = json::array();
  for (const auto& o : doc.objectives) {
    objs.push_back({{"name", o.name}, {"coeffs", string_array(o.coeffs)}});
  }
  root["objectives"] = std::move(objs);
  json cons = json::array();
  for (const auto& c : doc.constraints) {
    cons.push_back({{"coeffs", string_array(c.coeffs)}, {"relation", "<="}, {"rhs", to_string(c.rhs)}});
  }
  root["constraints"] = std::move(cons);
  if (!doc.metadata.is_null()) root["metadata"] = doc.metadata;
  return root.dump(2) + "\n";
}

MolpProblem to_problem(const ProblemDocument& doc) {
  const std::size_t k = doc.variables.size();
  RatMatrix c(0, k);
  std::vector<std::string> names;
  for (const auto& o : doc.objectives) {
    c.append_row(o.coeffs);
    names.push_back(o.name);
  }
  RatMatrix a(0, k);
  RatVector b;
  for (const auto& con : doc.constraints) {
    a.append_row(con.coeffs);
    b.push_back(con.rhs);
  }
  return MolpProblem(std::move(c), Polytope(std::move(a), std::move(b), k), std::move(names));
}

ProblemDocument to_document(const MolpProblem& prob, std::vector<std::string> variables) {
  ProblemDocument doc;
  if (variables.empty()) {
    for (std::size_t j = 0; j < prob.num_vars(); ++j) variables.push_back("x" + std::to_string(j + 1));
  }
  doc.variables = std::move(variables);
  for (std::size_t i = 0; i < prob.num_objectives(); ++i) {
    doc.objectives.push_back({prob.name(i), prob.objectives.row(i)});
  }
  for (std::size_t i = 0; i < prob.region.num_constraints(); ++i) {
    doc.constraints.push_back({prob.region.a().row(i), prob.region.b()[i]});
  }
  return doc;
}

MolpProblem parse_problem(std::string_view text) { return to_problem(parse_document(text)); }

std::string format_linear(std::span<const Rational> coeffs, std::span<const std::string> variables) {
  std::string out;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const Rational& c = coeffs[j];
    if (c == 0) continue;
    const bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += variables[j];
  }
  return out.empty() ? "0" : out;
}

std::string format_vector(std::span<const Rational> v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(v[i]);
  }
  return out + "]";
}

namespace {

json certificate_to_json(const Certificate& c) {
  json out = json::object();
  if (c.alpha) out["alpha"] = string_array(*c.alpha);
  if (c.cone_point) out["cone_point"] = string_array(*c.cone_point);
  if (c.interior_point) out["interior_point"] = string_array(*c.interior_point);
  if (c.inefficient_vertex) out["inefficient_vertex"] = string_array(*c.inefficient_vertex);
  if (c.dominating_point) out["dominating_point"] = string_array(*c.dominating_point);
  if (c.weights) out["weights"] = string_array(*c.weights);
  if (!c.vertices.empty()) out["vertices"] = vector_list(c.vertices);
  if (c.efficient_vertex) out["efficient_vertex"] = string_array(*c.efficient_vertex);
  if (!c.kernel_basis.empty()) out["kernel_basis"] = vector_list(c.kernel_basis);
  if (!c.span_basis.empty()) out["span_basis"] = vector_list(c.span_basis);
  if (!c.intersection_basis.empty()) out["intersection_basis"] = vector_list(c.intersection_basis);
  return out;
}

}  // namespace

json verdict_to_json(const Verdict& verdict, bool include_certificates) {
  json out;
  out["candidate"] = verdict.candidate_name;
  out["outcome"] = to_string(verdict.outcome);
  out["decided_at_step"] = verdict.decided_at;
  if (verdict.relation) out["relation"] = *verdict.relation;
  json trace = json::array();
  for (const auto& rec : verdict.trace) trace.push_back({{"step", rec.step}, {"answer", rec.answer}});
  out["trace"] = std::move(trace);
  if (include_certificates) {
    json certs = json::array();
    for (const auto& rec : verdict.trace) {
      json c = certificate_to_json(rec.certificate);
      c["step"] = rec.step;
      if (!rec.detail.empty()) c["detail"] = rec.detail;
      certs.push_back(std::move(c));
    }
    out["certificates"] = std::move(certs);
  }
  return out;
}

json reduction_to_json(const Reduction& reduction, bool include_certificates) {
  json out;
  json removed = json::array();
  for (const auto& r : reduction.removed) {
    removed.push_back({{"objective", r.name}, {"index", r.original_index + 1}, {"step", r.step}});
  }
  out["removed"] = std::move(removed);
  out["survivors"] = reduction.reduced.names;
  json history = json::array();
  for (const auto& v : reduction.history) history.push_back(verdict_to_json(v, include_certificates));
  out["history"] = std::move(history);
  return out;
}

std::string verdict_line(const Verdict& verdict, const MolpProblem& prob,
                         std::span<const std::string> variables) {
  const std::string label =
      verdict.candidate_name + " = " + format_linear(prob.objectives.row(verdict.candidate), variables);
  const std::string step = "(step " + std::to_string(verdict.decided_at) + ")";
  switch (verdict.outcome) {
    case Outcome::Nonessential:
      return "Objective function " + label + " is nonessential " + step;
    case Outcome::Essential: {
      std::string line = "Objective function " + label + " is essential " + step;
      if (verdict.relation) line += " and " + *verdict.relation;
      return line;
    }
    case Outcome::Inconclusive:
      return std::string(verdict.relation.value_or(kRelationInconclusive)) + " " + step +
             ": objective function " + label + " could not be classified";
  }
  return {};
}

void write_trace(std::ostream& out, const Verdict& verdict) {
  for (const auto& rec : verdict.trace) {
    out << "  step " << rec.step << ": " << (rec.answer ? "true" : "false");
    if (!rec.detail.empty()) out << " (" << rec.detail << ")";
    out << "\n";
    const Certificate& c = rec.certificate;
    auto show = [&](const char* label, const std::optional<RatVector>& v) {
      if (v) out << "    " << label << " = " << format_vector(*v) << "\n";
    };
    auto show_list = [&](const char* label, const std::vector<RatVector>& vs) {
      if (vs.empty()) return;
      out << "    " << label << " =";
      for (const auto& v : vs) out << " " << format_vector(v);
      out << "\n";
    };
    show("alpha", c.alpha);
    show("cone point", c.cone_point);
    show("interior point", c.interior_point);
    show("inefficient vertex", c.inefficient_vertex);
    show("dominating point", c.dominating_point);
    show("weights", c.weights);
    show_list("vertices", c.vertices);
    show("efficient vertex", c.efficient_vertex);
    show_list("kernel basis", c.kernel_basis);
    show_list("span basis", c.span_basis);
    show_list("intersection basis", c.intersection_basis);
  }
}

}  // namespace molp
