#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "molp/engine.hpp"

namespace molp {

/// On-disk problem description. Rationals are kept as canonical strings so
/// nothing on the boundary passes through binary floating point.
///
///   {
///     "variables":   ["x1", "x2"],
///     "objectives":  [{"name": "f1", "coeffs": ["1", "3"]}, ...],
///     "constraints": [{"coeffs": ["1", "1"], "relation": "<=", "rhs": "1"}, ...],
///     "metadata":    {...}                        // optional, passed through
///   }
///
/// x >= 0 is implicit. Coefficients may be integers, "p/q" or finite decimals,
/// given as JSON strings or JSON integers.
struct ProblemDocument {
  struct Objective {
    std::string name;
    std::vector<Rational> coeffs;
    friend bool operator==(const Objective&, const Objective&) = default;
  };
  struct Constraint {
    std::vector<Rational> coeffs;
    Rational rhs;
    friend bool operator==(const Constraint&, const Constraint&) = default;
  };

  std::vector<std::string> variables;
  std::vector<Objective> objectives;
  std::vector<Constraint> constraints;
  nlohmann::json metadata;  // null when absent

  friend bool operator==(const ProblemDocument&, const ProblemDocument&) = default;
};

/// Throws ParseError, DimensionError or RelationError.
ProblemDocument parse_document(std::string_view text);
std::string serialize_document(const ProblemDocument& doc);

MolpProblem to_problem(const ProblemDocument& doc);
ProblemDocument to_document(const MolpProblem& prob, std::vector<std::string> variables = {});

MolpProblem parse_problem(std::string_view text);

/// "x1 + 3*x2", "-3*x1 - x2", "1/2*x1", "0".
std::string format_linear(std::span<const Rational> coeffs, std::span<const std::string> variables);
std::string format_vector(std::span<const Rational> v);

nlohmann::json verdict_to_json(const Verdict& verdict, bool include_certificates = false);
nlohmann::json reduction_to_json(const Reduction& reduction, bool include_certificates = false);

/// One-line verdict, e.g. "Objective function f4 = -3*x1 - x2 is nonessential (step 4)".
std::string verdict_line(const Verdict& verdict, const MolpProblem& prob,
                         std::span<const std::string> variables);
void write_trace(std::ostream& out, const Verdict& verdict);

/// Command-line entry point; args excludes the program name.
/// Exit codes: 0 completed, 2 input error, 3 infeasible region, 4 unbounded region.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace molp
