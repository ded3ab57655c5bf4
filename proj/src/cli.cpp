#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "molp/errors.hpp"
#include "molp/io.hpp"

namespace molp {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitUnbounded = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::size_t objective_index(int one_based, const MolpProblem& prob) {
  if (one_based < 1 || static_cast<std::size_t>(one_based) > prob.num_objectives()) {
    throw DimensionError("--objective must be between 1 and " + std::to_string(prob.num_objectives()));
  }
  return static_cast<std::size_t>(one_based - 1);
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide whether objectives of a linear multiobjective program are essential"};
  app.require_subcommand(1);

  std::string file;
  std::optional<int> objective;
  std::optional<int> face;
  std::optional<long> seed;
  bool trace = false;
  bool json_out = false;

  auto* classify_cmd = app.add_subcommand("classify", "Classify one objective (default: the last)");
  classify_cmd->add_option("FILE", file, "Problem document (JSON)")->required();
  classify_cmd->add_option("--objective,-k", objective, "1-based index of the candidate objective");
  classify_cmd->add_flag("--trace", trace, "Show every executed step with its certificate");
  classify_cmd->add_flag("--json", json_out, "Emit the verdict as JSON");
  classify_cmd->add_option("--seed", seed, "Reserved; ignored");

  auto* reduce_cmd = app.add_subcommand("reduce", "Remove nonessential objectives one at a time");
  reduce_cmd->add_option("FILE", file, "Problem document (JSON)")->required();
  reduce_cmd->add_flag("--json", json_out, "Emit the reduction as JSON");
  reduce_cmd->add_flag("--trace", trace, "Include per-step certificates");
  reduce_cmd->add_option("--seed", seed, "Reserved; ignored");

  auto* vertices_cmd = app.add_subcommand("vertices", "List the vertices of the feasible region");
  vertices_cmd->add_option("FILE", file, "Problem document (JSON)")->required();
  vertices_cmd->add_option("--face", face, "Only the optimal face of this 1-based objective");

  // CLI11 wants argv order with the program name removed, reversed.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitInput;
  }

  try {
    const ProblemDocument doc = parse_document(read_file(file));
    const MolpProblem prob = to_problem(doc);

    if (classify_cmd->parsed()) {
      const std::size_t k =
          objective ? objective_index(*objective, prob) : prob.num_objectives() - 1;
      const Verdict verdict = classify(prob, k);
      if (json_out) {
        out << verdict_to_json(verdict, trace).dump(2) << "\n";
      } else {
        out << verdict_line(verdict, prob, doc.variables) << "\n";
        if (trace) write_trace(out, verdict);
      }
    } else if (reduce_cmd->parsed()) {
      const Reduction r = reduce(prob);
      if (json_out) {
        out << reduction_to_json(r, trace).dump(2) << "\n";
      } else {
        MolpProblem current = prob;
        for (const auto& v : r.history) {
          // History verdicts index into the stack that was current at the time.
          out << verdict_line(v, current, doc.variables) << "\n";
          if (trace) write_trace(out, v);
          if (v.outcome == Outcome::Nonessential) current = current.without_objective(v.candidate);
        }
        out << "Removed:";
        if (r.removed.empty()) out << " none";
        for (const auto& rm : r.removed) out << " " << rm.name << " (step " << rm.step << ")";
        out << "\nRemaining:";
        for (const auto& n : r.reduced.names) out << " " << n;
        out << "\n";
      }
    } else if (vertices_cmd->parsed()) {
      const VertexSet vs =
          face ? optimal_face_vertices(prob.objectives.row(objective_index(*face, prob)), prob.region)
               : enumerate_vertices(prob.region);
      for (const auto& v : vs) out << format_vector(v) << "\n";
    }
    return kExitOk;
  } catch (const InfeasibleRegion& e) {
    err << "infeasible region: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const UnboundedRegion& e) {
    err << "unbounded region: " << e.what() << "\n";
    return kExitUnbounded;
  } catch (const UnboundedObjective& e) {
    err << "unbounded objective: " << e.what() << "\n";
    return kExitUnbounded;
  } catch (const MolpError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace molp
