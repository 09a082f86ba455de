// vcu: command-line driver for VC-dimension, k-wise union and extremal search experiments.
//
// Every subcommand prints a JSON run report on stdout. Exit status:
//   0 ok, 1 tool error, 2 budget exceeded, 3 a checked claim was violated.

#include <iostream>

#include "CLI11.hpp"
#include "vcu/commands.hpp"
#include "vcu/verify.hpp"

int main(int argc, char** argv) {
  using namespace vcu::cli;

  CLI::App app{"VC dimension of k-fold operation families and k-wise union extremal search"};
  app.require_subcommand(1);

  VcArgs vc;
  std::string vc_op;
  auto* vc_cmd = app.add_subcommand("vc", "VC dimension of a family file, or of its k-fold op power");
  vc_cmd->add_option("input", vc.input, "family file")->required()->check(CLI::ExistingFile);
  vc_cmd->add_option("--op", vc_op, "cap | cup | sym")->check(CLI::IsMember({"cap", "cup", "sym"}));
  vc_cmd->add_option("--k", vc.k, "number of factors")->check(CLI::PositiveNumber);

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "exact extremal search");
  search_cmd->add_option("kind", search.kind, "p | pprime | m | two-sided")
      ->required()
      ->check(CLI::IsMember({"p", "pprime", "m", "two-sided"}));
  search_cmd->add_option("--n", search.n, "ground-set size")->required();
  search_cmd->add_option("--k", search.k, "number of factors");
  search_cmd->add_option("--d", search.d, "union / VC bound");
  search_cmd->add_option("--t", search.t, "intersection bound (m)");
  search_cmd->add_option("--mode", search.mode, "pprime mode")->check(CLI::IsMember({"exhaustive", "compressed"}));
  search_cmd->add_flag("--no-shift-restriction", search.no_shift_restriction, "search all down-sets");
  search_cmd->add_flag("--certify-unique", search.certify_unique, "enumerate every maximum family");
  search_cmd->add_option("--workers", search.workers, "search threads")->check(CLI::PositiveNumber);
  search_cmd->add_option("--budget", search.budget, "node budget (default: VCU_NODE_BUDGET or 200000000)");
  search_cmd->add_option("--witness-cap", search.witness_cap, "witness families kept");
  search_cmd->add_option("--seed", search.seed, "seed for the heuristic two-sided mode");

  FormulaArgs formula;
  auto* formula_cmd = app.add_subcommand("formula", "closed-form bounds");
  formula_cmd->add_option("which", formula.which, "sauer | katona | main | conjecture | n0")
      ->required()
      ->check(CLI::IsMember({"sauer", "katona", "main", "conjecture", "n0"}));
  formula_cmd->add_option("--n", formula.n, "ground-set size");
  formula_cmd->add_option("--k", formula.k, "number of factors");
  formula_cmd->add_option("--d", formula.d, "bound");

  VerifyArgs verify;
  std::vector<std::string> suites(vcu::verify::suite_names().begin(), vcu::verify::suite_names().end());
  auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
  verify_cmd->add_option("suite", verify.suite, "suite name")->required()->check(CLI::IsMember(suites));
  verify_cmd->add_option("--trials", verify.trials, "random trials");
  verify_cmd->add_option("--seed", verify.seed, "random seed (default 42)");
  verify_cmd->add_option("--max-n", verify.max_n, "largest ground set");
  verify_cmd->add_option("--workers", verify.workers, "search threads")->check(CLI::PositiveNumber);

  ConstructArgs construct;
  std::string construct_out;
  auto* construct_cmd = app.add_subcommand("construct", "build a named family");
  construct_cmd->add_option("which", construct.which, "ari | modd | lowsets | highsets | chain | cube2")
      ->required()
      ->check(CLI::IsMember({"ari", "modd", "lowsets", "highsets", "chain", "cube2"}));
  construct_cmd->add_option("--n", construct.n, "ground-set size")->required();
  construct_cmd->add_option("--d", construct.d);
  construct_cmd->add_option("--r", construct.r);
  construct_cmd->add_option("--i", construct.i);
  construct_cmd->add_option("-o,--out", construct_out, "write the family file here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kToolError;
  }

  CommandOutput out;
  if (*vc_cmd) {
    if (!vc_op.empty()) vc.op = vcu::parse_set_op(vc_op);
    out = cmd_vc(vc);
  } else if (*search_cmd) {
    out = cmd_search(search);
  } else if (*formula_cmd) {
    out = cmd_formula(formula);
  } else if (*verify_cmd) {
    out = cmd_verify(verify);
  } else {
    if (!construct_out.empty()) construct.out = construct_out;
    out = cmd_construct(construct);
  }
  std::cout << out.report.dump(2) << "\n";
  if (out.report.contains("error")) std::cerr << "vcu: " << out.report["error"]["message"].get<std::string>() << "\n";
  return out.exit_code;
}
