#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "vcu/family.hpp"

namespace vcu::cli {

inline constexpr const char* kSchema = "vcu.run-report/1";

enum ExitCode : int {
  kOk = 0,
  kToolError = 1,
  kBudgetExceeded = 2,
  kClaimViolated = 3,
};

struct CommandOutput {
  nlohmann::ordered_json report;
  int exit_code = kOk;
};

struct VcArgs {
  std::filesystem::path input;
  std::optional<SetOp> op;
  int k = 1;
};

struct SearchArgs {
  std::string kind;  // p, pprime, m, two-sided
  int n = 0;
  int k = 2;
  std::optional<int> d;
  std::optional<int> t;
  std::string mode = "compressed";  // pprime only: exhaustive | compressed
  bool no_shift_restriction = false;
  bool certify_unique = false;
  unsigned workers = 1;
  std::uint64_t budget = 0;
  std::size_t witness_cap = 16;
  std::uint64_t seed = 42;
};

struct FormulaArgs {
  std::string which;  // sauer, katona, main, conjecture, n0
  std::optional<int> n;
  int k = 1;
  std::optional<int> d;
};

struct VerifyArgs {
  std::string suite;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 42;
  int max_n = 0;
  unsigned workers = 1;
};

struct ConstructArgs {
  std::string which;  // ari, modd, lowsets, highsets, chain, cube2
  int n = 0;
  int d = 0;
  int r = 0;
  int i = 0;
  std::optional<std::filesystem::path> out;
};

/// Members in family-file line syntax ("-" or "1,3"), in file order.
nlohmann::ordered_json family_to_json(const SetFamily& f);

// Each command returns its report; failures become a report with an "error"
// entry and a nonzero exit code instead of an exception.
CommandOutput cmd_vc(const VcArgs& args);
CommandOutput cmd_search(const SearchArgs& args);
CommandOutput cmd_formula(const FormulaArgs& args);
CommandOutput cmd_verify(const VerifyArgs& args);
CommandOutput cmd_construct(const ConstructArgs& args);

}  // namespace vcu::cli
