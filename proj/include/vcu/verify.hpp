#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vcu::verify {

struct PropertyResult {
  std::string name;
  std::string statement;
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  /// First failing instance, rendered in the family file format.
  std::optional<std::string> counterexample;
  std::vector<std::string> notes;

  bool passed() const { return violations == 0; }
};

struct SuiteReport {
  std::string suite;
  std::vector<PropertyResult> properties;

  bool passed() const;
};

struct SuiteConfig {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 42;
  int max_n = 0;  // 0: the suite's own default
  unsigned workers = 1;
};

/// lemma-compress, lemma-shift, lemma-witness, sauer, equivalence, katona,
/// conjecture, counterexample.
const std::vector<std::string_view>& suite_names();

/// The default ground-set limit a suite uses when SuiteConfig::max_n is 0.
int default_max_n(std::string_view suite);

/// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(std::string_view suite, const SuiteConfig& config);

}  // namespace vcu::verify
