#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "vcu/family.hpp"

namespace vcu {

/// Thrown when a search would exceed its node budget or feasible scale.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Node budget used when SearchOptions leaves it unset: 200M, or the value
/// of the VCU_NODE_BUDGET environment variable.
std::uint64_t default_node_budget();

struct SearchOptions {
  /// Restrict the down-set search to shifted down-sets.
  bool shifted_only = true;
  /// Enumerate every maximum family (no shifted restriction) and decide
  /// whether they are all relabellings of one another.
  bool certify_uniqueness = false;
  std::size_t witness_cap = 16;
  std::uint64_t node_budget = 0;  // 0: default_node_budget()
  unsigned workers = 1;
  /// Randomised restarts for the heuristic two-sided mode.
  std::uint64_t seed = 42;
  int restarts = 8;
};

struct SearchResult {
  std::int64_t value = 0;
  /// Pairwise non-isomorphic maximum families, at most witness_cap of them.
  std::vector<SetFamily> witnesses;
  /// Number of labelled maximum families met during the search.
  std::uint64_t maxima_found = 0;
  bool witness_cap_hit = false;
  /// Set when the search enumerated every maximum family.
  std::optional<bool> unique_up_to_relabelling;
  /// False when `value` is only a lower bound (heuristic mode).
  bool exact = true;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// p(n,k,d): the largest family whose k-wise unions have at most d elements.
/// Branch and bound over down-sets; n <= 7.
SearchResult max_kwise_union(int n, int k, int d, const SearchOptions& options = {});

/// m(n,k,t): the largest family whose k-wise intersections have at least t
/// elements, obtained through the complement transform.
SearchResult max_kwise_intersecting(int n, int k, int t, const SearchOptions& options = {});

enum class VcDeltaMode {
  Exhaustive,  // every family of subsets of [n]; n <= 4
  Compressed,  // down-sets only; n <= 6
};

/// p'(n,k,d): the largest family F with VC(k-fold symmetric difference of F) <= d.
SearchResult max_vc_delta(int n, int k, int d, VcDeltaMode mode, const SearchOptions& options = {});

/// Largest family with both VC(F cap F) <= d and VC(F cup F) <= d.
/// Exact by exhaustion for n <= 4; a seeded greedy lower bound for 5 <= n <= 10.
SearchResult max_two_sided_vc(int n, int d, const SearchOptions& options = {});

struct UnionWitness {
  bool preconditions_hold = false;  // |B| >= s and |A| > 2^s * binom_leq(n,u)
  std::optional<SubsetMask> witness;  // a member with |A | B| >= s+u+1
  int best_union = -1;                // max |A | B| over members
};

UnionWitness find_union_witness(const SetFamily& a, SubsetMask b, int s, int u);

/// True iff a permutation of [n] maps `a` onto `b`. n <= 8.
bool relabelling_isomorphic(const SetFamily& a, const SetFamily& b);

}  // namespace vcu
