#include "vcu/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <string>

#include "search_engine.hpp"
#include "vcu/construct.hpp"
#include "vcu/core.hpp"
#include "vcu/detail/small_family.hpp"
#include "vcu/formula.hpp"
#include "vcu/normalize.hpp"

namespace vcu {

std::uint64_t default_node_budget() {
  if (const char* env = std::getenv("VCU_NODE_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("VCU_NODE_BUDGET is not a non-negative integer");
    }
  }
  return 200'000'000ULL;
}

namespace internal {

SetFamily to_family(int n, const Bits128& bits) {
  std::vector<SubsetMask> members;
  bits.for_each([&](int s) { members.emplace_back(static_cast<std::uint64_t>(s), 0); });
  return SetFamily(GroundSet(n), std::move(members));
}

void WitnessPool::offer(std::int64_t value, const SetFamily& f) {
  std::lock_guard lock(mu_);
  if (value < best_) return;
  if (value > best_) {
    best_ = value;
    reps_.clear();
    count_ = 0;
    cap_hit_ = false;
  }
  ++count_;
  for (const SetFamily& r : reps_)
    if (relabelling_isomorphic(r, f)) return;
  if (reps_.size() < cap_)
    reps_.push_back(f);
  else
    cap_hit_ = true;
}

void WitnessPool::fill(SearchResult& out) const {
  std::lock_guard lock(mu_);
  out.value = std::max<std::int64_t>(best_, 0);
  out.witnesses = reps_;
  out.maxima_found = count_;
  out.witness_cap_hit = cap_hit_;
}

std::vector<int> candidate_order(int n, int max_size) {
  std::vector<int> order;
  for (int s = 0; s < (1 << n); ++s)
    if (std::popcount(static_cast<unsigned>(s)) <= max_size) order.push_back(s);
  auto key = [](int s) {
    int sum = 0;
    for (int x = 0; x < 8; ++x)
      if ((s >> x) & 1) sum += x + 1;
    return std::tuple(std::popcount(static_cast<unsigned>(s)), sum, s);
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });
  return order;
}

}  // namespace internal

namespace {

using internal::Bits128;
using internal::DownsetEngine;
using internal::WitnessPool;
using Clock = std::chrono::steady_clock;

constexpr int kMaxSearchK = 8;

std::uint64_t budget_of(const SearchOptions& o) { return o.node_budget == 0 ? default_node_budget() : o.node_budget; }

// k-fold unions stay within d: tracks U_j, the set of j-fold unions, for j < k.
// A live candidate T is addable exactly when |T | u| <= d for every u in U_{k-1};
// every other candidate is killed as soon as it conflicts.
struct UnionPolicy {
  struct State {
    std::array<Bits128, kMaxSearchK> unions{};
  };

  int k;
  std::vector<Bits128> conflict;  // conflict[u]: candidates T with |T | u| > d

  UnionPolicy(int n, int k_, int d) : k(k_), conflict(static_cast<std::size_t>(1) << n) {
    for (int u = 0; u < (1 << n); ++u)
      for (int t = 0; t < (1 << n); ++t)
        if (std::popcount(static_cast<unsigned>(t)) <= d && std::popcount(static_cast<unsigned>(t | u)) > d)
          conflict[u].set(t);
  }

  bool try_add(const Bits128&, State& st, Bits128& dead, int t) const {
    for (int j = k - 1; j >= 1; --j) {
      Bits128 add;
      add.set(t);
      if (j >= 2) st.unions[j - 1].for_each([&](int x) { add.set(x | t); });
      if (j == k - 1) (add & ~st.unions[j]).for_each([&](int x) { dead |= conflict[x]; });
      st.unions[j] |= add;
    }
    return true;
  }
};

// VC dimension of the k-fold symmetric-difference power stays within d.
struct VcDeltaPolicy {
  struct State {};
  int n, k, d;

  bool try_add(const Bits128& family, State&, Bits128&, int t) const {
    const detail::SmallFamily f = family.w[0] | (std::uint64_t{1} << t);
    return detail::vc_dimension(detail::kfold_sym(f, k, n), n) <= d;
  }
};

void finish(SearchResult& r, Clock::time_point start) {
  r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

template <class Policy>
std::uint64_t run_engine(DownsetEngine<Policy>& engine, unsigned workers) {
  if (!engine.run({}, workers))
    throw BudgetExceeded("node budget exhausted after " + std::to_string(engine.nodes()) + " nodes");
  return engine.nodes();
}

// Every nonempty family of subsets of [n] (n <= 4); families smaller than the
// incumbent are skipped.
template <class Pred>
SearchResult exhaustive(int n, const SearchOptions& options, Pred&& pred) {
  if (n > 4) throw BudgetExceeded("exhaustive family enumeration is limited to n <= 4");
  const std::uint64_t families = std::uint64_t{1} << (1 << n);
  if (families > budget_of(options)) throw BudgetExceeded("exhaustive enumeration exceeds the node budget");
  WitnessPool pool(options.witness_cap);
  SearchResult r;
  for (std::uint64_t fam = 1; fam < families; ++fam) {
    if (std::popcount(fam) < pool.best()) continue;
    std::vector<SubsetMask> members;
    for (std::uint64_t x = fam; x != 0; x &= x - 1) members.emplace_back(std::countr_zero(x), 0);
    SetFamily f(GroundSet(n), std::move(members));
    ++r.nodes_explored;
    if (pred(f)) pool.offer(static_cast<std::int64_t>(f.size()), f);
  }
  pool.fill(r);
  r.unique_up_to_relabelling = r.witnesses.size() == 1;
  return r;
}

}  // namespace

SearchResult max_kwise_union(int n, int k, int d, const SearchOptions& options) {
  require(k >= 1 && k <= kMaxSearchK, "max_kwise_union needs 1 <= k <= 8");
  require(n >= 1 && 0 < d && d < n, "max_kwise_union needs 0 < d < n");
  if (n > 7) throw BudgetExceeded("max_kwise_union is limited to n <= 7");
  const auto start = Clock::now();
  const std::uint64_t budget = budget_of(options);

  SearchResult r;
  std::uint64_t nodes = 0;
  std::int64_t incumbent = -1;
  const bool unrestricted = !options.shifted_only || options.certify_uniqueness;
  if (options.shifted_only) {
    WitnessPool pool(options.witness_cap);
    DownsetEngine<UnionPolicy> engine(n, d, true, UnionPolicy(n, k, d), budget, pool);
    nodes += run_engine(engine, options.workers);
    pool.fill(r);
    incumbent = r.value;
  }
  if (unrestricted) {
    WitnessPool pool(options.witness_cap);
    DownsetEngine<UnionPolicy> engine(n, d, false, UnionPolicy(n, k, d), budget - std::min(budget, nodes), pool);
    engine.set_incumbent(incumbent);
    nodes += run_engine(engine, options.workers);
    const std::int64_t shifted_value = r.value;
    r = SearchResult{};
    pool.fill(r);
    if (options.shifted_only && r.value != shifted_value)
      throw std::logic_error("shifted and unrestricted searches disagree");
    // Every maximum family is a down-set, so all of them were enumerated.
    r.unique_up_to_relabelling = r.witnesses.size() == 1;
  }
  r.nodes_explored = nodes;

  for (const SetFamily& w : r.witnesses) {
    const bool ok = static_cast<std::int64_t>(w.size()) == r.value && is_kwise_union(w, k, d) &&
                    is_downward_closed(w) && (unrestricted || is_shifted(w));
    if (!ok) throw std::logic_error("max_kwise_union produced an invalid witness");
  }
  finish(r, start);
  return r;
}

SearchResult max_kwise_intersecting(int n, int k, int t, const SearchOptions& options) {
  require(0 < t && t < n, "max_kwise_intersecting needs 0 < t < n");
  SearchResult r = max_kwise_union(n, k, n - t, options);
  for (SetFamily& w : r.witnesses) {
    w = complement_family(w);
    if (!is_kwise_intersecting(w, k, t)) throw std::logic_error("complemented witness is not k-wise t-intersecting");
  }
  return r;
}

SearchResult max_vc_delta(int n, int k, int d, VcDeltaMode mode, const SearchOptions& options) {
  require(k >= 1 && n >= 1 && d >= 0, "max_vc_delta needs k >= 1, n >= 1, d >= 0");
  const auto start = Clock::now();
  SearchResult r;
  if (mode == VcDeltaMode::Exhaustive) {
    r = exhaustive(n, options, [&](const SetFamily& f) {
      return vc_dimension(kfold(f, SetOp::SymmetricDifference, k)) <= d;
    });
  } else {
    if (n > 6) throw BudgetExceeded("compressed mode is limited to n <= 6");
    // A nonempty down-set F lies inside its k-fold symmetric-difference power
    // (pad with the empty set) and shatters each of its members, so members
    // have at most d elements.
    WitnessPool pool(options.witness_cap);
    DownsetEngine<VcDeltaPolicy> engine(n, std::min(d, n), false, VcDeltaPolicy{n, k, d}, budget_of(options), pool);
    r.nodes_explored = run_engine(engine, options.workers);
    pool.fill(r);
  }
  for (const SetFamily& w : r.witnesses)
    if (vc_dimension(kfold(w, SetOp::SymmetricDifference, k)) > d)
      throw std::logic_error("max_vc_delta produced an invalid witness");
  finish(r, start);
  return r;
}

namespace {

bool two_sided_ok(const SetFamily& f, int d) {
  if (f.empty()) return true;
  return vc_dimension(kfold(f, SetOp::Intersection, 2)) <= d && vc_dimension(kfold(f, SetOp::Union, 2)) <= d;
}

}  // namespace

SearchResult max_two_sided_vc(int n, int d, const SearchOptions& options) {
  require(n >= 1 && d >= 0, "max_two_sided_vc needs n >= 1 and d >= 0");
  const auto start = Clock::now();
  if (n <= 4) {
    SearchResult r = exhaustive(n, options, [&](const SetFamily& f) { return two_sided_ok(f, d); });
    finish(r, start);
    return r;
  }
  require(d >= 1 && d < n, "heuristic two-sided mode needs 1 <= d < n");
  if (n > 10) throw BudgetExceeded("heuristic two-sided mode is limited to n <= 10");

  SearchResult r;
  r.exact = false;
  const SetFamily seed_family = mod_d_family(n, d);
  std::vector<SubsetMask> order;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) order.emplace_back(m, 0);
  std::mt19937_64 rng(options.seed);
  std::optional<SetFamily> best;
  const std::uint64_t budget = budget_of(options);
  for (int restart = 0; restart <= options.restarts; ++restart) {
    if (restart > 0) std::shuffle(order.begin(), order.end(), rng);
    std::vector<SubsetMask> members(seed_family.begin(), seed_family.end());
    for (SubsetMask s : order) {
      if (std::binary_search(seed_family.begin(), seed_family.end(), s)) continue;
      if (std::find(members.begin(), members.end(), s) != members.end()) continue;
      if (++r.nodes_explored > budget) throw BudgetExceeded("two-sided heuristic exhausted the node budget");
      members.push_back(s);
      if (!two_sided_ok(SetFamily(GroundSet(n), members), d)) members.pop_back();
    }
    SetFamily found(GroundSet(n), std::move(members));
    if (!best || found.size() > best->size()) best = std::move(found);
  }
  r.value = static_cast<std::int64_t>(best->size());
  r.witnesses.push_back(*best);
  r.maxima_found = 1;
  finish(r, start);
  return r;
}

UnionWitness find_union_witness(const SetFamily& a, SubsetMask b, int s, int u) {
  require_respects(a.ground(), b);
  UnionWitness out;
  out.preconditions_hold = s >= 0 && u >= 0 && b.size() >= s &&
                           BigInt(a.size()) > (BigInt(1) << s) * binom_leq(a.n(), u);
  std::optional<SubsetMask> best;
  for (SubsetMask m : a) {
    const int sz = (m | b).size();
    if (sz > out.best_union) {
      out.best_union = sz;
      best = m;
    }
  }
  if (best && out.best_union >= s + u + 1) out.witness = best;
  return out;
}

}  // namespace vcu
