// Acceptance run: one PASS/FAIL line per criterion.
// Exit status: 0 all pass, 3 when a conjectured value is contradicted by
// search, 1 for any other failure.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "vcu/commands.hpp"
#include "vcu/construct.hpp"
#include "vcu/core.hpp"
#include "vcu/formula.hpp"
#include "vcu/search.hpp"
#include "vcu/verify.hpp"

using namespace vcu;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  bool claim_violated = false;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;  // 0: no time limit
  std::function<Outcome()> run;
};

// Small exact helpers kept apart from the formula module.
std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return c;
}

std::uint64_t choose_leq(int n, int t) {
  std::uint64_t s = 0;
  for (int i = 0; i <= t; ++i) s += choose(n, i);
  return s;
}

std::string triple(int n, int k, int d) {
  return "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",d=" + std::to_string(d) + ")";
}

Outcome vc_delta_equals_kwise_union() {
  Outcome o;
  int cases = 0;
  for (int n = 2; n <= 4; ++n)
    for (int k = 2; k <= 3; ++k)
      for (int d = 1; d < n; ++d) {
        const auto a = max_vc_delta(n, k, d, VcDeltaMode::Exhaustive).value;
        const auto b = max_kwise_union(n, k, d).value;
        ++cases;
        if (a != b) o.fail(triple(n, k, d) + ": exhaustive " + std::to_string(a) + " vs union search " + std::to_string(b));
      }
  if (o.pass) o.detail = std::to_string(cases) + " triples equal";
  return o;
}

Outcome pairwise_union_closed_form() {
  Outcome o;
  int cases = 0;
  for (int n = 2; n <= 6; ++n)
    for (int d = 1; d < n; ++d) {
      const int r = d % 2;
      const auto expect = static_cast<std::int64_t>((std::uint64_t{1} << r) * choose_leq(n - r, d / 2));
      const auto got = max_kwise_union(n, 2, d).value;
      ++cases;
      if (got != expect) o.fail(triple(n, 2, d) + ": " + std::to_string(got) + " != " + std::to_string(expect));
    }
  if (o.pass) o.detail = std::to_string(cases) + " pairs (n,d) exact";
  return o;
}

Outcome conjecture_grid() {
  Outcome o;
  int cases = 0;
  for (int k = 2; k <= 3; ++k)
    for (int n = 2; n <= (k == 2 ? 7 : 6); ++n)
      for (int d = 1; d <= 4 && d < n; ++d) {
        // the conjectured maximum, evaluated independently of the formula module
        std::uint64_t conj = 0;
        for (int i = 0; i <= d / k; ++i)
          conj = std::max(conj, (std::uint64_t{1} << (d - k * i)) * choose_leq(n - d + k * i, i));
        const auto got = max_kwise_union(n, k, d).value;
        ++cases;
        if (BigInt(conj) != conjecture_value(n, k, d).value) o.fail(triple(n, k, d) + ": formula module disagrees");
        if (static_cast<std::uint64_t>(got) != conj) {
          o.claim_violated = true;
          o.fail(triple(n, k, d) + ": search " + std::to_string(got) + " != conjectured " + std::to_string(conj));
        }
      }
  if (o.pass) o.detail = std::to_string(cases) + " triples match";
  return o;
}

Outcome large_n_uniqueness() {
  Outcome o;
  int checked = 0, skipped = 0;
  SearchOptions opt;
  opt.certify_uniqueness = true;
  opt.node_budget = 50'000'000;
  for (int k = 2; k <= 3; ++k)
    for (int n = 2; n <= (k == 2 ? 7 : 6); ++n)
      for (int d = 1; d < n; ++d) {
        if (n < n0_estimate(d, k)) continue;
        SearchResult r;
        try {
          r = max_kwise_union(n, k, d, opt);
        } catch (const BudgetExceeded&) {
          ++skipped;
          continue;
        }
        ++checked;
        const auto target = family_a_ri(n, d % k, d / k);
        if (!r.unique_up_to_relabelling || !*r.unique_up_to_relabelling)
          o.fail(triple(n, k, d) + ": maximum not unique up to relabelling");
        if (r.value != static_cast<std::int64_t>(target.size()))
          o.fail(triple(n, k, d) + ": value " + std::to_string(r.value) + " != |A_{r,i}| " + std::to_string(target.size()));
        for (const auto& w : r.witnesses)
          if (!relabelling_isomorphic(w, target)) o.fail(triple(n, k, d) + ": witness is not a relabelled A_{r,i}");
      }
  if (checked == 0) o.fail("no triple reached the threshold");
  if (o.pass) o.detail = std::to_string(checked) + " triples unique, " + std::to_string(skipped) + " over budget";
  return o;
}

Outcome two_sided() {
  Outcome o;
  const auto r = max_two_sided_vc(4, 3);
  if (!r.exact) o.fail("(4,3) not computed exhaustively");
  if (r.value != 14) o.fail("(4,3) gave " + std::to_string(r.value) + ", expected 14");
  for (const auto& w : r.witnesses)
    if (vc_dimension(kfold(w, SetOp::Intersection, 2)) > 3 || vc_dimension(kfold(w, SetOp::Union, 2)) > 3)
      o.fail("(4,3) witness violates the VC bound");
  for (int n = 1; n <= 4; ++n) {
    const auto c = max_two_sided_vc(n, 1);
    if (c.value != n + 1) o.fail("(" + std::to_string(n) + ",1) gave " + std::to_string(c.value));
    if (!c.unique_up_to_relabelling || !*c.unique_up_to_relabelling)
      o.fail("(" + std::to_string(n) + ",1) maximum not unique up to relabelling");
    for (const auto& w : c.witnesses)
      if (!relabelling_isomorphic(w, complete_chain(n))) o.fail("(" + std::to_string(n) + ",1) witness is not a chain");
  }
  if (o.pass) o.detail = "(4,3) = 14; d = 1 maxima are chains of size n+1";
  return o;
}

Outcome mod_d_family_checks() {
  Outcome o;
  int cases = 0;
  for (int d = 1; d <= 4; ++d)
    for (int n = d + 1; n <= 20; ++n) {
      const auto f = mod_d_family(n, d);
      std::uint64_t expect = 1;
      for (int k = 1; k <= d; ++k) expect *= static_cast<std::uint64_t>((n - k) / d + 2);
      const std::string at = "(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")";
      if (f.size() != expect) o.fail(at + ": size " + std::to_string(f.size()) + " != " + std::to_string(expect));
      // |A| > (n/d)^d, i.e. |A| d^d > n^d
      if (!(BigInt(f.size()) * pow(BigInt(d), static_cast<unsigned>(d)) > pow(BigInt(n), static_cast<unsigned>(d))))
        o.fail(at + ": size not above (n/d)^d");
      if (!(kfold(f, SetOp::Union, 2) == f)) o.fail(at + ": not closed under union");
      if (!(kfold(f, SetOp::Intersection, 2) == f)) o.fail(at + ": not closed under intersection");
      if (n <= 10 && vc_dimension(f) != d) o.fail(at + ": VC dimension differs from d");
      ++cases;
    }
  if (o.pass) o.detail = std::to_string(cases) + " (n,d) pairs";
  return o;
}

Outcome lemma_fuzz() {
  Outcome o;
  std::uint64_t trials = 0;
  for (const char* suite : {"lemma-compress", "lemma-shift", "lemma-witness", "sauer"}) {
    verify::SuiteConfig cfg;
    cfg.trials = 1000;
    cfg.seed = 42;
    cfg.max_n = 8;
    const auto rep = verify::run_suite(suite, cfg);
    for (const auto& p : rep.properties) {
      trials += p.trials;
      if (p.trials == 0) o.fail(std::string(suite) + "/" + p.name + ": no trials ran");
      if (!p.passed())
        o.fail(std::string(suite) + "/" + p.name + ": " + std::to_string(p.violations) + " violations");
    }
  }
  if (o.pass) o.detail = std::to_string(trials) + " trials, zero violations";
  return o;
}

Outcome formula_cross_checks() {
  Outcome o;
  for (int n = 2; n <= 30; ++n)
    for (int d = 1; d < n; ++d) {
      if (conjecture_value(n, 2, d).value != katona_bound(n, d).value)
        o.fail("conjecture vs katona at (n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")");
      if (main_bound(n, 1, d).value != binom_leq(n, d))
        o.fail("main bound with k=1 at (n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")");
      if (binom_leq(n, d) != BigInt(choose_leq(n, d))) o.fail("binom_leq at (" + std::to_string(n) + "," + std::to_string(d) + ")");
    }
  const auto n0 = n0_estimate(2, 2);
  if (n0 != 4) o.fail("n0_estimate(2,2) = " + std::to_string(n0));
  if (o.pass) o.detail = "d < n <= 30 exact; n0(2,2) = 4";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "vc-delta-equals-kwise-union", 600, vc_delta_equals_kwise_union},
      {2, "pairwise-union-closed-form", 600, pairwise_union_closed_form},
      {3, "conjectured-value-grid", 0, conjecture_grid},
      {4, "large-n-uniqueness", 0, large_n_uniqueness},
      {5, "two-sided-vc", 300, two_sided},
      {6, "mod-d-family", 120, mod_d_family_checks},
      {7, "lemma-fuzz-suites", 600, lemma_fuzz},
      {8, "formula-cross-checks", 0, formula_cross_checks},
  };

  bool all = true;
  bool claim = false;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_s > 0 && secs > c.limit_s) o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s");
    std::printf("[%s] %d %-30s %8.2fs  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
    all = all && o.pass;
    claim = claim || o.claim_violated;
  }
  if (claim) return cli::kClaimViolated;
  return all ? 0 : 1;
}
