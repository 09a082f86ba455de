#include "vcu/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

#include "vcu/construct.hpp"
#include "vcu/core.hpp"
#include "vcu/family_io.hpp"
#include "vcu/formula.hpp"
#include "vcu/normalize.hpp"
#include "vcu/search.hpp"

namespace vcu::verify {
namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

SubsetMask random_subset(Rng& rng, int n, double density) {
  std::bernoulli_distribution coin(density);
  SubsetMask s;
  for (int i = 0; i < n; ++i)
    if (coin(rng)) s.set(i);
  return s;
}

SetFamily random_family(Rng& rng, int n, int max_members) {
  const double density = std::uniform_real_distribution<double>(0.15, 0.85)(rng);
  const int m = uniform(rng, 1, max_members);
  std::vector<SubsetMask> members;
  for (int j = 0; j < m; ++j) members.push_back(random_subset(rng, n, density));
  return SetFamily(GroundSet(n), std::move(members));
}

SetFamily down_closure(const SetFamily& f) {
  std::set<SubsetMask> seen(f.begin(), f.end());
  std::vector<SubsetMask> stack(f.begin(), f.end());
  while (!stack.empty()) {
    SubsetMask s = stack.back();
    stack.pop_back();
    s.for_each([&](int e) {
      if (seen.insert(s.without(e)).second) stack.push_back(s.without(e));
    });
  }
  return SetFamily(f.ground(), std::vector<SubsetMask>(seen.begin(), seen.end()));
}

bool is_subfamily(const SetFamily& a, const SetFamily& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string render(const std::string& header, const std::vector<SetFamily>& families) {
  std::string out = "# " + header + "\n";
  for (std::size_t i = 0; i < families.size(); ++i) {
    if (families.size() > 1) out += "# family " + std::to_string(i + 1) + " of " + std::to_string(families.size()) + "\n";
    out += serialize_family(families[i]);
  }
  return out;
}

class Check {
 public:
  Check(std::string name, std::string statement) {
    result_.name = std::move(name);
    result_.statement = std::move(statement);
  }

  void trial(bool ok, const std::function<std::string()>& describe) {
    ++result_.trials;
    if (ok) return;
    ++result_.violations;
    if (!result_.counterexample) result_.counterexample = describe();
  }

  void note(std::string s) { result_.notes.push_back(std::move(s)); }

  PropertyResult done() { return std::move(result_); }

 private:
  PropertyResult result_;
};

std::string triple(int n, int k, int d) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " d=" + std::to_string(d);
}

// ---------------------------------------------------------------------------

SuiteReport lemma_compress(const SuiteConfig& cfg, int max_n) {
  Rng rng(cfg.seed);
  Check inclusion("shattering-inclusion",
                  "compressing every family at i can only shrink the shattered sets of their symmetric-difference "
                  "combination");
  Check vc("vc-monotone", "compression at i never raises the VC dimension of the symmetric-difference combination");
  Check fixpoint("compress-fixpoint", "compress keeps the size and returns a down-set");
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    const int n = uniform(rng, 1, max_n);
    const int k = uniform(rng, 1, 3);
    const int i = uniform(rng, 0, n - 1);
    std::vector<SetFamily> fams, compressed;
    for (int j = 0; j < k; ++j) {
      fams.push_back(random_family(rng, n, 6));
      compressed.push_back(compress_at(fams.back(), i));
    }
    const SetFamily before = shattered_collection(kfold_multi(fams, SetOp::SymmetricDifference));
    const SetFamily after = shattered_collection(kfold_multi(compressed, SetOp::SymmetricDifference));
    auto describe = [&] { return render("compress at element " + std::to_string(i + 1), fams); };
    inclusion.trial(is_subfamily(after, before), describe);
    vc.trial(vc_dimension(kfold_multi(compressed, SetOp::SymmetricDifference)) <=
                 vc_dimension(kfold_multi(fams, SetOp::SymmetricDifference)),
             describe);
    const SetFamily c = compress(fams.front());
    fixpoint.trial(c.size() == fams.front().size() && is_downward_closed(c),
                   [&] { return render("compress", {fams.front()}); });
  }

  Check strict("strict-inclusion", "for {empty, [n]} compression at 1 loses shattered sets (n >= 2)");
  for (int n = 2; n <= max_n; ++n) {
    const SetFamily a(GroundSet(n), {SubsetMask{}, SubsetMask::full(n)});
    const SetFamily sh_a = shattered_collection(a);
    const SetFamily sh_c = shattered_collection(compress_at(a, 0));
    strict.trial(is_subfamily(sh_c, sh_a) && sh_c.size() < sh_a.size(), [&] { return render("strictness", {a}); });
  }
  return {"lemma-compress", {inclusion.done(), vc.done(), fixpoint.done(), strict.done()}};
}

// A random compressed family whose k-wise unions stay within d: a random
// down-set with maximal members of largest size removed until it complies.
SetFamily random_kwise_downset(Rng& rng, int n, int k, int d) {
  std::vector<SubsetMask> seeds;
  const int m = uniform(rng, 1, 5);
  for (int j = 0; j < m; ++j) {
    SubsetMask s = random_subset(rng, n, 0.5);
    while (s.size() > d + 1) s.reset(s.elements()[static_cast<std::size_t>(uniform(rng, 0, s.size() - 1))]);
    seeds.push_back(s);
  }
  SetFamily f = down_closure(SetFamily(GroundSet(n), seeds));
  while (!is_kwise_union(f, k, d)) {
    int top = 0;
    for (SubsetMask s : f) top = std::max(top, s.size());
    std::vector<SubsetMask> largest, rest;
    for (SubsetMask s : f) (s.size() == top ? largest : rest).push_back(s);
    largest.erase(largest.begin() + uniform(rng, 0, static_cast<int>(largest.size()) - 1));
    rest.insert(rest.end(), largest.begin(), largest.end());
    f = SetFamily(f.ground(), std::move(rest));
  }
  return f;
}

SuiteReport lemma_shift(const SuiteConfig& cfg, int max_n) {
  Rng rng(cfg.seed);
  Check pres("shift-preserves-kwise-union",
             "an (i,j)-shift of a compressed k-wise union family is again compressed, k-wise union and equally large");
  Check fix("shift-fixpoint", "shift keeps the size and returns a shifted family");
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    const int n = uniform(rng, 2, std::max(2, max_n));
    const int k = uniform(rng, 1, 3);
    const int d = uniform(rng, 1, n - 1);
    const SetFamily f = random_kwise_downset(rng, n, k, d);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j) {
        const SetFamily g = shift_at(f, i, j);
        ok = g.size() == f.size() && is_downward_closed(g) && is_kwise_union(g, k, d);
      }
    pres.trial(ok, [&] { return render(triple(n, k, d), {f}); });
    const SetFamily s = shift(f);
    fix.trial(s.size() == f.size() && is_shifted(s), [&] { return render("shift", {f}); });
  }
  return {"lemma-shift", {pres.done(), fix.done()}};
}

SuiteReport lemma_witness(const SuiteConfig& cfg, int max_n) {
  Rng rng(cfg.seed);
  Check exists("union-witness",
               "if |B| >= s and |A| > 2^s binom_leq(n,u) then some member A has |A | B| >= s+u+1");
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    const int n = uniform(rng, 1, max_n);
    const int s = uniform(rng, 0, std::min(3, n - 1));
    int u = uniform(rng, 0, 2);
    // keep 2^s binom_leq(n,u) below 2^n so the precondition is satisfiable
    while (u > 0 && (BigInt(1) << s) * binom_leq(n, u) >= (BigInt(1) << n)) --u;
    const BigInt threshold = (BigInt(1) << s) * binom_leq(n, u);
    SubsetMask b = random_subset(rng, n, 0.5);
    while (b.size() < s) b.set(uniform(rng, 0, n - 1));
    // Adversarial half: every set whose union with B is small, then just
    // enough other sets to clear the threshold.
    const bool adversarial = uniform(rng, 0, 1) == 1;
    std::vector<SubsetMask> all;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) all.emplace_back(m, 0);
    std::shuffle(all.begin(), all.end(), rng);
    if (adversarial)
      std::stable_partition(all.begin(), all.end(), [&](SubsetMask x) { return (x | b).size() <= s + u; });
    const std::size_t need = static_cast<std::size_t>(threshold) + 1;
    const std::size_t extra = static_cast<std::size_t>(uniform(rng, 0, 3));
    all.resize(std::min(all.size(), need + extra));
    const SetFamily a(GroundSet(n), std::move(all));
    const UnionWitness w = find_union_witness(a, b, s, u);
    exists.trial(!w.preconditions_hold || (w.witness && ((*w.witness | b).size() >= s + u + 1)), [&] {
      return render("B=" + format_subset(b) + " s=" + std::to_string(s) + " u=" + std::to_string(u), {a});
    });
  }
  return {"lemma-witness", {exists.done()}};
}

SuiteReport sauer(const SuiteConfig& cfg, int max_n) {
  Rng rng(cfg.seed);
  Check bound("sauer-shelah", "a family with VC dimension d has at most binom_leq(n,d) members");
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    const int n = uniform(rng, 1, max_n);
    const SetFamily a = random_family(rng, n, std::min(200, 1 << n));
    const int d = vc_dimension(a);
    bound.trial(BigInt(a.size()) <= binom_leq(n, d), [&] { return render("vc=" + std::to_string(d), {a}); });
  }
  Check sharp("sauer-shelah-sharp", "lowsets(n,d) has VC dimension d and exactly binom_leq(n,d) members");
  for (int n = 1; n <= max_n; ++n)
    for (int d = 0; d <= n; ++d) {
      const SetFamily low = lowsets(n, d);
      sharp.trial(vc_dimension(low) == d && BigInt(low.size()) == binom_leq(n, d),
                  [&] { return render("lowsets", {low}); });
    }
  return {"sauer", {bound.done(), sharp.done()}};
}

SearchOptions search_options(const SuiteConfig& cfg) {
  SearchOptions o;
  o.workers = cfg.workers;
  return o;
}

SuiteReport equivalence(const SuiteConfig& cfg, int max_n) {
  Check eq("vc-delta-equals-kwise-union",
           "the largest family with VC(k-fold symmetric difference) <= d has exactly p(n,k,d) members");
  Check compressed("compressed-mode-agrees", "searching down-sets only gives the same value as exhaustion");
  Check dual("complement-duality", "m(n,k,n-d) = p(n,k,d)");
  const SearchOptions opt = search_options(cfg);
  for (int n = 2; n <= std::min(max_n, 4); ++n)
    for (int k = 2; k <= 3; ++k)
      for (int d = 1; d < n; ++d) {
        const auto p = max_kwise_union(n, k, d, opt);
        const auto pp = max_vc_delta(n, k, d, VcDeltaMode::Exhaustive, opt);
        const auto pc = max_vc_delta(n, k, d, VcDeltaMode::Compressed, opt);
        const auto m = max_kwise_intersecting(n, k, n - d, opt);
        auto describe = [&] { return render(triple(n, k, d), p.witnesses); };
        eq.trial(p.value == pp.value, describe);
        compressed.trial(pc.value == pp.value, describe);
        dual.trial(m.value == p.value, describe);
      }
  return {"equivalence", {eq.done(), compressed.done(), dual.done()}};
}

SuiteReport katona(const SuiteConfig& cfg, int max_n) {
  Check exact("katona-exact", "p(n,2,d) = 2^(d mod 2) binom_leq(n - d mod 2, floor(d/2))");
  Check formula("katona-conjecture-agree", "the conjectured maximum coincides with the k = 2 bound");
  const SearchOptions opt = search_options(cfg);
  for (int n = 2; n <= std::min(max_n, 7); ++n)
    for (int d = 1; d < n; ++d) {
      const auto p = max_kwise_union(n, 2, d, opt);
      exact.trial(BigInt(p.value) == katona_bound(n, d).value, [&] { return render(triple(n, 2, d), p.witnesses); });
    }
  for (int n = 2; n <= 30; ++n)
    for (int d = 1; d < n; ++d)
      formula.trial(conjecture_value(n, 2, d).value == katona_bound(n, d).value,
                    [&] { return "# " + triple(n, 2, d) + "\n"; });
  return {"katona", {exact.done(), formula.done()}};
}

SuiteReport conjecture(const SuiteConfig& cfg, int max_n) {
  Check conj("conjecture-desk-grid", "p(n,k,d) equals max_i 2^(d-ki) binom_leq(n-d+ki, i)");
  Check unique("large-n-uniqueness",
               "for n >= n0_estimate(d,k) every maximum family is a relabelling of family_a_ri(n, d mod k, d/k)");
  const SearchOptions opt = search_options(cfg);
  for (int k = 2; k <= 3; ++k)
    for (int n = 2; n <= std::min(max_n, k == 3 ? 6 : 7); ++n)
      for (int d = 1; d <= std::min(4, n - 1); ++d) {
        const auto p = max_kwise_union(n, k, d, opt);
        const BoundReport c = conjecture_value(n, k, d);
        conj.trial(BigInt(p.value) == c.value, [&] { return render(triple(n, k, d), p.witnesses); });
        const BigInt single = c.term("i=" + std::to_string(d / k));
        if (BigInt(p.value) != single)
          conj.note(triple(n, k, d) + ": p=" + std::to_string(p.value) + " exceeds the i=floor(d/k) candidate " +
                    single.str());
        if (n >= n0_estimate(d, k)) {
          SearchOptions certify = opt;
          certify.certify_uniqueness = true;
          const auto u = max_kwise_union(n, k, d, certify);
          const SetFamily target = family_a_ri(n, d % k, d / k);
          const bool ok = u.unique_up_to_relabelling.value_or(false) && u.witnesses.size() == 1 &&
                          relabelling_isomorphic(u.witnesses.front(), target);
          unique.trial(ok, [&] { return render(triple(n, k, d), u.witnesses); });
        }
      }
  return {"conjecture", {conj.done(), unique.done()}};
}

SuiteReport counterexample(const SuiteConfig&, int max_n) {
  Check size("mod-d-size", "|mod_d_family(n,d)| = prod_k (floor((n-k)/d) + 2) > (n/d)^d");
  Check closed("mod-d-closed", "mod_d_family is its own pairwise union and pairwise intersection family");
  Check vc("mod-d-vc", "mod_d_family(n,d) has VC dimension d (n <= 10)");
  Check code("mod-d-code", "decode(encode(S)) = S on the whole family");
  Check chain("chain", "complete_chain(n) = mod_d_family(n,1) and its pairwise intersections have VC dimension 1");
  Check cube_check("cube-minus-two",
             "2^[n] without [1] and [n]: pairwise cap gives 2^[n] \\ {[n]}, cup gives 2^[n] \\ {[1]}, both VC n-1");
  Check two("two-sided-small-n", "the largest family with both pairwise VC values <= n-1 at n = 4 has 2^n - 2 members");
  for (int d = 1; d <= 4; ++d)
    for (int n = d + 1; n <= max_n; ++n) {
      const SetFamily f = mod_d_family(n, d);
      BigInt product = 1;
      for (int k = 1; k <= d; ++k) product *= (n - k) / d + 2;
      BigInt lhs = BigInt(f.size()), dd = 1, nn = 1;
      for (int j = 0; j < d; ++j) {
        dd *= d;
        nn *= n;
      }
      auto describe = [&] { return render("n=" + std::to_string(n) + " d=" + std::to_string(d), {f}); };
      size.trial(lhs == product && lhs * dd > nn, describe);
      closed.trial(kfold(f, SetOp::Union, 2) == f && kfold(f, SetOp::Intersection, 2) == f, describe);
      if (n <= 10) vc.trial(vc_dimension(f) == d, describe);
      bool round_trip = true;
      for (SubsetMask s : f) round_trip = round_trip && mod_d_decode(mod_d_encode(s, n, d), n, d) == s;
      code.trial(round_trip, describe);
    }
  for (int n = 1; n <= max_n; ++n) {
    const SetFamily c = complete_chain(n);
    chain.trial(c == mod_d_family(n, 1) && vc_dimension(kfold(c, SetOp::Intersection, 2)) == 1,
                [&] { return render("chain", {c}); });
  }
  for (int n = 4; n <= std::min(max_n, 5); ++n) {
    const SetFamily a = cube_minus_two(n);
    const SetFamily cube = full_cube(n);
    std::vector<SubsetMask> no_top, no_first;
    for (SubsetMask s : cube) {
      if (s != SubsetMask::full(n)) no_top.push_back(s);
      if (s != SubsetMask::full(1)) no_first.push_back(s);
    }
    const SetFamily cap = kfold(a, SetOp::Intersection, 2), cup = kfold(a, SetOp::Union, 2);
    cube_check.trial(cap == SetFamily(GroundSet(n), no_top) && cup == SetFamily(GroundSet(n), no_first) &&
                   vc_dimension(cap) == n - 1 && vc_dimension(cup) == n - 1,
               [&] { return render("cube minus two", {a}); });
  }
  if (max_n >= 4) {
    const auto r = max_two_sided_vc(4, 3);
    two.trial(r.exact && r.value == 14, [&] { return render("n=4 d=3", r.witnesses); });
  }
  return {"counterexample", {size.done(), closed.done(), vc.done(), code.done(), chain.done(), cube_check.done(), two.done()}};
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed(); });
}

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names = {"lemma-compress", "lemma-shift", "lemma-witness", "sauer",
                                                      "equivalence",    "katona",      "conjecture",    "counterexample"};
  return names;
}

int default_max_n(std::string_view suite) {
  if (suite == "lemma-compress" || suite == "lemma-shift") return 8;
  if (suite == "lemma-witness" || suite == "sauer") return 10;
  if (suite == "equivalence") return 4;
  if (suite == "katona") return 6;
  if (suite == "conjecture") return 7;
  if (suite == "counterexample") return 20;
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

SuiteReport run_suite(std::string_view suite, const SuiteConfig& config) {
  const int max_n = config.max_n > 0 ? config.max_n : default_max_n(suite);
  if (suite == "lemma-compress") return lemma_compress(config, max_n);
  if (suite == "lemma-shift") return lemma_shift(config, max_n);
  if (suite == "lemma-witness") return lemma_witness(config, max_n);
  if (suite == "sauer") return sauer(config, max_n);
  if (suite == "equivalence") return equivalence(config, max_n);
  if (suite == "katona") return katona(config, max_n);
  if (suite == "conjecture") return conjecture(config, max_n);
  if (suite == "counterexample") return counterexample(config, max_n);
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

}  // namespace vcu::verify
