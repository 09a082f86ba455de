#include "vcu/commands.hpp"

#include <chrono>

#include "vcu/construct.hpp"
#include "vcu/core.hpp"
#include "vcu/family_io.hpp"
#include "vcu/formula.hpp"
#include "vcu/search.hpp"
#include "vcu/verify.hpp"

namespace vcu::cli {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

Json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Json skeleton(const std::string& command) {
  Json r;
  r["schema"] = kSchema;
  r["command"] = command;
  return r;
}

// Fills the report's timing field and maps exceptions to exit codes.
template <class Fn>
CommandOutput guarded(const std::string& command, Fn&& fn) {
  const auto start = Clock::now();
  CommandOutput out{skeleton(command), kOk};
  try {
    fn(out);
  } catch (const BudgetExceeded& e) {
    out.report["error"] = {{"kind", "budget"}, {"message", e.what()}};
    out.exit_code = kBudgetExceeded;
  } catch (const ParseError& e) {
    out.report["error"] = {{"kind", "parse"}, {"line", e.line()}, {"message", e.what()}};
    out.exit_code = kToolError;
  } catch (const std::exception& e) {
    out.report["error"] = {{"kind", "tool"}, {"message", e.what()}};
    out.exit_code = kToolError;
  }
  out.report["wall_time_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return out;
}

Json search_json(const SearchResult& r) {
  Json j;
  j["value"] = r.value;
  j["exact"] = r.exact;
  Json ws = Json::array();
  for (const SetFamily& w : r.witnesses) ws.push_back(family_to_json(w));
  j["witnesses"] = ws;
  j["maxima_found"] = r.maxima_found;
  j["witness_cap_hit"] = r.witness_cap_hit;
  j["unique_up_to_relabelling"] = r.unique_up_to_relabelling ? Json(*r.unique_up_to_relabelling) : Json(nullptr);
  return j;
}

Json bound_json(const BoundReport& b) {
  Json j;
  j["formula"] = to_string(b.formula);
  j["value"] = big(b.value);
  Json terms = Json::object();
  for (const auto& t : b.terms) terms[t.label] = big(t.value);
  j["terms"] = terms;
  return j;
}

int require_param(const std::optional<int>& v, const char* name) {
  if (!v) throw std::invalid_argument(std::string("missing --") + name);
  return *v;
}

SearchOptions options_of(const SearchArgs& a) {
  SearchOptions o;
  o.shifted_only = !a.no_shift_restriction;
  o.certify_uniqueness = a.certify_unique;
  o.workers = a.workers;
  o.node_budget = a.budget;
  o.witness_cap = a.witness_cap;
  o.seed = a.seed;
  return o;
}

void claim(CommandOutput& out, const std::string& what) {
  out.report["claims_violated"].push_back(what);
  out.exit_code = kClaimViolated;
}

}  // namespace

Json family_to_json(const SetFamily& f) {
  Json sets = Json::array();
  std::vector<SubsetMask> ordered(f.begin(), f.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](SubsetMask a, SubsetMask b) { return a.size() < b.size(); });
  for (SubsetMask s : ordered) sets.push_back(format_subset(s));
  return sets;
}

CommandOutput cmd_vc(const VcArgs& args) {
  return guarded("vc", [&](CommandOutput& out) {
    Json params;
    params["input"] = args.input.string();
    params["op"] = args.op ? Json(std::string(to_string(*args.op))) : Json(nullptr);
    params["k"] = args.k;
    out.report["parameters"] = params;
    out.report["provenance"] = "enumeration";
    const SetFamily a = read_family_file(args.input);
    const SetFamily target = args.op ? kfold(a, *args.op, args.k) : a;
    Json res;
    res["n"] = a.n();
    res["family_size"] = a.size();
    res["target_size"] = target.size();
    res["vc"] = vc_dimension(target);
    out.report["result"] = res;
  });
}

CommandOutput cmd_search(const SearchArgs& args) {
  return guarded("search", [&](CommandOutput& out) {
    Json params;
    params["kind"] = args.kind;
    params["n"] = args.n;
    params["k"] = args.k;
    params["d"] = args.d ? Json(*args.d) : Json(nullptr);
    params["t"] = args.t ? Json(*args.t) : Json(nullptr);
    if (args.kind == "pprime") params["mode"] = args.mode;
    params["shift_restriction"] = !args.no_shift_restriction;
    params["certify_unique"] = args.certify_unique;
    params["workers"] = args.workers;
    params["witness_cap"] = args.witness_cap;
    out.report["parameters"] = params;
    out.report["provenance"] = "search";
    out.report["seed"] = args.seed;
    const SearchOptions opt = options_of(args);
    const int n = args.n, k = args.k;

    if (args.kind == "p") {
      const int d = require_param(args.d, "d");
      const SearchResult r = max_kwise_union(n, k, d, opt);
      Json res = search_json(r);
      const BoundReport conj = conjecture_value(n, k, d);
      const BigInt single = conj.term("i=" + std::to_string(d / k));
      res["conjecture_value"] = big(conj.value);
      res["largest_i_candidate"] = big(single);
      res["conjecture_holds"] = BigInt(r.value) == conj.value;
      const std::int64_t n0 = n0_estimate(d, k);
      res["n0_estimate"] = n0;
      out.report["result"] = res;
      out.report["nodes_explored"] = r.nodes_explored;
      if (BigInt(r.value) != conj.value) claim(out, "conjecture");
      if (n >= n0 && BigInt(r.value) != single) claim(out, "large-n exact value");
    } else if (args.kind == "m") {
      const int t = require_param(args.t, "t");
      const SearchResult r = max_kwise_intersecting(n, k, t, opt);
      out.report["result"] = search_json(r);
      out.report["nodes_explored"] = r.nodes_explored;
    } else if (args.kind == "pprime") {
      const int d = require_param(args.d, "d");
      VcDeltaMode mode;
      if (args.mode == "exhaustive")
        mode = VcDeltaMode::Exhaustive;
      else if (args.mode == "compressed")
        mode = VcDeltaMode::Compressed;
      else
        throw std::invalid_argument("unknown mode '" + args.mode + "'");
      const SearchResult r = max_vc_delta(n, k, d, mode, opt);
      Json res = search_json(r);
      std::uint64_t nodes = r.nodes_explored;
      if (n <= 7 && d >= 1 && d < n) {
        const SearchResult p = max_kwise_union(n, k, d, opt);
        nodes += p.nodes_explored;
        res["p"] = p.value;
        res["equals_p"] = p.value == r.value;
        if (p.value != r.value) claim(out, "p' = p");
      }
      out.report["result"] = res;
      out.report["nodes_explored"] = nodes;
    } else if (args.kind == "two-sided") {
      const int d = require_param(args.d, "d");
      const SearchResult r = max_two_sided_vc(n, d, opt);
      Json res = search_json(r);
      if (d >= 1 && d <= n) {
        const auto lower = static_cast<std::int64_t>(mod_d_family(n, d).size());
        res["mod_d_size"] = lower;
        if (r.value < lower) claim(out, "mod-d family is feasible");
      }
      if (r.exact && d >= 3 && n == d + 1 && r.value != (std::int64_t{1} << n) - 2) claim(out, "2^n - 2 at n = d + 1");
      if (r.exact && d == 1 && r.value != n + 1) claim(out, "n + 1 for d = 1");
      out.report["result"] = res;
      out.report["nodes_explored"] = r.nodes_explored;
    } else {
      throw std::invalid_argument("unknown search kind '" + args.kind + "'");
    }
  });
}

CommandOutput cmd_formula(const FormulaArgs& args) {
  return guarded("formula", [&](CommandOutput& out) {
    Json params;
    params["which"] = args.which;
    params["n"] = args.n ? Json(*args.n) : Json(nullptr);
    params["k"] = args.k;
    params["d"] = args.d ? Json(*args.d) : Json(nullptr);
    out.report["parameters"] = params;
    out.report["provenance"] = "formula";
    const int d = require_param(args.d, "d");
    if (args.which == "n0") {
      out.report["result"] = {{"value", n0_estimate(d, args.k)}};
      return;
    }
    const int n = require_param(args.n, "n");
    BoundReport b;
    if (args.which == "sauer") {
      if (d < 0 || n < 1) throw std::invalid_argument("sauer needs n >= 1 and d >= 0");
      b = {FormulaKind::SauerShelah, sauer_shelah_bound(n, d), {{"binom_leq(n,d)", binom_leq(n, d)}}};
    } else if (args.which == "katona") {
      b = katona_bound(n, d);
    } else if (args.which == "main") {
      b = main_bound(n, args.k, d);
    } else if (args.which == "conjecture") {
      b = conjecture_value(n, args.k, d);
    } else {
      throw std::invalid_argument("unknown formula '" + args.which + "'");
    }
    out.report["result"] = bound_json(b);
  });
}

CommandOutput cmd_verify(const VerifyArgs& args) {
  return guarded("verify", [&](CommandOutput& out) {
    const int max_n = args.max_n > 0 ? args.max_n : verify::default_max_n(args.suite);
    Json params;
    params["suite"] = args.suite;
    params["trials"] = args.trials;
    params["max_n"] = max_n;
    out.report["parameters"] = params;
    out.report["provenance"] = "verification";
    out.report["seed"] = args.seed;
    const verify::SuiteReport rep =
        verify::run_suite(args.suite, {args.trials, args.seed, max_n, args.workers});
    Json props = Json::array();
    for (const auto& p : rep.properties) {
      Json j;
      j["name"] = p.name;
      j["statement"] = p.statement;
      j["status"] = p.passed() ? "pass" : "fail";
      j["trials"] = p.trials;
      j["violations"] = p.violations;
      if (p.counterexample) j["counterexample"] = *p.counterexample;
      if (!p.notes.empty()) j["notes"] = p.notes;
      props.push_back(j);
    }
    out.report["result"] = {{"suite", rep.suite}, {"status", rep.passed() ? "pass" : "fail"}, {"properties", props}};
    if (!rep.passed()) out.exit_code = kClaimViolated;
  });
}

CommandOutput cmd_construct(const ConstructArgs& args) {
  return guarded("construct", [&](CommandOutput& out) {
    Json params;
    params["which"] = args.which;
    params["n"] = args.n;
    if (args.which == "ari") {
      params["r"] = args.r;
      params["i"] = args.i;
    } else if (args.which == "modd" || args.which == "lowsets" || args.which == "highsets") {
      params["d"] = args.d;
    }
    params["out"] = args.out ? Json(args.out->string()) : Json(nullptr);
    out.report["parameters"] = params;
    out.report["provenance"] = "construction";

    const SetFamily f = [&] {
      if (args.which == "ari") return family_a_ri(args.n, args.r, args.i);
      if (args.which == "modd") return mod_d_family(args.n, args.d);
      if (args.which == "lowsets") return lowsets(args.n, args.d);
      if (args.which == "highsets") return highsets(args.n, args.d);
      if (args.which == "chain") return complete_chain(args.n);
      if (args.which == "cube2") return cube_minus_two(args.n);
      throw std::invalid_argument("unknown construction '" + args.which + "'");
    }();
    if (args.out) write_family_file(*args.out, f);
    int largest = 0;
    for (SubsetMask s : f) largest = std::max(largest, s.size());
    Json res;
    res["n"] = f.n();
    res["size"] = f.size();
    res["largest_member"] = largest;
    res["members"] = family_to_json(f);
    out.report["result"] = res;
  });
}

}  // namespace vcu::cli
