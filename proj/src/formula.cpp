#include "vcu/formula.hpp"

#include <algorithm>
#include <stdexcept>

namespace vcu {
namespace {

BigInt pow2(int e) { return BigInt(1) << e; }

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

BoundReport power_times_binom(FormulaKind kind, int n, int k, int d) {
  const int r = d % k;
  const int t = d / k;
  BoundReport rep{kind, 0, {}};
  rep.terms.push_back({"r", r});
  rep.terms.push_back({"t", t});
  rep.terms.push_back({"2^r", pow2(r)});
  rep.terms.push_back({"binom_leq(n-r,t)", binom_leq(n - r, t)});
  rep.value = recompute_value(rep);
  return rep;
}

// Positivity from a given n onwards for the threshold inequalities; see n0_estimate.
struct Threshold {
  int d, k, r, t;

  // The inequality the argument needs at n.
  bool holds(int n) const {
    if (r == 0) return binom_leq(n, t) - pow2((k - 1) * t + 1) * binom_leq(n, t - 1) > 0;
    return pow2(r) * binom_leq(n - r, t) - (pow2(d + 1) * binom_leq(n, t - 1) + binomial(n, t)) > 0;
  }

  // A lower estimate of the same quantity that is monotone once positive:
  // divided by C(n,t) every piece is monotone in n for n >= t + r.
  bool holds_from_here_on(int n) const {
    if (r == 0) return holds(n);
    return pow2(r) * binomial(n - r, t) - (pow2(d + 1) * binom_leq(n, t - 1) + binomial(n, t)) > 0;
  }
};

std::int64_t n0_rec(int d, int k) {
  const int r = d % k;
  const int t = d / k;
  std::int64_t start = std::max(1, d + 1);
  if (r > 0) start = std::max(start, n0_rec(d - 1, k) + 1);
  const Threshold th{d, k, r, t};
  std::int64_t last_fail = start - 1;
  for (std::int64_t n = start;; ++n) {
    if (n > 100'000'000) throw std::overflow_error("n0_estimate: scan did not terminate");
    const int ni = static_cast<int>(n);
    if (!th.holds(ni)) last_fail = n;
    if (th.holds_from_here_on(ni)) return last_fail + 1;
  }
}

}  // namespace

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

BigInt binom_leq(int n, int t) {
  if (t < 0 || n < 0) return 0;
  BigInt sum = 0, c = 1;
  for (int i = 0; i <= std::min(t, n); ++i) {
    sum += c;
    c = c * (n - i) / (i + 1);
  }
  return sum;
}

std::string to_string(FormulaKind kind) {
  switch (kind) {
    case FormulaKind::SauerShelah: return "sauer";
    case FormulaKind::Katona: return "katona";
    case FormulaKind::Main: return "main";
    case FormulaKind::Conjecture: return "conjecture";
  }
  return "?";
}

const BigInt& BoundReport::term(const std::string& label) const {
  for (const Term& t : terms)
    if (t.label == label) return t.value;
  throw std::out_of_range("no term '" + label + "' in bound report");
}

bool BoundReport::has_term(const std::string& label) const {
  return std::any_of(terms.begin(), terms.end(), [&](const Term& t) { return t.label == label; });
}

BigInt recompute_value(const BoundReport& report) {
  switch (report.formula) {
    case FormulaKind::SauerShelah: return report.term("binom_leq(n,d)");
    case FormulaKind::Katona:
    case FormulaKind::Main: return report.term("2^r") * report.term("binom_leq(n-r,t)");
    case FormulaKind::Conjecture: {
      BigInt best = -1;
      for (const auto& t : report.terms)
        if (t.label.rfind("i=", 0) == 0) best = std::max(best, t.value);
      return best;
    }
  }
  return -1;
}

BigInt sauer_shelah_bound(int n, int d) { return binom_leq(n, d); }

BoundReport katona_bound(int n, int d) {
  require(0 < d && d < n, "katona_bound needs 0 < d < n");
  return power_times_binom(FormulaKind::Katona, n, 2, d);
}

BoundReport main_bound(int n, int k, int d) {
  require(k >= 1 && 0 < d && d < n, "main_bound needs k >= 1 and 0 < d < n");
  return power_times_binom(FormulaKind::Main, n, k, d);
}

BoundReport conjecture_value(int n, int k, int d) {
  require(k >= 1 && d > 0 && n >= d, "conjecture_value needs k >= 1 and n >= d > 0");
  BoundReport rep{FormulaKind::Conjecture, 0, {}};
  int argmax = 0;
  BigInt best = -1;
  for (int i = 0; i <= d / k; ++i) {
    BigInt cand = pow2(d - k * i) * binom_leq(n - d + k * i, i);
    rep.terms.push_back({"i=" + std::to_string(i), cand});
    if (cand >= best) {
      best = cand;
      argmax = i;
    }
  }
  rep.terms.push_back({"argmax", argmax});
  rep.value = recompute_value(rep);
  return rep;
}

std::int64_t n0_estimate(int d, int k) {
  require(k >= 1 && d >= 1, "n0_estimate needs d, k >= 1");
  return n0_rec(d, k);
}

}  // namespace vcu
