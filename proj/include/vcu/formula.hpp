#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vcu {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(int n, int k);

/// sum_{i=0}^{min(t,n)} C(n,i). Zero for t < 0.
BigInt binom_leq(int n, int t);

enum class FormulaKind { SauerShelah, Katona, Main, Conjecture };

std::string to_string(FormulaKind kind);

/// A bound value with the labelled quantities it was computed from.
struct BoundReport {
  struct Term {
    std::string label;
    BigInt value;
  };

  FormulaKind formula;
  BigInt value;
  std::vector<Term> terms;

  const BigInt& term(const std::string& label) const;
  bool has_term(const std::string& label) const;
};

/// Recomputes a report's value from its terms alone.
BigInt recompute_value(const BoundReport& report);

/// binom_leq(n, d); attained by lowsets(n, d).
BigInt sauer_shelah_bound(int n, int d);

/// 2^r * binom_leq(n - r, floor(d/2)) with r = d mod 2. Needs 0 < d < n.
BoundReport katona_bound(int n, int d);

/// 2^r * binom_leq(n - r, floor(d/k)) with r = d mod k. Needs k >= 1, 0 < d < n.
BoundReport main_bound(int n, int k, int d);

/// max over 0 <= i <= floor(d/k) of 2^(d-ki) * binom_leq(n-d+ki, i).
/// Terms "i=<i>" hold each candidate; "argmax" prefers the larger i on ties.
BoundReport conjecture_value(int n, int k, int d);

/// Smallest n from which the two threshold inequalities used in the
/// large-n exactness argument hold for every larger n, following the
/// recursion over r = d mod k. An upper bound for the true threshold.
std::int64_t n0_estimate(int d, int k);

}  // namespace vcu
