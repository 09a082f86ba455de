#pragma once
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "vcu/family.hpp"

namespace testing {

using vcu::GroundSet;
using vcu::SetFamily;
using vcu::SubsetMask;

// 1-based element lists, matching the family file format.
inline SubsetMask set_of(std::initializer_list<int> elements) {
  SubsetMask s;
  for (int e : elements) s.set(e - 1);
  return s;
}

inline SetFamily fam(int n, std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<SubsetMask> members;
  for (auto s : sets) members.push_back(set_of(s));
  return SetFamily(GroundSet(n), std::move(members));
}

inline SetFamily from_bitmap(int n, std::uint64_t bitmap) {
  std::vector<SubsetMask> members;
  for (unsigned s = 0; s < (1U << n); ++s)
    if ((bitmap >> s) & 1U) members.emplace_back(s, 0);
  return SetFamily(GroundSet(n), std::move(members));
}

inline std::uint64_t to_bitmap(const SetFamily& f) {
  std::uint64_t b = 0;
  for (auto s : f) b |= std::uint64_t{1} << s.lo();
  return b;
}

// Each subset kept independently with probability `density`.
inline SetFamily random_family(std::mt19937_64& rng, int n, double density) {
  std::bernoulli_distribution keep(density);
  std::vector<SubsetMask> members;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
    if (keep(rng)) members.emplace_back(s, 0);
  return SetFamily(GroundSet(n), std::move(members));
}

inline SetFamily random_nonempty_family(std::mt19937_64& rng, int n, double density) {
  for (;;) {
    auto f = random_family(rng, n, density);
    if (!f.empty()) return f;
  }
}

// Shattering straight from the definition: every subset of y is some S & y.
inline bool naive_shattered(const SetFamily& a, SubsetMask y) {
  auto elems = y.elements();
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << elems.size()); ++pick) {
    SubsetMask target;
    for (std::size_t b = 0; b < elems.size(); ++b)
      if ((pick >> b) & 1U) target.set(elems[b]);
    bool found = false;
    for (auto s : a)
      if ((s & y) == target) { found = true; break; }
    if (!found) return false;
  }
  return true;
}

inline int naive_vc(const SetFamily& a) {
  if (a.empty()) return -1;
  int best = 0;
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << a.n()); ++y) {
    SubsetMask m(y, 0);
    if (m.size() > best && naive_shattered(a, m)) best = m.size();
  }
  return best;
}

inline std::uint64_t binom_leq_u64(int n, int t) {
  std::uint64_t total = 0;
  std::uint64_t c = 1;
  for (int i = 0; i <= t && i <= n; ++i) {
    total += c;
    c = c * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
  }
  return t < 0 ? 0 : total;
}

}  // namespace testing
