#pragma once

// Families over [n], n <= 6, packed into one 64-bit word: bit s is set when
// the subset with mask s is a member.

#include <bit>
#include <cstdint>

namespace vcu::detail {

using SmallFamily = std::uint64_t;

/// Bitmap of subset indices that contain element j.
constexpr std::uint64_t containing(int j) {
  constexpr std::uint64_t table[6] = {0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
                                      0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
  return table[j];
}

/// {S ^ a : S in f}.
constexpr SmallFamily translate(SmallFamily f, unsigned a, int n) {
  for (int j = 0; j < n; ++j) {
    if (((a >> j) & 1U) == 0) continue;
    const int sh = 1 << j;
    const std::uint64_t hi = containing(j);
    f = ((f & hi) >> sh) | ((f & ~hi) << sh);
  }
  return f;
}

/// {S \ {j} : S in f}.
constexpr SmallFamily project_out(SmallFamily f, int j) {
  const std::uint64_t hi = containing(j);
  return (f & ~hi) | ((f & hi) >> (1 << j));
}

/// k-fold symmetric-difference power.
constexpr SmallFamily kfold_sym(SmallFamily f, int k, int n) {
  SmallFamily acc = f;
  for (int step = 1; step < k; ++step) {
    SmallFamily next = 0;
    for (std::uint64_t x = f; x != 0; x &= x - 1) next |= translate(acc, static_cast<unsigned>(std::countr_zero(x)), n);
    if (next == acc) break;
    acc = next;
  }
  return acc;
}

/// VC dimension; -1 for the empty family.
inline int vc_dimension(SmallFamily f, int n) {
  if (f == 0) return -1;
  const unsigned full = (1U << n) - 1;
  SmallFamily traces[64];
  traces[full] = f;
  int best = 0;
  for (int y = static_cast<int>(full); y >= 0; --y) {
    if (static_cast<unsigned>(y) != full) {
      const int j = std::countr_zero(~static_cast<unsigned>(y));
      traces[y] = project_out(traces[y | (1 << j)], j);
    }
    const int m = std::popcount(static_cast<unsigned>(y));
    if (m > best && std::popcount(traces[y]) == (1 << m)) best = m;
  }
  return best;
}

}  // namespace vcu::detail
