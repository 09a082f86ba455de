#pragma once

#include <bit>
#include <cstdint>

namespace vcu::detail {

/// Bitmap over the 2^n subsets of [n] for n <= 7; bit s stands for subset mask s.
struct Bits128 {
  std::uint64_t w[2]{0, 0};

  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1U; }
  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  int count() const { return std::popcount(w[0]) + std::popcount(w[1]); }
  bool any() const { return (w[0] | w[1]) != 0; }

  Bits128& operator|=(const Bits128& o) {
    w[0] |= o.w[0];
    w[1] |= o.w[1];
    return *this;
  }
  friend Bits128 operator&(Bits128 a, const Bits128& b) {
    a.w[0] &= b.w[0];
    a.w[1] &= b.w[1];
    return a;
  }
  friend Bits128 operator|(Bits128 a, const Bits128& b) { return a |= b; }
  Bits128 operator~() const { return Bits128{{~w[0], ~w[1]}}; }
  friend bool operator==(const Bits128&, const Bits128&) = default;

  template <class F>
  void for_each(F&& f) const {
    for (int k = 0; k < 2; ++k) {
      std::uint64_t x = w[k];
      while (x != 0) {
        f(k * 64 + std::countr_zero(x));
        x &= x - 1;
      }
    }
  }
};

}  // namespace vcu::detail
