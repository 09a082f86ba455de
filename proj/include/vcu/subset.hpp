#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace vcu {

/// Hard cap on the ground set; a subset fits in two machine words.
inline constexpr int kMaxGround = 128;

/// The ground set [n] = {1,...,n}. Elements are 0-based internally.
struct GroundSet {
  int n = 1;

  constexpr GroundSet() = default;
  explicit GroundSet(int size) : n(size) {
    if (size < 1 || size > kMaxGround)
      throw std::invalid_argument("ground set size must lie in [1, 128]");
  }

  friend constexpr bool operator==(GroundSet, GroundSet) = default;
};

/// A subset of [n] as a 128-bit mask; element i (0-based) is bit i.
/// Ordering is by numeric value of the mask.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr SubsetMask(std::uint64_t lo, std::uint64_t hi) : words_{lo, hi} {}

  static constexpr SubsetMask singleton(int i) {
    SubsetMask m;
    m.set(i);
    return m;
  }

  /// [n] itself, i.e. the lowest n bits.
  static constexpr SubsetMask full(int n) {
    if (n <= 0) return {};
    if (n < 64) return {(std::uint64_t{1} << n) - 1, 0};
    if (n == 64) return {~std::uint64_t{0}, 0};
    if (n < 128) return {~std::uint64_t{0}, (std::uint64_t{1} << (n - 64)) - 1};
    return {~std::uint64_t{0}, ~std::uint64_t{0}};
  }

  static SubsetMask from_elements(const std::vector<int>& zero_based) {
    SubsetMask m;
    for (int e : zero_based) m.set(e);
    return m;
  }

  constexpr bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  constexpr void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  constexpr void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  constexpr void flip(int i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  constexpr SubsetMask with(int i) const {
    SubsetMask m = *this;
    m.set(i);
    return m;
  }
  constexpr SubsetMask without(int i) const {
    SubsetMask m = *this;
    m.reset(i);
    return m;
  }

  constexpr int size() const { return std::popcount(words_[0]) + std::popcount(words_[1]); }
  constexpr bool empty() const { return (words_[0] | words_[1]) == 0; }

  /// Index of the highest set bit, or -1 for the empty set.
  constexpr int highest() const {
    if (words_[1] != 0) return 127 - std::countl_zero(words_[1]);
    if (words_[0] != 0) return 63 - std::countl_zero(words_[0]);
    return -1;
  }

  constexpr bool respects(int n) const { return (*this & ~full(n)).empty(); }
  constexpr bool is_subset_of(SubsetMask other) const { return (*this & ~other).empty(); }

  /// Complement within [n].
  constexpr SubsetMask complement(int n) const { return ~*this & full(n); }

  constexpr std::uint64_t lo() const { return words_[0]; }
  constexpr std::uint64_t hi() const { return words_[1]; }

  /// Sum of 1-based element labels.
  int element_sum() const {
    int s = 0;
    for_each([&](int i) { s += i + 1; });
    return s;
  }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (int w = 0; w < 2; ++w) {
      std::uint64_t x = words_[w];
      while (x != 0) {
        f(w * 64 + std::countr_zero(x));
        x &= x - 1;
      }
    }
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) {
    return {a.words_[0] & b.words_[0], a.words_[1] & b.words_[1]};
  }
  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) {
    return {a.words_[0] | b.words_[0], a.words_[1] | b.words_[1]};
  }
  friend constexpr SubsetMask operator^(SubsetMask a, SubsetMask b) {
    return {a.words_[0] ^ b.words_[0], a.words_[1] ^ b.words_[1]};
  }
  constexpr SubsetMask operator~() const { return {~words_[0], ~words_[1]}; }

  friend constexpr bool operator==(SubsetMask a, SubsetMask b) = default;
  friend constexpr std::strong_ordering operator<=>(SubsetMask a, SubsetMask b) {
    if (auto c = a.words_[1] <=> b.words_[1]; c != 0) return c;
    return a.words_[0] <=> b.words_[0];
  }

 private:
  std::array<std::uint64_t, 2> words_{0, 0};
};

}  // namespace vcu

template <>
struct std::hash<vcu::SubsetMask> {
  std::size_t operator()(vcu::SubsetMask m) const noexcept {
    return std::hash<std::uint64_t>{}(m.lo() * 0x9e3779b97f4a7c15ULL ^ m.hi());
  }
};
