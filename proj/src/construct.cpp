#include "vcu/construct.hpp"

#include <stdexcept>
#include <string>

namespace vcu {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// Calls f on every subset of `pool` with at most `cap` elements.
template <class F>
void for_each_small_subset(const std::vector<int>& pool, int cap, SubsetMask base, std::size_t from, F& f) {
  f(base);
  if (cap == 0) return;
  for (std::size_t i = from; i < pool.size(); ++i) for_each_small_subset(pool, cap - 1, base.with(pool[i]), i + 1, f);
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i < hi; ++i) v.push_back(i);
  return v;
}

}  // namespace

SetFamily lowsets(int n, int d) {
  require(d >= 0 && d <= n, "lowsets needs 0 <= d <= n");
  GroundSet g(n);
  std::vector<SubsetMask> out;
  auto sink = [&](SubsetMask s) { out.push_back(s); };
  for_each_small_subset(range(0, n), d, SubsetMask{}, 0, sink);
  return SetFamily(g, std::move(out));
}

SetFamily highsets(int n, int d) {
  SetFamily low = lowsets(n, d);
  std::vector<SubsetMask> out;
  for (SubsetMask s : low) out.push_back(s.complement(n));
  return SetFamily(low.ground(), std::move(out));
}

SetFamily family_a_ri(int n, int r, int i) {
  require(r >= 0 && i >= 0 && r + i <= n, "family_a_ri needs r, i >= 0 and r + i <= n");
  GroundSet g(n);
  const int low_n = n - r;
  std::vector<SubsetMask> lows;
  auto sink = [&](SubsetMask s) { lows.push_back(s); };
  for_each_small_subset(range(0, low_n), i, SubsetMask{}, 0, sink);
  std::vector<SubsetMask> out;
  out.reserve(lows.size() << r);
  for (std::uint64_t h = 0; h < (std::uint64_t{1} << r); ++h) {
    SubsetMask high;
    for (int b = 0; b < r; ++b)
      if ((h >> b) & 1U) high.set(low_n + b);
    for (SubsetMask l : lows) out.push_back(l | high);
  }
  return SetFamily(g, std::move(out));
}

int mod_d_chain_length(int n, int d, int c) { return (n - (c + 1)) / d + 1; }

SetFamily mod_d_family(int n, int d) {
  require(d >= 1 && d <= n, "mod_d_family needs 1 <= d <= n");
  GroundSet g(n);
  std::vector<SubsetMask> out;
  ModDCode code{std::vector<int>(static_cast<std::size_t>(d), 0)};
  // odometer over the code space
  while (true) {
    out.push_back(mod_d_decode(code, n, d));
    int c = 0;
    while (c < d && code.counts[c] == mod_d_chain_length(n, d, c)) code.counts[c++] = 0;
    if (c == d) break;
    ++code.counts[c];
  }
  return SetFamily(g, std::move(out));
}

ModDCode mod_d_encode(SubsetMask s, int n, int d) {
  require(d >= 1 && d <= n, "mod_d_encode needs 1 <= d <= n");
  require(s.respects(n), "mod_d_encode: subset outside [n]");
  ModDCode code{std::vector<int>(static_cast<std::size_t>(d), 0)};
  for (int c = 0; c < d; ++c) {
    int len = 0;
    while (c + len * d < n && s.test(c + len * d)) ++len;
    for (int rest = c + (len + 1) * d; rest < n; rest += d)
      if (s.test(rest)) throw std::invalid_argument("mod_d_encode: set is not monotone modulo d");
    code.counts[c] = len;
  }
  return code;
}

SubsetMask mod_d_decode(const ModDCode& code, int n, int d) {
  require(d >= 1 && d <= n, "mod_d_decode needs 1 <= d <= n");
  require(static_cast<int>(code.counts.size()) == d, "mod_d_decode: code length != d");
  SubsetMask s;
  for (int c = 0; c < d; ++c) {
    const int len = code.counts[c];
    if (len < 0 || len > mod_d_chain_length(n, d, c)) throw std::invalid_argument("mod_d_decode: count out of range");
    for (int step = 0; step < len; ++step) s.set(c + step * d);
  }
  return s;
}

SetFamily complete_chain(int n) {
  GroundSet g(n);
  std::vector<SubsetMask> out;
  for (int m = 0; m <= n; ++m) out.push_back(SubsetMask::full(m));
  return SetFamily(g, std::move(out));
}

SetFamily full_cube(int n) {
  require(n >= 1 && n <= 20, "full_cube needs 1 <= n <= 20");
  GroundSet g(n);
  std::vector<SubsetMask> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.emplace_back(m, 0);
  return SetFamily(g, std::move(out));
}

SetFamily cube_minus_two(int n) {
  require(n >= 2 && n <= 20, "cube_minus_two needs 2 <= n <= 20");
  SetFamily cube = full_cube(n);
  std::vector<SubsetMask> out;
  for (SubsetMask s : cube)
    if (s != SubsetMask::full(1) && s != SubsetMask::full(n)) out.push_back(s);
  return SetFamily(cube.ground(), std::move(out));
}

}  // namespace vcu
