#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "vcu/construct.hpp"
#include "vcu/core.hpp"
#include "vcu/detail/small_family.hpp"

using namespace vcu;
using testing::fam;
using testing::set_of;

TEST_SUITE("core") {

TEST_CASE("trace examples") {
  CHECK(trace(fam(2, {{}, {1, 2}}), set_of({1})) == fam(2, {{}, {1}}));
  CHECK(trace(fam(3, {{1}, {2, 3}, {1, 2, 3}}), SubsetMask{}) == fam(3, {{}}));
  auto t = trace(full_cube(3), set_of({1, 3}));
  CHECK(t.size() == 4);
  CHECK(t == fam(3, {{}, {1}, {3}, {1, 3}}));
}

TEST_CASE("is_shattered examples") {
  CHECK(is_shattered(full_cube(3), set_of({1, 2, 3})));
  CHECK(is_shattered(fam(2, {{}, {1, 2}}), set_of({1})));
  CHECK_FALSE(is_shattered(fam(2, {{}, {1, 2}}), set_of({1, 2})));
  CHECK(is_shattered(fam(2, {{1}}), SubsetMask{}));
  CHECK_FALSE(is_shattered(SetFamily(GroundSet(2)), SubsetMask{}));
}

TEST_CASE("shattered_collection examples") {
  CHECK(shattered_collection(fam(2, {{}, {1, 2}})) == fam(2, {{}, {1}, {2}}));
  CHECK(shattered_collection(fam(2, {{}, {2}})) == fam(2, {{}, {2}}));
  CHECK(shattered_collection(fam(3, {{}})) == fam(3, {{}}));
  CHECK_THROWS(shattered_collection(SetFamily(GroundSet(3))));
}

TEST_CASE("vc_dimension examples") {
  CHECK(vc_dimension(fam(4, {{}})) == 0);
  CHECK(vc_dimension(lowsets(4, 2)) == 2);
  CHECK(vc_dimension(fam(3, {{}, {1}, {2}, {1, 2}})) == 2);
  CHECK(vc_dimension(SetFamily(GroundSet(3))) == -1);
  CHECK(vc_dimension(full_cube(7)) == 7);
}

TEST_CASE("kfold examples") {
  CHECK(kfold(fam(3, {{1, 3}}), SetOp::SymmetricDifference, 2) == fam(3, {{}}));
  CHECK(kfold(fam(2, {{}, {1}, {2}}), SetOp::Union, 2) == fam(2, {{}, {1}, {2}, {1, 2}}));
  auto a = fam(3, {{1}, {2, 3}});
  CHECK(kfold(a, SetOp::Intersection, 1) == a);
  CHECK_THROWS(kfold(a, SetOp::Union, 0));
  CHECK_THROWS(kfold(SetFamily(GroundSet(3)), SetOp::Union, 2));
}

TEST_CASE("kfold_multi examples") {
  auto a = fam(3, {{1}, {2, 3}});
  std::vector<SetFamily> one{a};
  CHECK(kfold_multi(one, SetOp::Union) == a);
  std::vector<SetFamily> two{fam(2, {{1}}), fam(2, {{2}})};
  CHECK(kfold_multi(two, SetOp::SymmetricDifference) == fam(2, {{1, 2}}));
  std::vector<SetFamily> none;
  CHECK_THROWS(kfold_multi(none, SetOp::Union));
  std::vector<SetFamily> mismatched{fam(2, {{1}}), fam(3, {{1}})};
  CHECK_THROWS(kfold_multi(mismatched, SetOp::Union));
}

TEST_CASE("k-wise union and intersection examples") {
  for (int n = 2; n <= 6; ++n)
    for (int t = 0; t <= n; ++t)
      for (int k = 1; k <= 3; ++k) CHECK(is_kwise_union(lowsets(n, t), k, k * t));
  CHECK_FALSE(is_kwise_union(lowsets(4, 1), 2, 1));
  for (int k = 1; k <= 3; ++k)
    for (int i = 0; i <= 2; ++i)
      for (int r = 0; r < k; ++r) {
        const int n = 6;
        const int d = k * i + r;
        if (d >= n) continue;
        auto a = family_a_ri(n, r, i);
        CHECK(is_kwise_union(a, k, d));
        CHECK(is_kwise_intersecting(complement_family(a), k, n - d));
      }
  CHECK_FALSE(is_kwise_union(fam(3, {{1, 2}, {2, 3}}), 2, 2));
  for (int k = 1; k <= 3; ++k) CHECK(is_kwise_intersecting(fam(4, {{1, 2, 3, 4}}), k, 4));
  CHECK_FALSE(is_kwise_intersecting(fam(3, {{1, 2}, {2, 3}}), 2, 2));
}

TEST_CASE("complement and relabel") {
  CHECK(complement_family(fam(3, {{}, {1}})) == fam(3, {{1, 2, 3}, {2, 3}}));
  std::vector<int> swap01{1, 0, 2};
  CHECK(relabel(fam(3, {{1}, {1, 3}}), swap01) == fam(3, {{2}, {2, 3}}));
  std::vector<int> bad{0, 0, 1};
  CHECK_THROWS(relabel(fam(3, {{1}}), bad));
}

TEST_CASE("shattering agrees with the definition on random families") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    auto a = testing::random_nonempty_family(rng, n, 0.15 + 0.7 * (trial % 5) / 4.0);
    auto sh = shattered_collection(a);
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
      SubsetMask m(y, 0);
      const bool expect = testing::naive_shattered(a, m);
      CHECK(is_shattered(a, m) == expect);
      CHECK(sh.contains(m) == expect);
    }
    CHECK(vc_dimension(a) == testing::naive_vc(a));
  }
}

TEST_CASE("vc_dimension matches the bitmap implementation for n <= 6") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const std::uint64_t mask = n == 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1 << n)) - 1;
    std::uint64_t bits = rng() & mask;
    if (trial % 3 == 0) bits &= rng();
    if (trial % 3 == 1) bits &= rng() & rng();
    auto f = testing::from_bitmap(n, bits);
    CHECK(vc_dimension(f) == detail::vc_dimension(bits, n));
  }
}

TEST_CASE("shattered collections are downward closed and obey Sauer-Shelah") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    auto a = testing::random_nonempty_family(rng, n, 0.05 + 0.3 * (trial % 4));
    auto sh = shattered_collection(a);
    CHECK(sh.size() >= a.size());
    for (auto y : sh)
      y.for_each([&](int e) { CHECK(sh.contains(y.without(e))); });
    const int d = vc_dimension(a);
    CHECK(a.size() <= testing::binom_leq_u64(n, d));
  }
}

TEST_CASE("kfold size, containment and agreement with kfold_multi") {
  std::mt19937_64 rng(17);
  const SetOp ops[] = {SetOp::Intersection, SetOp::Union, SetOp::SymmetricDifference};
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    auto a = testing::random_nonempty_family(rng, n, 0.2);
    for (SetOp op : ops)
      for (int k = 1; k <= 3; ++k) {
        auto f = kfold(a, op, k);
        std::size_t cap = 1;
        for (int i = 0; i < k; ++i) cap *= a.size();
        CHECK(f.size() <= cap);
        std::vector<SetFamily> copies(static_cast<std::size_t>(k), a);
        CHECK(kfold_multi(copies, op) == f);
        if (op != SetOp::SymmetricDifference)
          for (auto s : a) CHECK(f.contains(s));
      }
  }
}

TEST_CASE("k-wise predicates agree with the definition") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    auto a = testing::random_nonempty_family(rng, n, 0.1 + 0.1 * (trial % 4));
    for (int k = 1; k <= 3; ++k) {
      int max_union = 0;
      int min_inter = n;
      for (auto s : kfold(a, SetOp::Union, k)) max_union = std::max(max_union, s.size());
      for (auto s : kfold(a, SetOp::Intersection, k)) min_inter = std::min(min_inter, s.size());
      for (int b = 0; b <= n; ++b) {
        CHECK(is_kwise_union(a, k, b) == (max_union <= b));
        CHECK(is_kwise_intersecting(a, k, b) == (min_inter >= b));
      }
    }
  }
}

TEST_CASE("VC dimension and k-fold closures are invariant under relabelling") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    auto a = testing::random_nonempty_family(rng, n, 0.2);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto b = relabel(a, perm);
    CHECK(b.size() == a.size());
    CHECK(vc_dimension(b) == vc_dimension(a));
    CHECK(relabel(kfold(a, SetOp::Union, 2), perm) == kfold(b, SetOp::Union, 2));
    CHECK(relabel(shattered_collection(a), perm) == shattered_collection(b));
  }
}

TEST_CASE("trace composes over nested sets") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    auto a = testing::random_nonempty_family(rng, n, 0.3);
    SubsetMask y(rng() & SubsetMask::full(n).lo(), 0);
    SubsetMask z = y & SubsetMask(rng(), 0);
    CHECK(trace(trace(a, y), z) == trace(a, z));
  }
}

}  // TEST_SUITE
