#include "vcu/core.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace vcu {
namespace {

void require_same_ground(const SetFamily& a, SubsetMask y) {
  if (!y.respects(a.n())) throw std::invalid_argument("subset does not respect the family's ground set");
}

// Elements that some member contains and some member omits. Only these can
// appear in a shattered set of size >= 1.
std::vector<int> varying_elements(const SetFamily& a) {
  SubsetMask any, all = SubsetMask::full(a.n());
  for (SubsetMask s : a) {
    any = any | s;
    all = all & s;
  }
  return (any & ~all).elements();
}

int floor_log2(std::size_t x) { return static_cast<int>(std::bit_width(x)) - 1; }

bool shattered_unchecked(const SetFamily& a, SubsetMask y) {
  const int m = y.size();
  if (m > floor_log2(a.size())) return false;
  std::vector<SubsetMask> traces;
  traces.reserve(a.size());
  for (SubsetMask s : a) traces.push_back(s & y);
  std::sort(traces.begin(), traces.end());
  auto distinct = std::unique(traces.begin(), traces.end()) - traces.begin();
  return static_cast<std::size_t>(distinct) == (std::size_t{1} << m);
}

// Calls f(mask) for every m-subset of `pool`; stops early when f returns true.
template <class F>
bool any_combination(const std::vector<int>& pool, int m, F&& f) {
  const int p = static_cast<int>(pool.size());
  if (m > p) return false;
  std::vector<int> idx(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    SubsetMask y;
    for (int i : idx) y.set(pool[i]);
    if (f(y)) return true;
    int i = m - 1;
    while (i >= 0 && idx[i] == p - m + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<SubsetMask> maximal_members(const SetFamily& a) {
  std::vector<SubsetMask> out;
  for (SubsetMask s : a) {
    bool dominated = false;
    for (SubsetMask t : a)
      if (t != s && s.is_subset_of(t)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(s);
  }
  return out;
}

}  // namespace

SetFamily trace(const SetFamily& a, SubsetMask y) {
  require_same_ground(a, y);
  std::vector<SubsetMask> out;
  out.reserve(a.size());
  for (SubsetMask s : a) out.push_back(s & y);
  return SetFamily(a.ground(), std::move(out));
}

bool is_shattered(const SetFamily& a, SubsetMask y) {
  require_same_ground(a, y);
  if (a.empty()) return false;
  return shattered_unchecked(a, y);
}

SetFamily shattered_collection(const SetFamily& a) {
  if (a.empty()) throw std::invalid_argument("shattered_collection of the empty family");
  const std::vector<int> pool = varying_elements(a);
  std::vector<SubsetMask> all{SubsetMask{}};
  std::vector<SubsetMask> level{SubsetMask{}};
  while (!level.empty()) {
    std::vector<SubsetMask> next;
    for (SubsetMask y : level) {
      for (int x : pool) {
        if (x <= y.highest()) continue;
        SubsetMask z = y.with(x);
        // every immediate subset must already be shattered
        bool ok = true;
        y.for_each([&](int e) {
          if (ok && !std::binary_search(level.begin(), level.end(), z.without(e))) ok = false;
        });
        if (ok && shattered_unchecked(a, z)) next.push_back(z);
      }
    }
    std::sort(next.begin(), next.end());
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return SetFamily(a.ground(), std::move(all));
}

int vc_dimension(const SetFamily& a) {
  if (a.empty()) return -1;
  const std::vector<int> pool = varying_elements(a);
  int top = std::min<int>(static_cast<int>(pool.size()), floor_log2(a.size()));
  for (int m = top; m > 0; --m)
    if (any_combination(pool, m, [&](SubsetMask y) { return shattered_unchecked(a, y); })) return m;
  return 0;
}

SetFamily kfold(const SetFamily& a, SetOp op, int k) {
  if (k < 1) throw std::invalid_argument("kfold needs k >= 1");
  if (a.empty()) throw std::invalid_argument("kfold of the empty family");
  std::vector<SubsetMask> acc(a.begin(), a.end());
  for (int step = 1; step < k; ++step) {
    std::vector<SubsetMask> next;
    next.reserve(acc.size() * a.size());
    for (SubsetMask x : acc)
      for (SubsetMask s : a) next.push_back(apply(op, x, s));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next == acc) break;  // closed: further steps change nothing
    acc = std::move(next);
  }
  return SetFamily(a.ground(), std::move(acc));
}

SetFamily kfold_multi(std::span<const SetFamily> families, SetOp op) {
  if (families.empty()) throw std::invalid_argument("kfold_multi needs at least one family");
  const GroundSet g = families.front().ground();
  for (const SetFamily& f : families) {
    if (f.ground() != g) throw std::invalid_argument("kfold_multi: mismatched ground sets");
    if (f.empty()) throw std::invalid_argument("kfold_multi: empty family");
  }
  std::vector<SubsetMask> acc(families.front().begin(), families.front().end());
  for (std::size_t i = 1; i < families.size(); ++i) {
    std::vector<SubsetMask> next;
    next.reserve(acc.size() * families[i].size());
    for (SubsetMask x : acc)
      for (SubsetMask s : families[i]) next.push_back(apply(op, x, s));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    acc = std::move(next);
  }
  return SetFamily(g, std::move(acc));
}

bool is_kwise_union(const SetFamily& a, int k, int bound) {
  if (k < 1) throw std::invalid_argument("is_kwise_union needs k >= 1");
  if (a.empty()) return true;

  SubsetMask everything;
  for (SubsetMask s : a) {
    if (s.size() > bound) return false;
    everything = everything | s;
  }
  if (everything.size() <= bound) return true;

  // Only maximal members matter: unions are monotone.
  const std::vector<SubsetMask> tops = maximal_members(a);

  // Greedy: a union exceeding the bound is a definitive counterexample.
  SubsetMask greedy = *std::max_element(tops.begin(), tops.end(),
                                        [](SubsetMask x, SubsetMask y) { return x.size() < y.size(); });
  for (int step = 1; step < k; ++step) {
    SubsetMask best = greedy;
    for (SubsetMask s : tops)
      if ((greedy | s).size() > best.size()) best = greedy | s;
    greedy = best;
  }
  if (greedy.size() > bound) return false;

  // Exact: maximal j-fold unions, j = 1..k.
  std::vector<SubsetMask> level = tops;
  for (int step = 1; step < k; ++step) {
    std::vector<SubsetMask> next;
    for (SubsetMask x : level)
      for (SubsetMask s : tops) {
        SubsetMask u = x | s;
        if (u.size() > bound) return false;
        next.push_back(u);
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = maximal_members(SetFamily(a.ground(), std::move(next)));
  }
  return true;
}

bool is_kwise_intersecting(const SetFamily& a, int k, int t) {
  // |S1 & ... & Sk| >= t  <=>  |~S1 | ... | ~Sk| <= n - t
  return is_kwise_union(complement_family(a), k, a.n() - t);
}

SetFamily complement_family(const SetFamily& a) {
  std::vector<SubsetMask> out;
  out.reserve(a.size());
  for (SubsetMask s : a) out.push_back(s.complement(a.n()));
  return SetFamily(a.ground(), std::move(out));
}

SetFamily relabel(const SetFamily& a, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != a.n()) throw std::invalid_argument("relabel: permutation length != n");
  SubsetMask seen;
  for (int p : perm) {
    if (p < 0 || p >= a.n() || seen.test(p)) throw std::invalid_argument("relabel: not a permutation");
    seen.set(p);
  }
  std::vector<SubsetMask> out;
  out.reserve(a.size());
  for (SubsetMask s : a) {
    SubsetMask img;
    s.for_each([&](int i) { img.set(perm[i]); });
    out.push_back(img);
  }
  return SetFamily(a.ground(), std::move(out));
}

}  // namespace vcu
