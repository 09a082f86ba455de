#pragma once

// Branch and bound over down-sets of 2^[n] (n <= 7).
//
// Candidate subsets are visited in a fixed linear extension of the partial
// order (inclusion, optionally refined by left shifts). Each candidate is
// either included or excluded; excluding S kills its whole up-set, so a
// candidate that is still alive when reached has all its predecessors in the
// family. A policy decides whether a live candidate may be added and may kill
// further candidates.

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <vector>

#include "vcu/detail/bits128.hpp"
#include "vcu/search.hpp"

namespace vcu::internal {

using detail::Bits128;

SetFamily to_family(int n, const Bits128& bits);

/// Collects maximum families, keeping one representative per relabelling class.
class WitnessPool {
 public:
  explicit WitnessPool(std::size_t cap) : cap_(cap) {}

  void offer(std::int64_t value, const SetFamily& f);
  void fill(SearchResult& out) const;

  std::int64_t best() const { return best_; }

 private:
  mutable std::mutex mu_;
  std::size_t cap_;
  std::int64_t best_ = -1;
  std::vector<SetFamily> reps_;
  std::uint64_t count_ = 0;
  bool cap_hit_ = false;
};

/// Linear order of candidates: by size, then element sum, then mask. This
/// extends both inclusion and the left-shift order.
std::vector<int> candidate_order(int n, int max_size);

template <class Policy>
class DownsetEngine {
 public:
  struct Frame {
    Bits128 family;
    Bits128 dead;
    int size = 0;
    typename Policy::State state{};
  };

  DownsetEngine(int n, int max_size, bool shifted, Policy policy, std::uint64_t budget, WitnessPool& pool)
      : n_(n), order_(candidate_order(n, max_size)), policy_(std::move(policy)), budget_(budget), pool_(pool) {
    const int total = 1 << n;
    Bits128 cand;
    for (int s : order_) cand.set(s);
    std::vector<int> all(static_cast<std::size_t>(total));
    for (int s = 0; s < total; ++s) all[s] = s;
    upset_.assign(static_cast<std::size_t>(total), Bits128{});
    // Process by decreasing size; within one size, right shifts raise the
    // element sum, so handle larger sums first.
    std::sort(all.begin(), all.end(), [&](int a, int b) {
      int pa = std::popcount(static_cast<unsigned>(a)), pb = std::popcount(static_cast<unsigned>(b));
      if (pa != pb) return pa > pb;
      return label_sum(a) > label_sum(b);
    });
    for (int s : all) {
      Bits128 up;
      up.set(s);
      for (int x = 0; x < n; ++x)
        if (!((s >> x) & 1)) up |= upset_[s | (1 << x)];
      if (shifted)
        for (int j = 1; j < n; ++j)
          if (((s >> (j - 1)) & 1) && !((s >> j) & 1)) up |= upset_[(s & ~(1 << (j - 1))) | (1 << j)];
      upset_[s] = up;
    }
    for (auto& u : upset_) u = u & cand;
    suffix_.assign(order_.size() + 1, Bits128{});
    for (std::size_t p = order_.size(); p-- > 0;) {
      suffix_[p] = suffix_[p + 1];
      suffix_[p].set(order_[p]);
    }
  }

  void set_incumbent(std::int64_t v) { best_ = v; }

  /// Runs to completion; returns false when the node budget ran out.
  bool run(const Frame& root, unsigned workers) {
    if (workers <= 1) {
      dfs(root, 0, 0, nullptr);
      return !abort_;
    }
    int split = 0;
    while ((1U << split) < workers * 8U && split < 12) ++split;
    split_depth_ = split;
    std::vector<Task> tasks;
    dfs(root, 0, 0, &tasks);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) dfs(tasks[i].frame, tasks[i].pos, -1, nullptr);
      });
    for (auto& t : pool) t.join();
    return !abort_;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Task {
    Frame frame;
    std::size_t pos;
  };

  static int label_sum(int s) {
    int sum = 0;
    for (int x = 0; x < 8; ++x)
      if ((s >> x) & 1) sum += x + 1;
    return sum;
  }

  void record(const Frame& f) {
    std::int64_t cur = best_.load();
    while (f.size > cur && !best_.compare_exchange_weak(cur, f.size)) {
    }
    pool_.offer(f.size, to_family(n_, f.family));
  }

  void dfs(Frame f, std::size_t pos, int depth, std::vector<Task>* sink) {
    if (abort_.load(std::memory_order_relaxed)) return;
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_) {
      abort_ = true;
      return;
    }
    while (pos < order_.size() && f.dead.test(order_[pos])) {
      f.dead |= upset_[order_[pos]];
      ++pos;
    }
    const std::int64_t bound = f.size + (suffix_[pos] & ~f.dead).count();
    if (bound < best_.load(std::memory_order_relaxed)) return;
    if (pos == order_.size()) {
      record(f);
      return;
    }
    if (sink != nullptr && depth == split_depth_) {
      sink->push_back({f, pos});
      return;
    }
    const int t = order_[pos];
    const int next_depth = depth < 0 ? depth : depth + 1;
    {
      Frame g = f;
      if (policy_.try_add(g.family, g.state, g.dead, t)) {
        g.family.set(t);
        ++g.size;
        dfs(g, pos + 1, next_depth, sink);
      }
    }
    f.dead |= upset_[t];
    dfs(f, pos + 1, next_depth, sink);
  }

  int n_;
  std::vector<int> order_;
  std::vector<Bits128> upset_;
  std::vector<Bits128> suffix_;
  Policy policy_;
  std::uint64_t budget_;
  WitnessPool& pool_;
  int split_depth_ = -2;
  std::atomic<std::int64_t> best_{-1};
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> abort_{false};
};

}  // namespace vcu::internal
