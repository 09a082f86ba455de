#include <algorithm>
#include <array>
#include <vector>

#include "vcu/search.hpp"

namespace vcu {
namespace {

constexpr int kMaxIsoN = 8;

struct Profile {
  std::array<int, kMaxIsoN> degree{};
  std::array<std::array<int, kMaxIsoN>, kMaxIsoN> codegree{};
  std::vector<int> sizes;
};

Profile profile_of(const SetFamily& f) {
  Profile p;
  for (SubsetMask s : f) {
    p.sizes.push_back(s.size());
    s.for_each([&](int x) {
      ++p.degree[x];
      s.for_each([&](int y) { ++p.codegree[x][y]; });
    });
  }
  std::sort(p.sizes.begin(), p.sizes.end());
  return p;
}

class Matcher {
 public:
  Matcher(const SetFamily& a, const SetFamily& b) : a_(a), b_(b), pa_(profile_of(a)), pb_(profile_of(b)) {}

  bool run() {
    if (a_.size() != b_.size() || pa_.sizes != pb_.sizes) return false;
    auto da = std::vector<int>(pa_.degree.begin(), pa_.degree.begin() + a_.n());
    auto db = std::vector<int>(pb_.degree.begin(), pb_.degree.begin() + b_.n());
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    perm_.assign(static_cast<std::size_t>(a_.n()), -1);
    used_.assign(static_cast<std::size_t>(a_.n()), false);
    return extend(0);
  }

 private:
  bool extend(int x) {
    const int n = a_.n();
    if (x == n) return image_matches();
    for (int y = 0; y < n; ++y) {
      if (used_[y] || pa_.degree[x] != pb_.degree[y]) continue;
      bool ok = pa_.codegree[x][x] == pb_.codegree[y][y];
      for (int w = 0; ok && w < x; ++w) ok = pa_.codegree[x][w] == pb_.codegree[y][perm_[w]];
      if (!ok) continue;
      perm_[x] = y;
      used_[y] = true;
      if (extend(x + 1)) return true;
      used_[y] = false;
    }
    return false;
  }

  bool image_matches() const {
    std::vector<SubsetMask> img;
    img.reserve(a_.size());
    for (SubsetMask s : a_) {
      SubsetMask m;
      s.for_each([&](int i) { m.set(perm_[i]); });
      img.push_back(m);
    }
    std::sort(img.begin(), img.end());
    return std::equal(img.begin(), img.end(), b_.begin(), b_.end());
  }

  const SetFamily& a_;
  const SetFamily& b_;
  Profile pa_, pb_;
  std::vector<int> perm_;
  std::vector<bool> used_;
};

}  // namespace

bool relabelling_isomorphic(const SetFamily& a, const SetFamily& b) {
  if (a.n() != b.n()) throw std::invalid_argument("relabelling_isomorphic: ground sets differ");
  if (a.n() > kMaxIsoN) throw BudgetExceeded("relabelling_isomorphic is limited to n <= 8");
  if (a == b) return true;
  return Matcher(a, b).run();
}

}  // namespace vcu
