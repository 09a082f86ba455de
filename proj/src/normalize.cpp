#include "vcu/normalize.hpp"

#include <stdexcept>
#include <string>

namespace vcu {
namespace {

void require_element(const SetFamily& a, int i) {
  if (i < 0 || i >= a.n()) throw std::invalid_argument("element index " + std::to_string(i + 1) + " outside [n]");
}

long long total_bits(const SetFamily& a) {
  long long s = 0;
  for (SubsetMask m : a) s += m.size();
  return s;
}

long long total_labels(const SetFamily& a) {
  long long s = 0;
  for (SubsetMask m : a) s += m.element_sum();
  return s;
}

}  // namespace

SetFamily compress_at(const SetFamily& a, int i) {
  require_element(a, i);
  std::vector<SubsetMask> out;
  out.reserve(a.size());
  for (SubsetMask s : a) {
    SubsetMask lower = s.without(i);
    out.push_back(a.contains(lower) ? s : lower);
  }
  return SetFamily(a.ground(), std::move(out));
}

SetFamily compress(const SetFamily& a) {
  // Each changing sweep strictly lowers the total number of element occurrences.
  const long long max_sweeps = total_bits(a) + 1;
  SetFamily cur = a;
  for (long long sweep = 0; sweep <= max_sweeps; ++sweep) {
    SetFamily next = cur;
    for (int i = 0; i < a.n(); ++i) next = compress_at(next, i);
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw std::logic_error("compress: sweep bound exceeded");
}

bool is_downward_closed(const SetFamily& a) {
  for (SubsetMask s : a) {
    bool ok = true;
    s.for_each([&](int e) {
      if (ok && !a.contains(s.without(e))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

SetFamily shift_at(const SetFamily& a, int i, int j) {
  require_element(a, i);
  require_element(a, j);
  if (i >= j) throw std::invalid_argument("shift_at needs i < j");
  std::vector<SubsetMask> out;
  out.reserve(a.size());
  for (SubsetMask s : a) {
    if (!s.test(i) && s.test(j)) {
      SubsetMask moved = s.without(j).with(i);
      out.push_back(a.contains(moved) ? s : moved);
    } else {
      out.push_back(s);
    }
  }
  return SetFamily(a.ground(), std::move(out));
}

SetFamily shift(const SetFamily& a) {
  // Each changing sweep strictly lowers the sum of element labels.
  const long long max_sweeps = total_labels(a) + 1;
  SetFamily cur = a;
  for (long long sweep = 0; sweep <= max_sweeps; ++sweep) {
    SetFamily next = cur;
    for (int i = 0; i < a.n(); ++i)
      for (int j = i + 1; j < a.n(); ++j) next = shift_at(next, i, j);
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw std::logic_error("shift: sweep bound exceeded");
}

bool is_shifted(const SetFamily& a) {
  for (int i = 0; i < a.n(); ++i)
    for (int j = i + 1; j < a.n(); ++j)
      if (shift_at(a, i, j) != a) return false;
  return true;
}

}  // namespace vcu
