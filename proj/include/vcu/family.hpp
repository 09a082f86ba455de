#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "vcu/subset.hpp"

namespace vcu {

enum class SetOp { Intersection, Union, SymmetricDifference };

constexpr SubsetMask apply(SetOp op, SubsetMask a, SubsetMask b) {
  switch (op) {
    case SetOp::Intersection: return a & b;
    case SetOp::Union: return a | b;
    case SetOp::SymmetricDifference: return a ^ b;
  }
  return a;
}

std::string_view to_string(SetOp op);
/// Accepts "cap"/"intersection", "cup"/"union", "sym"/"symdiff"/"delta".
SetOp parse_set_op(std::string_view name);

/// A deduplicated family of subsets of [n], stored in increasing mask order.
/// Immutable after construction.
class SetFamily {
 public:
  using const_iterator = std::vector<SubsetMask>::const_iterator;

  explicit SetFamily(GroundSet ground) : ground_(ground) {}
  SetFamily(GroundSet ground, std::vector<SubsetMask> members);

  GroundSet ground() const { return ground_; }
  int n() const { return ground_.n; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::span<const SubsetMask> members() const { return members_; }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }
  SubsetMask operator[](std::size_t i) const { return members_[i]; }

  bool contains(SubsetMask s) const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  GroundSet ground_;
  std::vector<SubsetMask> members_;
};

/// Throws std::invalid_argument unless `s` fits in `ground`.
void require_respects(GroundSet ground, SubsetMask s);

}  // namespace vcu
