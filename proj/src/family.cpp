#include "vcu/family.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace vcu {

std::string_view to_string(SetOp op) {
  switch (op) {
    case SetOp::Intersection: return "cap";
    case SetOp::Union: return "cup";
    case SetOp::SymmetricDifference: return "sym";
  }
  return "?";
}

SetOp parse_set_op(std::string_view name) {
  if (name == "cap" || name == "intersection") return SetOp::Intersection;
  if (name == "cup" || name == "union") return SetOp::Union;
  if (name == "sym" || name == "symdiff" || name == "delta") return SetOp::SymmetricDifference;
  throw std::invalid_argument("unknown set operation '" + std::string(name) + "'");
}

void require_respects(GroundSet ground, SubsetMask s) {
  if (!s.respects(ground.n))
    throw std::invalid_argument("subset has an element outside [" + std::to_string(ground.n) + "]");
}

SetFamily::SetFamily(GroundSet ground, std::vector<SubsetMask> members)
    : ground_(ground), members_(std::move(members)) {
  for (SubsetMask s : members_) require_respects(ground_, s);
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SetFamily::contains(SubsetMask s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

}  // namespace vcu
