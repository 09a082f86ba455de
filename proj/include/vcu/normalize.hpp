#pragma once

#include "vcu/family.hpp"

namespace vcu {

/// i-compression (i is 0-based): S becomes S \ {i} unless S \ {i} is already a member.
SetFamily compress_at(const SetFamily& a, int i);

/// Repeated sweeps i = 0..n-1 of compress_at until a sweep changes nothing.
/// The result is downward closed and has |a| members.
SetFamily compress(const SetFamily& a);

bool is_downward_closed(const SetFamily& a);

/// (i,j)-shift for i < j (0-based): replace j by i in S when i is not in S,
/// j is in S, and the replacement is not already a member.
SetFamily shift_at(const SetFamily& a, int i, int j);

/// Repeated sweeps over all pairs i < j in lexicographic order until stable.
SetFamily shift(const SetFamily& a);

bool is_shifted(const SetFamily& a);

}  // namespace vcu
