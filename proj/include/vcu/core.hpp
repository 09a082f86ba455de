#pragma once

#include <span>

#include "vcu/family.hpp"

namespace vcu {

/// {S & y : S in a}, over the same ground set.
SetFamily trace(const SetFamily& a, SubsetMask y);

/// True iff every subset of `y` arises as S & y for some member S.
bool is_shattered(const SetFamily& a, SubsetMask y);

/// All shattered subsets. Downward closed. Throws on the empty family.
SetFamily shattered_collection(const SetFamily& a);

/// Size of the largest shattered set; -1 for the empty family.
int vc_dimension(const SetFamily& a);

/// All combinations S1 op ... op Sk with Si in `a` (repetition allowed).
SetFamily kfold(const SetFamily& a, SetOp op, int k);

/// {S1 op ... op Sk : Si in families[i]}.
SetFamily kfold_multi(std::span<const SetFamily> families, SetOp op);

/// True iff every union of k members (repetition allowed) has at most `bound` elements.
bool is_kwise_union(const SetFamily& a, int k, int bound);

/// True iff every intersection of k members has at least `t` elements.
bool is_kwise_intersecting(const SetFamily& a, int k, int t);

/// {[n] \ S : S in a}.
SetFamily complement_family(const SetFamily& a);

/// Image of `a` under the relabelling element i -> perm[i] (0-based).
SetFamily relabel(const SetFamily& a, std::span<const int> perm);

}  // namespace vcu
