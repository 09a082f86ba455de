#pragma once

#include <vector>

#include "vcu/family.hpp"

namespace vcu {

/// All subsets of [n] with at most d elements.
SetFamily lowsets(int n, int d);

/// All subsets of [n] with at least n - d elements.
SetFamily highsets(int n, int d);

/// {L | H : L within the first n-r elements with |L| <= i, H within the last r elements}.
/// Downward closed, 2^r * binom_leq(n-r, i) members; every k members have union
/// of size at most k*i + r.
SetFamily family_a_ri(int n, int r, int i);

/// Sets closed downward along each residue class mod d: x in S and x > d
/// (1-based) imply x - d in S.
SetFamily mod_d_family(int n, int d);

/// Length-prefix code of a member of mod_d_family: counts[c] is how many
/// elements of residue class c+1 (in increasing order) the set contains.
struct ModDCode {
  std::vector<int> counts;
  friend bool operator==(const ModDCode&, const ModDCode&) = default;
};

/// Largest admissible count for residue class c (0-based), i.e. the chain length.
int mod_d_chain_length(int n, int d, int c);

ModDCode mod_d_encode(SubsetMask s, int n, int d);
SubsetMask mod_d_decode(const ModDCode& code, int n, int d);

/// {empty, [1], [2], ..., [n]}.
SetFamily complete_chain(int n);

/// The full cube 2^[n] without [1] and [n].
SetFamily cube_minus_two(int n);

/// 2^[n].
SetFamily full_cube(int n);

}  // namespace vcu
