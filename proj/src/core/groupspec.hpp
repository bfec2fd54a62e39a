#pragma once

#include <string>

#include "group.hpp"

namespace psh {

// Builders for the small spec language used by the CLI and the C API:
//   cyclic:n     one n-cycle on n points
//   sym:n        symmetric group on n points
//   dihedral:n   rotation + reflection on n points (n >= 3)
//   product:a,b  direct product of two cyclic groups on a+b points
GroupPtr group_from_spec(const std::string& spec, int cap = kDefaultCap);

// Canonical descending chain G = N_0 > N_1 > ... > N_r = 1 of subgroups
// normal in G, chosen greedily by maximal order (ties by member list). The
// chain length r is the maximal available depth.
std::vector<Subgroup> canonical_normal_chain(GroupPtr g);

}  // namespace psh
