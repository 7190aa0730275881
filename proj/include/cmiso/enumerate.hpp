#pragma once

#include <vector>

#include "cmiso/tau.hpp"

namespace cmiso {

// Refuse enumerations beyond this; the search is exhaustive and exact but
// not meant for bulk computation.
inline const Integer kEnumerationLimit = 1000000;

// All curves (reduced tau, up to isomorphism) admitting a cyclic subgroup C
// of order n with E/C isomorphic to E. Sorted by (u1, u2, v1, v2). Every
// output is re-verified against the lattice oracle.
std::vector<TauPoly> curves_with_self_isogeny(const Integer& n);

struct PrimeCountResult {
    Integer count;
    bool ok;  // count == p + 1
};

// Counts curves with a cyclic degree-p self-isogeny and compares with p+1.
// Rejects composite p.
PrimeCountResult prime_count_check(const Integer& p);

}  // namespace cmiso
