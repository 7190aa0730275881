#pragma once

#include <string>
#include <vector>

#include "cmiso/matrix2.hpp"
#include "cmiso/qfield.hpp"
#include "cmiso/tau.hpp"

namespace cmiso {

// A coprime witness pair (a, b'). Canonical orientation is b' > 0, with
// (1, 0) for the trivial degree-1 case.
struct WitnessPair {
    Integer a, bprime;

    friend bool operator==(const WitnessPair& p, const WitnessPair& q) {
        return p.a == q.a && p.bprime == q.bprime;
    }
    friend bool operator<(const WitnessPair& p, const WitnessPair& q) {
        if (p.bprime != q.bprime) return p.bprime < q.bprime;
        return p.a < q.a;
    }
};

// The matrix M = [[a, A], [b, B]] attached to (tau, a, b') with
//   A = (u2*v1/d2)*b',  b = (u2*v2/d2)*b',  B = a + (u1*v2/d2)*b',
// and its degree n = det M > 0.
struct IsogenyMatrix {
    Integer a, bprime;
    IntMatrix2 M;
    Integer n;
};

IsogenyMatrix build_matrix(const TauPoly& tau, const Integer& a,
                           const Integer& bprime);

// Degree through the closed form (a + (u1 v2 / 2 d2) b')^2 - (u2^2 v2^2
// Delta / 4 d2^2) b'^2, evaluated in exact rationals. Always equals
// det(build_matrix(...).M); the two routes are kept separate on purpose.
Integer degree(const TauPoly& tau, const Integer& a, const Integer& bprime);

// All canonical coprime pairs of degree n. Empty result means no cyclic
// degree-n self-isogeny exists. Sorted by (b', a).
std::vector<WitnessPair> find_pairs(const TauPoly& tau, const Integer& n);

// True iff a cyclic subgroup C of order n with E/C isomorphic to E exists.
// n = 1 is the trivial subgroup and counts as true.
bool has_self_isogeny(const TauPoly& tau, const Integer& n);

// M = U * diag(1, n) * V with U, V unimodular; requires entry gcd 1 and
// det M = n >= 1. Deterministic pivoting makes U reproducible.
struct SmithDecomp {
    IntMatrix2 U, V;
    Integer n;
};

SmithDecomp smith_decompose(const IntMatrix2& M);

// Generator (u11 + u21*tau)/n of the cyclic kernel, canonicalized to the
// lexicographically least unit multiple of (u11 mod n, u21 mod n).
struct SubgroupGen {
    Integer u11, u21, n;

    std::string text() const {
        return u11.str() + "," + u21.str() + "," + n.str();
    }

    friend bool operator==(const SubgroupGen& g, const SubgroupGen& h) {
        return g.u11 == h.u11 && g.u21 == h.u21 && g.n == h.n;
    }
};

SubgroupGen canonicalize_generator(const Integer& u11, const Integer& u21,
                                   const Integer& n);

SubgroupGen subgroup_generator(const TauPoly& tau, const Integer& a,
                               const Integer& bprime);

namespace detail {
// SNF first column reduced mod n, without the canonical unit scan. Same
// subgroup as subgroup_generator; used where the O(n) canonicalization
// would be wasted.
SubgroupGen generator_raw(const TauPoly& tau, const Integer& a,
                          const Integer& bprime);
}  // namespace detail

// Rank-2 Z-module inside Q(tau) given by generators.
struct Lattice {
    std::vector<QFieldElement> gens;
};

// Unique upper-triangular Hermite basis [[p, q], [0, r]] (p, r > 0,
// 0 <= q < r) of the integer coordinate module of L at denominator `scale`:
// rows are the coordinates of scale*g relative to (1, tau).
IntMatrix2 lattice_hnf(const Lattice& L, const Integer& scale);

// Decides C/L' iso C/L for L = Z + Z*tau and L' = L + Z*(u11+u21*tau)/n,
// independently of the matrix machinery: Hermite basis of L', quotient
// tau'' = w2/w1 oriented to the upper half plane, minimal polynomial,
// fundamental-domain comparison.
bool verify_self_isogeny_oracle(const TauPoly& tau, const SubgroupGen& gen);

}  // namespace cmiso
