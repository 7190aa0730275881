#pragma once

#include <vector>

#include "cmiso/isogeny.hpp"

namespace cmiso {

// det M >= 2 and det M | trace M: the matrix-level fixed-point criterion.
bool fricke_matrix_test(const IntMatrix2& M);

// [E, C_{a,b'}] is a fixed point of the Fricke involution w_n on Y0(n),
// n = det M.
bool fricke_test(const TauPoly& tau, const Integer& a, const Integer& bprime);

// Equivalent criterion M^2 = 0 mod n; requires det M = n and entry gcd 1.
bool msquared_test(const IntMatrix2& M, const Integer& n);

enum class FrickeCase { A, B, C2, D3 };

const char* fricke_case_name(FrickeCase c);

// The unique level n >= 2 at which E carries a Fricke fixed point, with the
// realizing case and its canonical witness pairs.
struct FrickeClassification {
    Integer n;
    FrickeCase case_tag;
    std::vector<WitnessPair> witnesses;
};

FrickeClassification classify_fricke_n(const TauPoly& tau);

struct FixedPoint {
    TauPoly tau;
    SubgroupGen gen;
};

// All fixed points of w_n on Y0(n), as (reduced tau, canonical generator)
// pairs, sorted by tau. Count always equals nu(n).
std::vector<FixedPoint> enumerate_fixed_points(const Integer& n);

// Fixed point count of w_n: 2 for n in {2,3}; otherwise h(-n) + h(-4n) when
// n = 3 mod 4 and h(-4n) else.
Integer nu(const Integer& n);

}  // namespace cmiso
