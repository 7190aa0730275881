#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cmiso/matrix2.hpp"
#include "cmiso/rational.hpp"

namespace cmiso {

// A CM point of the upper half plane, represented exactly by its minimal
// polynomial: tau^2 = u*tau + v with u = u1/u2, v = v1/v2 in lowest terms,
// u2, v2 > 0 and discriminant u^2 + 4v < 0. tau itself is the root
// (u + i*sqrt(|Delta|))/2 with positive imaginary part.
class TauPoly {
public:
    TauPoly(const Rational& u, const Rational& v);

    static TauPoly from_parts(const Integer& u1, const Integer& u2,
                              const Integer& v1, const Integer& v2);

    // Parses "u1/u2,v1/v2"; integer shorthand allowed per component
    // ("0,-1" means "0/1,-1/1").
    static TauPoly parse(std::string_view text);

    const Integer& u1() const { return u_.num(); }
    const Integer& u2() const { return u_.den(); }
    const Integer& v1() const { return v_.num(); }
    const Integer& v2() const { return v_.den(); }
    const Rational& u() const { return u_; }
    const Rational& v() const { return v_; }

    Integer d2() const { return gcd(u_.den(), v_.den()); }
    Rational discriminant() const { return u_ * u_ + Rational(4) * v_; }

    // Canonical text form with explicit denominators, e.g. "-1/1,-3/2".
    std::string text() const;

    friend bool operator==(const TauPoly& a, const TauPoly& b) {
        return a.u_ == b.u_ && a.v_ == b.v_;
    }
    friend bool operator!=(const TauPoly& a, const TauPoly& b) { return !(a == b); }

    // Lexicographic on (u1, u2, v1, v2); the library's canonical ordering.
    friend bool operator<(const TauPoly& a, const TauPoly& b);

private:
    Rational u_, v_;
};

// Generators of the modular group action on minimal polynomials.
enum class TauStep { T, TInverse, S };  // tau+1, tau-1, -1/tau

TauPoly transform_tau(const TauPoly& tau, TauStep step);

// tau -> tau + k in one step; the minimal polynomial shifts to
// (u + 2k, v - u*k - k^2).
TauPoly translate_tau(const TauPoly& tau, const Integer& k);

// One reduction move, recorded for replay. shift = 0 never occurs for
// Translate entries.
struct ReductionStep {
    enum class Kind { Translate, Invert };
    Kind kind;
    Integer amount;  // Translate only: tau -> tau + amount
};

// A word in T and S together with the SL2(Z) matrix it multiplies out to
// (acting by Mobius transformation on tau).
struct UnimodularTransform {
    std::vector<ReductionStep> word;
    IntMatrix2 matrix = IntMatrix2::identity();
};

// Replays the word step by step.
TauPoly apply_transform(const TauPoly& tau, const UnimodularTransform& t);

struct ReducedTau {
    TauPoly tau;
    UnimodularTransform transform;
};

// True iff tau lies in the fundamental domain G with the canonical boundary
// choice: -1 <= u < 1, -v >= 1, and on the arc -v = 1 additionally u <= 0.
bool is_reduced(const TauPoly& tau);

// Gauss reduction into G. The returned transform satisfies
// apply_transform(tau, transform) == reduced tau.
ReducedTau reduce_to_G(const TauPoly& tau);

// Lattice isomorphism of the associated elliptic curves: equality of the
// reduced representatives.
bool is_isomorphic(const TauPoly& a, const TauPoly& b);

}  // namespace cmiso
