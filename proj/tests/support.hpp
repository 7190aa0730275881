#pragma once

// Shared deterministic generators for the property tests.

#include <random>

#include "cmiso/matrix2.hpp"
#include "cmiso/rational.hpp"
#include "cmiso/tau.hpp"

namespace testutil {

using cmiso::Integer;
using cmiso::IntMatrix2;
using cmiso::Rational;
using cmiso::TauPoly;

using Rng = std::mt19937_64;

inline Integer random_int(Rng& rng, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return Integer(d(rng));
}

inline Rational random_rational(Rng& rng, long bound = 12) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    return Rational(Integer(num(rng)), Integer(den(rng)));
}

inline Rational random_nonzero_rational(Rng& rng, long bound = 12) {
    for (;;) {
        Rational r = random_rational(rng, bound);
        if (!r.is_zero()) return r;
    }
}

// A valid CM point with small entries; not necessarily reduced.
inline TauPoly random_tau(Rng& rng, long size = 4) {
    std::uniform_int_distribution<long> dv(1, size);
    for (;;) {
        long u2 = dv(rng);
        long v2 = dv(rng);
        std::uniform_int_distribution<long> du(-3 * u2, 3 * u2 - 1);
        std::uniform_int_distribution<long> dn(-6 * v2, -1);
        long u1 = du(rng);
        long v1 = dn(rng);
        // Delta = (u1/u2)^2 + 4 v1/v2 < 0
        if (Integer(u1) * u1 * v2 + 4 * Integer(v1) * u2 * u2 >= 0) continue;
        return TauPoly(Rational(Integer(u1), Integer(u2)),
                       Rational(Integer(v1), Integer(v2)));
    }
}

// Applies a short random word in T, T^-1, S.
inline TauPoly random_sl2_image(Rng& rng, const TauPoly& tau, int steps = 6) {
    using cmiso::TauStep;
    TauPoly cur = tau;
    std::uniform_int_distribution<int> d(0, 2);
    for (int i = 0; i < steps; ++i) {
        switch (d(rng)) {
            case 0: cur = transform_tau(cur, TauStep::T); break;
            case 1: cur = transform_tau(cur, TauStep::TInverse); break;
            default: cur = transform_tau(cur, TauStep::S); break;
        }
    }
    return cur;
}

inline IntMatrix2 random_matrix(Rng& rng, long bound = 15) {
    std::uniform_int_distribution<long> d(-bound, bound);
    return IntMatrix2(Integer(d(rng)), Integer(d(rng)), Integer(d(rng)),
                      Integer(d(rng)));
}

}  // namespace testutil
