#include "cmiso/isogeny.hpp"

#include <algorithm>
#include <stdexcept>

namespace cmiso {

namespace {

// The two integer invariants behind the determinant formula
// n = (a + h*b'/2)^2 + (E/4) b'^2 with
//   h = u1*v2/d2,  E = -(u1^2 v2^2 + 4 v1 v2 u2^2)/d2^2 = (u2 v2/d2)^2 |Delta|.
struct TauInvariants {
    Integer E, h;
};

TauInvariants invariants(const TauPoly& tau) {
    Integer d2 = tau.d2();
    Integer vp = tau.v2() / d2;
    Integer up = tau.u2() / d2;
    Integer E = -(tau.u1() * tau.u1() * vp * vp +
                  4 * tau.v1() * vp * up * tau.u2());
    Integer h = tau.u1() * vp;
    if (E <= 0) throw std::logic_error("invariants: E must be positive");
    return {std::move(E), std::move(h)};
}

void check_pair(const Integer& a, const Integer& bprime) {
    if (gcd(a, bprime) != 1)
        throw std::domain_error("witness pair (a, b') must be coprime and nonzero");
}

}  // namespace

IsogenyMatrix build_matrix(const TauPoly& tau, const Integer& a,
                           const Integer& bprime) {
    check_pair(a, bprime);
    Integer d2 = tau.d2();
    Integer A = (tau.u2() * tau.v1() / d2) * bprime;
    Integer b = (tau.u2() * tau.v2() / d2) * bprime;
    Integer B = a + (tau.u1() * tau.v2() / d2) * bprime;
    IntMatrix2 M(a, A, b, B);
    Integer n = M.det();
    if (n <= 0) throw std::logic_error("build_matrix: determinant not positive");
    return {a, bprime, std::move(M), std::move(n)};
}

Integer degree(const TauPoly& tau, const Integer& a, const Integer& bprime) {
    check_pair(a, bprime);
    auto [E, h] = invariants(tau);
    Rational x(2 * a + h * bprime, 2);
    Rational val = x * x + Rational(E * bprime * bprime, 4);
    if (!val.is_integer() || !val.is_positive())
        throw std::logic_error("degree: closed form did not produce a positive integer");
    return val.num();
}

std::vector<WitnessPair> find_pairs(const TauPoly& tau, const Integer& n) {
    if (n < 1) throw std::domain_error("find_pairs: n must be positive");
    std::vector<WitnessPair> out;
    if (n == 1) out.push_back({1, 0});

    auto [E, h] = invariants(tau);
    Integer four_n = 4 * n;
    auto try_push = [&](const Integer& y, const Integer& bp) {
        Integer num = y - h * bp;
        if (!is_even(num)) return;
        Integer a = num / 2;
        if (gcd(a, bp) == 1) out.push_back({std::move(a), bp});
    };
    for (Integer bp = 1; E * bp * bp <= four_n; ++bp) {
        Integer y;
        if (!is_square(four_n - E * bp * bp, y)) continue;
        try_push(y, bp);
        if (y != 0) try_push(-y, bp);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool has_self_isogeny(const TauPoly& tau, const Integer& n) {
    return !find_pairs(tau, n).empty();
}

SmithDecomp smith_decompose(const IntMatrix2& M) {
    if (M.entry_gcd() != 1)
        throw std::domain_error("smith_decompose: entry gcd must be 1");
    if (M.det() < 1)
        throw std::domain_error("smith_decompose: determinant must be positive");

    // Maintain W = P * M * Q with P, Q unimodular.
    Integer w00 = M.a(), w01 = M.b(), w10 = M.c(), w11 = M.d();
    IntMatrix2 P = IntMatrix2::identity();
    IntMatrix2 Q = IntMatrix2::identity();

    auto swap_rows = [&] {
        std::swap(w00, w10);
        std::swap(w01, w11);
        P = IntMatrix2(0, 1, 1, 0) * P;
    };
    auto swap_cols = [&] {
        std::swap(w00, w01);
        std::swap(w10, w11);
        Q = Q * IntMatrix2(0, 1, 1, 0);
    };
    auto row1_minus = [&](const Integer& q) {
        w10 -= q * w00;
        w11 -= q * w01;
        P = IntMatrix2(1, 0, -q, 1) * P;
    };
    auto col1_minus = [&](const Integer& q) {
        w01 -= q * w00;
        w11 -= q * w10;
        Q = Q * IntMatrix2(1, -q, 0, 1);
    };

    for (;;) {
        while (w10 != 0 || w01 != 0) {
            // smallest nonzero |entry| as pivot; ties resolved in row-major
            // order so the decomposition is reproducible
            int bi = -1, bj = -1;
            Integer best;
            auto consider = [&](int i, int j, const Integer& val) {
                if (val == 0) return;
                Integer av = abs(val);
                if (bi < 0 || av < best) {
                    best = av;
                    bi = i;
                    bj = j;
                }
            };
            consider(0, 0, w00);
            consider(0, 1, w01);
            consider(1, 0, w10);
            consider(1, 1, w11);
            if (bi == 1) swap_rows();
            if (bj == 1) swap_cols();
            if (w10 != 0)
                row1_minus(floor_div(w10, w00));
            else if (w01 != 0)
                col1_minus(floor_div(w01, w00));
        }
        if (w11 % w00 != 0) {
            // merge the diagonal entries and run the gcd reduction again
            w00 += w01;
            w10 += w11;
            Q = Q * IntMatrix2(1, 0, 1, 1);
            continue;
        }
        break;
    }
    if (w00 < 0) {
        w00 = -w00;
        w01 = -w01;
        P = IntMatrix2(-1, 0, 0, 1) * P;
    }
    if (w11 < 0) {
        w10 = -w10;
        w11 = -w11;
        P = IntMatrix2(1, 0, 0, -1) * P;
    }
    if (w00 != 1)
        throw std::logic_error("smith_decompose: first elementary divisor != 1");
    return {P.inverse_unimodular(), Q.inverse_unimodular(), w11};
}

SubgroupGen canonicalize_generator(const Integer& u11, const Integer& u21,
                                   const Integer& n) {
    if (n < 1) throw std::domain_error("generator: order must be positive");
    Integer r1 = mod_nonneg(u11, n);
    Integer r2 = mod_nonneg(u21, n);
    if (gcd3(r1, r2, n) != 1)
        throw std::domain_error("generator does not have exact order n");
    Integer b1 = r1, b2 = r2;
    for (Integer k = 2; k < n; ++k) {
        if (gcd(k, n) != 1) continue;
        Integer c1 = (k * r1) % n;
        Integer c2 = (k * r2) % n;
        if (c1 < b1 || (c1 == b1 && c2 < b2)) {
            b1 = std::move(c1);
            b2 = std::move(c2);
        }
    }
    return {std::move(b1), std::move(b2), n};
}

namespace detail {
SubgroupGen generator_raw(const TauPoly& tau, const Integer& a,
                          const Integer& bprime) {
    IsogenyMatrix im = build_matrix(tau, a, bprime);
    if (im.n < 2)
        throw std::domain_error("subgroup_generator: degree 1 gives the trivial subgroup");
    SmithDecomp sd = smith_decompose(im.M);
    Integer r1 = mod_nonneg(sd.U.a(), im.n);
    Integer r2 = mod_nonneg(sd.U.c(), im.n);
    return {std::move(r1), std::move(r2), im.n};
}
}  // namespace detail

SubgroupGen subgroup_generator(const TauPoly& tau, const Integer& a,
                               const Integer& bprime) {
    SubgroupGen raw = detail::generator_raw(tau, a, bprime);
    return canonicalize_generator(raw.u11, raw.u21, raw.n);
}

IntMatrix2 lattice_hnf(const Lattice& L, const Integer& scale) {
    if (scale < 1) throw std::domain_error("lattice_hnf: scale must be positive");
    if (L.gens.size() < 2)
        throw std::domain_error("lattice_hnf: need at least two generators");
    for (std::size_t i = 1; i < L.gens.size(); ++i)
        if (L.gens[i].ctx() != L.gens[0].ctx())
            throw std::domain_error("lattice_hnf: mixed tau contexts");

    struct Row {
        Integer p, q;
    };
    std::vector<Row> rows;
    rows.reserve(L.gens.size());
    for (const auto& g : L.gens) {
        Rational p = g.x() * Rational(scale);
        Rational q = g.y() * Rational(scale);
        if (!p.is_integer() || !q.is_integer())
            throw std::domain_error("lattice_hnf: scale does not clear denominators");
        rows.push_back({p.num(), q.num()});
    }

    // Fold a Bezout combination (a, b0) with a = gcd of first coordinates.
    Integer a = 0, b0 = 0;
    for (const auto& r : rows) {
        if (r.p == 0) continue;
        ExtGcd e = extended_gcd(a, r.p);
        b0 = e.x * b0 + e.y * r.q;
        a = e.g;
    }
    if (a == 0)
        throw std::domain_error("lattice_hnf: generators do not span rank 2");
    Integer c = 0;
    for (const auto& r : rows) c = gcd(c, r.q - (r.p / a) * b0);
    if (c == 0)
        throw std::domain_error("lattice_hnf: generators do not span rank 2");
    return IntMatrix2(a, mod_nonneg(b0, c), 0, c);
}

bool verify_self_isogeny_oracle(const TauPoly& tau, const SubgroupGen& gen) {
    if (gen.n < 1) throw std::domain_error("oracle: order must be positive");
    if (gcd3(gen.u11, gen.u21, gen.n) != 1)
        throw std::domain_error("oracle: generator order mismatch");
    if (gen.n == 1) return true;  // trivial subgroup, L' = L

    Lattice L{{QFieldElement(Rational(1), Rational(0), tau),
               QFieldElement(Rational(0), Rational(1), tau),
               QFieldElement(Rational(gen.u11, gen.n), Rational(gen.u21, gen.n),
                             tau)}};
    IntMatrix2 basis = lattice_hnf(L, gen.n);
    QFieldElement w1(Rational(basis.a(), gen.n), Rational(basis.b(), gen.n), tau);
    QFieldElement w2(Rational(0), Rational(basis.d(), gen.n), tau);
    QFieldElement z = qfield_div(w2, w1);
    if (z.y().is_negative()) z = qfield_div(w1, w2);
    if (!z.y().is_positive())
        throw std::logic_error("oracle: degenerate lattice quotient");
    return is_isomorphic(minimal_poly(z), tau);
}

}  // namespace cmiso
