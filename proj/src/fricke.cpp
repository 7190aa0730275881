#include "cmiso/fricke.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cmiso/qforms.hpp"

namespace cmiso {

bool fricke_matrix_test(const IntMatrix2& M) {
    Integer n = M.det();
    if (n < 2) return false;
    return M.trace() % n == 0;
}

bool fricke_test(const TauPoly& tau, const Integer& a, const Integer& bprime) {
    return fricke_matrix_test(build_matrix(tau, a, bprime).M);
}

bool msquared_test(const IntMatrix2& M, const Integer& n) {
    if (M.det() != n)
        throw std::domain_error("msquared_test: det M != n");
    if (M.entry_gcd() != 1)
        throw std::domain_error("msquared_test: entry gcd must be 1");
    IntMatrix2 M2 = M * M;
    return M2.a() % n == 0 && M2.b() % n == 0 && M2.c() % n == 0 &&
           M2.d() % n == 0;
}

const char* fricke_case_name(FrickeCase c) {
    switch (c) {
        case FrickeCase::A: return "A";
        case FrickeCase::B: return "B";
        case FrickeCase::C2: return "C2";
        case FrickeCase::D3: return "D3";
    }
    return "?";
}

FrickeClassification classify_fricke_n(const TauPoly& tau) {
    Integer d2 = tau.d2();
    Integer vp = tau.v2() / d2;
    Integer up = tau.u2() / d2;
    Integer E = -(tau.u1() * tau.u1() * vp * vp +
                  4 * tau.v1() * vp * up * tau.u2());
    Integer h = tau.u1() * vp;

    FrickeClassification cls;
    if (is_even(h)) {
        // 2*d2 | u1*v2: E is divisible by 4 and the level is E/4, except
        // that E = 4 lands in the special n = 2 case.
        if (E % 4 != 0)
            throw std::logic_error("classify: E not divisible by 4 in the even case");
        Integer K = E / 4;
        Integer h2 = h / 2;
        if (K == 1) {
            cls.n = 2;
            cls.case_tag = FrickeCase::C2;
            cls.witnesses = {{-1 - h2, 1}, {1 - h2, 1}};
        } else {
            cls.n = K;
            cls.case_tag = FrickeCase::A;
            cls.witnesses = {{-h2, 1}};
        }
    } else {
        if (E == 3) {
            cls.n = 3;
            cls.case_tag = FrickeCase::D3;
            cls.witnesses = {{(-3 - h) / 2, 1}, {(3 - h) / 2, 1}};
        } else {
            cls.n = E;
            cls.case_tag = FrickeCase::B;
            cls.witnesses = {{-h, 2}};
        }
    }
    for (const auto& w : cls.witnesses) {
        if (degree(tau, w.a, w.bprime) != cls.n ||
            !fricke_test(tau, w.a, w.bprime))
            throw std::logic_error("classify: witness failed its own test");
    }
    return cls;
}

Integer nu(const Integer& n) {
    if (n < 2) throw std::domain_error("nu: n must be >= 2");
    if (n == 2 || n == 3) return 2;
    if (n % 4 == 3) return class_number(-n) + class_number(-4 * n);
    return class_number(-4 * n);
}

namespace {

// All reduced tau with h-parity `even` satisfying
// u1^2 v2^2 + 4 v1 v2 u2^2 = -Etarget * d2^2.
template <typename Fn>
void scan_level_curves(const Integer& Etarget, bool even, Fn&& emit) {
    for (Integer u2 = 1; 3 * u2 * u2 <= Etarget; ++u2) {
        for (Integer v2 = 1; 3 * v2 * v2 <= Etarget; ++v2) {
            Integer d2 = gcd(u2, v2);
            Integer w = u2 * (v2 / d2);
            if (3 * w * w > Etarget) continue;
            Integer den = 4 * v2 * u2 * u2;
            for (Integer u1 = -u2; u1 < u2; ++u1) {
                if (gcd(u1, u2) != 1) continue;
                Integer num = Etarget * d2 * d2 + u1 * u1 * v2 * v2;
                if (num % den != 0) continue;
                Integer v1 = -(num / den);
                if (gcd(v1, v2) != 1) continue;
                if (is_even(u1 * (v2 / d2)) != even) continue;
                TauPoly tau = TauPoly::from_parts(u1, u2, v1, v2);
                if (!is_reduced(tau)) continue;
                emit(tau);
            }
        }
    }
}

}  // namespace

std::vector<FixedPoint> enumerate_fixed_points(const Integer& n) {
    if (n < 2)
        throw std::domain_error("enumerate_fixed_points: n must be >= 2");

    // Levels n = 2 and n = 3 are reachable both through the generic case
    // (E = 4n) and through their special cases (E = 4 resp. E = 3).
    std::vector<std::pair<Integer, bool>> targets;
    targets.emplace_back(4 * n, true);
    if (n == 2)
        targets.emplace_back(4, true);
    else if (n == 3)
        targets.emplace_back(3, false);
    else
        targets.emplace_back(n, false);

    std::set<TauPoly> seen;
    std::vector<FixedPoint> out;
    for (const auto& [Etarget, even] : targets) {
        scan_level_curves(Etarget, even, [&](const TauPoly& tau) {
            if (!seen.insert(tau).second) return;
            FrickeClassification cls = classify_fricke_n(tau);
            if (cls.n != n)
                throw std::logic_error("enumerate_fixed_points: level mismatch");
            // one subgroup class per curve; the enumeration asserts it
            SubgroupGen gen = subgroup_generator(tau, cls.witnesses.front().a,
                                                 cls.witnesses.front().bprime);
            for (std::size_t i = 1; i < cls.witnesses.size(); ++i) {
                SubgroupGen other = subgroup_generator(tau, cls.witnesses[i].a,
                                                       cls.witnesses[i].bprime);
                if (!(other == gen))
                    throw std::logic_error(
                        "enumerate_fixed_points: distinct subgroup classes on one curve");
            }
            if (!verify_self_isogeny_oracle(tau, gen))
                throw std::logic_error(
                    "enumerate_fixed_points: oracle rejected fixed point");
            out.push_back({tau, std::move(gen)});
        });
    }
    std::sort(out.begin(), out.end(),
              [](const FixedPoint& a, const FixedPoint& b) { return a.tau < b.tau; });
    return out;
}

}  // namespace cmiso
