#include "cmiso/tau.hpp"

#include <stdexcept>

namespace cmiso {

TauPoly::TauPoly(const Rational& u, const Rational& v) : u_(u), v_(v) {
    if (discriminant() >= Rational(0))
        throw std::domain_error("tau: discriminant u^2 + 4v must be negative");
}

TauPoly TauPoly::from_parts(const Integer& u1, const Integer& u2,
                            const Integer& v1, const Integer& v2) {
    return TauPoly(Rational(u1, u2), Rational(v1, v2));
}

TauPoly TauPoly::parse(std::string_view text) {
    auto comma = text.find(',');
    if (comma == std::string_view::npos)
        throw std::domain_error("tau: expected \"u1/u2,v1/v2\", got '" +
                                std::string(text) + "'");
    auto parse_fraction = [](std::string_view part) {
        auto slash = part.find('/');
        if (slash == std::string_view::npos)
            return Rational(parse_integer(part));
        Integer num = parse_integer(part.substr(0, slash));
        Integer den = parse_integer(part.substr(slash + 1));
        if (den == 0) throw std::domain_error("tau: zero denominator");
        return Rational(num, den);
    };
    Rational u = parse_fraction(text.substr(0, comma));
    Rational v = parse_fraction(text.substr(comma + 1));
    return TauPoly(u, v);
}

std::string TauPoly::text() const {
    return u1().str() + "/" + u2().str() + "," + v1().str() + "/" + v2().str();
}

bool operator<(const TauPoly& a, const TauPoly& b) {
    if (a.u1() != b.u1()) return a.u1() < b.u1();
    if (a.u2() != b.u2()) return a.u2() < b.u2();
    if (a.v1() != b.v1()) return a.v1() < b.v1();
    return a.v2() < b.v2();
}

TauPoly translate_tau(const TauPoly& tau, const Integer& k) {
    // sigma = tau + k satisfies sigma^2 = (u + 2k) sigma + (v - u*k - k^2)
    Rational u = tau.u();
    Rational v = tau.v();
    Rational kk{k};
    return TauPoly(u + Rational(2) * kk, v - u * kk - kk * kk);
}

static TauPoly invert_tau(const TauPoly& tau) {
    // sigma = -1/tau satisfies sigma^2 = (u/v) sigma + 1/v
    return TauPoly(tau.u() / tau.v(), Rational(1) / tau.v());
}

TauPoly transform_tau(const TauPoly& tau, TauStep step) {
    switch (step) {
        case TauStep::T:
            return translate_tau(tau, 1);
        case TauStep::TInverse:
            return translate_tau(tau, -1);
        case TauStep::S:
            return invert_tau(tau);
    }
    throw std::logic_error("transform_tau: bad step");
}

TauPoly apply_transform(const TauPoly& tau, const UnimodularTransform& t) {
    TauPoly cur = tau;
    for (const auto& step : t.word) {
        if (step.kind == ReductionStep::Kind::Translate)
            cur = translate_tau(cur, step.amount);
        else
            cur = invert_tau(cur);
    }
    return cur;
}

bool is_reduced(const TauPoly& tau) {
    // Re(tau) = u/2 in [-1/2, 1/2)  <=>  -1 <= u < 1
    const Rational& u = tau.u();
    if (u < Rational(-1) || u >= Rational(1)) return false;
    // |tau|^2 = -v >= 1
    Rational mv = -tau.v();
    if (mv < Rational(1)) return false;
    // boundary arc |tau| = 1: keep the representative with Re <= 0
    if (mv == Rational(1) && u > Rational(0)) return false;
    return true;
}

ReducedTau reduce_to_G(const TauPoly& tau) {
    // Gauss reduction: translate u into [-1, 1), invert while |tau| < 1.
    // Terminates: under the correspondence with integral quadratic forms,
    // each inversion strictly decreases the leading form coefficient.
    TauPoly cur = tau;
    UnimodularTransform t;
    auto push_translate = [&](const Integer& k) {
        t.word.push_back({ReductionStep::Kind::Translate, k});
        // tau -> tau + k is [[1, k], [0, 1]]
        t.matrix = IntMatrix2(1, k, 0, 1) * t.matrix;
        cur = translate_tau(cur, k);
    };
    auto push_invert = [&] {
        t.word.push_back({ReductionStep::Kind::Invert, 0});
        // tau -> -1/tau is [[0, -1], [1, 0]]
        t.matrix = IntMatrix2(0, -1, 1, 0) * t.matrix;
        cur = invert_tau(cur);
    };

    for (;;) {
        Integer k = ((cur.u() + Rational(1)) / Rational(2)).floor();
        if (k != 0) push_translate(-k);
        if (-cur.v() < Rational(1))
            push_invert();
        else
            break;
    }
    if (-cur.v() == Rational(1) && cur.u() > Rational(0)) push_invert();
    return {cur, std::move(t)};
}

bool is_isomorphic(const TauPoly& a, const TauPoly& b) {
    return reduce_to_G(a).tau == reduce_to_G(b).tau;
}

}  // namespace cmiso
