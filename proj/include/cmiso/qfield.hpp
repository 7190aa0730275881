#pragma once

#include <stdexcept>
#include <string>

#include "cmiso/rational.hpp"
#include "cmiso/tau.hpp"

namespace cmiso {

// Element x + y*tau of the quadratic field Q(tau). Each element carries its
// ambient TauPoly so that operations on elements of different fields are
// rejected rather than silently reduced by the wrong relation.
class QFieldElement {
public:
    QFieldElement(Rational x, Rational y, TauPoly ctx)
        : x_(std::move(x)), y_(std::move(y)), ctx_(std::move(ctx)) {}

    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }
    const TauPoly& ctx() const { return ctx_; }

    bool is_zero() const { return x_.is_zero() && y_.is_zero(); }

    // z * conj(z) = x^2 + u*x*y - v*y^2; positive definite since Delta < 0.
    Rational norm() const {
        return x_ * x_ + ctx_.u() * x_ * y_ - ctx_.v() * y_ * y_;
    }

    friend bool operator==(const QFieldElement& a, const QFieldElement& b) {
        return a.ctx_ == b.ctx_ && a.x_ == b.x_ && a.y_ == b.y_;
    }
    friend bool operator!=(const QFieldElement& a, const QFieldElement& b) {
        return !(a == b);
    }

private:
    Rational x_, y_;
    TauPoly ctx_;
};

namespace detail {
inline void require_same_ctx(const QFieldElement& a, const QFieldElement& b) {
    if (a.ctx() != b.ctx())
        throw std::domain_error("qfield: mismatched tau contexts");
}
}  // namespace detail

inline QFieldElement qfield_add(const QFieldElement& a, const QFieldElement& b) {
    detail::require_same_ctx(a, b);
    return {a.x() + b.x(), a.y() + b.y(), a.ctx()};
}

inline QFieldElement qfield_sub(const QFieldElement& a, const QFieldElement& b) {
    detail::require_same_ctx(a, b);
    return {a.x() - b.x(), a.y() - b.y(), a.ctx()};
}

// (x1+y1*tau)(x2+y2*tau) reduced by tau^2 = u*tau + v:
//   (x1*x2 + y1*y2*v) + (x1*y2 + x2*y1 + y1*y2*u)*tau
inline QFieldElement qfield_mul(const QFieldElement& a, const QFieldElement& b) {
    detail::require_same_ctx(a, b);
    const Rational& u = a.ctx().u();
    const Rational& v = a.ctx().v();
    Rational x = a.x() * b.x() + a.y() * b.y() * v;
    Rational y = a.x() * b.y() + b.x() * a.y() + a.y() * b.y() * u;
    return {std::move(x), std::move(y), a.ctx()};
}

// 1/z = conj(z)/norm(z) with conj(x + y*tau) = (x + u*y) - y*tau.
inline QFieldElement qfield_inverse(const QFieldElement& z) {
    if (z.is_zero()) throw std::domain_error("qfield: inverse of zero");
    Rational n = z.norm();
    return {(z.x() + z.ctx().u() * z.y()) / n, -z.y() / n, z.ctx()};
}

inline QFieldElement qfield_div(const QFieldElement& a, const QFieldElement& b) {
    detail::require_same_ctx(a, b);
    return qfield_mul(a, qfield_inverse(b));
}

// Minimal polynomial of z = x + y*tau over Q for y != 0, as a TauPoly:
// z^2 = u'z + v' with u' = 2x + u*y, v' = v*y^2 - x^2 - u*x*y. The TauPoly
// denotes the upper-half-plane root, so callers must orient z (y > 0) first
// when the root itself matters.
inline TauPoly minimal_poly(const QFieldElement& z) {
    if (z.y().is_zero())
        throw std::domain_error("minimal_poly: element is rational");
    const Rational& u = z.ctx().u();
    const Rational& v = z.ctx().v();
    Rational uu = Rational(2) * z.x() + u * z.y();
    Rational vv = v * z.y() * z.y() - z.x() * z.x() - u * z.x() * z.y();
    return TauPoly(uu, vv);
}

}  // namespace cmiso
