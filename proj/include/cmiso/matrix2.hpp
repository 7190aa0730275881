#pragma once

#include <ostream>
#include <stdexcept>
#include <string>

#include "cmiso/integer.hpp"

namespace cmiso {

// 2x2 integer matrix, row-major [[a, b], [c, d]]. Immutable value type.
class IntMatrix2 {
public:
    IntMatrix2() : a_(0), b_(0), c_(0), d_(0) {}
    IntMatrix2(Integer a, Integer b, Integer c, Integer d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    static IntMatrix2 identity() { return IntMatrix2(1, 0, 0, 1); }

    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }
    const Integer& c() const { return c_; }
    const Integer& d() const { return d_; }

    Integer det() const { return a_ * d_ - b_ * c_; }
    Integer trace() const { return a_ + d_; }
    Integer entry_gcd() const { return gcd4(a_, b_, c_, d_); }
    bool is_unimodular() const {
        Integer dt = det();
        return dt == 1 || dt == -1;
    }

    friend IntMatrix2 operator*(const IntMatrix2& m, const IntMatrix2& n) {
        return IntMatrix2(m.a_ * n.a_ + m.b_ * n.c_, m.a_ * n.b_ + m.b_ * n.d_,
                          m.c_ * n.a_ + m.d_ * n.c_, m.c_ * n.b_ + m.d_ * n.d_);
    }

    friend bool operator==(const IntMatrix2& m, const IntMatrix2& n) {
        return m.a_ == n.a_ && m.b_ == n.b_ && m.c_ == n.c_ && m.d_ == n.d_;
    }
    friend bool operator!=(const IntMatrix2& m, const IntMatrix2& n) {
        return !(m == n);
    }

    // Exact inverse, defined only when det = +-1.
    IntMatrix2 inverse_unimodular() const {
        Integer dt = det();
        if (dt == 1) return IntMatrix2(d_, -b_, -c_, a_);
        if (dt == -1) return IntMatrix2(-d_, b_, c_, -a_);
        throw std::domain_error("inverse_unimodular: determinant is not a unit");
    }

    std::string str() const {
        return "[[" + a_.str() + "," + b_.str() + "],[" + c_.str() + "," +
               d_.str() + "]]";
    }

    friend std::ostream& operator<<(std::ostream& os, const IntMatrix2& m) {
        return os << m.str();
    }

private:
    Integer a_, b_, c_, d_;
};

inline Integer mat_det(const IntMatrix2& m) { return m.det(); }
inline Integer mat_trace(const IntMatrix2& m) { return m.trace(); }
inline IntMatrix2 mat_mul(const IntMatrix2& m, const IntMatrix2& n) { return m * n; }

}  // namespace cmiso
