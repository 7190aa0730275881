#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace cmiso {

// Arbitrary-precision integer. All arithmetic in the library is exact;
// nothing in the decision path ever touches floating point.
using Integer = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

inline Integer gcd3(const Integer& a, const Integer& b, const Integer& c) {
    return gcd(gcd(a, b), c);
}

inline Integer gcd4(const Integer& a, const Integer& b, const Integer& c,
                    const Integer& d) {
    return gcd(gcd(a, b), gcd(c, d));
}

// cpp_int's % truncates toward zero; these round toward -inf.
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Integer floor_mod(const Integer& a, const Integer& b) {
    return a - floor_div(a, b) * b;
}

// Least nonnegative residue of a mod n, n > 0.
inline Integer mod_nonneg(const Integer& a, const Integer& n) {
    Integer r = a % n;
    if (r < 0) r += n;
    return r;
}

// Floor of sqrt(n) for n >= 0.
inline Integer isqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

// If n is a perfect square, stores the nonnegative root and returns true.
inline bool is_square(const Integer& n, Integer& root) {
    if (n < 0) return false;
    root = isqrt(n);
    return root * root == n;
}

inline bool is_even(const Integer& n) { return (n % 2) == 0; }

// g = x*a + y*b with g = gcd(a, b) >= 0.
struct ExtGcd {
    Integer g, x, y;
};

inline ExtGcd extended_gcd(Integer a, Integer b) {
    Integer x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        Integer q = a / b;
        a -= q * b;
        std::swap(a, b);
        x0 -= q * x1;
        std::swap(x0, x1);
        y0 -= q * y1;
        std::swap(y0, y1);
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    return {a, x0, y0};
}

// Deterministic trial-division primality test, adequate for desk-scale inputs.
inline bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (is_even(n)) return false;
    for (Integer d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// Strict decimal integer parse: [+-]?[0-9]+, no junk tolerated.
inline Integer parse_integer(std::string_view text) {
    if (text.empty()) throw std::domain_error("empty integer literal");
    std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (i == text.size()) throw std::domain_error("sign without digits");
    for (std::size_t j = i; j < text.size(); ++j)
        if (text[j] < '0' || text[j] > '9')
            throw std::domain_error("invalid integer literal: '" +
                                    std::string(text) + "'");
    return Integer(std::string(text));
}

}  // namespace cmiso
