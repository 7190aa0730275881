#pragma once

#include <vector>

#include "cmiso/integer.hpp"

namespace cmiso {

// Integral binary quadratic form a*x^2 + b*x*y + c*y^2 of negative
// discriminant b^2 - 4ac, primitive and reduced when produced by
// reduced_forms.
struct QuadForm {
    Integer a, b, c;

    Integer discriminant() const { return b * b - 4 * a * c; }
    bool is_primitive() const { return gcd3(a, b, c) == 1; }
    // |b| <= a <= c, with b >= 0 whenever |b| = a or a = c.
    bool is_reduced() const;

    friend bool operator==(const QuadForm& f, const QuadForm& g) {
        return f.a == g.a && f.b == g.b && f.c == g.c;
    }
    friend bool operator<(const QuadForm& f, const QuadForm& g);
};

// All reduced primitive forms of discriminant D < 0, D = 0 or 1 mod 4,
// found by exhaustive scan over a <= sqrt(|D|/3). Deterministic order.
std::vector<QuadForm> reduced_forms(const Integer& D);

// h(D) = number of reduced primitive forms.
Integer class_number(const Integer& D);

}  // namespace cmiso
