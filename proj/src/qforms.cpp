#include "cmiso/qforms.hpp"

#include <stdexcept>

namespace cmiso {

bool QuadForm::is_reduced() const {
    Integer ab = abs(b);
    if (!(ab <= a && a <= c)) return false;
    if (b < 0 && (ab == a || a == c)) return false;
    return true;
}

bool operator<(const QuadForm& f, const QuadForm& g) {
    if (f.a != g.a) return f.a < g.a;
    if (f.b != g.b) return f.b < g.b;
    return f.c < g.c;
}

std::vector<QuadForm> reduced_forms(const Integer& D) {
    if (D >= 0) throw std::domain_error("reduced_forms: discriminant must be negative");
    Integer r = mod_nonneg(D, 4);
    if (r != 0 && r != 1)
        throw std::domain_error("reduced_forms: discriminant must be 0 or 1 mod 4");

    std::vector<QuadForm> out;
    Integer amax = isqrt(-D / 3);
    for (Integer a = 1; a <= amax; ++a) {
        for (Integer b = -a; b <= a; ++b) {
            Integer num = b * b - D;
            if (num % (4 * a) != 0) continue;
            Integer c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && (-b == a || a == c)) continue;
            if (gcd3(a, b, c) != 1) continue;
            out.push_back({a, b, c});
        }
    }
    return out;  // scan order is already (a, b) ascending
}

Integer class_number(const Integer& D) {
    return Integer(reduced_forms(D).size());
}

}  // namespace cmiso
