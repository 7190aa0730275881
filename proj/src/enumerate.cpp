#include "cmiso/enumerate.hpp"

#include <set>
#include <stdexcept>

#include "cmiso/isogeny.hpp"

namespace cmiso {

std::vector<TauPoly> curves_with_self_isogeny(const Integer& n) {
    if (n < 2)
        throw std::domain_error("curves_with_self_isogeny: n must be >= 2");
    if (n > kEnumerationLimit)
        throw std::domain_error(
            "curves_with_self_isogeny: n exceeds the enumeration limit of 10^6");

    // Search region from the determinant formula 4n = y^2 + E b'^2 with
    // y = 2a + h b', E = (u2 v2/d2)^2 |Delta| >= 3 (u2 v2/d2)^2 on G.
    Integer four_n = 4 * n;
    std::set<TauPoly> found;
    for (Integer u2 = 1; 3 * u2 * u2 <= four_n; ++u2) {
        for (Integer v2 = 1; 3 * v2 * v2 <= four_n; ++v2) {
            Integer d2 = gcd(u2, v2);
            Integer w = u2 * (v2 / d2);
            if (3 * w * w > four_n) continue;
            for (Integer u1 = -u2; u1 < u2; ++u1) {
                if (gcd(u1, u2) != 1) continue;
                Integer h = u1 * (v2 / d2);
                for (Integer bp = 1; 3 * w * w * bp * bp <= four_n; ++bp) {
                    Integer den = 4 * bp * bp * v2 * u2 * u2;
                    for (Integer y = mod_nonneg(h * bp, 2); y * y < four_n;
                         y += 2) {
                        Integer num = d2 * d2 * (four_n - y * y) +
                                      bp * bp * u1 * u1 * v2 * v2;
                        if (num % den != 0) continue;
                        Integer v1 = -(num / den);
                        if (gcd(v1, v2) != 1) continue;
                        // some sign of y must give a coprime (a, b')
                        bool witnessed = gcd((y - h * bp) / 2, bp) == 1;
                        if (!witnessed && y != 0)
                            witnessed = gcd((-y - h * bp) / 2, bp) == 1;
                        if (!witnessed) continue;
                        TauPoly tau = TauPoly::from_parts(u1, u2, v1, v2);
                        if (!is_reduced(tau)) continue;
                        found.insert(tau);
                    }
                }
            }
        }
    }

    std::vector<TauPoly> out(found.begin(), found.end());
    for (const TauPoly& tau : out) {
        auto pairs = find_pairs(tau, n);
        if (pairs.empty())
            throw std::logic_error("enumeration: witness disappeared on recheck");
        SubgroupGen gen =
            detail::generator_raw(tau, pairs.front().a, pairs.front().bprime);
        if (!verify_self_isogeny_oracle(tau, gen))
            throw std::logic_error("enumeration: lattice oracle rejected a curve");
    }
    return out;
}

PrimeCountResult prime_count_check(const Integer& p) {
    if (!is_prime(p))
        throw std::domain_error("prime_count_check: input is not prime");
    Integer count(curves_with_self_isogeny(p).size());
    bool ok = (count == p + 1);
    return {std::move(count), ok};
}

}  // namespace cmiso
