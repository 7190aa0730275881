#include <doctest.h>

#include "cmiso/qforms.hpp"

using namespace cmiso;

// Frozen from the brute-force scan; the smallest are textbook values.
TEST_CASE("class numbers of small discriminants") {
    CHECK(class_number(-3) == 1);
    CHECK(class_number(-4) == 1);
    CHECK(class_number(-7) == 1);
    CHECK(class_number(-8) == 1);
    CHECK(class_number(-11) == 1);
    CHECK(class_number(-20) == 2);
    CHECK(class_number(-23) == 3);
    CHECK(class_number(-28) == 1);
    CHECK(class_number(-44) == 3);
    CHECK(class_number(-47) == 5);
    CHECK(class_number(-92) == 3);
}

TEST_CASE("reduced form lists") {
    auto f4 = reduced_forms(-4);
    REQUIRE(f4.size() == 1);
    CHECK(f4[0] == QuadForm{1, 0, 1});

    auto f20 = reduced_forms(-20);
    REQUIRE(f20.size() == 2);
    CHECK(f20[0] == QuadForm{1, 0, 5});
    CHECK(f20[1] == QuadForm{2, 2, 3});

    auto f23 = reduced_forms(-23);
    REQUIRE(f23.size() == 3);
    CHECK(f23[0] == QuadForm{1, 1, 6});
    CHECK(f23[1] == QuadForm{2, -1, 3});
    CHECK(f23[2] == QuadForm{2, 1, 3});
}

TEST_CASE("rejects impossible discriminants") {
    CHECK_THROWS_AS(reduced_forms(-6), std::domain_error);   // 2 mod 4
    CHECK_THROWS_AS(reduced_forms(-5), std::domain_error);   // 3 mod 4
    CHECK_THROWS_AS(reduced_forms(4), std::domain_error);
    CHECK_THROWS_AS(reduced_forms(0), std::domain_error);
}

TEST_CASE("every output is reduced, primitive and of the right discriminant") {
    for (long d : {-3, -4, -15, -20, -23, -47, -56, -71, -84, -95, -120}) {
        Integer D(d);
        if (mod_nonneg(D, 4) != 0 && mod_nonneg(D, 4) != 1) continue;
        for (const auto& f : reduced_forms(D)) {
            CHECK(f.is_reduced());
            CHECK(f.is_primitive());
            CHECK(f.discriminant() == D);
        }
    }
}

// Scan completeness: a wider scan bound may never contribute new forms.
TEST_CASE("doubling the scan bound adds nothing") {
    for (long d : {-20, -23, -47, -84, -163, -240}) {
        Integer D(d);
        auto forms = reduced_forms(D);
        std::vector<QuadForm> wide;
        Integer amax = 2 * isqrt(-D / 3) + 1;
        for (Integer a = 1; a <= amax; ++a) {
            for (Integer b = -a; b <= a; ++b) {
                Integer num = b * b - D;
                if (num % (4 * a) != 0) continue;
                Integer c = num / (4 * a);
                if (c < a) continue;
                if (b < 0 && (-b == a || a == c)) continue;
                if (gcd3(a, b, c) != 1) continue;
                wide.push_back({a, b, c});
            }
        }
        CHECK(forms.size() == wide.size());
        CHECK(std::equal(forms.begin(), forms.end(), wide.begin()));
    }
}
