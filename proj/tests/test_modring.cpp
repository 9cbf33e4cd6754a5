#include <doctest.h>

#include <stdexcept>

#include "cpm/bigint.hpp"
#include "cpm/modring.hpp"

using namespace cpm;

TEST_CASE("units and inverses") {
    CHECK(is_unit(2, 7));
    CHECK_FALSE(is_unit(2, 52));
    CHECK(is_unit(15, 52));

    CHECK(mod_inverse(2, 7) == 4);
    CHECK(mod_inverse(1, 9) == 1);
    CHECK_THROWS_AS(mod_inverse(2, 52), std::domain_error);

    // oracle: exhaustive search over Z_52
    i64 found = -1;
    for (i64 b = 0; b < 52; ++b)
        if (mod_mul(3, b, 52) == 1) found = b;
    CHECK(found == 35);
    CHECK(mod_inverse(3, 52) == 35);
}

TEST_CASE("inverse is an involution and multiplies to one") {
    for (i64 n : {5, 7, 9, 12, 52}) {
        for (i64 a = 1; a < n; ++a) {
            if (!is_unit(a, n)) continue;
            i64 b = mod_inverse(a, n);
            CHECK(mod_mul(a, b, n) == 1);
            CHECK(mod_inverse(b, n) == a);
        }
    }
}

TEST_CASE("mod_pow agrees with repeated multiplication") {
    for (i64 n : {3, 7, 52}) {
        for (i64 a : {1, 2, 3, 15}) {
            if (a >= n) continue;
            i64 acc = 1;
            for (i64 k = 0; k <= 64; ++k) {
                CHECK(mod_pow(a, k, n) == acc);
                acc = mod_mul(acc, a, n);
            }
        }
    }
}

TEST_CASE("residue arithmetic stays reduced") {
    Residue a(10, 7);
    CHECK(a.value == 3);
    CHECK((a + Residue(5, 7)).value == 1);
    CHECK((a - Residue(5, 7)).value == 5);
    CHECK((a * a).value == 2);
    CHECK((-a).value == 4);
    CHECK(a.pow(3).value == 6);
    CHECK(a.inverse().value == 5);
    CHECK(Residue(2, 7).is_unit());
    CHECK_FALSE(Residue(2, 52).is_unit());
}

TEST_CASE("is_valid_r") {
    CHECK(is_valid_r(3, 2, 7, 2));    // 2^6 = 64 = 1 (mod 7)
    CHECK(is_valid_r(6, 2, 52, 15));  // 15^12 = 1 (mod 52)
    CHECK(is_valid_r(1, 2, 5, 2));    // 2^2 = -1 (mod 5)
    CHECK_FALSE(is_valid_r(1, 2, 7, 2));   // 2^2 = 4
    CHECK_FALSE(is_valid_r(3, 2, 52, 2));  // not a unit
}

TEST_CASE("arc-transitivity condition") {
    CHECK_FALSE(cond_arc_transitive(2, 7, 2));  // r^4 = 2: 2*3 and 2*1 nonzero
    CHECK(cond_arc_transitive(2, 5, 2));        // r^4 = 1
    CHECK(cond_arc_transitive(2, 4, 1));
}

TEST_CASE("two-arc-transitivity condition") {
    CHECK(cond_two_arc_transitive(3, 2, 3, 1));
    CHECK(cond_two_arc_transitive(2, 2, 4, 1));   // n = 2m, m = 2 (mod 4), 1 + 1 = 2
    CHECK(cond_two_arc_transitive(1, 2, 4, 1));   // the (n,m) = (4,1) case
    CHECK(cond_two_arc_transitive(5, 2, 5, 2));   // r^2 = -1, n = m odd
    CHECK(cond_two_arc_transitive(10, 2, 20, 3)); // 1 + 9 = 10 = m
    CHECK_FALSE(cond_two_arc_transitive(3, 2, 7, 2));
    CHECK_FALSE(cond_two_arc_transitive(3, 3, 3, 1));  // s != 2
    CHECK_FALSE(cond_two_arc_transitive(6, 2, 12, 5)); // r^2 = 1 != 6
}

TEST_CASE("two-arc-transitive implies arc-transitive (sweep n <= 60)") {
    for (i64 n = 3; n <= 60; ++n)
        for (i64 m = 1; m <= 24; ++m)
            for (i64 s = 2; s <= 3; ++s)
                for (i64 r = 1; r < n; ++r) {
                    if (!is_valid_r(m, s, n, r)) continue;
                    if (cond_two_arc_transitive(m, s, n, r)) CHECK(cond_arc_transitive(s, n, r));
                }
}

TEST_CASE("big unsigned integers") {
    BigUint a(1176);
    CHECK(a.to_string() == "1176");
    CHECK(a == BigUint(1176));
    CHECK(BigUint::pow2(7).to_string() == "128");
    CHECK(BigUint::pow2(64).to_string() == "18446744073709551616");
    BigUint b = BigUint::pow2(123) * 496;
    CHECK(b.to_string() == "5274376687274546183682306415192407277568");
    CHECK((BigUint(3) * BigUint::pow2(2)).to_string() == "12");
    CHECK(BigUint(81) * 16 == BigUint(1296));
    CHECK(BigUint(0).to_string() == "0");
    CHECK(BigUint(7).fits_u64());
    CHECK_FALSE(BigUint::pow2(100).fits_u64());
    CHECK(BigUint(5) < BigUint(7));
    CHECK(BigUint(5) < BigUint::pow2(65));
}
