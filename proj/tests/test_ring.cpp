#include <vector>

#include "doctest.h"
#include "subpair/ring.hpp"

using namespace subpair;

namespace {

// Exhaustive-search inverse over all codes; oracle for RingSpec::inv.
i64 brute_inverse(const RingSpec& R, i64 a) {
    for (i64 x = 0; x < R.cardinality(); ++x)
        if (R.mul(a, x) == R.from_int(1)) return x;
    return -1;
}

std::vector<RingSpec> small_rings() {
    return {RingSpec::zmod(2, 3), RingSpec::zmod(3, 2),
            RingSpec::truncpoly(2, 3), RingSpec::truncpoly(3, 2)};
}

}  // namespace

TEST_CASE("ring construction validates arguments") {
    CHECK_THROWS_AS(RingSpec::zmod(4, 2), input_error);
    CHECK_THROWS_AS(RingSpec::zmod(1, 2), input_error);
    CHECK_THROWS_AS(RingSpec::truncpoly(2, 0), input_error);
    CHECK_THROWS_AS(RingSpec::zmod(2, 40), input_error);
    CHECK(RingSpec::zmod(2, 30).cardinality() == (i64(1) << 30));
    CHECK(RingSpec::truncpoly(7, 3).cardinality() == 343);
}

TEST_CASE("ring axioms hold on all small-ring triples") {
    for (const RingSpec& R : small_rings()) {
        CAPTURE(R.show_ring());
        i64 N = R.cardinality();
        i64 one = R.from_int(1);
        for (i64 a = 0; a < N; ++a) {
            CHECK(R.add(a, 0) == a);
            CHECK(R.mul(a, one) == a);
            CHECK(R.add(a, R.neg(a)) == 0);
            CHECK(R.sub(a, a) == 0);
            for (i64 b = 0; b < N; ++b) {
                CHECK(R.add(a, b) == R.add(b, a));
                CHECK(R.mul(a, b) == R.mul(b, a));
                for (i64 c = 0; c < N; ++c) {
                    CHECK(R.add(R.add(a, b), c) == R.add(a, R.add(b, c)));
                    CHECK(R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)));
                    CHECK(R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("valuation and unit part decompose every element") {
    for (const RingSpec& R : small_rings()) {
        CAPTURE(R.show_ring());
        for (i64 a = 0; a < R.cardinality(); ++a) {
            int v = R.val(a);
            if (a == 0) {
                CHECK(v == R.n());
                continue;
            }
            i64 u = R.unit_part(a);
            CHECK(R.val(u) == 0);
            CHECK(R.mul_ppow(u, v) == a);
            CHECK(R.mul(u, R.pow_p(v) % R.cardinality()) == a);
            for (i64 b = 1; b < R.cardinality(); ++b) {
                int expect = std::min(R.n(), v + R.val(b));
                CHECK(R.val(R.mul(a, b)) == expect);
            }
        }
    }
}

TEST_CASE("inverse agrees with exhaustive search on every unit") {
    for (const RingSpec& R : small_rings()) {
        CAPTURE(R.show_ring());
        for (i64 a = 0; a < R.cardinality(); ++a) {
            i64 b = brute_inverse(R, a);
            if (R.val(a) == 0) {
                CHECK(b != -1);
                CHECK(R.inv(a) == b);
                CHECK(R.mul(a, R.inv(a)) == R.from_int(1));
            } else {
                CHECK(b == -1);
                CHECK_THROWS_AS(R.inv(a), input_error);
            }
        }
    }
}

TEST_CASE("inverse of 2 in Z/9 is 5") {
    RingSpec R = RingSpec::zmod(3, 2);
    CHECK(brute_inverse(R, 2) == 5);
    CHECK(R.inv(2) == 5);
}

TEST_CASE("power shifts match ring multiplication by p^e") {
    for (const RingSpec& R : small_rings()) {
        CAPTURE(R.show_ring());
        for (i64 a = 0; a < R.cardinality(); ++a) {
            for (int e = 0; e <= R.n(); ++e) {
                i64 pe = R.pow_p(e) % R.cardinality();
                CHECK(R.mul_ppow(a, e) == R.mul(a, pe));
                // Digit split: a = div*p^e + mod, with mod below p^e.
                i64 q = R.div_ppow(a, e);
                i64 r = R.mod_ppow(a, e);
                CHECK(r < R.pow_p(e));
                CHECK(R.add(R.mul(q, pe), r) == (e == R.n() ? r : a));
                if (e == R.n()) CHECK(r == a);
            }
        }
    }
}

TEST_CASE("digit codec round-trips") {
    for (const RingSpec& R : small_rings()) {
        for (i64 a = 0; a < R.cardinality(); ++a) {
            CHECK(R.from_digits(R.digits(a)) == a);
        }
    }
    RingSpec R = RingSpec::truncpoly(2, 3);
    CHECK(R.from_digits({1, 0, 1}) == 5);
    CHECK(R.from_digits({-1, 3}) == 1 + 2);  // digits reduce mod p
}

TEST_CASE("from_int embeds the integers") {
    RingSpec Z8 = RingSpec::zmod(2, 3);
    CHECK(Z8.from_int(-1) == 7);
    CHECK(Z8.from_int(11) == 3);
    RingSpec F = RingSpec::truncpoly(3, 2);
    CHECK(F.from_int(4) == 1);
    CHECK(F.from_int(-1) == 2);
    // Ring map: preserves addition and multiplication.
    for (const RingSpec& R : small_rings())
        for (i64 k = -9; k <= 9; ++k)
            for (i64 m = -9; m <= 9; ++m) {
                CHECK(R.add(R.from_int(k), R.from_int(m)) == R.from_int(k + m));
                CHECK(R.mul(R.from_int(k), R.from_int(m)) == R.from_int(k * m));
            }
}

TEST_CASE("element rendering") {
    RingSpec Z9 = RingSpec::zmod(3, 2);
    CHECK(Z9.show(7) == "7");
    CHECK(Z9.show_ring() == "Z/9");
    RingSpec F = RingSpec::truncpoly(2, 3);
    CHECK(F.show(0) == "0");
    CHECK(F.show(1) == "1");
    CHECK(F.show(2) == "T");
    CHECK(F.show(5) == "1+T^2");
    CHECK(F.show_ring() == "F2[T]/(T^3)");
    RingSpec G = RingSpec::truncpoly(3, 3);
    CHECK(G.show(G.from_digits({1, 2, 1})) == "1+2T+T^2");
}

TEST_CASE("checked elements reject mixed rings") {
    RingElem a(RingSpec::zmod(2, 3), 3);
    RingElem b(RingSpec::truncpoly(2, 3), 3);
    CHECK_THROWS_AS(add(a, b), input_error);
    CHECK(mul(a, a).code == 1);
    CHECK(mul(b, b).code == 5);  // (1+T)^2 = 1+T^2 over F_2
    CHECK(valuation(RingElem(RingSpec::zmod(2, 3), 4)) == 2);
    CHECK(inverse(RingElem(RingSpec::zmod(3, 2), 2)).code == 5);
    CHECK_THROWS_AS(RingElem(RingSpec::zmod(2, 3), 8), input_error);
}
