#include <catch_amalgamated.hpp>

#include "datri/exactmath.hpp"

using namespace datri;

TEST_CASE("gcd on positive integers") {
    CHECK(gcd(12, 18) == 6);
    CHECK(gcd(7, 1) == 1);
    CHECK(gcd(4, 5) == 1);
}

TEST_CASE("isqrt is the floor square root") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(16) == 4);
    CHECK(isqrt(17) == 4);
    for (Int n = 0; n <= 200000; ++n) {
        Int r = isqrt(n);
        REQUIRE(r * r <= n);
        REQUIRE((r + 1) * (r + 1) > n);
    }
}

TEST_CASE("as_perfect_square") {
    CHECK(as_perfect_square(9) == 3);
    CHECK(as_perfect_square(1) == 1);
    CHECK_FALSE(as_perfect_square(8).has_value());
}

TEST_CASE("coprime_square_split examples") {
    CHECK(coprime_square_split(4, 9) == std::pair<Int, Int>{2, 3});
    CHECK(coprime_square_split(1, 25) == std::pair<Int, Int>{1, 5});
    CHECK_THROWS_AS(coprime_square_split(4, 8), NotCoprime);
    CHECK_THROWS_AS(coprime_square_split(2, 9), NotASquareProduct);
}

TEST_CASE("coprime square products always split into squares") {
    // every coprime pair whose product is a square has both factors square
    for (Int p = 1; p <= 1000; ++p) {
        for (Int q = 1; q <= 1000; ++q) {
            if (gcd(p, q) != 1) continue;
            if (!as_perfect_square(p * q)) continue;
            auto [sp, sq] = coprime_square_split(p, q);
            REQUIRE(sp * sp == p);
            REQUIRE(sq * sq == q);
            REQUIRE(gcd(sp, sq) == 1);
        }
    }
}

TEST_CASE("Rational normalizes on construction") {
    Rational r(24, 9);
    CHECK(r.num() == 8);
    CHECK(r.den() == 3);
    Rational neg(3, -6);
    CHECK(neg.num() == -1);
    CHECK(neg.den() == 2);
    CHECK(Rational(0, 5) == Rational(0));
}

TEST_CASE("Rational arithmetic stays in lowest terms") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(Rational(7, 2) > Rational(10, 3));
    CHECK(Rational(5, 1).is_integer());
    CHECK_FALSE(Rational(5, 2).is_integer());
    CHECK(Rational(10, 3).str() == "10/3");
    CHECK(Rational(8, 2).str() == "4");
    CHECK_THROWS(Rational(1, 0));
}
