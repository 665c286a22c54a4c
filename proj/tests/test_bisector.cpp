#include <catch_amalgamated.hpp>

#include "datri/bisector.hpp"

using namespace datri;

TEST_CASE("bisector segment lengths") {
    BisectorData bd = bisector_segments({12, 18, 15});
    CHECK(bd.ad == Rational(10));
    CHECK(bd.dc == Rational(8));
    CHECK_FALSE(bd.r.has_value());

    bd = bisector_segments({4, 6, 5});
    CHECK(bd.ad == Rational(10, 3));
    CHECK(bd.dc == Rational(8, 3));

    bd = bisector_segments({5, 8, 5});
    CHECK(bd.ad == Rational(4));
    CHECK(bd.dc == Rational(4));

    CHECK_THROWS_AS(bisector_segments({1, 2, 3}), DegenerateTriangle);
}

TEST_CASE("family bisector has r = ad") {
    CHECK(family_bisector({4, 6, 5}).r == Rational(10, 3));
    CHECK(family_bisector({12, 18, 15}).r == Rational(10));
    CHECK(family_bisector({9, 12, 7}).r == Rational(21, 4));
    CHECK_THROWS_AS(family_bisector({3, 4, 5}), NotInFamily);
}

TEST_CASE("integral bisector detection") {
    CHECK(integral_bisector_length({12, 18, 15}) == 10);
    CHECK_FALSE(integral_bisector_length({4, 6, 5}).has_value());
    CHECK(integral_bisector_length({36, 48, 28}) == 21);
    CHECK_THROWS_AS(integral_bisector_length({3, 4, 5}), NotInFamily);
}

TEST_CASE("sub-triangle cut off by the bisector") {
    CHECK(sub_triangle({12, 18, 15}) == Triangle{8, 12, 10});
    CHECK(sub_triangle({36, 48, 28}) == Triangle{27, 36, 21});
    CHECK_THROWS_AS(sub_triangle({4, 6, 5}), NotIntegralBisector);
    // sub-triangles stay in the family
    CHECK(is_double_angle_triangle(sub_triangle({12, 18, 15})));
    CHECK(is_double_angle_triangle(sub_triangle({36, 48, 28})));
}

TEST_CASE("segment sum and ratio theorem, exhaustive to max side 80") {
    const Int N = 80;
    for (Int a = 1; a <= N; ++a)
        for (Int b = 1; b <= N; ++b)
            for (Int c = 1; c <= N; ++c) {
                Triangle t{a, b, c};
                if (!satisfies_triangle_inequalities(t)) continue;
                BisectorData bd = bisector_segments(t);
                REQUIRE(bd.ad + bd.dc == Rational(b));
                REQUIRE(bd.ad * Rational(a) == bd.dc * Rational(c));
            }
}
