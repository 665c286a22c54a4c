#pragma once

#include <optional>
#include <stdexcept>

#include "datri/triangle.hpp"

// Internal bisector of angle B. The bisector from B meets side AC at D,
// splitting it into |AD| = bc/(a+c) (adjacent to A) and |DC| = ab/(a+c).
// When B = 2A the triangle ABD is isosceles, so the bisector length
// r = |BD| equals |AD|.
//
// Note the source statement of the segment-length lemma circulates with
// a typo ("cb/(a+b)"); the correct form bc/(a+c) is the standard
// bisector-ratio result and is what the proof actually concludes.

namespace datri {

struct BisectorData {
    Rational ad;
    Rational dc;
    std::optional<Rational> r;  // set only when B = 2A is known
};

struct NotInFamily : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotIntegralBisector : std::domain_error {
    using std::domain_error::domain_error;
};

/// Foot-of-bisector segment lengths for any valid triangle; r left unset.
inline BisectorData bisector_segments(const Triangle& t) {
    if (!satisfies_triangle_inequalities(t))
        throw DegenerateTriangle("bisector_segments: triangle inequalities fail");
    return {Rational(t.b * t.c, t.a + t.c), Rational(t.a * t.b, t.a + t.c), std::nullopt};
}

/// Segment lengths plus the bisector length r = |AD| for family members.
inline BisectorData family_bisector(const Triangle& t) {
    if (!is_double_angle_triangle(t))
        throw NotInFamily("family_bisector: triangle is not in the double-angle family");
    BisectorData data = bisector_segments(t);
    data.r = data.ad;
    return data;
}

/// r as an integer when (a+c) | bc, nullopt otherwise.
inline std::optional<Int> integral_bisector_length(const Triangle& t) {
    if (!is_double_angle_triangle(t))
        throw NotInFamily("integral_bisector_length: triangle is not in the double-angle family");
    Int num = t.b * t.c;
    Int den = t.a + t.c;
    if (num % den != 0) return std::nullopt;
    return num / den;
}

/// The triangle BDC cut off by the bisector, relabeled into the same
/// (a, b, c) convention: a' = |DC| opposite the half angle at B,
/// b' = |BC| = a opposite the double angle at D, c' = |BD| = r.
/// Itself a double-angle triangle. Does not recurse; callers may iterate
/// (the child's own bisector need not be integral).
inline Triangle sub_triangle(const Triangle& t) {
    auto r = integral_bisector_length(t);
    if (!r) throw NotIntegralBisector("sub_triangle: bisector length is not an integer");
    // dc = ab/(a+c) is integral whenever r is: in parameters both reduce
    // to m | l, since gcd(k, m) = 1.
    Int num = t.a * t.b;
    Int den = t.a + t.c;
    if (num % den != 0)
        throw NotIntegralBisector("sub_triangle: |DC| is not an integer");
    return Triangle{num / den, t.a, *r};
}

}  // namespace datri
