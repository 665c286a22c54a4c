#pragma once

#include <compare>
#include <stdexcept>

#include "datri/exactmath.hpp"

// Triangle representation and the double-angle (B = 2A) membership
// machinery. Side labels are positional: a is opposite angle A, b
// opposite B, c opposite C. The membership condition b^2 = a(a+c) is
// asymmetric in (a, b, c), so (4,6,5) and (4,5,6) are distinct values.

namespace datri {

struct Triangle {
    Int a;
    Int b;
    Int c;

    Int perimeter() const { return a + b + c; }

    friend bool operator==(const Triangle&, const Triangle&) = default;
    // (perimeter, a, b) is the canonical enumeration order.
    friend std::strong_ordering operator<=>(const Triangle& x, const Triangle& y) {
        if (auto cmp = x.perimeter() <=> y.perimeter(); cmp != 0) return cmp;
        if (auto cmp = x.a <=> y.a; cmp != 0) return cmp;
        if (auto cmp = x.b <=> y.b; cmp != 0) return cmp;
        return x.c <=> y.c;
    }
};

enum class AngleClass {
    Acute,
    RightAtA,
    RightAtB,
    RightAtC,
    ObtuseAtA,
    ObtuseAtB,
    ObtuseAtC,
};

inline const char* to_string(AngleClass cls) {
    switch (cls) {
        case AngleClass::Acute: return "acute";
        case AngleClass::RightAtA: return "right_at_a";
        case AngleClass::RightAtB: return "right_at_b";
        case AngleClass::RightAtC: return "right_at_c";
        case AngleClass::ObtuseAtA: return "obtuse_at_a";
        case AngleClass::ObtuseAtB: return "obtuse_at_b";
        case AngleClass::ObtuseAtC: return "obtuse_at_c";
    }
    return "?";
}

struct CosineTriple {
    Rational cos_a;
    Rational cos_b;
    Rational cos_c;
};

struct DegenerateTriangle : std::domain_error {
    using std::domain_error::domain_error;
};

inline bool satisfies_triangle_inequalities(const Triangle& t) {
    return t.a < t.b + t.c && t.b < t.a + t.c && t.c < t.a + t.b;
}

/// b^2 = a(a+c), exactly. Holds for degenerate triples too, e.g. (1,2,3).
inline bool double_angle_condition(const Triangle& t) {
    return Wide(t.b) * t.b == Wide(t.a) * (t.a + t.c);
}

/// Formability gate for sides already known to satisfy b^2 = a(a+c):
/// a genuine triangle exists iff c <= a or a < c < 3a. The c = a
/// boundary is included as stated even though no integral member
/// attains it (b^2 = 2a^2 has no integer solutions).
inline bool formable_given_condition(Int a, Int c) {
    return c <= a || (a < c && c < 3 * a);
}

inline bool is_double_angle_triangle(const Triangle& t) {
    return double_angle_condition(t) && satisfies_triangle_inequalities(t);
}

/// Law-of-cosines values, exact.
inline CosineTriple cosines(const Triangle& t) {
    if (!satisfies_triangle_inequalities(t))
        throw DegenerateTriangle("cosines: triangle inequalities fail");
    const Int a = t.a, b = t.b, c = t.c;
    return {
        Rational(b * b + c * c - a * a, 2 * b * c),
        Rational(c * c + a * a - b * b, 2 * c * a),
        Rational(a * a + b * b - c * c, 2 * a * b),
    };
}

/// Independent trigonometric confirmation of B = 2A: checks
/// cos B = 2 cos^2 A - 1 together with cos A = b/(2a), in exact
/// rational arithmetic. Deliberately does not inspect b^2 = a(a+c).
inline bool verify_double_angle_exact(const Triangle& t) {
    CosineTriple cs = cosines(t);
    Rational two(2);
    return cs.cos_b == two * cs.cos_a * cs.cos_a - Rational(1) &&
           cs.cos_a == Rational(t.b, 2 * t.a);
}

/// c = a cos B + b cos A. True for every valid triangle; exposed as a
/// self-test of the cosine computation.
inline bool projection_identity_check(const Triangle& t) {
    CosineTriple cs = cosines(t);
    return Rational(t.a) * cs.cos_b + Rational(t.b) * cs.cos_a == Rational(t.c);
}

inline AngleClass classify(const Triangle& t) {
    if (!satisfies_triangle_inequalities(t))
        throw DegenerateTriangle("classify: triangle inequalities fail");
    const Int a2 = t.a * t.a, b2 = t.b * t.b, c2 = t.c * t.c;
    if (a2 > b2 + c2) return AngleClass::ObtuseAtA;
    if (a2 == b2 + c2) return AngleClass::RightAtA;
    if (b2 > a2 + c2) return AngleClass::ObtuseAtB;
    if (b2 == a2 + c2) return AngleClass::RightAtB;
    if (c2 > a2 + b2) return AngleClass::ObtuseAtC;
    if (c2 == a2 + b2) return AngleClass::RightAtC;
    return AngleClass::Acute;
}

}  // namespace datri
