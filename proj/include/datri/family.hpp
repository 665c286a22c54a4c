#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

#include "datri/bisector.hpp"
#include "datri/triangle.hpp"

// Parametric description of the double-angle family and its
// integral-bisector subfamily, together with the inverse map.
//
//   (l, k, m)  ->  a = l*k^2,  b = l*k*m,  c = l*(m^2 - k^2)
//
// with gcd(k, m) = 1 and k < m < 2k. This hits every member exactly
// once. The subfamily whose bisector of B is integral is reached by
// l = d*m:
//
//   (d, k, m)  ->  a = d*m*k^2,  b = d*k*m^2,  c = d*m*(m^2 - k^2),
//                  r = d*k*(m^2 - k^2),  |DC| = d*k^3.

namespace datri {

struct ParamTriple {
    Int l;
    Int k;
    Int m;

    friend bool operator==(const ParamTriple&, const ParamTriple&) = default;
};

struct BisectorParamTriple {
    Int d;
    Int k;
    Int m;

    friend bool operator==(const BisectorParamTriple&, const BisectorParamTriple&) = default;
};

// Which side of m^2 = 2k^2 the parameters fall on (that boundary is
// unattainable for integers). CShorter <=> c < a.
enum class Branch { CShorter, CLonger };

inline const char* to_string(Branch br) {
    return br == Branch::CShorter ? "c_shorter" : "c_longer";
}

struct FamilyMember {
    Triangle triangle;
    ParamTriple params;
    Branch branch;
    std::optional<BisectorData> bisector;
};

struct InvalidParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline void check_params(Int l, Int k, Int m) {
    if (l < 1 || k < 1 || m < 1)
        throw InvalidParams("parameters must be positive");
    if (gcd(k, m) != 1)
        throw InvalidParams("k and m must be coprime");
    if (!(k < m && m < 2 * k))
        throw InvalidParams("m must satisfy k < m < 2k");
}

inline Triangle triangle_from_params(const ParamTriple& p) {
    check_params(p.l, p.k, p.m);
    return Triangle{p.l * p.k * p.k, p.l * p.k * p.m, p.l * (p.m * p.m - p.k * p.k)};
}

inline Branch branch_of(const ParamTriple& p) {
    return p.m * p.m < 2 * p.k * p.k ? Branch::CShorter : Branch::CLonger;
}

/// Full Result-2 member: triangle plus exact bisector data, all integral.
inline FamilyMember bisector_family_from_params(const BisectorParamTriple& bp) {
    check_params(bp.d, bp.k, bp.m);
    ParamTriple p{bp.d * bp.m, bp.k, bp.m};
    Triangle t = triangle_from_params(p);
    BisectorData data = family_bisector(t);
    assert(data.r && data.r->is_integer());
    return FamilyMember{t, p, branch_of(p), data};
}

/// Inverse map. For a genuine member: l = gcd(a, c), then a/l and
/// (a+c)/l are coprime squares k^2 and m^2. Round-trip law:
/// triangle_from_params(params_from_triangle(t)) == t.
inline std::optional<ParamTriple> params_from_triangle(const Triangle& t) {
    if (!is_double_angle_triangle(t)) return std::nullopt;
    Int l = gcd(t.a, t.c);
    auto k = as_perfect_square(t.a / l);
    if (!k) return std::nullopt;  // cannot happen for genuine members
    auto m = as_perfect_square((t.a + t.c) / l);
    if (!m) return std::nullopt;
    if (t.b != l * *k * *m) return std::nullopt;
    return ParamTriple{l, *k, *m};
}

inline Int family_gcd(const Triangle& t, const ParamTriple& p) {
    assert(triangle_from_params(p) == t);
    (void)p;
    return gcd(gcd(t.a, t.b), t.c);
}

inline bool is_primitive(const Triangle& t) {
    return gcd(gcd(t.a, t.b), t.c) == 1;
}

namespace detail {

inline void sort_members(std::vector<FamilyMember>& out) {
    std::sort(out.begin(), out.end(), [](const FamilyMember& x, const FamilyMember& y) {
        return x.triangle < y.triangle;
    });
    // Distinct valid parameter triples yield distinct triangles.
    assert(std::adjacent_find(out.begin(), out.end(),
                              [](const FamilyMember& x, const FamilyMember& y) {
                                  return x.triangle == y.triangle;
                              }) == out.end());
}

}  // namespace detail

/// Every member with perimeter <= max_perimeter, each exactly once,
/// sorted by (perimeter, a, b). Perimeter in parameters is l*m*(k+m).
/// primitive_only keeps l = 1 (equivalently gcd(a,b,c) = 1).
inline std::vector<FamilyMember> enumerate_family(Int max_perimeter, bool primitive_only = false) {
    std::vector<FamilyMember> out;
    for (Int k = 1;; ++k) {
        // smallest perimeter at this k uses m = k+1, l = 1
        if ((k + 1) * (2 * k + 1) > max_perimeter) break;
        for (Int m = k + 1; m < 2 * k; ++m) {
            Int base = m * (k + m);
            if (base > max_perimeter) break;
            if (gcd(k, m) != 1) continue;
            Int l_max = primitive_only ? 1 : max_perimeter / base;
            for (Int l = 1; l <= l_max; ++l) {
                ParamTriple p{l, k, m};
                out.push_back(FamilyMember{triangle_from_params(p), p, branch_of(p), std::nullopt});
            }
        }
    }
    detail::sort_members(out);
    return out;
}

/// Every integral-bisector member with perimeter <= max_perimeter,
/// sorted the same way. Perimeter in parameters is d*m^2*(k+m).
/// primitive_only requires d = m = 1, impossible under k < m, so it
/// always yields an empty sequence; kept for interface symmetry.
inline std::vector<FamilyMember> enumerate_bisector_family(Int max_perimeter,
                                                           bool primitive_only = false) {
    std::vector<FamilyMember> out;
    if (primitive_only) return out;
    for (Int k = 1;; ++k) {
        if ((k + 1) * (k + 1) * (2 * k + 1) > max_perimeter) break;
        for (Int m = k + 1; m < 2 * k; ++m) {
            Int base = m * m * (k + m);
            if (base > max_perimeter) break;
            if (gcd(k, m) != 1) continue;
            for (Int d = 1; d * base <= max_perimeter; ++d)
                out.push_back(bisector_family_from_params(BisectorParamTriple{d, k, m}));
        }
    }
    detail::sort_members(out);
    return out;
}

}  // namespace datri
