#pragma once

#include <algorithm>
#include <vector>

#include "datri/family.hpp"
#include "datri/triangle.hpp"

// Brute-force search used to machine-check the completeness of the
// parametric generators. The search functions use only the membership
// predicates, never the parametrization, so the two sides of a compare()
// share no generation logic.

namespace datri {

struct OracleReport {
    Int bound = 0;
    std::vector<Triangle> found;
    std::vector<Triangle> missing_from_parametric;
    std::vector<Triangle> extra_in_parametric;

    bool verified() const {
        return missing_from_parametric.empty() && extra_in_parametric.empty();
    }
};

enum class FamilyKind { Result1, Result2 };

namespace detail {

// O(bound^2): for each (a, c) with c < 3a, b is forced by b^2 = a(a+c),
// so it exists iff a(a+c) is a perfect square.
inline std::vector<Triangle> scan_fast(Int max_perimeter, bool bisector_only) {
    std::vector<Triangle> out;
    for (Int a = 1; a <= max_perimeter; ++a) {
        for (Int c = 1; c < 3 * a && a + c < max_perimeter; ++c) {
            auto b = as_perfect_square(a * (a + c));
            if (!b) continue;
            Triangle t{a, *b, c};
            if (t.perimeter() > max_perimeter) continue;
            if (!is_double_angle_triangle(t)) continue;
            if (bisector_only && (t.b * t.c) % (t.a + t.c) != 0) continue;
            out.push_back(t);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// The dumbest possible scan, kept as an independent cross-check of
// scan_fast at small bounds.
inline std::vector<Triangle> scan_naive(Int max_perimeter, bool bisector_only) {
    std::vector<Triangle> out;
    for (Int a = 1; a <= max_perimeter; ++a)
        for (Int b = 1; a + b <= max_perimeter; ++b)
            for (Int c = 1; a + b + c <= max_perimeter; ++c) {
                Triangle t{a, b, c};
                if (!is_double_angle_triangle(t)) continue;
                if (bisector_only && (t.b * t.c) % (t.a + t.c) != 0) continue;
                out.push_back(t);
            }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

inline std::vector<Triangle> brute_force_family(Int max_perimeter, bool naive = false) {
    return naive ? detail::scan_naive(max_perimeter, false)
                 : detail::scan_fast(max_perimeter, false);
}

inline std::vector<Triangle> brute_force_bisector_family(Int max_perimeter, bool naive = false) {
    return naive ? detail::scan_naive(max_perimeter, true)
                 : detail::scan_fast(max_perimeter, true);
}

/// Runs the brute-force scan against the matching parametric generator
/// and reports the set differences. Empty differences mean the
/// generator is complete and sound at this bound.
inline OracleReport compare(Int bound, FamilyKind which, bool naive = false) {
    OracleReport report;
    report.bound = bound;
    report.found = which == FamilyKind::Result1 ? brute_force_family(bound, naive)
                                                : brute_force_bisector_family(bound, naive);

    auto members = which == FamilyKind::Result1 ? enumerate_family(bound)
                                                : enumerate_bisector_family(bound);
    std::vector<Triangle> parametric;
    parametric.reserve(members.size());
    for (const auto& fm : members) parametric.push_back(fm.triangle);

    std::set_difference(report.found.begin(), report.found.end(),
                        parametric.begin(), parametric.end(),
                        std::back_inserter(report.missing_from_parametric));
    std::set_difference(parametric.begin(), parametric.end(),
                        report.found.begin(), report.found.end(),
                        std::back_inserter(report.extra_in_parametric));
    return report;
}

}  // namespace datri
