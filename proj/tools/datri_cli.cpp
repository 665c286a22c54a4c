// Command-line front end: enumerate the double-angle family, verify and
// invert individual triangles, and run the brute-force completeness
// oracle. Output is byte-deterministic for fixed flags: stable sort,
// fixed field order, no timestamps.
//
// Exit codes: 0 success / verified, 1 negative verdict / discrepancy,
// 2 usage error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "datri/datri.hpp"

namespace {

using namespace datri;
using nlohmann::json;

std::string deg3(const Rational& cosine) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", std::acos(cosine.to_double()) * 180.0 / M_PI);
    return buf;
}

struct GenOptions {
    Int max_perimeter = 0;
    bool primitive = false;
    std::string format = "csv";
    bool approx = false;
};

void add_gen_flags(CLI::App* cmd, GenOptions& opt) {
    cmd->add_option("--max-perimeter", opt.max_perimeter, "largest perimeter to emit")
        ->required()
        ->check(CLI::Range(Int(1), std::numeric_limits<Int>::max()));
    cmd->add_flag("--primitive", opt.primitive, "only members with gcd(a,b,c) = 1");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    cmd->add_flag("--approx", opt.approx,
                  "append approximate angle degrees (display only, 3 decimals)");
}

// One line per member. CSV leaves r/dc empty when the bisector is not
// integral; jsonl omits the keys.
void emit_members(const std::vector<FamilyMember>& members, const GenOptions& opt,
                  bool bisector_family) {
    const char* param_names = bisector_family ? "d,k,m" : "l,k,m";
    if (opt.format == "csv") {
        std::cout << "a,b,c," << param_names
                  << ",perimeter,primitive,angle_class,branch,r,dc,cos_a,cos_b,cos_c";
        if (opt.approx) std::cout << ",angle_a_deg,angle_b_deg,angle_c_deg";
        std::cout << "\n";
    }
    for (const auto& fm : members) {
        const Triangle& t = fm.triangle;
        CosineTriple cs = cosines(t);
        auto r = integral_bisector_length(t);
        Int first_param = bisector_family ? fm.params.l / fm.params.m : fm.params.l;
        std::optional<Int> dc;
        if (r) dc = t.a * t.b / (t.a + t.c);
        if (opt.format == "csv") {
            std::cout << t.a << ',' << t.b << ',' << t.c << ','
                      << first_param << ',' << fm.params.k << ',' << fm.params.m << ','
                      << t.perimeter() << ','
                      << (is_primitive(t) ? "true" : "false") << ','
                      << to_string(classify(t)) << ','
                      << to_string(fm.branch) << ','
                      << (r ? std::to_string(*r) : "") << ','
                      << (dc ? std::to_string(*dc) : "") << ','
                      << cs.cos_a.str() << ',' << cs.cos_b.str() << ',' << cs.cos_c.str();
            if (opt.approx)
                std::cout << ',' << deg3(cs.cos_a) << ',' << deg3(cs.cos_b) << ','
                          << deg3(cs.cos_c);
            std::cout << "\n";
        } else {
            json rec;
            rec["a"] = t.a;
            rec["b"] = t.b;
            rec["c"] = t.c;
            rec[bisector_family ? "d" : "l"] = first_param;
            rec["k"] = fm.params.k;
            rec["m"] = fm.params.m;
            rec["perimeter"] = t.perimeter();
            rec["primitive"] = is_primitive(t);
            rec["angle_class"] = to_string(classify(t));
            rec["branch"] = to_string(fm.branch);
            if (r) rec["r"] = *r;
            if (dc) rec["dc"] = *dc;
            rec["cos_a"] = cs.cos_a.str();
            rec["cos_b"] = cs.cos_b.str();
            rec["cos_c"] = cs.cos_c.str();
            if (opt.approx) {
                rec["angle_a_deg"] = deg3(cs.cos_a);
                rec["angle_b_deg"] = deg3(cs.cos_b);
                rec["angle_c_deg"] = deg3(cs.cos_c);
            }
            std::cout << rec.dump() << "\n";
        }
    }
}

int run_check(Int a, Int b, Int c, bool params_only, bool approx) {
    Triangle t{a, b, c};
    auto p = params_from_triangle(t);
    if (!p) {
        if (params_only)
            std::cerr << "not in family\n";
        else
            std::cout << "triangle: " << a << ' ' << b << ' ' << c << "\n"
                      << "in_family: no\n";
        return 1;
    }
    if (params_only) {
        std::cout << p->l << ' ' << p->k << ' ' << p->m << "\n";
        return 0;
    }
    CosineTriple cs = cosines(t);
    BisectorData bd = family_bisector(t);
    auto r = integral_bisector_length(t);
    std::cout << "triangle: " << a << ' ' << b << ' ' << c << "\n"
              << "in_family: yes\n"
              << "params: l=" << p->l << " k=" << p->k << " m=" << p->m << "\n"
              << "primitive: " << (is_primitive(t) ? "yes" : "no") << "\n"
              << "angle_class: " << to_string(classify(t)) << "\n"
              << "branch: " << (t.c < t.a ? "c_shorter" : "c_longer") << "\n"
              << "cos_a: " << cs.cos_a.str() << "\n"
              << "cos_b: " << cs.cos_b.str() << "\n"
              << "cos_c: " << cs.cos_c.str() << "\n";
    if (approx)
        std::cout << "angles_deg: " << deg3(cs.cos_a) << ' ' << deg3(cs.cos_b) << ' '
                  << deg3(cs.cos_c) << "\n";
    std::cout << "bisector: ad=" << bd.ad.str() << " dc=" << bd.dc.str()
              << " r=" << bd.r->str() << "\n";
    if (r) {
        Triangle sub = sub_triangle(t);
        std::cout << "integral_bisector: " << *r << "\n"
                  << "sub_triangle: " << sub.a << ' ' << sub.b << ' ' << sub.c << "\n";
    } else {
        std::cout << "integral_bisector: no\n";
    }
    return 0;
}

int run_oracle(Int bound, const std::string& which, bool naive) {
    FamilyKind kind = which == "result2" ? FamilyKind::Result2 : FamilyKind::Result1;
    OracleReport report = compare(bound, kind, naive);
    if (report.verified()) {
        std::cout << "verified, " << report.found.size() << " members (max-perimeter "
                  << bound << ", " << which << ")\n";
        return 0;
    }
    std::cout << "DISCREPANCY at max-perimeter " << bound << " (" << which << "): "
              << report.missing_from_parametric.size() << " missing from parametric, "
              << report.extra_in_parametric.size() << " extra in parametric\n";
    for (const auto& t : report.missing_from_parametric)
        std::cout << "missing: " << t.a << ' ' << t.b << ' ' << t.c << "\n";
    for (const auto& t : report.extra_in_parametric)
        std::cout << "extra: " << t.a << ' ' << t.b << ' ' << t.c << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"integral triangles with angle B twice angle A"};
    app.require_subcommand(1);

    GenOptions gen_opt;
    auto* gen = app.add_subcommand("gen", "enumerate the double-angle family");
    add_gen_flags(gen, gen_opt);

    GenOptions genb_opt;
    auto* genb =
        app.add_subcommand("gen-bisector", "enumerate the integral-bisector subfamily");
    add_gen_flags(genb, genb_opt);

    Int ca = 0, cb = 0, cc = 0;
    bool check_approx = false;
    auto* check = app.add_subcommand("check", "verify and describe one triangle");
    check->add_option("a", ca, "side opposite angle A")->required()->check(CLI::Range(Int(1), std::numeric_limits<Int>::max()));
    check->add_option("b", cb, "side opposite angle B")->required()->check(CLI::Range(Int(1), std::numeric_limits<Int>::max()));
    check->add_option("c", cc, "side opposite angle C")->required()->check(CLI::Range(Int(1), std::numeric_limits<Int>::max()));
    check->add_flag("--approx", check_approx, "also print approximate angle degrees");

    Int ia = 0, ib = 0, ic = 0;
    auto* invert = app.add_subcommand("invert", "print only the (l, k, m) parameters");
    invert->add_option("a", ia, "side opposite angle A")->required()->check(CLI::Range(Int(1), std::numeric_limits<Int>::max()));
    invert->add_option("b", ib, "side opposite angle B")->required()->check(CLI::Range(Int(1), std::numeric_limits<Int>::max()));
    invert->add_option("c", ic, "side opposite angle C")->required()->check(CLI::Range(Int(1), std::numeric_limits<Int>::max()));

    Int obound = 0;
    std::string ofamily = "result1";
    bool onaive = false;
    auto* oracle = app.add_subcommand("oracle", "brute-force completeness check");
    oracle->add_option("--max-perimeter", obound, "search bound")
        ->required()
        ->check(CLI::Range(Int(3), std::numeric_limits<Int>::max()));
    oracle->add_option("--family", ofamily, "which claim to check")
        ->check(CLI::IsMember({"result1", "result2"}));
    oracle->add_flag("--naive", onaive, "use the O(n^3) triple loop instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (gen->parsed()) {
        emit_members(enumerate_family(gen_opt.max_perimeter, gen_opt.primitive), gen_opt,
                     false);
        return 0;
    }
    if (genb->parsed()) {
        if (genb_opt.primitive)
            std::cerr << "note: the integral-bisector subfamily has no primitive members "
                         "(gcd(a,b,c) = d*m and m >= 2), emitting empty stream\n";
        emit_members(enumerate_bisector_family(genb_opt.max_perimeter, genb_opt.primitive),
                     genb_opt, true);
        return 0;
    }
    if (check->parsed()) return run_check(ca, cb, cc, false, check_approx);
    if (invert->parsed()) return run_check(ia, ib, ic, true, false);
    if (oracle->parsed()) return run_oracle(obound, ofamily, onaive);
    return 2;
}
