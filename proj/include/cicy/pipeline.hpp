#pragma once

// Numeric checklist for an isolated smooth curve of genus g and degree d on a
// general complete intersection Calabi-Yau threefold Y, obtained by putting the
// curve on a complete intersection surface X inside a nodal member of the
// family of Y.

#include "cones.hpp"
#include "k3_existence.hpp"
#include "lattice.hpp"
#include "qform.hpp"
#include "ratsurf.hpp"
#include "vanishing.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cicy {

using DegreeType = std::vector<int>;

inline DegreeType normalized_type(DegreeType t) {
    std::sort(t.begin(), t.end());
    return t;
}

inline std::string format_type(const DegreeType& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(t[i]);
    }
    return s + ")";
}

// X = (a_1, ..., a_{r-2}) in P^r inside Y = (a_1, ..., a_{r-4}, a_{r-3} + a_{r-2}).
struct EmbeddingRow {
    DegreeType x_degrees;
    DegreeType y_degrees;
    int r = 0;

    const int& split_first() const { return x_degrees[x_degrees.size() - 2]; }   // a_{r-3}
    const int& split_second() const { return x_degrees[x_degrees.size() - 1]; }  // a_{r-2}
};

inline void validate_row(const EmbeddingRow& row) {
    const auto& x = row.x_degrees;
    auto bad = [&](const std::string& why) {
        throw std::invalid_argument("embedding row X=" + format_type(x) + " Y=" + format_type(row.y_degrees) + ": " +
                                    why);
    };
    if (row.r < 4) bad("r must be at least 4");
    if (x.size() != static_cast<std::size_t>(row.r - 2)) bad("X must have r-2 degrees");
    for (int v : x)
        if (v < 1) bad("degrees must be positive");
    if (std::accumulate(x.begin(), x.end(), 0) != row.r + 1) bad("X is not a K3 complete intersection (sum != r+1)");
    DegreeType y(x.begin(), x.end() - 2);
    y.push_back(row.split_first() + row.split_second());
    if (normalized_type(y) != normalized_type(row.y_degrees)) bad("Y does not merge the last two degrees of X");
}

struct K3Quantities {
    Integer h;             // H^2
    Integer n_k3;          // h/2
    Integer a;             // smaller split degree
    Integer b;             // larger split degree
    Integer l;             // number of nodes of Y on X
    Integer mu;            // h/2 + 1
    Integer n_sections;    // h^0(X, L) = g + 1
    Integer incidence_dim; // dim |O_{A0}(b)|, A0 in |aH|
    DivClass critical;     // (a+b)H - C
};

// dim |O_{A0}(b)| for a smooth A0 in |aH| on a K3 of degree h.
inline Integer dim_on_A0(const Integer& h, const Integer& a, const Integer& b) {
    if (a < 1 || b < a) throw std::invalid_argument("dim_on_A0: need 1 <= a <= b");
    if (h % 2 != 0) throw std::invalid_argument("dim_on_A0: K3 degree must be even");
    Integer g0_minus_one = a * a * h / 2;
    if (b > a) return a * b * h - g0_minus_one - 1;
    return g0_minus_one;
}

inline Integer dim_on_A0(const EmbeddingRow& row) {
    validate_row(row);
    Integer h = 1;
    for (int v : row.x_degrees) h *= v;
    int a = std::min(row.split_first(), row.split_second());
    int b = std::max(row.split_first(), row.split_second());
    return dim_on_A0(h, a, b);
}

inline K3Quantities k3_quantities(const EmbeddingRow& row, const Integer& g, const Integer& d) {
    validate_row(row);
    if (g < 0 || d < 1) throw std::invalid_argument("k3_quantities: need g >= 0 and d >= 1");
    K3Quantities q;
    q.h = 1;
    for (int v : row.x_degrees) q.h *= v;
    if (q.h % 2 != 0) throw std::invalid_argument("k3_quantities: odd K3 degree");
    q.n_k3 = q.h / 2;
    q.a = std::min(row.split_first(), row.split_second());
    q.b = std::max(row.split_first(), row.split_second());
    q.l = q.h * q.a * q.b;
    q.mu = q.h / 2 + 1;
    q.n_sections = g + 1;
    q.incidence_dim = dim_on_A0(q.h, q.a, q.b);
    q.critical = DivClass{q.a + q.b, -1};
    return q;
}

// h^0(X, L(-a)) = 0 via h^1(O_C(a)) = 0.
inline bool twist_restriction_nonspecial(const Integer& a_last, const Integer& mu, const Integer& d,
                                         const Integer& g) {
    return d <= 2 * a_last * (mu - 1) || d * a_last > a_last * a_last * (mu - 1) + g;
}

inline bool incidence_bound_holds(const Integer& a_split_first, const Integer& a_last, const Integer& mu,
                                  const Integer& g) {
    Integer lhs = a_last * (2 * a_split_first - a_last) * (mu - 1);
    return lhs >= (a_split_first == a_last ? g + 1 : g + 2);
}

struct CurveCohomology {
    Integer h0;
    Integer h1;

    friend bool operator==(const CurveCohomology& a, const CurveCohomology& b) { return a.h0 == b.h0 && a.h1 == b.h1; }
};

// Riemann-Roch on a smooth curve, in the regimes decidable from numbers alone.
inline std::optional<CurveCohomology> curve_rr(const Integer& genus, const Integer& deg, bool canonical) {
    if (genus < 0) throw std::invalid_argument("curve_rr: negative genus");
    if (deg < 0) return CurveCohomology{0, genus - 1 - deg};
    if (deg > 2 * genus - 2) return CurveCohomology{deg - genus + 1, 0};
    if (deg == 2 * genus - 2 && canonical) return CurveCohomology{genus, 1};
    return std::nullopt;
}

enum class CheckStatus { pass, fail, unknown };

inline std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::unknown: return "unknown";
    }
    throw std::logic_error("to_string: bad CheckStatus");
}

inline CheckStatus parse_check_status(std::string_view s) {
    for (CheckStatus v : {CheckStatus::pass, CheckStatus::fail, CheckStatus::unknown})
        if (to_string(v) == s) return v;
    throw std::invalid_argument("unknown check status '" + std::string(s) + "'");
}

struct CheckResult {
    std::string name;
    CheckStatus status;
    bool gating;
    std::string detail;
};

struct NamedQuantity {
    std::string name;
    Integer value;
};

struct CriterionReport {
    std::string subject;  // "k3" or a rational case id
    DegreeType y_type;
    DegreeType x_type;
    Integer g;
    Integer d;
    std::vector<NamedQuantity> quantities;
    std::optional<DivClass> critical_class;
    std::string route;  // "no_minus_two", "cone" or empty
    std::optional<ConeDesc> cone;
    std::optional<H1Certificate> certificate;
    std::vector<CheckResult> checks;

    bool satisfied() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const CheckResult& c) { return !c.gating || c.status == CheckStatus::pass; });
    }

    std::optional<std::string> first_failure() const {
        for (const CheckResult& c : checks)
            if (c.gating && c.status != CheckStatus::pass) return c.name;
        return std::nullopt;
    }

    std::optional<Integer> quantity(std::string_view name) const {
        for (const NamedQuantity& q : quantities)
            if (q.name == name) return q.value;
        return std::nullopt;
    }

    const CheckResult* check(std::string_view name) const {
        for (const CheckResult& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

namespace detail {

inline CheckStatus status_of(bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; }

template <class... Parts>
std::string cat(const Parts&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

inline CheckResult h1_check(const Integer& g, const Integer& d, const Integer& h, const DivClass& critical,
                            CriterionReport& report) {
    const std::string name = "h1_vanishing";
    Integer c = 2 * g - 2;
    if (d * d - h * c <= 0)
        return {name, CheckStatus::unknown, true, "lattice (H^2, H.C, C^2) is not hyperbolic; no rank-2 K3"};
    GramForm f(h, d, c);
    report.quantities.push_back({"D_sq", self_int(f, critical)});
    H1Certificate cert{Verdict::unknown, Reason::outside_rules, std::nullopt};
    if (!has_minus_two_class(f)) {
        report.route = "no_minus_two";
        cert = h1_no_minus_two(f, critical);
    } else {
        report.route = "cone";
        try {
            report.cone = effective_cone(f);
        } catch (const std::domain_error& e) {
            return {name, CheckStatus::unknown, true, e.what()};
        }
        cert = h1_with_cone(f, *report.cone, critical);
    }
    report.certificate = cert;
    CheckStatus st = cert.verdict == Verdict::vanishes   ? CheckStatus::pass
                     : cert.verdict == Verdict::unknown ? CheckStatus::unknown
                                                        : CheckStatus::fail;
    return {name, st, true,
            cat("h^1(", format_class(critical), ") ", to_string(cert.verdict), " [", to_string(cert.reason),
                "] via ", report.route == "cone" ? "effective cone" : "no -2 classes")};
}

}  // namespace detail

inline CriterionReport check_k3_case(const EmbeddingRow& row, const Integer& g, const Integer& d) {
    using detail::cat;
    using detail::status_of;
    K3Quantities q = k3_quantities(row, g, d);
    CriterionReport rep;
    rep.subject = "k3";
    rep.y_type = row.y_degrees;
    rep.x_type = row.x_degrees;
    rep.g = g;
    rep.d = d;
    rep.quantities = {{"h", q.h},   {"a", q.a},   {"b", q.b},          {"l", q.l},
                      {"mu", q.mu}, {"n_L", q.n_sections}, {"N", q.incidence_dim}};
    rep.critical_class = q.critical;

    ExistenceVerdict ex = classify_existence(q.n_k3, d, g);
    rep.checks.push_back({"existence",
                          status_of(ex.exists && ex.picard == PicardStructure::rank_two_hc), true,
                          cat("n=", q.n_k3, " ", to_string(ex.which), " picard=", to_string(ex.picard))});

    rep.checks.push_back({"node_bound", status_of(q.l >= g + 2), true, cat("l=", q.l, " vs g+2=", g + 2)});
    rep.checks.push_back(
        {"nodes_exceed_sections", status_of(q.l > q.n_sections), true, cat("l=", q.l, " vs n_L=", q.n_sections)});

    Integer a_last = row.split_second();
    Integer a_first = row.split_first();
    rep.checks.push_back({"twist_restriction_nonspecial", status_of(twist_restriction_nonspecial(a_last, q.mu, d, g)),
                          true,
                          cat("d=", d, " <= ", 2 * a_last * (q.mu - 1), " or d*a=", d * a_last, " > ",
                              a_last * a_last * (q.mu - 1) + g, " (mu=h/2+1 derived)")});

    rep.checks.push_back({"incidence_irreducible", status_of(q.l <= 2 * q.incidence_dim), true,
                          cat("l/2=", q.l, "/2 vs N=", q.incidence_dim)});

    rep.checks.push_back(detail::h1_check(g, d, q.h, q.critical, rep));

    bool bound = incidence_bound_holds(a_first, a_last, q.mu, g);
    rep.checks.push_back({"incidence_bound", status_of(bound), false,
                          cat(a_last * (2 * a_first - a_last) * (q.mu - 1), " vs ",
                              a_first == a_last ? g + 1 : g + 2)});
    return rep;
}

enum class RationalCaseId { cubic33, quadric24 };

inline std::string to_string(RationalCaseId id) { return id == RationalCaseId::cubic33 ? "cubic33" : "quadric24"; }

inline RationalCaseId parse_rational_case(std::string_view s) {
    if (s == "cubic33" || s == "cubic_33") return RationalCaseId::cubic33;
    if (s == "quadric24" || s == "quadric_24") return RationalCaseId::quadric24;
    throw std::invalid_argument("unknown rational case '" + std::string(s) + "' (expected cubic33 or quadric24)");
}

namespace detail {

struct CubicSurface {
    using Class = DP6Class;
    static Class hyperplane() { return dp6_hyperplane(); }
    static Integer pair(const Class& u, const Class& v) { return dp6_pair(u, v); }
    static std::optional<Integer> h0(const Class& c) { return dp6_h0(c); }
    static bool h0_zero(const Class& c) { return !c.is_zero() && dp6_h0_zero_by_ample_pairing(c); }
    static bool h1_zero(const Class& c) { return dp6_h1_vanishes(c); }
};

struct QuadricSurface {
    using Class = QuadricClass;
    static Class hyperplane() { return quadric_hyperplane(); }
    static Integer pair(const Class& u, const Class& v) { return quadric_pair(u, v); }
    static std::optional<Integer> h0(const Class& c) {
        LineBundleCohomology co = quadric_cohomology(c.p, c.q);
        if (co.h1 != 0 || co.h2 != 0) return std::nullopt;
        return co.h0;
    }
    static bool h0_zero(const Class& c) { return quadric_cohomology(c.p, c.q).h0 == 0; }
    static bool h1_zero(const Class& c) { return quadric_cohomology(c.p, c.q).h1 == 0; }
};

// S = A cap B with A in |aH|, B in |bH| on X in P^3; the nodes are cut on A by
// the second equation, of degree `twist`, of the threefold.
template <class Surface>
CriterionReport rational_report(const std::string& id, const DegreeType& y_type, const DegreeType& x_type,
                                const Integer& g, const Integer& d, const typename Surface::Class& bundle,
                                const Integer& a, const Integer& b, const Integer& twist) {
    const auto H = Surface::hyperplane();
    CriterionReport rep;
    rep.subject = id;
    rep.y_type = y_type;
    rep.x_type = x_type;
    rep.g = g;
    rep.d = d;

    CurveInvariants curve = section_curve_invariants(bundle);
    rep.checks.push_back({"curve_class", status_of(curve.genus == g && curve.degree == d), true,
                          cat("members of |L| have genus ", curve.genus, " and degree ", curve.degree)});

    Integer l = a * b * Surface::pair(H, H);
    auto n_l = Surface::h0(bundle);
    rep.checks.push_back({"sections", status_of(n_l.has_value()), true,
                          n_l ? cat("h^0(X, L)=", *n_l, " by Riemann-Roch") : std::string("h^0(X, L) undetermined")});
    Integer n_sections = n_l.value_or(0);
    rep.checks.push_back(
        {"node_bound", status_of(n_l && l >= n_sections + 1), true, cat("l=", l, " vs dim|L|+2=", n_sections + 1)});
    rep.checks.push_back(
        {"nodes_exceed_sections", status_of(n_l && l > n_sections), true, cat("l=", l, " vs n_L=", n_sections)});

    rep.checks.push_back({"standing_assumption", status_of(Surface::h0_zero(bundle - a * H)), true,
                          "h^0(X, L - aH) = 0"});

    const auto A = a * H;
    CurveInvariants ai = section_curve_invariants(A);
    auto on_a = curve_rr(ai.genus, b * ai.degree, is_canonical_restriction(A, b * H));
    rep.checks.push_back({"incidence_irreducible", status_of(on_a && l <= 2 * (on_a->h0 - 1)), true,
                          on_a ? cat("l/2=", l, "/2 vs N=", on_a->h0 - 1) : std::string("h^0(A, O_A(b)) undetermined")});

    bool h0_part = Surface::h0_zero(bundle - b * H);
    bool h1_part = Surface::h1_zero(bundle - (a + b) * H);
    rep.checks.push_back({"h1_vanishing", status_of(h0_part && h1_part), true,
                          cat("h^0(X, L - bH) = 0: ", h0_part ? "yes" : "no",
                              "; h^1(X, L - (a+b)H) = 0: ", h1_part ? "yes" : "no")});

    auto low = curve_rr(ai.genus, (twist - b) * ai.degree, is_canonical_restriction(A, (twist - b) * H));
    auto top = curve_rr(ai.genus, twist * ai.degree, is_canonical_restriction(A, twist * H));
    rep.checks.push_back({"node_restriction_codim_one", status_of(low && top && low->h1 == 1 && top->h1 == 0), true,
                          cat("h^1(A, O_A(", twist - b, "))=", low ? low->h1.str() : "?", ", h^1(A, O_A(", twist,
                              "))=", top ? top->h1.str() : "?")});

    rep.quantities = {{"a", a}, {"b", b}, {"l", l}, {"n_L", n_sections}, {"N", on_a ? on_a->h0 - 1 : Integer(-1)},
                      {"g_A", ai.genus}, {"d_A", ai.degree}, {"h1_A_low", low ? low->h1 : Integer(-1)},
                      {"h1_A_top", top ? top->h1 : Integer(-1)}};
    return rep;
}

}  // namespace detail

inline CriterionReport check_rational_case(RationalCaseId id) {
    if (id == RationalCaseId::cubic33) {
        // L = H + l on the cubic surface; the threefold is x4 G + x5 P = 0 in a cubic fourfold.
        DP6Class bundle = dp6_hyperplane() + dp6_line_class();
        return detail::rational_report<detail::CubicSurface>("cubic33", {3, 3}, {3}, 3, 6, bundle, 2, 2, 3);
    }
    // L = (2,4) on the quadric; G, P are cubics and the threefold equation is quartic.
    QuadricClass bundle{2, 4};
    return detail::rational_report<detail::QuadricSurface>("quadric24", {2, 4}, {2}, 3, 6, bundle, 3, 3, 4);
}

}  // namespace cicy
