#pragma once

// Certificates for h^1(X, O_X(D)) on a rank-2 K3 surface.

#include "cones.hpp"
#include "lattice.hpp"
#include "qform.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cicy {

enum class Verdict { vanishes, nonvanishing, unknown };

enum class Reason {
    zero_class,
    nef_big_kv,
    rr_minus4_both_empty,
    extremal_rational_curve,
    elliptic_pencil_multiple,
    no_minus_two_criterion,
    outside_rules,
};

struct H1Certificate {
    Verdict verdict;
    Reason reason;
    std::optional<Integer> h1_value;
};

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::vanishes: return "vanishes";
        case Verdict::nonvanishing: return "nonvanishing";
        case Verdict::unknown: return "unknown";
    }
    throw std::logic_error("to_string: bad Verdict");
}

inline constexpr std::array<std::pair<Reason, std::string_view>, 7> reason_names{{
    {Reason::zero_class, "zero_class"},
    {Reason::nef_big_kv, "nef_big_kv"},
    {Reason::rr_minus4_both_empty, "rr_minus4_both_empty"},
    {Reason::extremal_rational_curve, "extremal_rational_curve"},
    {Reason::elliptic_pencil_multiple, "elliptic_pencil_multiple"},
    {Reason::no_minus_two_criterion, "no_minus_two_criterion"},
    {Reason::outside_rules, "outside_rules"},
}};

inline std::string to_string(Reason r) {
    for (const auto& [k, name] : reason_names)
        if (k == r) return std::string(name);
    throw std::logic_error("to_string: bad Reason");
}

inline Reason parse_reason(std::string_view s) {
    for (const auto& [k, name] : reason_names)
        if (name == s) return k;
    throw std::invalid_argument("unknown reason tag '" + std::string(s) + "'");
}

inline Verdict parse_verdict(std::string_view s) {
    for (Verdict v : {Verdict::vanishes, Verdict::nonvanishing, Verdict::unknown})
        if (to_string(v) == s) return v;
    throw std::invalid_argument("unknown verdict '" + std::string(s) + "'");
}

// Complete decision on a lattice without -2 classes. There the effective cone
// is the closed positive cone, so h^0 and h^2 are read off from D^2 and D.H.
inline H1Certificate h1_no_minus_two(const GramForm& f, const DivClass& a) {
    if (has_minus_two_class(f)) throw std::invalid_argument("h1_no_minus_two: lattice has -2 classes");
    if (a.is_zero()) return {Verdict::vanishes, Reason::zero_class, Integer(0)};
    Integer sq = self_int(f, a);
    if (sq < -4) return {Verdict::nonvanishing, Reason::no_minus_two_criterion, Integer(-2 - sq / 2)};
    if (sq == 0) {
        PrimitivePart p = primitive(a);
        if (p.multiplicity > 1)
            return {Verdict::nonvanishing, Reason::elliptic_pencil_multiple, Integer(p.multiplicity - 1)};
    }
    return {Verdict::vanishes, Reason::no_minus_two_criterion, Integer(0)};
}

inline H1Certificate h1_with_cone(const GramForm& f, const ConeDesc& cone, const DivClass& a) {
    if (a.is_zero()) return {Verdict::vanishes, Reason::zero_class, Integer(0)};
    const DivClass d = degree(f, a) < 0 ? -a : a;
    if (is_nef_and_big(f, cone, d)) return {Verdict::vanishes, Reason::nef_big_kv, Integer(0)};
    Integer sq = self_int(f, d);
    if (sq == -4 && classify_effectivity(f, cone, d) == Effectivity::not_effective &&
        classify_effectivity(f, cone, -d) == Effectivity::not_effective)
        return {Verdict::vanishes, Reason::rr_minus4_both_empty, Integer(0)};
    if (cone.kind == ConeKind::rational_rays) {
        for (const ConeRay* ray : {&*cone.ray_left, &*cone.ray_right}) {
            if (sq == -2 && ray->kind == RayKind::minus_two && (d == ray->cls || -d == ray->cls))
                return {Verdict::vanishes, Reason::extremal_rational_curve, Integer(0)};
            if (sq == 0 && ray->kind == RayKind::isotropic) {
                PrimitivePart p = primitive(d);
                if (p.direction == ray->cls && p.multiplicity >= 2)
                    return {Verdict::nonvanishing, Reason::elliptic_pencil_multiple, Integer(p.multiplicity - 1)};
            }
        }
    }
    return {Verdict::unknown, Reason::outside_rules, std::nullopt};
}

}  // namespace cicy
