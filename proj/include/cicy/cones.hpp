#pragma once

// Closed effective cone and nef cone of a rank-2 K3 lattice.
//
// Each side of the cone (left: y > 0, right: y < 0, both oriented with
// D.H > 0) is bounded by the extremal -2 class if one exists there, else by
// the rational isotropic ray if disc is a square. Without either, the cone is
// the closure of the positive cone.

#include "lattice.hpp"
#include "qform.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace cicy {

enum class RayKind { minus_two, isotropic };

struct ConeRay {
    DivClass cls;
    RayKind kind;

    friend bool operator==(const ConeRay& a, const ConeRay& b) { return a.cls == b.cls && a.kind == b.kind; }
};

enum class ConeKind { rational_rays, irrational_light_cone };

struct ConeDesc {
    ConeKind kind = ConeKind::irrational_light_cone;
    std::optional<ConeRay> ray_left;
    std::optional<ConeRay> ray_right;
    std::optional<DivClass> nef_left;   // orthogonal to ray_left
    std::optional<DivClass> nef_right;  // orthogonal to ray_right
};

namespace detail {

// Primitive class orthogonal to r, oriented with N.H > 0.
inline DivClass orthogonal_generator(const GramForm& f, const DivClass& r) {
    DivClass n{f.d() * r.x + f.c() * r.y, -(f.h() * r.x + f.d() * r.y)};
    n = primitive(n).direction;
    return effective_sign(f, n);
}

// A -2 ray bounds its side when present; otherwise the isotropic ray does.
inline ConeRay side_ray(const std::optional<DivClass>& minus_two, const std::optional<DivClass>& isotropic) {
    if (minus_two) return {*minus_two, RayKind::minus_two};
    return {*isotropic, RayKind::isotropic};
}

}  // namespace detail

inline std::pair<DivClass, DivClass> nef_generators(const GramForm& f, const ConeDesc& cone) {
    if (cone.kind != ConeKind::rational_rays)
        throw std::invalid_argument("nef cone equals closure of positive cone; no integral generators");
    DivClass nl = detail::orthogonal_generator(f, cone.ray_left->cls);
    DivClass nr = detail::orthogonal_generator(f, cone.ray_right->cls);
    if (pair(f, nl, cone.ray_right->cls) <= 0 || pair(f, nr, cone.ray_left->cls) <= 0)
        throw std::logic_error("nef_generators: dual generator does not pair positively with the opposite ray");
    return {nl, nr};
}

inline ConeDesc effective_cone(const GramForm& f) {
    detail::Extremals ext = detail::extremals(f);
    auto iso = isotropic_primitive_rays(f);
    ConeDesc out;
    if (!iso && !(ext.left || ext.right)) return out;
    if (!iso && (!ext.left || !ext.right))
        throw std::logic_error("effective_cone: -2 classes present on only one side of an irrational light cone");
    out.kind = ConeKind::rational_rays;
    out.ray_left = detail::side_ray(ext.left, iso ? std::optional<DivClass>(iso->first) : std::nullopt);
    out.ray_right = detail::side_ray(ext.right, iso ? std::optional<DivClass>(iso->second) : std::nullopt);
    auto [nl, nr] = nef_generators(f, out);
    out.nef_left = nl;
    out.nef_right = nr;
    return out;
}

enum class Effectivity { effective, not_effective, boundary_limit };

// Closed-cone membership. For the light cone: D.H >= 0 and D^2 >= 0.
inline bool in_closed_cone(const GramForm& f, const ConeDesc& cone, const DivClass& a) {
    if (cone.kind == ConeKind::rational_rays)
        return pair(f, a, *cone.nef_left) >= 0 && pair(f, a, *cone.nef_right) >= 0;
    return degree(f, a) >= 0 && self_int(f, a) >= 0;
}

inline Effectivity classify_effectivity(const GramForm& f, const ConeDesc& cone, const DivClass& a) {
    if (a.is_zero()) throw std::invalid_argument("classify_effectivity: zero class");
    if (!in_closed_cone(f, cone, a)) return Effectivity::not_effective;
    Integer sq = self_int(f, a);
    if (sq >= -2 && degree(f, a) > 0) return Effectivity::effective;
    return Effectivity::boundary_limit;
}

inline bool is_nef(const GramForm& f, const ConeDesc& cone, const DivClass& a) {
    if (cone.kind == ConeKind::rational_rays)
        return pair(f, a, cone.ray_left->cls) >= 0 && pair(f, a, cone.ray_right->cls) >= 0;
    return degree(f, a) >= 0 && self_int(f, a) >= 0;
}

inline bool is_nef_and_big(const GramForm& f, const ConeDesc& cone, const DivClass& a) {
    return is_nef(f, cone, a) && self_int(f, a) > 0;
}

}  // namespace cicy
