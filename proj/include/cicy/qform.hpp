#pragma once

// Exact representation of -2 and 0 by Q(x,y) = h x^2 + 2 d x y + c y^2.
//
// Rays are located by the slope lambda(D) = (D.H) / y, which is invariant
// under D -> -D. Q < 0 exactly on |lambda| < sqrt(disc), and lambda = 0 is the
// direction orthogonal to H. "Left" is lambda > 0 (effective classes with
// y > 0), "right" is lambda < 0.

#include "lattice.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cicy {

enum class Side { left, right };

struct SolutionSet {
    Integer target;
    std::vector<DivClass> solutions;
    Integer exhaustive_bound;
};

namespace detail {

struct Mat2 {
    Integer a, b, c, d;  // [[a b] [c d]]

    DivClass apply(const DivClass& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
};

// Slope as an exact fraction num/den with den > 0. Undefined when y = 0.
struct Slope {
    Integer num;
    Integer den;
};

inline Slope slope(const GramForm& f, const DivClass& v) {
    Integer n = degree(f, v);
    Integer m = v.y;
    if (m < 0) {
        n = -n;
        m = -m;
    }
    return {n, m};
}

inline bool slope_less(const Slope& p, const Slope& q) { return p.num * q.den < q.num * p.den; }

inline DivClass effective_sign(const GramForm& f, const DivClass& v) { return degree(f, v) < 0 ? -v : v; }

// Angular order starting at H and running counter-clockwise.
inline bool angular_less(const DivClass& p, const DivClass& q) {
    auto half = [](const DivClass& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; };
    int hp = half(p), hq = half(q);
    if (hp != hq) return hp < hq;
    return cross(p, q) > 0;
}

// One period of the river of a form with non-square discriminant.
struct RiverPeriod {
    std::vector<DivClass> negative_regions;  // regions created on the negative bank during the period
    Mat2 forward;                            // automorphism carrying the start edge to the end edge
    Mat2 backward;
    std::size_t length = 0;
};

// Returns (positive, negative) neighbours of a river edge.
inline std::pair<DivClass, DivClass> river_edge(const GramForm& f) {
    const Integer& h = f.h();
    const Integer& d = f.d();
    Integer disc = f.discriminant();
    Integer s = isqrt(disc);
    // Bracket the root (-d + sqrt(disc))/h of Q(x,1) between consecutive Farey neighbours.
    Integer k = floor_div(s - d, h);
    DivClass lo{k, 1}, hi{k + 1, 1};
    while (self_int(f, lo) >= 0) {
        DivClass m = lo + hi;
        Integer n = h * m.x + d * m.y;
        bool below = n < 0 || n * n < disc * m.y * m.y;
        if (below)
            lo = m;
        else
            hi = m;
    }
    return {hi, lo};
}

inline RiverPeriod walk_river(const GramForm& f) {
    if (is_perfect_square(f.discriminant())) throw std::logic_error("walk_river: discriminant is a perfect square");
    auto [e1, e2] = river_edge(f);
    const DivClass s1 = e1, s2 = e2;
    auto state = [&](const DivClass& p, const DivClass& n) {
        return std::array<Integer, 3>{self_int(f, p), pair(f, p, n), self_int(f, n)};
    };
    const auto start = state(e1, e2);
    RiverPeriod out;
    do {
        DivClass v = e1 + e2;
        if (self_int(f, v) > 0) {
            e1 = v;
        } else {
            e2 = v;
            out.negative_regions.push_back(v);
        }
        ++out.length;
    } while (state(e1, e2) != start);

    // forward * [s1 s2] = [e1 e2]; [s1 s2] has determinant +-1.
    Integer det = s1.x * s2.y - s2.x * s1.y;
    Mat2 inv{s2.y * det, -s2.x * det, -s1.y * det, s1.x * det};
    Mat2 fw{e1.x * inv.a + e2.x * inv.c, e1.x * inv.b + e2.x * inv.d, e1.y * inv.a + e2.y * inv.c,
            e1.y * inv.b + e2.y * inv.d};
    if (fw.a * fw.d - fw.b * fw.c != 1) throw std::logic_error("walk_river: period automorphism has det != 1");
    out.forward = fw;
    out.backward = Mat2{fw.d, -fw.b, -fw.c, fw.a};
    return out;
}

// Solutions of Q = target on a line x = const.
inline std::vector<Integer> solve_for_y(const GramForm& f, const Integer& x, const Integer& target) {
    std::vector<Integer> ys;
    const Integer& c = f.c();
    if (c == 0) {
        Integer lin = 2 * f.d() * x;
        Integer rhs = target - f.h() * x * x;
        if (lin == 0) {
            if (rhs == 0) throw std::domain_error("solve_for_y: infinitely many solutions on x = 0");
            return ys;
        }
        if (rhs % lin == 0) ys.push_back(rhs / lin);
        return ys;
    }
    // c y^2 + 2 d x y + (h x^2 - t) = 0
    Integer quarter = x * x * f.discriminant() + c * target;
    if (quarter < 0 || !is_perfect_square(quarter)) return ys;
    Integer r = isqrt(quarter);
    for (const Integer& num : {Integer(-f.d() * x + r), Integer(-f.d() * x - r)}) {
        if (num % c == 0) {
            Integer y = num / c;
            if (std::find(ys.begin(), ys.end(), y) == ys.end()) ys.push_back(y);
        }
    }
    return ys;
}

inline std::vector<Integer> positive_divisors(const Integer& n) {
    std::vector<Integer> small, large;
    Integer m = abs_value(n);
    for (Integer t = 1; t * t <= m; ++t) {
        if (m % t == 0) {
            small.push_back(t);
            if (t * t != m) large.push_back(m / t);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// All -2 classes when disc = s^2: h Q = (h x + (d - s) y)(h x + (d + s) y).
inline std::vector<DivClass> square_disc_minus_two(const GramForm& f) {
    const Integer& h = f.h();
    const Integer& d = f.d();
    Integer s = isqrt(f.discriminant());
    std::vector<DivClass> out;
    for (const Integer& t : positive_divisors(2 * h)) {
        for (const Integer& u : {Integer(t), Integer(-t)}) {
            Integer v = -2 * h / u;
            Integer diff = v - u;
            if (diff % (2 * s) != 0) continue;
            Integer y = diff / (2 * s);
            Integer xn = u - (d - s) * y;
            if (xn % h != 0) continue;
            DivClass cand{xn / h, y};
            if (self_int(f, cand) != -2) throw std::logic_error("square_disc_minus_two: factorisation mismatch");
            out.push_back(cand);
        }
    }
    return out;
}

inline std::string not_ample_message() { return "H is not ample: a -2 class is orthogonal to H"; }

struct Extremals {
    std::optional<DivClass> left;
    std::optional<DivClass> right;
};

inline void keep_extremal(const GramForm& f, std::optional<DivClass>& best, const DivClass& cand, Side side) {
    DivClass e = effective_sign(f, cand);
    if (!best) {
        best = e;
        return;
    }
    Slope sc = slope(f, e), sb = slope(f, *best);
    bool better = side == Side::left ? slope_less(sc, sb) : slope_less(sb, sc);
    if (!better && !slope_less(sc, sb) && !slope_less(sb, sc) && e != *best)
        throw std::logic_error("extremal -2 search: two distinct primitive classes on one ray");
    if (better) best = e;
}

inline Extremals extremals_from_list(const GramForm& f, const std::vector<DivClass>& classes) {
    Extremals out;
    for (const DivClass& v : classes) {
        if (v.y == 0) continue;  // Q(x,0) = h x^2 > 0, never -2
        Slope s = slope(f, v);
        if (s.num == 0) throw std::domain_error(not_ample_message());
        keep_extremal(f, s.num > 0 ? out.left : out.right, v, s.num > 0 ? Side::left : Side::right);
    }
    return out;
}

inline Extremals extremals_from_river(const GramForm& f, const RiverPeriod& period) {
    Extremals out;
    for (const DivClass& rep : period.negative_regions) {
        if (self_int(f, rep) != -2) continue;
        // The period automorphism moves lambda monotonically along the orbit.
        const Mat2* up = &period.forward;
        const Mat2* down = &period.backward;
        if (slope_less(slope(f, up->apply(rep)), slope(f, rep))) std::swap(up, down);
        DivClass v = rep;
        while (slope(f, v).num > 0) v = down->apply(v);
        if (slope(f, v).num == 0) throw std::domain_error(not_ample_message());
        DivClass w = up->apply(v);
        while (slope(f, w).num <= 0) {
            if (slope(f, w).num == 0) throw std::domain_error(not_ample_message());
            v = w;
            w = up->apply(v);
        }
        keep_extremal(f, out.left, w, Side::left);
        keep_extremal(f, out.right, v, Side::right);
    }
    return out;
}

inline Extremals extremals(const GramForm& f) {
    if (is_perfect_square(f.discriminant())) return extremals_from_list(f, square_disc_minus_two(f));
    return extremals_from_river(f, walk_river(f));
}

}  // namespace detail

// Exact decision: terminates for every valid form.
inline bool has_minus_two_class(const GramForm& f) {
    if (is_perfect_square(f.discriminant())) return !detail::square_disc_minus_two(f).empty();
    for (const DivClass& v : detail::walk_river(f).negative_regions)
        if (self_int(f, v) == -2) return true;
    return false;
}

// One -2 class per orbit of the automorphism group of the form, up to sign
// (for square discriminants, all of them).
inline std::vector<DivClass> minus_two_orbit_representatives(const GramForm& f) {
    std::vector<DivClass> out;
    if (is_perfect_square(f.discriminant())) {
        out = detail::square_disc_minus_two(f);
    } else {
        for (const DivClass& v : detail::walk_river(f).negative_regions)
            if (self_int(f, v) == -2) out.push_back(v);
    }
    for (DivClass& v : out) v = detail::effective_sign(f, v);
    return out;
}

inline SolutionSet minus_two_classes_bounded(const GramForm& f, const Integer& x_bound) {
    if (x_bound < 1) throw std::invalid_argument("minus_two_classes_bounded: bound must be positive");
    SolutionSet out{Integer(-2), {}, x_bound};
    for (Integer x = -x_bound; x <= x_bound; ++x) {
        for (const Integer& y : detail::solve_for_y(f, x, out.target)) {
            DivClass v{x, y};
            if (self_int(f, v) != out.target) throw std::logic_error("minus_two_classes_bounded: bad solution");
            out.solutions.push_back(v);
        }
    }
    std::sort(out.solutions.begin(), out.solutions.end(), detail::angular_less);
    return out;
}

// The effective -2 class on the given side whose ray is closest to H-perp.
// Throws std::domain_error when some -2 class is orthogonal to H.
inline std::optional<DivClass> extremal_minus_two(const GramForm& f, Side side) {
    detail::Extremals e = detail::extremals(f);
    return side == Side::left ? e.left : e.right;
}

// Primitive isotropic classes (left, right), oriented with D.H > 0; present iff disc is a square.
inline std::optional<std::pair<DivClass, DivClass>> isotropic_primitive_rays(const GramForm& f) {
    Integer disc = f.discriminant();
    if (!is_perfect_square(disc)) return std::nullopt;
    Integer s = isqrt(disc);
    DivClass left = primitive(DivClass{s - f.d(), f.h()}).direction;
    DivClass right = primitive(DivClass{f.d() + s, -f.h()}).direction;
    left = detail::effective_sign(f, left);
    right = detail::effective_sign(f, right);
    if (self_int(f, left) != 0 || self_int(f, right) != 0)
        throw std::logic_error("isotropic_primitive_rays: ray is not isotropic");
    return std::make_pair(left, right);
}

}  // namespace cicy
