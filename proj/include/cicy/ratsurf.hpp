#pragma once

// Lattice numerics on the two rational surfaces used for the (3,3) and (2,4)
// cases: the cubic surface (plane blown up in six points) and the smooth
// quadric P^1 x P^1.

#include "integer.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cicy {

// a l + b1 e1 + ... + b6 e6 on the plane blown up in six points.
struct DP6Class {
    Integer a;
    std::array<Integer, 6> b;

    friend bool operator==(const DP6Class& p, const DP6Class& q) { return p.a == q.a && p.b == q.b; }
    friend DP6Class operator+(const DP6Class& p, const DP6Class& q) {
        DP6Class r{p.a + q.a, {}};
        for (int i = 0; i < 6; ++i) r.b[i] = p.b[i] + q.b[i];
        return r;
    }
    friend DP6Class operator-(const DP6Class& p) {
        DP6Class r{-p.a, {}};
        for (int i = 0; i < 6; ++i) r.b[i] = -p.b[i];
        return r;
    }
    friend DP6Class operator-(const DP6Class& p, const DP6Class& q) { return p + (-q); }
    friend DP6Class operator*(const Integer& k, const DP6Class& p) {
        DP6Class r{k * p.a, {}};
        for (int i = 0; i < 6; ++i) r.b[i] = k * p.b[i];
        return r;
    }

    bool is_zero() const {
        if (a != 0) return false;
        for (const Integer& v : b)
            if (v != 0) return false;
        return true;
    }
};

inline Integer dp6_pair(const DP6Class& p, const DP6Class& q) {
    Integer s = p.a * q.a;
    for (int i = 0; i < 6; ++i) s -= p.b[i] * q.b[i];
    return s;
}

inline DP6Class dp6_line_class() { return {1, {0, 0, 0, 0, 0, 0}}; }

inline DP6Class dp6_exceptional(int i) {
    if (i < 0 || i >= 6) throw std::out_of_range("dp6_exceptional: index must be in [0,6)");
    DP6Class e{0, {0, 0, 0, 0, 0, 0}};
    e.b[i] = 1;
    return e;
}

inline DP6Class dp6_hyperplane() { return {3, {-1, -1, -1, -1, -1, -1}}; }

inline DP6Class dp6_canonical() { return -dp6_hyperplane(); }

// e_i; l - e_i - e_j; 2l - (sum of all e_k except e_i).
inline std::vector<DP6Class> dp6_lines() {
    std::vector<DP6Class> out;
    for (int i = 0; i < 6; ++i) out.push_back(dp6_exceptional(i));
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) out.push_back(dp6_line_class() - dp6_exceptional(i) - dp6_exceptional(j));
    for (int i = 0; i < 6; ++i) {
        DP6Class c{2, {-1, -1, -1, -1, -1, -1}};
        c.b[i] = 0;
        out.push_back(c);
    }
    return out;
}

// The 27 lines generate the effective cone of the cubic surface.
inline bool dp6_is_nef(const DP6Class& d) {
    for (const DP6Class& e : dp6_lines())
        if (dp6_pair(d, e) < 0) return false;
    return true;
}

// Riemann-Roch value, claimed only for nef classes (then h^1 = h^2 = 0).
inline std::optional<Integer> dp6_h0(const DP6Class& d) {
    if (!dp6_is_nef(d)) return std::nullopt;
    Integer twice = dp6_pair(d, d) - dp6_pair(d, dp6_canonical());
    return 1 + twice / 2;
}

// A nonzero effective class meets the ample H positively.
inline bool dp6_h0_zero_by_ample_pairing(const DP6Class& d) {
    if (d.is_zero()) throw std::invalid_argument("dp6_h0_zero_by_ample_pairing: zero class");
    return dp6_pair(d, dp6_hyperplane()) <= 0;
}

// h^1(D) = h^1(K - D) and both vanish when either is nef.
inline bool dp6_h1_vanishes(const DP6Class& d) { return dp6_is_nef(d) || dp6_is_nef(dp6_canonical() - d); }

struct QuadricClass {
    Integer p;
    Integer q;

    friend bool operator==(const QuadricClass& u, const QuadricClass& v) { return u.p == v.p && u.q == v.q; }
    friend QuadricClass operator+(const QuadricClass& u, const QuadricClass& v) { return {u.p + v.p, u.q + v.q}; }
    friend QuadricClass operator-(const QuadricClass& u, const QuadricClass& v) { return {u.p - v.p, u.q - v.q}; }
    friend QuadricClass operator*(const Integer& k, const QuadricClass& u) { return {k * u.p, k * u.q}; }
};

inline Integer quadric_pair(const QuadricClass& u, const QuadricClass& v) { return u.p * v.q + v.p * u.q; }

inline QuadricClass quadric_hyperplane() { return {1, 1}; }

inline QuadricClass quadric_canonical() { return {-2, -2}; }

struct LineBundleCohomology {
    Integer h0;
    Integer h1;
    Integer h2;

    friend bool operator==(const LineBundleCohomology& a, const LineBundleCohomology& b) {
        return a.h0 == b.h0 && a.h1 == b.h1 && a.h2 == b.h2;
    }
};

// O(p, q) on P^1 x P^1 by Kunneth from O(k) on P^1.
inline LineBundleCohomology quadric_cohomology(const Integer& p, const Integer& q) {
    auto h0 = [](const Integer& k) { return k >= 0 ? Integer(k + 1) : Integer(0); };
    auto h1 = [](const Integer& k) { return k <= -2 ? Integer(-k - 1) : Integer(0); };
    return {h0(p) * h0(q), h0(p) * h1(q) + h1(p) * h0(q), h1(p) * h1(q)};
}

struct CurveInvariants {
    Integer genus;
    Integer degree;

    friend bool operator==(const CurveInvariants& a, const CurveInvariants& b) {
        return a.genus == b.genus && a.degree == b.degree;
    }
};

namespace detail {

inline CurveInvariants adjunction(const Integer& sq, const Integer& with_k, const Integer& deg) {
    if (deg <= 0) throw std::invalid_argument("section_curve_invariants: curve class must meet H positively");
    Integer twice = sq + with_k;
    if (twice % 2 != 0) throw std::logic_error("section_curve_invariants: odd A^2 + A.K");
    return {twice / 2 + 1, deg};
}

}  // namespace detail

inline CurveInvariants section_curve_invariants(const DP6Class& a) {
    return detail::adjunction(dp6_pair(a, a), dp6_pair(a, dp6_canonical()), dp6_pair(a, dp6_hyperplane()));
}

inline CurveInvariants section_curve_invariants(const QuadricClass& a) {
    return detail::adjunction(quadric_pair(a, a), quadric_pair(a, quadric_canonical()),
                              quadric_pair(a, quadric_hyperplane()));
}

// omega_A = O_A(A + K) by adjunction.
inline bool is_canonical_restriction(const DP6Class& a, const DP6Class& d) { return a + dp6_canonical() == d; }

inline bool is_canonical_restriction(const QuadricClass& a, const QuadricClass& d) {
    return a + quadric_canonical() == d;
}

}  // namespace cicy
