#pragma once

// Brute-force oracles that share no code with the library algorithms: plain
// 128-bit arithmetic, direct enumeration of x and exact solution for y.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

using i128 = __int128;

struct Form {
    std::int64_t h;
    std::int64_t d;
    std::int64_t c;
};

struct Cls {
    std::int64_t x;
    std::int64_t y;
    friend bool operator==(const Cls&, const Cls&) = default;
};

inline i128 q(const Form& f, i128 x, i128 y) { return f.h * x * x + 2 * f.d * x * y + f.c * y * y; }
inline i128 dot_h(const Form& f, const Cls& v) { return i128(f.h) * v.x + i128(f.d) * v.y; }

inline std::optional<i128> exact_sqrt(i128 n) {
    if (n < 0) return std::nullopt;
    i128 lo = 0, hi = 1;
    while (hi * hi <= n) hi *= 2;
    while (hi - lo > 1) {
        i128 mid = (lo + hi) / 2;
        (mid * mid <= n ? lo : hi) = mid;
    }
    if (lo * lo == n) return lo;
    return std::nullopt;
}

// Every (x, y) with |x| <= bound and Q(x, y) = target.
inline std::vector<Cls> solutions(const Form& f, std::int64_t bound, std::int64_t target) {
    std::vector<Cls> out;
    for (std::int64_t x = -bound; x <= bound; ++x) {
        // c y^2 + 2 d x y + (h x^2 - target) = 0
        i128 a = f.c, b = 2 * i128(f.d) * x, k = i128(f.h) * x * x - target;
        std::vector<i128> ys;
        if (a == 0) {
            if (b != 0 && (-k) % b == 0) ys.push_back(-k / b);
        } else if (auto s = exact_sqrt(b * b - 4 * a * k)) {
            for (i128 num : {-b + *s, -b - *s})
                if (num % (2 * a) == 0 && (ys.empty() || ys.back() != num / (2 * a))) ys.push_back(num / (2 * a));
        }
        for (i128 y : ys)
            if (q(f, x, y) == target) out.push_back({x, static_cast<std::int64_t>(y)});
    }
    return out;
}

// Left side: D.H > 0, y > 0, smallest (D.H)/y. Right side: y < 0, (D.H)/y closest to 0.
inline std::pair<std::optional<Cls>, std::optional<Cls>> extremal_pair(const Form& f, const std::vector<Cls>& sols) {
    std::optional<Cls> left, right;
    for (Cls v : sols) {
        if (dot_h(f, v) < 0) v = {-v.x, -v.y};
        if (v.y == 0) continue;
        auto& best = v.y > 0 ? left : right;
        if (!best) {
            best = v;
            continue;
        }
        // compare (vH)/vy with (bH)/by; both y share a sign, so cross-multiply by |y|
        i128 lhs = dot_h(f, v) * (best->y > 0 ? best->y : -best->y);
        i128 rhs = dot_h(f, *best) * (v.y > 0 ? v.y : -v.y);
        if (lhs < rhs) best = v;
    }
    return {left, right};
}

}  // namespace oracle
