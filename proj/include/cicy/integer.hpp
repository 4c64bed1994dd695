#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cicy {

// Unbounded signed integer used for every lattice computation.
using Integer = boost::multiprecision::cpp_int;

inline Integer abs_value(const Integer& v) { return v < 0 ? Integer(-v) : v; }

inline int sign_of(const Integer& v) { return v.sign(); }

// Floor of a / b for b != 0 (cpp_int division truncates toward zero).
inline Integer floor_div(const Integer& a, const Integer& b) {
    if (b == 0) throw std::domain_error("floor_div: division by zero");
    Integer q = a / b;
    Integer r = a - q * b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Integer gcd_of(const Integer& a, const Integer& b) {
    Integer x = abs_value(a), y = abs_value(b);
    while (y != 0) {
        Integer t = x % y;
        x = y;
        y = t;
    }
    return x;
}

// Largest s >= 0 with s*s <= n.
inline Integer isqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    Integer s = boost::multiprecision::sqrt(n);
    while (s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    return s;
}

inline bool is_perfect_square(const Integer& n) {
    if (n < 0) return false;
    Integer s = isqrt(n);
    return s * s == n;
}

inline std::string to_string(const Integer& v) { return v.str(); }

// Decimal integer with optional sign; rejects anything else.
inline Integer parse_integer(std::string_view text) {
    std::size_t i = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (i == text.size()) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    for (std::size_t k = i; k < text.size(); ++k)
        if (text[k] < '0' || text[k] > '9') throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    Integer v(std::string(text.substr(i)));
    return text[0] == '-' ? Integer(-v) : v;
}

}  // namespace cicy
