#pragma once

// Rank-2 Picard lattice Z H + Z C of a K3 surface with Gram matrix
//   [ h  d ]
//   [ d  c ]
// where h = H^2, d = H.C and c = C^2.

#include "integer.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace cicy {

struct DivClass {
    Integer x;  // coefficient of H
    Integer y;  // coefficient of C

    DivClass() = default;
    DivClass(Integer x_, Integer y_) : x(std::move(x_)), y(std::move(y_)) {}

    bool is_zero() const { return x == 0 && y == 0; }

    friend bool operator==(const DivClass& a, const DivClass& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const DivClass& a, const DivClass& b) { return !(a == b); }
    friend DivClass operator-(const DivClass& a) { return {-a.x, -a.y}; }
    friend DivClass operator+(const DivClass& a, const DivClass& b) { return {a.x + b.x, a.y + b.y}; }
    friend DivClass operator-(const DivClass& a, const DivClass& b) { return {a.x - b.x, a.y - b.y}; }
    friend DivClass operator*(const Integer& k, const DivClass& a) { return {k * a.x, k * a.y}; }
};

class GramForm {
public:
    GramForm(Integer h, Integer d, Integer c) : h_(std::move(h)), d_(std::move(d)), c_(std::move(c)) {
        if (h_ <= 0) throw std::invalid_argument("GramForm: H^2 must be positive");
        if (d_ <= 0) throw std::invalid_argument("GramForm: H.C must be positive");
        if (discriminant() <= 0)
            throw std::invalid_argument("GramForm: d^2 - h*c must be positive (hyperbolic lattice)");
    }

    const Integer& h() const { return h_; }
    const Integer& d() const { return d_; }
    const Integer& c() const { return c_; }

    Integer discriminant() const { return d_ * d_ - h_ * c_; }

    friend bool operator==(const GramForm& a, const GramForm& b) {
        return a.h_ == b.h_ && a.d_ == b.d_ && a.c_ == b.c_;
    }

private:
    Integer h_;
    Integer d_;
    Integer c_;
};

inline const DivClass& hyperplane_class() {
    static const DivClass H{1, 0};
    return H;
}

inline Integer pair(const GramForm& f, const DivClass& a, const DivClass& b) {
    return f.h() * a.x * b.x + f.d() * (a.x * b.y + b.x * a.y) + f.c() * a.y * b.y;
}

inline Integer self_int(const GramForm& f, const DivClass& a) { return pair(f, a, a); }

// D.H
inline Integer degree(const GramForm& f, const DivClass& a) { return f.h() * a.x + f.d() * a.y; }

// Riemann-Roch on a K3: chi(D) = 2 + D^2/2.
inline Integer chi(const GramForm& f, const DivClass& a) {
    Integer sq = self_int(f, a);
    if (sq % 2 != 0) throw std::domain_error("chi: odd self-intersection, lattice is not even");
    return 2 + sq / 2;
}

// Arithmetic genus by adjunction with K = 0.
inline Integer genus_of_class(const GramForm& f, const DivClass& a) {
    Integer sq = self_int(f, a);
    if (sq % 2 != 0) throw std::domain_error("genus_of_class: odd self-intersection");
    return sq / 2 + 1;
}

struct PrimitivePart {
    DivClass direction;
    Integer multiplicity;
};

inline PrimitivePart primitive(const DivClass& a) {
    if (a.is_zero()) throw std::invalid_argument("primitive: zero class has no primitive part");
    Integer g = gcd_of(a.x, a.y);
    return {DivClass{a.x / g, a.y / g}, g};
}

inline Integer cross(const DivClass& a, const DivClass& b) { return a.x * b.y - b.x * a.y; }

// Renders "xH+yC" in the usual sign conventions: 5H-C, -7H+4C, -H+C, 2H, C, 0.
inline std::string format_class(const DivClass& a) {
    auto term = [](const Integer& coef, char sym, bool leading) {
        std::string out;
        if (coef == 0) return out;
        if (coef < 0)
            out += '-';
        else if (!leading)
            out += '+';
        Integer mag = abs_value(coef);
        if (mag != 1) out += mag.str();
        out += sym;
        return out;
    };
    if (a.is_zero()) return "0";
    std::string s = term(a.x, 'H', true);
    s += term(a.y, 'C', s.empty());
    return s;
}

// Inverse of format_class. Accepts optional whitespace-free "xH+yC" forms.
inline DivClass parse_class(std::string_view text) {
    if (text == "0") return {0, 0};
    DivClass out{0, 0};
    bool seen_h = false, seen_c = false;
    std::size_t i = 0;
    while (i < text.size()) {
        int sgn = 1;
        if (text[i] == '+' || text[i] == '-') {
            sgn = text[i] == '-' ? -1 : 1;
            ++i;
        }
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        Integer mag = start == i ? Integer(1) : parse_integer(text.substr(start, i - start));
        if (i >= text.size()) throw std::invalid_argument("parse_class: missing H or C in '" + std::string(text) + "'");
        char sym = text[i++];
        if (sym == 'H' && !seen_h && !seen_c) {
            out.x = sgn * mag;
            seen_h = true;
        } else if (sym == 'C' && !seen_c) {
            out.y = sgn * mag;
            seen_c = true;
        } else {
            throw std::invalid_argument("parse_class: malformed class '" + std::string(text) + "'");
        }
    }
    if (!seen_h && !seen_c) throw std::invalid_argument("parse_class: empty class");
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const DivClass& a) { return os << format_class(a); }

}  // namespace cicy
