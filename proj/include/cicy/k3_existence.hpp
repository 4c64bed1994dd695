#pragma once

// Existence of a degree 2n K3 surface in P^{n+1} containing a smooth curve of
// degree d and genus g. All comparisons against d^2/4n are cross-multiplied.

#include "integer.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>

namespace cicy {

enum class ExistenceCase {
    quarter_square_plus_one,    // g = d^2/4n + 1 with a square factor condition
    open_window,                // d^2/4n < g < d^2/4n + 1
    quarter_square,             // g = d^2/4n, 2n does not divide d
    below_quarter_square,       // g < d^2/4n
    excluded_small_residue,     // window, d = +-1, +-2 mod 2n
    excluded_unit_gap_residue,  // window, d^2 - 4n(g-1) = 1, d = n +- 1 mod 2n
    excluded_n_gap_residue,     // window, d^2 - 4n(g-1) = n, d = n mod 2n
    excluded_unit_gap_divisor,  // window, d^2 - 4n(g-1) = 1, d-1 or d+1 divides 2n
    excluded_exceptional_pair,  // (d, g) = (2n+1, n+1)
    excluded_no_factorisation,  // g = d^2/4n + 1 but no admissible n = k^2 m
    excluded_divisible_degree,  // g = d^2/4n and 2n divides d
    above_window,               // g > d^2/4n + 1
};

enum class PicardStructure { rank_one, rank_two_hc, not_applicable };

struct ExistenceVerdict {
    bool exists;
    ExistenceCase which;
    PicardStructure picard;
};

inline std::string to_string(ExistenceCase c) {
    switch (c) {
        case ExistenceCase::quarter_square_plus_one: return "quarter_square_plus_one";
        case ExistenceCase::open_window: return "open_window";
        case ExistenceCase::quarter_square: return "quarter_square";
        case ExistenceCase::below_quarter_square: return "below_quarter_square";
        case ExistenceCase::excluded_small_residue: return "excluded_small_residue";
        case ExistenceCase::excluded_unit_gap_residue: return "excluded_unit_gap_residue";
        case ExistenceCase::excluded_n_gap_residue: return "excluded_n_gap_residue";
        case ExistenceCase::excluded_unit_gap_divisor: return "excluded_unit_gap_divisor";
        case ExistenceCase::excluded_exceptional_pair: return "excluded_exceptional_pair";
        case ExistenceCase::excluded_no_factorisation: return "excluded_no_factorisation";
        case ExistenceCase::excluded_divisible_degree: return "excluded_divisible_degree";
        case ExistenceCase::above_window: return "above_window";
    }
    throw std::logic_error("to_string: bad ExistenceCase");
}

inline std::string to_string(PicardStructure p) {
    switch (p) {
        case PicardStructure::rank_one: return "rank_one";
        case PicardStructure::rank_two_hc: return "rank_two_hc";
        case PicardStructure::not_applicable: return "not_applicable";
    }
    throw std::logic_error("to_string: bad PicardStructure");
}

namespace detail {

inline bool residue_in(const Integer& d, const Integer& modulus, std::initializer_list<Integer> targets) {
    Integer r = d % modulus;
    if (r < 0) r += modulus;
    for (Integer t : targets) {
        t %= modulus;
        if (t < 0) t += modulus;
        if (r == t) return true;
    }
    return false;
}

inline bool divides(const Integer& a, const Integer& b) { return a != 0 && b % a == 0; }

}  // namespace detail

inline ExistenceVerdict classify_existence(const Integer& n, const Integer& d, const Integer& g) {
    if (n < 2) throw std::invalid_argument("classify_existence: n must be at least 2");
    if (d < 1) throw std::invalid_argument("classify_existence: d must be positive");
    if (g < 0) throw std::invalid_argument("classify_existence: g must be nonnegative");
    const Integer four_n = 4 * n;
    const Integer two_n = 2 * n;
    const Integer d2 = d * d;
    const Integer gap = d2 - four_n * (g - 1);  // 4n (d^2/4n + 1 - g)
    auto none = [](ExistenceCase c) { return ExistenceVerdict{false, c, PicardStructure::not_applicable}; };
    auto rank_two = [](ExistenceCase c) { return ExistenceVerdict{true, c, PicardStructure::rank_two_hc}; };

    if (gap == 0) {
        for (Integer k = 1; k * k <= n; ++k) {
            if (n % (k * k) != 0) continue;
            Integer m = n / (k * k);
            if (k == 2 && m == 1) continue;
            if ((k * d) % two_n == 0)
                return {true, ExistenceCase::quarter_square_plus_one, PicardStructure::rank_one};
        }
        return none(ExistenceCase::excluded_no_factorisation);
    }
    if (gap < 0) return none(ExistenceCase::above_window);

    const Integer scaled_g = four_n * g;
    if (d2 < scaled_g) {
        if (detail::residue_in(d, two_n, {1, -1, 2, -2})) return none(ExistenceCase::excluded_small_residue);
        if (gap == 1 && detail::residue_in(d, two_n, {n + 1, n - 1}))
            return none(ExistenceCase::excluded_unit_gap_residue);
        if (gap == n && detail::residue_in(d, two_n, {n})) return none(ExistenceCase::excluded_n_gap_residue);
        if (gap == 1 && (detail::divides(d - 1, two_n) || detail::divides(d + 1, two_n)))
            return none(ExistenceCase::excluded_unit_gap_divisor);
        return rank_two(ExistenceCase::open_window);
    }
    if (d2 == scaled_g) {
        if (d % two_n == 0) return none(ExistenceCase::excluded_divisible_degree);
        return rank_two(ExistenceCase::quarter_square);
    }
    if (d == two_n + 1 && g == n + 1) return none(ExistenceCase::excluded_exceptional_pair);
    return rank_two(ExistenceCase::below_quarter_square);
}

}  // namespace cicy
