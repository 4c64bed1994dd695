#include <cicy/qform.hpp>

#include "oracles.hpp"
#include "reference_tables.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using cicy::DivClass;
using cicy::GramForm;
using cicy::Integer;
using cicy::Side;

namespace {

bool contains(const std::vector<DivClass>& v, const DivClass& x) { return std::find(v.begin(), v.end(), x) != v.end(); }

oracle::Form to_oracle(const GramForm& f) {
    return {static_cast<std::int64_t>(f.h()), static_cast<std::int64_t>(f.d()), static_cast<std::int64_t>(f.c())};
}

DivClass from_oracle(const oracle::Cls& c) { return {c.x, c.y}; }

std::optional<GramForm> random_form(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> pos(1, bound), any(-bound, bound);
    Integer h = pos(rng), d = pos(rng), c = any(rng);
    if (d * d - h * c <= 0) return std::nullopt;
    return GramForm(h, d, c);
}

}  // namespace

TEST(HasMinusTwo, Examples) {
    EXPECT_FALSE(cicy::has_minus_two_class(GramForm(6, 18, 44)));
    EXPECT_TRUE(cicy::has_minus_two_class(GramForm(6, 19, 48)));
    EXPECT_TRUE(cicy::has_minus_two_class(GramForm(8, 18, 34)));
}

TEST(BoundedSolutions, Examples) {
    auto s = cicy::minus_two_classes_bounded(GramForm(6, 19, 48), 10);
    EXPECT_EQ(s.target, -2);
    EXPECT_TRUE(contains(s.solutions, {-7, 4}));
    EXPECT_TRUE(contains(cicy::minus_two_classes_bounded(GramForm(6, 20, 46), 5).solutions, {-3, 2}));
    EXPECT_TRUE(cicy::minus_two_classes_bounded(GramForm(6, 18, 44), 500).solutions.empty());
    EXPECT_THROW(cicy::minus_two_classes_bounded(GramForm(6, 18, 44), 0), std::invalid_argument);
}

TEST(BoundedSolutions, ComeInSignPairsAndSatisfyTarget) {
    GramForm f(6, 19, 48);
    auto s = cicy::minus_two_classes_bounded(f, 3000).solutions;
    ASSERT_FALSE(s.empty());
    for (const DivClass& v : s) {
        EXPECT_EQ(cicy::self_int(f, v), -2);
        EXPECT_TRUE(contains(s, -v));
    }
}

TEST(Extremal, Examples) {
    GramForm f(6, 19, 48);
    EXPECT_EQ(cicy::extremal_minus_two(f, Side::left), DivClass(-7, 4));
    EXPECT_EQ(cicy::extremal_minus_two(f, Side::right), DivClass(215743, -46996));
    GramForm g(8, 18, 34);
    EXPECT_EQ(cicy::extremal_minus_two(g, Side::left), DivClass(-147, 109));
    EXPECT_EQ(cicy::extremal_minus_two(g, Side::right), DivClass(3, -1));
    GramForm e(6, 18, 44);
    EXPECT_FALSE(cicy::extremal_minus_two(e, Side::left).has_value());
    EXPECT_FALSE(cicy::extremal_minus_two(e, Side::right).has_value());
}

TEST(Extremal, NonAmpleHIsReported) {
    // C - H is a -2 class orthogonal to H in both forms.
    GramForm square(2, 2, 0);
    GramForm river(4, 4, 2);
    EXPECT_EQ(cicy::self_int(river, {-1, 1}), -2);
    EXPECT_EQ(cicy::degree(river, {-1, 1}), 0);
    EXPECT_TRUE(cicy::has_minus_two_class(square));
    EXPECT_TRUE(cicy::has_minus_two_class(river));
    EXPECT_THROW(cicy::extremal_minus_two(square, Side::left), std::domain_error);
    EXPECT_THROW(cicy::extremal_minus_two(river, Side::left), std::domain_error);
}

TEST(Isotropic, Examples) {
    auto r = cicy::isotropic_primitive_rays(GramForm(2, 2, 0));
    ASSERT_TRUE(r.has_value());
    EXPECT_TRUE(r->first == DivClass(0, 1) || r->second == DivClass(0, 1));
    EXPECT_FALSE(cicy::isotropic_primitive_rays(GramForm(6, 19, 48)).has_value());
    // (-4,1) is isotropic for (1,2,0); with the D.H > 0 orientation it is reported as (4,-1).
    GramForm f(1, 2, 0);
    EXPECT_EQ(cicy::self_int(f, {-4, 1}), 0);
    auto s = cicy::isotropic_primitive_rays(f);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(s->first, DivClass(0, 1));
    EXPECT_EQ(s->second, DivClass(4, -1));
}

TEST(Isotropic, RaysAreIsotropicPrimitiveAndPositive) {
    for (int h = 1; h <= 12; ++h)
        for (int d = 1; d <= 12; ++d)
            for (int c = -12; c <= 12; ++c) {
                if (d * d - h * c <= 0) continue;
                GramForm f(h, d, c);
                auto r = cicy::isotropic_primitive_rays(f);
                ASSERT_EQ(r.has_value(), cicy::is_perfect_square(f.discriminant()));
                if (!r) continue;
                for (const DivClass& v : {r->first, r->second}) {
                    EXPECT_EQ(cicy::self_int(f, v), 0);
                    EXPECT_EQ(cicy::primitive(v).multiplicity, 1);
                    EXPECT_GT(cicy::degree(f, v), 0);
                }
            }
}

TEST(OrbitRepresentatives, AreMinusTwoAndEffective) {
    for (const auto& row : ref::minus_two_rows()) {
        GramForm f(ref::product(row.x_type), row.d, 2 * row.g - 2);
        auto reps = cicy::minus_two_orbit_representatives(f);
        ASSERT_FALSE(reps.empty());
        for (const DivClass& v : reps) {
            EXPECT_EQ(cicy::self_int(f, v), -2);
            EXPECT_GT(cicy::degree(f, v), 0);
        }
    }
}

TEST(QformOracle, AgreesWithBruteForceOnRandomForms) {
    std::mt19937_64 rng(314159);
    int checked = 0, with_classes = 0;
    while (checked < 1000) {
        auto f = random_form(rng, 60);
        if (!f) continue;
        ++checked;
        bool exact = cicy::has_minus_two_class(*f);
        auto brute = oracle::solutions(to_oracle(*f), 400, -2);
        if (!brute.empty()) {
            ++with_classes;
            ASSERT_TRUE(exact) << "form (" << f->h() << "," << f->d() << "," << f->c() << ")";
        }
        if (!exact) {
            ASSERT_TRUE(brute.empty());
        }
        for (const DivClass& v : cicy::minus_two_orbit_representatives(*f)) ASSERT_EQ(cicy::self_int(*f, v), -2);
    }
    EXPECT_GT(with_classes, 50);
}

TEST(QformOracle, BoundedEnumerationMatchesBruteForce) {
    std::mt19937_64 rng(27);
    int checked = 0;
    while (checked < 200) {
        auto f = random_form(rng, 40);
        if (!f) continue;
        ++checked;
        auto lib = cicy::minus_two_classes_bounded(*f, 150).solutions;
        auto brute = oracle::solutions(to_oracle(*f), 150, -2);
        ASSERT_EQ(lib.size(), brute.size());
        for (const auto& b : brute) ASSERT_TRUE(contains(lib, from_oracle(b)));
    }
}

// No bounded solution lies strictly between the returned ray and H-perp.
TEST(QformOracle, ExtremalsAreExtremalWithinTenfoldBound) {
    std::mt19937_64 rng(8128);
    int checked = 0, attempts = 0;
    while (checked < 150 && attempts < 100000) {
        ++attempts;
        auto f = random_form(rng, 30);
        if (!f || !cicy::has_minus_two_class(*f)) continue;
        std::optional<DivClass> left, right;
        try {
            left = cicy::extremal_minus_two(*f, Side::left);
            right = cicy::extremal_minus_two(*f, Side::right);
        } catch (const std::domain_error&) {
            continue;
        }
        Integer x_max = 0;
        for (const auto& e : {left, right})
            if (e) x_max = std::max(x_max, cicy::abs_value(e->x));
        Integer bound = 10 * x_max + 100;
        if (bound > 60000) continue;
        ++checked;
        auto [bl, br] = oracle::extremal_pair(to_oracle(*f),
                                              oracle::solutions(to_oracle(*f), static_cast<std::int64_t>(bound), -2));
        ASSERT_EQ(bl.has_value(), left.has_value());
        ASSERT_EQ(br.has_value(), right.has_value());
        if (left) {
            EXPECT_EQ(from_oracle(*bl), *left);
            EXPECT_GT(cicy::degree(*f, *left), 0);
        }
        if (right) {
            EXPECT_EQ(from_oracle(*br), *right);
            EXPECT_GT(cicy::degree(*f, *right), 0);
        }
    }
    EXPECT_EQ(checked, 150);
}

TEST(QformOracle, NoPrintedNoMinusTwoRowHasSmallSolutions) {
    for (const auto& row : ref::no_minus_two_rows()) {
        GramForm f(ref::product(row.x_type), row.d, 2 * row.g - 2);
        EXPECT_FALSE(cicy::has_minus_two_class(f));
        EXPECT_TRUE(oracle::solutions(to_oracle(f), 1000, -2).empty());
    }
}
