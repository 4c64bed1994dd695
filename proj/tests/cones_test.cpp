#include <cicy/cones.hpp>

#include "oracles.hpp"
#include "reference_tables.hpp"

#include <gtest/gtest.h>

#include <random>

using cicy::ConeKind;
using cicy::DivClass;
using cicy::Effectivity;
using cicy::GramForm;
using cicy::Integer;
using cicy::RayKind;

namespace {

GramForm form_of(const ref::MinusTwoRow& r) { return {ref::product(r.x_type), r.d, 2 * r.g - 2}; }

oracle::Form to_oracle(const GramForm& f) {
    return {static_cast<std::int64_t>(f.h()), static_cast<std::int64_t>(f.d()), static_cast<std::int64_t>(f.c())};
}

// Ray p is at least as close to H-perp as q on the same side: (p.H)/|p.y| <= (q.H)/|q.y|.
bool not_farther(const GramForm& f, const DivClass& p, const DivClass& q) {
    return cicy::degree(f, p) * cicy::abs_value(q.y) <= cicy::degree(f, q) * cicy::abs_value(p.y);
}

}  // namespace

TEST(EffectiveCone, Examples) {
    auto c = cicy::effective_cone(GramForm(6, 19, 48));
    ASSERT_EQ(c.kind, ConeKind::rational_rays);
    EXPECT_EQ(c.ray_left->cls, DivClass(-7, 4));
    EXPECT_EQ(c.ray_right->cls, DivClass(215743, -46996));
    EXPECT_EQ(c.ray_left->kind, RayKind::minus_two);
    EXPECT_EQ(c.ray_right->kind, RayKind::minus_two);

    auto d = cicy::effective_cone(GramForm(8, 20, 30));
    EXPECT_EQ(d.ray_left->cls, DivClass(-1, 1));
    EXPECT_EQ(d.ray_right->cls, DivClass(4, -1));

    EXPECT_EQ(cicy::effective_cone(GramForm(6, 18, 44)).kind, ConeKind::irrational_light_cone);
}

TEST(EffectiveCone, IsotropicBoundary) {
    auto c = cicy::effective_cone(GramForm(6, 19, 0));
    ASSERT_EQ(c.kind, ConeKind::rational_rays);
    EXPECT_EQ(c.ray_left->cls, DivClass(0, 1));
    EXPECT_EQ(c.ray_left->kind, RayKind::isotropic);
    EXPECT_EQ(c.ray_right->cls, DivClass(19, -3));
    EXPECT_EQ(c.ray_right->kind, RayKind::isotropic);
}

TEST(NefGenerators, Examples) {
    auto check = [](GramForm f, DivClass l, DivClass r) {
        auto [nl, nr] = cicy::nef_generators(f, cicy::effective_cone(f));
        EXPECT_EQ(nl, l);
        EXPECT_EQ(nr, r);
    };
    check(GramForm(6, 19, 48), {-59, 34}, {1843309, -401534});
    check(GramForm(8, 18, 34), {-530, 393}, {10, -3});
    check(GramForm(6, 20, 46), {-16, 11}, {1069, -206});
}

TEST(NefGenerators, IrrationalConeHasNoIntegralGenerators) {
    GramForm f(6, 18, 44);
    try {
        cicy::nef_generators(f, cicy::effective_cone(f));
        FAIL() << "expected an error";
    } catch (const std::invalid_argument& e) {
        EXPECT_STREQ(e.what(), "nef cone equals closure of positive cone; no integral generators");
    }
}

TEST(Effectivity, Examples) {
    GramForm a(6, 19, 48);
    auto ca = cicy::effective_cone(a);
    EXPECT_EQ(cicy::classify_effectivity(a, ca, {0, 1}), Effectivity::effective);

    GramForm b(6, 20, 46);
    auto cb = cicy::effective_cone(b);
    EXPECT_EQ(cicy::classify_effectivity(b, cb, {5, -1}), Effectivity::not_effective);
    EXPECT_EQ(cicy::classify_effectivity(b, cb, {-5, 1}), Effectivity::not_effective);

    GramForm c(6, 20, 48);
    auto cc = cicy::effective_cone(c);
    EXPECT_EQ(cicy::classify_effectivity(c, cc, {5, -1}), Effectivity::effective);
    EXPECT_EQ(cc.ray_right->cls, DivClass(5, -1));

    EXPECT_THROW(cicy::classify_effectivity(a, ca, {0, 0}), std::invalid_argument);
}

TEST(Effectivity, LightConeBoundaryIsALimit) {
    GramForm f(6, 18, 44);
    auto c = cicy::effective_cone(f);
    EXPECT_EQ(cicy::classify_effectivity(f, c, {1, 0}), Effectivity::effective);
    EXPECT_EQ(cicy::classify_effectivity(f, c, {-1, 0}), Effectivity::not_effective);
    EXPECT_EQ(cicy::classify_effectivity(f, c, {5, -1}), Effectivity::effective);
}

TEST(Nef, Examples) {
    GramForm a(6, 19, 48);
    auto ca = cicy::effective_cone(a);
    EXPECT_TRUE(cicy::is_nef_and_big(a, ca, {5, -1}));
    EXPECT_TRUE(cicy::is_nef_and_big(a, ca, {1, 0}));
    GramForm b(8, 20, 30);
    EXPECT_FALSE(cicy::is_nef(b, cicy::effective_cone(b), {4, -1}));
}

TEST(ConeProperty, DualityOnPublishedLattices) {
    for (const auto& row : ref::minus_two_rows()) {
        GramForm f = form_of(row);
        auto c = cicy::effective_cone(f);
        ASSERT_EQ(c.kind, ConeKind::rational_rays);
        const DivClass& rl = c.ray_left->cls;
        const DivClass& rr = c.ray_right->cls;
        EXPECT_EQ(cicy::pair(f, *c.nef_left, rl), 0);
        EXPECT_GT(cicy::pair(f, *c.nef_left, rr), 0);
        EXPECT_EQ(cicy::pair(f, *c.nef_right, rr), 0);
        EXPECT_GT(cicy::pair(f, *c.nef_right, rl), 0);
        // H is interior; rays are primitive -2 classes.
        EXPECT_GT(cicy::degree(f, rl), 0);
        EXPECT_GT(cicy::degree(f, rr), 0);
        EXPECT_EQ(cicy::self_int(f, rl), -2);
        EXPECT_EQ(cicy::self_int(f, rr), -2);
        EXPECT_EQ(cicy::primitive(rl).multiplicity, 1);
        EXPECT_EQ(cicy::primitive(rr).multiplicity, 1);
        // Both nef generators are nonnegative on every effective -2 class found by enumeration.
        for (const auto& s : oracle::solutions(to_oracle(f), 300, -2)) {
            DivClass v{s.x, s.y};
            if (cicy::degree(f, v) < 0) v = -v;
            EXPECT_GE(cicy::pair(f, *c.nef_left, v), 0);
            EXPECT_GE(cicy::pair(f, *c.nef_right, v), 0);
        }
    }
}

TEST(ConeProperty, AgreesWithBruteForceOnRandomSmallForms) {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> pos(1, 40), any(-40, 40);
    int checked = 0, exact_match = 0;
    while (checked < 300) {
        Integer h = pos(rng), d = pos(rng), cc = any(rng);
        if (d * d - h * cc <= 0) continue;
        GramForm f(h, d, cc);
        if (!cicy::has_minus_two_class(f)) continue;
        cicy::ConeDesc cone;
        try {
            cone = cicy::effective_cone(f);
        } catch (const std::domain_error&) {
            continue;  // H not ample
        }
        ++checked;
        ASSERT_EQ(cone.kind, ConeKind::rational_rays);
        auto [bl, br] = oracle::extremal_pair(to_oracle(f), oracle::solutions(to_oracle(f), 2000, -2));
        const cicy::ConeRay* sides[] = {&*cone.ray_left, &*cone.ray_right};
        const std::optional<oracle::Cls>* brute[] = {&bl, &br};
        for (int s = 0; s < 2; ++s) {
            const cicy::ConeRay& ray = *sides[s];
            const auto& b = *brute[s];
            if (ray.kind == RayKind::isotropic) {
                // An isotropic boundary means no -2 class on that side at all.
                EXPECT_FALSE(b.has_value());
                continue;
            }
            ASSERT_TRUE(b.has_value() || cicy::abs_value(ray.cls.x) > 2000);
            if (!b) continue;
            DivClass bc{b->x, b->y};
            EXPECT_TRUE(not_farther(f, ray.cls, bc));
            if (cicy::abs_value(ray.cls.x) <= 2000) {
                EXPECT_EQ(ray.cls, bc);
                ++exact_match;
            }
        }
    }
    EXPECT_GT(exact_match, 300);
}
