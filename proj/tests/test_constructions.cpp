#include <gtest/gtest.h>

#include "absorb/constructions.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace absorb;
using fixtures::expect_error;
using fixtures::ideal_of;

TEST(Quotient, Z12ModSix) {
    FiniteModule z12 = self_module(make_zmod(12));
    QuotientResult q = quotient_module(z12, ideal_of(z12, 6));
    EXPECT_EQ(q.module.order(), 6u);
    EXPECT_EQ(q.module.exponent(), 6u);
    EXPECT_EQ(oracle::power_set_submodules(q.module).size(), 4u);
    EXPECT_TRUE(q.projection.is_surjective());
    EXPECT_EQ(q.projection.kernel(), ideal_of(z12, 6));
}

TEST(Quotient, Trivial) {
    FiniteModule z12 = self_module(make_zmod(12));
    EXPECT_EQ(quotient_module(z12, full_submodule(z12)).module.order(), 1u);
    QuotientResult same = quotient_module(z12, zero_submodule(z12));
    EXPECT_EQ(same.module.order(), 12u);
    EXPECT_TRUE(same.projection.kernel().is_zero());
}

TEST(QuotientRing, Order) {
    FiniteRing z12 = make_zmod(12);
    FiniteRing q = quotient_ring(z12, principal_ideal(z12, z12.element(4)));
    EXPECT_EQ(q.order(), 4u);
    EXPECT_NO_THROW(verify_ring_axioms(q));
    expect_error(ErrorKind::not_proper, [&] { quotient_ring(z12, unit_ideal(z12)); });
}

TEST(Product, SameRing) {
    FiniteModule m = z_product_module(10, 9);
    EXPECT_EQ(m.order(), 90u);
    EXPECT_EQ(m.ring().order(), 90u);
    auto [a, b] = product_factors(m);
    Submodule zz = product_submodule(m, zero_submodule(a), zero_submodule(b));
    EXPECT_TRUE(zz.is_zero());
    expect_error(ErrorKind::construction, [] {
        product_module(self_module(make_zmod(4)), self_module(make_zmod(6)),
                       ProductMode::same_ring);
    });
}

TEST(Product, ProductRingAction) {
    FiniteModule z3 = self_module(make_zmod(3));
    FiniteModule m = product_module(z3, z3, ProductMode::product_ring);
    EXPECT_EQ(m.ring().order(), 9u);
    EXPECT_EQ(m.act(m.ring().value({2, 2}), m.value({1, 1})), m.value({2, 2}));
}

TEST(Product, SubmoduleCarrier) {
    FiniteModule m = z_product_module(4, 9);
    auto [a, b] = product_factors(m);
    Submodule n = product_submodule(m, cyclic_submodule(a, 2), cyclic_submodule(b, 3));
    EXPECT_EQ(n.size(), 6u);
    Submodule top = product_submodule(m, cyclic_submodule(a, 2), full_submodule(b));
    EXPECT_EQ(top.size(), 18u);
}

TEST(Localization, Saturation) {
    FiniteRing r = make_zmod(12);
    FiniteModule z12 = self_module(r);
    MultiplicativeSet s = MultiplicativeSet::generated_by(r, {r.element(4)});
    EXPECT_EQ(s.carrier(), (std::vector<Index>{1, 4}));
    EXPECT_EQ(saturate(ideal_of(z12, 6), s).carrier(), (std::vector<Index>{0, 3, 6, 9}));
    MultiplicativeSet one = MultiplicativeSet::generated_by(r, {});
    EXPECT_EQ(saturate(ideal_of(z12, 6), one), ideal_of(z12, 6));
    MultiplicativeSet unit = MultiplicativeSet::generated_by(r, {r.element(5)});
    EXPECT_TRUE(is_saturated(ideal_of(z12, 6), unit));
}

TEST(Localization, Z12ByFour) {
    FiniteRing r = make_zmod(12);
    MultiplicativeSet s = MultiplicativeSet::generated_by(r, {r.element(4)});
    LocalizationResult loc = localize_ring(r, s);
    EXPECT_EQ(loc.idempotent.index, 4u);
    EXPECT_EQ(loc.localized_ring.order(), 3u);
    EXPECT_EQ(loc.localized_ring.render(loc.map(r.element(5))), "8");
    for (Index x : s.carrier()) EXPECT_TRUE(is_unit(loc.localized_ring, loc.map(r.element(x))));
}

TEST(Localization, UnitsGiveSameRing) {
    FiniteRing r = make_zmod(12);
    MultiplicativeSet s = MultiplicativeSet::generated_by(r, {r.element(5), r.element(7)});
    LocalizationResult loc = localize_ring(r, s);
    EXPECT_EQ(loc.idempotent, r.one());
    EXPECT_EQ(loc.localized_ring.order(), 12u);
}

TEST(Localization, Degenerate) {
    FiniteRing r = make_zmod(8);
    MultiplicativeSet s = MultiplicativeSet::generated_by(r, {r.element(2)});
    EXPECT_EQ(s.carrier(), (std::vector<Index>{0, 1, 2, 4}));
    expect_error(ErrorKind::degenerate_localization, [&] { localize_ring(r, s); });
}

TEST(Localization, AllSetsAreClosed) {
    FiniteRing r = make_zmod(12);
    auto sets = all_multiplicative_sets(r);
    EXPECT_FALSE(sets.empty());
    for (const auto& s : sets) {
        EXPECT_TRUE(s.contains(1));
        for (Index a : s.carrier())
            for (Index b : s.carrier()) EXPECT_TRUE(s.contains(r.mul(r.element(a), r.element(b)).index));
    }
}

TEST(Localization, ModuleAndSubmodule) {
    FiniteRing r = make_zmod(12);
    FiniteModule z12 = self_module(r);
    MultiplicativeSet s = MultiplicativeSet::generated_by(r, {r.element(4)});
    LocalizedModule lm = localize_module(z12, s);
    EXPECT_EQ(lm.module.order(), 3u);
    EXPECT_TRUE(localize_submodule(lm, ideal_of(z12, 4)).size() == 3u);
    EXPECT_TRUE(localize_submodule(lm, ideal_of(z12, 3)).is_zero());
}

TEST(Idealization, Arithmetic) {
    FiniteRing z2 = make_zmod(2);
    FiniteRing r2 = idealization_ring(z2, self_module(z2));
    RingElt n = r2.value({0, 1});
    EXPECT_EQ(r2.mul(n, n), r2.zero());
    EXPECT_EQ(r2.one(), r2.value({1, 0}));

    FiniteRing z6 = make_zmod(6);
    FiniteRing r6 = idealization_ring(z6, self_module(z6));
    EXPECT_EQ(r6.order(), 36u);
    EXPECT_EQ(r6.mul(r6.value({2, 1}), r6.value({5, 0})), r6.value({4, 5}));
    EXPECT_NO_THROW(verify_ring_axioms(r6));
}

TEST(Idealization, Subset) {
    FiniteRing z6 = make_zmod(6);
    FiniteModule m6 = self_module(z6);
    FiniteRing r = idealization_ring(z6, m6);
    RingSubset s = idealization_subset(r, ideal_of(m6, 3), ideal_of(m6, 2));
    EXPECT_FALSE(s.is_ideal);
    EXPECT_EQ(s.carrier.size(), 6u);
    EXPECT_FALSE(s.contains(r.mul(r.value({1, 1}), r.value({3, 2})).index));
    EXPECT_TRUE(idealization_subset(r, ideal_of(m6, 3), full_submodule(m6)).is_ideal);
    RingSubset zz = idealization_subset(r, zero_ideal(z6), zero_submodule(m6));
    EXPECT_TRUE(zz.is_ideal);
    EXPECT_TRUE(zz.as_ideal().is_zero());
    expect_error(ErrorKind::construction, [&] { s.as_ideal(); });
}

TEST(Idealization, RadicalCheck) {
    FiniteRing z8 = make_zmod(8);
    FiniteModule m8 = self_module(z8);
    FiniteRing r = idealization_ring(z8, m8);
    EXPECT_EQ(r.order(), 64u);
    EXPECT_TRUE(idealization_radical_check(r, ideal_of(m8, 4), ideal_of(m8, 4)));
    EXPECT_TRUE(idealization_radical_check(r, zero_ideal(z8), full_submodule(m8)));
    expect_error(ErrorKind::construction, [&] {
        idealization_radical_check(r, ideal_of(m8, 4), zero_submodule(m8));
    });
}

TEST(Amalgamation, RingOrders) {
    FiniteRing z6 = make_zmod(6);
    RingHom id = identity_hom(z6);
    EXPECT_EQ(amalgamation_ring(z6, z6, id, principal_ideal(z6, z6.element(3))).order(), 12u);
    EXPECT_EQ(amalgamation_ring(z6, z6, id, zero_ideal(z6)).order(), 6u);
    FiniteRing full = amalgamation_ring(z6, z6, id, unit_ideal(z6));
    EXPECT_EQ(full.order(), 36u);
    EXPECT_NO_THROW(verify_ring_axioms(full));

    FiniteRing z12 = make_zmod(12), z4 = make_zmod(4);
    FiniteRing red = amalgamation_ring(z12, z4, reduction_hom(z12, z4),
                                       principal_ideal(z4, z4.element(2)));
    EXPECT_EQ(red.order(), 24u);
    EXPECT_NO_THROW(verify_ring_axioms(red));
    auto parts = amalgamation_parts(red);
    ASSERT_TRUE(parts.has_value());
    EXPECT_EQ(parts->j.size(), 2u);
}

TEST(Amalgamation, Module) {
    FiniteRing z6 = make_zmod(6);
    FiniteModule m6 = self_module(z6);
    RingHom id = identity_hom(z6);
    Ideal j = principal_ideal(z6, z6.element(3));
    FiniteModule a = amalgamated_module(m6, m6, id, id.table(), j);
    EXPECT_EQ(a.order(), 12u);
    EXPECT_NO_THROW(verify_module_axioms(a));
    auto parts = amalgamated_module_parts(a);
    ASSERT_TRUE(parts.has_value());
    EXPECT_EQ(parts->jm2.carrier(), (std::vector<Index>{0, 3}));

    // (1, 1+3) acting on (1, 1+3): the module element x1 = 1, x2 = 3.
    RingElt s = a.ring().value({1, 4});
    ModElt x = a.element(amalgamated_element(a, 1, 3));
    EXPECT_EQ(a.act(s, x), x);

    EXPECT_EQ(amalgamated_module(m6, m6, id, id.table(), zero_ideal(z6)).order(), 6u);
    expect_error(ErrorKind::construction, [&] {
        amalgamated_module(m6, m6, id, {0, 1, 0, 0, 0, 0}, j);
    });
}

TEST(Amalgamation, Submodules) {
    FiniteRing z6 = make_zmod(6);
    FiniteModule m6 = self_module(z6);
    RingHom id = identity_hom(z6);
    FiniteModule a = amalgamated_module(m6, m6, id, id.table(), principal_ideal(z6, z6.element(3)));

    Submodule n1 = amalg_submodule_N1(a, ideal_of(m6, 3));
    EXPECT_EQ(n1.size(), 4u);
    EXPECT_EQ(amalg_submodule_N1(a, zero_submodule(m6)).size(), 2u);

    EXPECT_EQ(amalg_submodule_N2bar(a, full_submodule(m6)).size(), 12u);
    Submodule z2 = amalg_submodule_N2bar(a, zero_submodule(m6));
    EXPECT_EQ(z2.size(), 2u);
    EXPECT_TRUE(z2.contains(amalgamated_element(a, 3, 3)));
    EXPECT_EQ(amalg_submodule_N2bar(a, ideal_of(m6, 3)).size(), 4u);
}

TEST(RestrictScalars, Reduction) {
    FiniteRing z6 = make_zmod(6), z3 = make_zmod(3);
    FiniteModule m = restrict_scalars(self_module(z3), reduction_hom(z6, z3));
    EXPECT_EQ(m.ring().order(), 6u);
    EXPECT_EQ(m.act(z6.element(4), m.element(1)).index, 1u);
    FiniteModule same = restrict_scalars(self_module(z6), identity_hom(z6));
    for (Index r = 0; r < 6; ++r)
        EXPECT_EQ(same.act(z6.element(r), same.element(5)).index, (5 * r) % 6);
    expect_error(ErrorKind::construction, [&] { RingHom(z6, z3, {0, 0, 0, 0, 0, 0}); });
}
