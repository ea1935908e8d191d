#include <numeric>

#include <gtest/gtest.h>

#include "absorb/module.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace absorb;
using fixtures::expect_error;
using fixtures::ideal_of;

namespace {

std::vector<Index> carrier(std::initializer_list<Index> xs) { return xs; }

int divisor_count(long long n) {
    int c = 0;
    for (long long d = 1; d <= n; ++d)
        if (n % d == 0) ++c;
    return c;
}

}  // namespace

TEST(Colon, IdealOfElement) {
    FiniteModule z12 = self_module(make_zmod(12));
    Submodule six = ideal_of(z12, 6);
    EXPECT_EQ(colon_ideal(six, z12.element(3)).carrier(), carrier({0, 2, 4, 6, 8, 10}));
    EXPECT_EQ(colon_ideal(six, z12.element(6)).size(), 12u);

    FiniteModule z8 = self_module(make_zmod(8));
    EXPECT_EQ(annihilator(z8, z8.element(4)).carrier(), carrier({0, 2, 4, 6}));
    EXPECT_EQ(colon_ideal(zero_submodule(z8), z8.element(4)),
              annihilator(z8, z8.element(4)));
}

TEST(Colon, SubmoduleByScalar) {
    FiniteRing r = make_zmod(12);
    FiniteModule z12 = self_module(r);
    Submodule six = ideal_of(z12, 6);
    EXPECT_EQ(colon_submodule(six, r.element(4)).carrier(), carrier({0, 3, 6, 9}));
    EXPECT_EQ(colon_submodule(six, r.one()), six);
    EXPECT_EQ(colon_submodule(zero_submodule(z12), r.element(6)).carrier(),
              carrier({0, 2, 4, 6, 8, 10}));
}

TEST(Colon, Global) {
    FiniteModule z12 = self_module(make_zmod(12));
    Submodule six = ideal_of(z12, 6);
    EXPECT_EQ(colon_ideal_global(six).carrier(), carrier({0, 6}));
    EXPECT_EQ(colon_ideal_global(full_submodule(z12)).size(), 12u);

    FiniteModule m = z_product_module(10, 9);
    EXPECT_EQ(m.ring().order(), 90u);
    EXPECT_TRUE(colon_ideal_global(zero_submodule(m)).is_zero());
}

TEST(Colon, GlobalIsIntersectionOverGenerators) {
    for (const auto& m : fixtures::small_modules()) {
        Submodule full = full_submodule(m);
        for (const auto& c : oracle::power_set_submodules(m)) {
            Submodule n = Submodule::from_carrier(m, c);
            Ideal meet = full_submodule(self_module(m.ring()));
            for (Index g : full.generators())
                meet = intersect_submodules(meet, colon_ideal(n, m.element(g)));
            EXPECT_EQ(colon_ideal_global(n).carrier(), meet.carrier()) << m.key();
        }
    }
}

TEST(Colon, MembershipCriterion) {
    for (const auto& m : fixtures::small_modules()) {
        for (const auto& c : oracle::power_set_submodules(m)) {
            Submodule n = Submodule::from_carrier(m, c);
            for (Index x = 0; x < m.order(); ++x) {
                Ideal col = colon_ideal(n, m.element(x));
                EXPECT_TRUE(is_ideal_of(col, m.ring()));
                EXPECT_EQ(col.size() == m.ring().order(), n.contains(x));
            }
        }
    }
}

TEST(Radical, Examples) {
    FiniteModule z12 = self_module(make_zmod(12));
    EXPECT_EQ(radical(ideal_of(z12, 4)).carrier(), carrier({0, 2, 4, 6, 8, 10}));
    FiniteRing z7 = make_zmod(7);
    EXPECT_TRUE(radical(zero_ideal(z7)).is_zero());
    FiniteRing z8 = make_zmod(8);
    EXPECT_EQ(radical(zero_ideal(z8)).carrier(), carrier({0, 2, 4, 6}));
}

TEST(Radical, IdempotentMonotoneExtensive) {
    for (long long n : {8, 12, 16, 18, 36}) {
        FiniteModule self = self_module(make_zmod(n));
        for (long long d = 1; d <= n; ++d) {
            if (n % d) continue;
            Ideal i = ideal_of(self, d);
            Ideal r = radical(i);
            EXPECT_TRUE(i.is_subset_of(r));
            EXPECT_EQ(radical(r), r);
            for (long long e = 1; e <= n; ++e)
                if (n % e == 0 && i.is_subset_of(ideal_of(self, e))) {
                    EXPECT_TRUE(r.is_subset_of(radical(ideal_of(self, e))));
                }
        }
    }
}

TEST(MRadical, Examples) {
    FiniteModule z12 = self_module(make_zmod(12));
    EXPECT_EQ(m_radical(zero_submodule(z12)).carrier(), carrier({0, 6}));
    EXPECT_EQ(m_radical(ideal_of(z12, 4)), ideal_of(z12, 2));
    EXPECT_EQ(m_radical(ideal_of(z12, 3)), ideal_of(z12, 3));
    expect_error(ErrorKind::not_proper, [&] { m_radical(full_submodule(z12)); });
}

TEST(Span, Examples) {
    FiniteModule z12 = self_module(make_zmod(12));
    EXPECT_EQ(span(z12, {z12.element(6)}).carrier(), carrier({0, 6}));
    EXPECT_TRUE(span(z12, {}).is_zero());
    FiniteModule v = product_module(self_module(make_zmod(2)), self_module(make_zmod(2)));
    EXPECT_EQ(span(v, {v.value({1, 0}), v.value({0, 1})}).size(), 4u);
}

TEST(Span, IsMinimal) {
    for (const auto& m : fixtures::small_modules()) {
        auto all = oracle::power_set_submodules(m);
        for (Index x = 0; x < m.order(); ++x) {
            Submodule s = cyclic_submodule(m, x);
            for (const auto& c : all) {
                Submodule t = Submodule::from_carrier(m, c);
                if (t.contains(x)) {
                    EXPECT_TRUE(s.is_subset_of(t)) << m.key();
                }
            }
        }
    }
}

TEST(Lattice, SumAndMeet) {
    FiniteModule z12 = self_module(make_zmod(12));
    Submodule a = ideal_of(z12, 3), b = ideal_of(z12, 4);
    EXPECT_EQ(sum_submodules(a, b).size(), 12u);
    EXPECT_TRUE(intersect_submodules(a, b).is_zero());
    EXPECT_EQ(sum_submodules(a, zero_submodule(z12)), a);
    EXPECT_EQ(intersect_submodules(a, full_submodule(z12)), a);
}

TEST(Lattice, RenderUsesGreedyGenerators) {
    FiniteModule z12 = self_module(make_zmod(12));
    EXPECT_EQ(ideal_of(z12, 6).render(), "gen[6]");
    EXPECT_EQ(zero_submodule(z12).render(), "zero");
    EXPECT_EQ(full_submodule(z12).render(), "full");
    EXPECT_EQ(span(z12, {z12.element(8), z12.element(6)}).render(), "gen[2]");
}

TEST(Lattice, DivisorCount) {
    for (long long n = 2; n <= 16; ++n) {
        auto subs = oracle::power_set_submodules(self_module(make_zmod(n)));
        EXPECT_EQ(static_cast<int>(subs.size()), divisor_count(n)) << n;
        subs = oracle::power_set_submodules(z_module(n));
        EXPECT_EQ(static_cast<int>(subs.size()), divisor_count(n)) << n;
    }
}

TEST(Submodule, RejectsNonClosedCarrier) {
    FiniteModule z12 = self_module(make_zmod(12));
    expect_error(ErrorKind::construction,
                 [&] { Submodule::from_carrier(z12, {0, 4}); });
}

TEST(Module, CyclicRequiresDivisor) {
    expect_error(ErrorKind::elaboration, [] { cyclic_module(make_zmod(12), 5); });
    FiniteModule m = cyclic_module(make_zmod(12), 4);
    EXPECT_EQ(m.order(), 4u);
    EXPECT_EQ(m.act(m.ring().element(7), m.element(1)).index, 3u);
}

TEST(Module, ExponentAndReduced) {
    EXPECT_EQ(z_product_module(4, 6).exponent(), 12u);
    EXPECT_TRUE(is_reduced_module(self_module(make_zmod(6))));
    EXPECT_FALSE(is_reduced_module(self_module(make_zmod(4))));
}

TEST(Module, AxiomsHold) {
    for (const auto& m : fixtures::small_modules()) EXPECT_NO_THROW(verify_module_axioms(m));
}

TEST(ModuleHom, KernelImage) {
    FiniteModule z12 = self_module(make_zmod(12));
    QuotientResult q = quotient_module(z12, ideal_of(z12, 4));
    EXPECT_EQ(q.projection.kernel(), ideal_of(z12, 4));
    EXPECT_TRUE(q.projection.is_surjective());
    EXPECT_EQ(q.projection.image(ideal_of(z12, 2)).size(), 2u);
    EXPECT_EQ(q.projection.preimage(zero_submodule(q.module)), ideal_of(z12, 4));
}

TEST(Module, SubmoduleAsModule) {
    FiniteModule z12 = self_module(make_zmod(12));
    Submodule k = ideal_of(z12, 2);
    FiniteModule km = submodule_as_module(k);
    EXPECT_EQ(km.order(), 6u);
    Submodule n = restrict_to(km, ideal_of(z12, 4));
    EXPECT_EQ(n.size(), 3u);
    EXPECT_EQ(extend_from(n), ideal_of(z12, 4));
}
