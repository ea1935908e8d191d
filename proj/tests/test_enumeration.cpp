#include <cstdlib>
#include <set>

#include <gtest/gtest.h>

#include "absorb/enumeration.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace absorb;
using fixtures::expect_error;

namespace {

std::vector<std::string> renders(const std::vector<Submodule>& subs) {
    std::vector<std::string> out;
    for (const auto& s : subs) out.push_back(s.render());
    return out;
}

bool is_gsdf(const Submodule& n) { return is_gsdf_absorbing(n).holds; }

}  // namespace

TEST(Lattice, Examples) {
    EXPECT_EQ(all_submodules(z_module(12)).size(), 6u);
    EXPECT_EQ(all_submodules(self_module(make_zmod(12))).size(), 6u);
    SubmoduleLattice p = all_submodules(z_module(7));
    ASSERT_EQ(p.size(), 2u);
    EXPECT_TRUE(p.members()[0].is_zero());
    EXPECT_FALSE(p.members()[1].is_proper());
    FiniteModule z2 = self_module(make_zmod(2));
    EXPECT_EQ(all_submodules(product_module(z2, z2)).size(), 5u);
}

TEST(Lattice, MatchesPowerSet) {
    for (const auto& m : fixtures::small_modules()) {
        SubmoduleLattice lat = all_submodules(m);
        std::set<std::vector<Index>> want, got;
        for (auto& c : oracle::power_set_submodules(m)) want.insert(c);
        for (const auto& s : lat.members()) got.insert(s.carrier());
        EXPECT_EQ(got, want) << m.key();
        EXPECT_EQ(lat.members().size(), got.size()) << m.key();
    }
}

TEST(Lattice, ClosedAndOrdered) {
    SubmoduleLattice lat = all_submodules(z_product_module(4, 6));
    for (std::size_t a = 0; a < lat.size(); ++a)
        for (std::size_t b = 0; b < lat.size(); ++b) {
            const auto& x = lat.members()[a];
            const auto& y = lat.members()[b];
            EXPECT_TRUE(lat.index_of(sum_submodules(x, y)).has_value());
            EXPECT_TRUE(lat.index_of(intersect_submodules(x, y)).has_value());
            EXPECT_EQ(lat.leq(a, b), x.is_subset_of(y));
        }
    for (std::size_t a = 1; a < lat.size(); ++a)
        EXPECT_LE(lat.members()[a - 1].size(), lat.members()[a].size());
}

TEST(Lattice, SizeBound) {
    ::setenv("ABSORB_LATTICE_BOUND", "10", 1);
    EXPECT_EQ(lattice_bound(), 10u);
    expect_error(ErrorKind::size_bound, [] { all_submodules(z_module(12)); });
    ::unsetenv("ABSORB_LATTICE_BOUND");
    EXPECT_EQ(lattice_bound(), kDefaultLatticeBound);
    EXPECT_NO_THROW(all_submodules(z_module(12)));
}

TEST(Filter, GsdfInZ12) {
    SubmoduleLattice lat = all_submodules(z_module(12));
    auto gsdf = filter_by(lat, is_gsdf);
    EXPECT_EQ(renders(gsdf), (std::vector<std::string>{"gen[6]", "gen[4]", "gen[3]", "gen[2]"}));
    EXPECT_EQ(renders(maximal_members(gsdf)), (std::vector<std::string>{"gen[3]", "gen[2]"}));
    EXPECT_EQ(filter_by(lat, [](const Submodule&) { return true; }).size(), 5u);
}

TEST(Filter, Chains) {
    SubmoduleLattice lat = all_submodules(z_module(12));
    auto chains = maximal_chains(filter_by(lat, is_gsdf));
    std::set<std::vector<std::string>> got;
    for (const auto& c : chains) got.insert(renders(c));
    std::set<std::vector<std::string>> want{{"gen[6]", "gen[3]"},
                                            {"gen[6]", "gen[2]"},
                                            {"gen[4]", "gen[2]"}};
    EXPECT_EQ(got, want);
}

TEST(Decomposition, Z24) {
    FiniteModule z24 = z_module(24);
    SubmoduleLattice lat = all_submodules(z24);
    for (const auto& n : lat.proper_members()) EXPECT_TRUE(decomposition_check(n, lat)) << n.render();
    Submodule twelve = cyclic_submodule(z24, 12);
    Submodule three = cyclic_submodule(z24, 3), four = cyclic_submodule(z24, 4),
              six = cyclic_submodule(z24, 6);
    EXPECT_EQ(intersect_submodules(three, four), twelve);
    EXPECT_EQ(intersect_submodules(six, four), twelve);
    EXPECT_TRUE(is_gsdf(three));
    EXPECT_TRUE(is_gsdf(four));
    EXPECT_TRUE(is_gsdf(six));
    EXPECT_FALSE(is_gsdf(twelve));
    expect_error(ErrorKind::not_proper, [&] { decomposition_check(full_submodule(z24), lat); });
}

TEST(Decomposition, ZeroInZ12) {
    FiniteModule z12 = z_module(12);
    SubmoduleLattice lat = all_submodules(z12);
    EXPECT_TRUE(decomposition_check(zero_submodule(z12), lat));
    auto over = gsdf_overmodules(zero_submodule(z12), lat);
    EXPECT_EQ(over.size(), 4u);
    EXPECT_TRUE(intersect_submodules(cyclic_submodule(z12, 4), cyclic_submodule(z12, 3)).is_zero());
}

TEST(Search, IntersectionFamily) {
    auto found = search_counterexample(zn_gsdf_intersections(30), expect_gsdf);
    ASSERT_TRUE(found.has_value());
    // Z12 precedes Z21 in iteration order: (6) and (4) are gsdf, (0) is not.
    EXPECT_EQ(found->description, "Z12: gen[6] ∩ gen[4]");
    EXPECT_TRUE(found->report.witness.has_value());
    auto again = search_counterexample(zn_gsdf_intersections(30), expect_gsdf);
    EXPECT_EQ(again->index, found->index);
    EXPECT_EQ(again->report.witness, found->report.witness);
}

TEST(Search, IntersectionFamilyContainsZ21) {
    FamilySpec fam = zn_gsdf_intersections(21);
    bool seen = false;
    fam.generate([&](const FamilyInstance& inst) {
        if (inst.submodule.module().order() != 21 || inst.parts.size() != 2) return true;
        if (inst.parts[0].size() * inst.parts[1].size() != 21) return true;
        seen = true;
        EXPECT_TRUE(inst.submodule.is_zero());
        PropertyReport rep = is_gsdf_absorbing(inst.submodule);
        EXPECT_FALSE(rep.holds);
        Witness w;
        w.u = 5;
        w.v = 2;
        w.x = 2;
        EXPECT_TRUE(replay_violates(PropertyKind::gsdf, inst.submodule, w));
        return false;
    });
    EXPECT_TRUE(seen);
}

TEST(Search, ProductFamilies) {
    EXPECT_FALSE(search_counterexample(zab_gsdf_products(8, true), expect_gsdf_iff_first_part)
                     .has_value());
    auto found = search_counterexample(zab_gsdf_products(12, false), expect_gsdf);
    ASSERT_TRUE(found.has_value());
    ASSERT_TRUE(found->report.witness.has_value());
    EXPECT_FALSE(found->report.holds);
    EXPECT_EQ(found->parts.size(), 2u);
}

TEST(Search, Z10xZ9Witness) {
    FiniteModule m = z_product_module(10, 9);
    Submodule zero = zero_submodule(m);
    PropertyReport rep = is_gsdf_absorbing(zero);
    ASSERT_FALSE(rep.holds);
    Witness w;
    w.u = 4;
    w.v = 1;
    w.x = m.value({2, 3}).index;
    EXPECT_TRUE(replay_violates(PropertyKind::gsdf, zero, w));
    EXPECT_EQ(rep.witness->u, 4u);
    EXPECT_EQ(rep.witness->v, std::optional<Index>(1));
    EXPECT_EQ(rep.witness->x, w.x);
}
