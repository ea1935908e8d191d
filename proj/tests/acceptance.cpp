// Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "absorb/constructions.hpp"
#include "absorb/enumeration.hpp"
#include "absorb/harness.hpp"
#include "absorb/predicates.hpp"
#include "oracle.hpp"

using namespace absorb;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Witness tuple(Index u, std::optional<Index> v, std::optional<Index> x) {
    Witness w;
    w.u = u;
    w.v = v;
    w.x = x;
    return w;
}

bool same_tuple(const std::optional<Witness>& w, Index u, Index v, Index x) {
    return w && w->u == u && w->v == std::optional<Index>(v) && w->x == std::optional<Index>(x);
}

std::string suite_summary(const SuiteReport& r) {
    std::ostringstream os;
    os << r.suite_id << ": " << r.instances_checked << " instances, " << r.violations.size()
       << " violations";
    std::size_t confirmed = 0;
    for (const auto& c : r.confirmations) confirmed += c.confirmed;
    if (!r.confirmations.empty()) os << ", " << confirmed << "/" << r.confirmations.size() << " confirmations";
    os << ", " << r.elapsed.count() << " ms";
    return os.str();
}

bool suite_clean(const SuiteReport& r) { return r.passed() && r.violations.empty() && r.instances_checked > 0; }

Outcome criterion_1() {
    const auto t0 = Clock::now();
    ZnClassification c = classify_zn(300);
    const double secs = seconds_since(t0);
    std::size_t independent = 0;
    for (const auto& row : c.rows)
        if (row.n <= 60 && row.gsdf != oracle::zn_zero_gsdf(row.n)) ++independent;
    std::ostringstream os;
    os << c.rows.size() << " rows, " << c.mismatches() << " mismatches, " << independent
       << " integer-oracle disagreements (n <= 60), " << secs << " s";
    return {c.rows.size() == 299 && c.mismatches() == 0 && independent == 0 && secs <= 120.0, os.str()};
}

Outcome criterion_2() {
    FiniteModule z12 = z_module(12);
    Submodule six = cyclic_submodule(z12, 6);
    PropertyReport g = is_gsdf_absorbing(six);
    PropertyReport c = is_classical_primary(six);
    const bool ok = g.holds && !c.holds && same_tuple(c.witness, 2, 3, 1) &&
                    replay_violates(PropertyKind::classical_primary, six, *c.witness);
    return {ok, "(6) in Z12: gsdf=" + std::string(g.holds ? "true" : "false") +
                    ", cprimary witness " +
                    (c.witness ? std::to_string(c.witness->u) + "," + std::to_string(*c.witness->v) + "," +
                                     std::to_string(*c.witness->x)
                               : std::string("none"))};
}

Outcome criterion_3() {
    Submodule zero = zero_submodule(z_module(8));
    PropertyReport g = is_gsdf_absorbing(zero);
    PropertyReport s = is_sdf_absorbing_submodule(zero);
    const bool ok = g.holds && !s.holds && same_tuple(s.witness, 3, 1, 1) &&
                    replay_violates(PropertyKind::sdf_submodule, zero, *s.witness);
    return {ok, "(0) in Z8: gsdf=" + std::string(g.holds ? "true" : "false") + ", sdf witness (3,1,1) " +
                    (same_tuple(s.witness, 3, 1, 1) ? "matched" : "not matched")};
}

Outcome criterion_4() {
    SuiteParams p;
    p.max_n = 60;
    p.max_ab = 12;
    SuiteReport r = run_suite("eq-equivalence", p);
    const double secs = r.elapsed.count() / 1000.0;
    return {suite_clean(r) && secs <= 60.0, suite_summary(r)};
}

Outcome criterion_5() {
    SuiteParams p;
    p.max_n = 99;
    SuiteReport r = run_suite("unit2", p);
    return {suite_clean(r), suite_summary(r)};
}

Outcome criterion_6() {
    SuiteReport r = run_suite("maximal-prime");
    FiniteModule z12 = z_module(12);
    SubmoduleLattice lat = all_submodules(z12);
    auto maxima = maximal_members(
        filter_by(lat, [](const Submodule& n) { return is_gsdf_absorbing(n).holds; }));
    bool exact = maxima.size() == 2;
    for (const auto& m : maxima)
        exact = exact && (m == cyclic_submodule(z12, 2) || m == cyclic_submodule(z12, 3)) &&
                is_prime_submodule(m).holds;
    std::string list;
    for (const auto& m : maxima) list += " " + m.render();
    return {suite_clean(r) && exact, suite_summary(r) + "; Z12 maxima:" + list};
}

Outcome criterion_7() {
    SuiteParams p;
    p.max_n = 100;
    SuiteReport r = run_suite("decomposition", p);
    FiniteModule z24 = z_module(24);
    Submodule twelve = cyclic_submodule(z24, 12), three = cyclic_submodule(z24, 3),
              four = cyclic_submodule(z24, 4), six = cyclic_submodule(z24, 6);
    const bool z24_ok = intersect_submodules(three, four) == twelve &&
                        intersect_submodules(six, four) == twelve && is_gsdf_absorbing(three).holds &&
                        is_gsdf_absorbing(four).holds && is_gsdf_absorbing(six).holds &&
                        decomposition_check(twelve, all_submodules(z24));
    return {suite_clean(r) && z24_ok,
            suite_summary(r) + "; Z24 (12)=(3)∩(4)=(6)∩(4) " + (z24_ok ? "reproduced" : "not reproduced")};
}

Outcome criterion_8() {
    SuiteReport r = run_suite("product");
    bool confirmations = r.confirmations.size() == 2;
    for (const auto& c : r.confirmations) confirmations = confirmations && c.confirmed;

    FiniteModule m = z_product_module(10, 9);
    Submodule zero = zero_submodule(m);
    const bool first = !is_gsdf_absorbing(zero).holds &&
                       replay_violates(PropertyKind::gsdf, zero, tuple(4, 1, m.value({2, 3}).index));

    FiniteModule z3 = self_module(make_zmod(3));
    FiniteModule p = product_module(z3, z3, ProductMode::product_ring);
    Submodule pz = zero_submodule(p);
    const FiniteRing& rr = p.ring();
    bool second = !is_gsdf_absorbing(pz).holds;
    bool validates = false;
    for (Index x = 0; x < p.order() && !validates; ++x)
        validates = replay_violates(PropertyKind::gsdf, pz,
                                    tuple(rr.value({2, 2}).index, rr.value({1, 2}).index, x));
    second = second && validates;
    return {suite_clean(r) && confirmations && first && second,
            suite_summary(r) + "; Z10xZ9 (4,1,(2,3)) " + (first ? "replays" : "does not replay") +
                "; Z3xZ3 u=(2,2) v=(1,2) " + (second ? "validates" : "does not validate")};
}

Outcome criterion_9() {
    FiniteModule z21 = z_module(21);
    Submodule three = cyclic_submodule(z21, 3), seven = cyclic_submodule(z21, 7);
    Submodule meet = intersect_submodules(three, seven);
    PropertyReport rep = is_gsdf_absorbing(meet);
    const bool z21_ok = is_gsdf_absorbing(three).holds && is_gsdf_absorbing(seven).holds &&
                        meet.is_zero() && !rep.holds &&
                        replay_violates(PropertyKind::gsdf, meet, tuple(5, 2, 2));
    SuiteReport inter = run_suite("intersection");
    SuiteReport chain = run_suite("chain-union");
    std::string detail = suite_summary(inter) + "; " + suite_summary(chain) + "; Z21 (3)∩(7) ";
    detail += z21_ok ? "fails gsdf, (5,2,2) replays" : "not reproduced";
    if (rep.witness)
        detail += " (least witness " + std::to_string(rep.witness->u) + "," + std::to_string(*rep.witness->v) +
                  "," + std::to_string(*rep.witness->x) + ")";
    return {z21_ok && suite_clean(inter) && suite_clean(chain), detail};
}

Outcome criterion_10() {
    SuiteReport r = run_suite("idealization");
    FiniteRing z6 = make_zmod(6);
    FiniteModule m6 = self_module(z6);
    FiniteRing rr = idealization_ring(z6, m6);
    RingSubset s = idealization_subset(rr, cyclic_submodule(m6, 3), cyclic_submodule(m6, 2));
    const bool flagged = !s.is_ideal;
    const bool fails = !sdf_primary_setwise(s).holds;
    const bool stated = replay_violates_setwise(s, tuple(rr.value({2, 1}).index, rr.value({5, 0}).index, std::nullopt));
    return {suite_clean(r) && flagged && fails && stated,
            suite_summary(r) + "; (3)⋉(2) " + (flagged ? "not an ideal" : "an ideal") + ", set-wise " +
                (fails ? "fails" : "holds") + ", ((2,1),(5,0)) " + (stated ? "replays" : "does not replay")};
}

Outcome criterion_11() {
    SuiteReport r = run_suite("amalgamation");
    return {suite_clean(r), suite_summary(r)};
}

Outcome criterion_12() {
    SuiteReport loc = run_suite("localization");
    SuiteReport epi = run_suite("epimorphism");
    SuiteReport rq = run_suite("restriction-quotient");
    FiniteRing z12 = make_zmod(12);
    LocalizationResult l = localize_ring(z12, MultiplicativeSet::generated_by(z12, {z12.element(4)}));
    const bool inst = l.idempotent.index == 4 && l.localized_ring.order() == 3;
    return {suite_clean(loc) && suite_clean(epi) && suite_clean(rq) && inst,
            suite_summary(loc) + "; " + suite_summary(epi) + "; " + suite_summary(rq) +
                "; Z12 S={1,4}: e=" + std::to_string(l.idempotent.index) +
                ", |eR|=" + std::to_string(l.localized_ring.order())};
}

Outcome criterion_13() {
    SuiteReport r = run_suite("hierarchy");
    return {suite_clean(r), suite_summary(r)};
}

std::vector<FiniteModule> oracle_family() {
    std::vector<FiniteModule> out;
    for (long long n = 2; n <= 16; ++n) out.push_back(z_module(n));
    for (long long n = 2; n <= 128; ++n)
        for (long long d = 2; d < n; ++d)
            if (n % d == 0 && n * d <= 256) out.push_back(cyclic_module(make_zmod(n), d));
    for (long long a = 2; a <= 16; ++a)
        for (long long b = a; b <= 16; ++b)
            if (std::lcm(a, b) * a * b <= 256) out.push_back(z_product_module(a, b));
    for (long long a = 2; a <= 8; ++a)
        for (long long b = 2; a * b <= 16; ++b) {
            FiniteModule ma = self_module(make_zmod(a)), mb = self_module(make_zmod(b));
            out.push_back(product_module(ma, mb, ProductMode::product_ring));
        }
    for (long long n = 2; n <= 4; ++n) {
        FiniteRing r = make_zmod(n);
        out.push_back(self_module(idealization_ring(r, self_module(r))));
    }
    FiniteRing z6 = make_zmod(6);
    out.push_back(self_module(amalgamation_ring(z6, z6, identity_hom(z6), principal_ideal(z6, z6.element(3)))));
    FiniteModule z16 = z_product_module(4, 4);
    out.push_back(quotient_module(z16, cyclic_submodule(z16, 5)).module);
    return out;
}

Outcome criterion_14() {
    SuiteReport r = run_suite("oracle");
    std::size_t modules = 0, instances = 0, disagreements = 0;
    for (const auto& m : oracle_family()) {
        if (static_cast<std::uint64_t>(m.ring().order()) * m.order() > 256) continue;
        ++modules;
        for (const auto& n : all_submodules(m).proper_members()) {
            ++instances;
            PropertyReport fast = is_gsdf_absorbing(n);
            auto slow = oracle::Checker(n).gsdf();
            if (fast.holds != !slow.has_value() || oracle::from_witness(fast.witness) != slow) ++disagreements;
        }
    }
    std::ostringstream os;
    os << suite_summary(r) << "; test oracle: " << modules << " modules, " << instances << " submodules, "
       << disagreements << " disagreements";
    return {suite_clean(r) && instances > 0 && disagreements == 0, os.str()};
}

}  // namespace

int main() {
    const std::vector<std::function<Outcome()>> criteria{
        criterion_1,  criterion_2,  criterion_3,  criterion_4,  criterion_5,
        criterion_6,  criterion_7,  criterion_8,  criterion_9,  criterion_10,
        criterion_11, criterion_12, criterion_13, criterion_14,
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::printf("criterion %zu: %s  %s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
