#include "absorb/harness.hpp"

#include <map>
#include <numeric>
#include <set>

#include "absorb/constructions.hpp"
#include "absorb/error.hpp"

namespace absorb {

// ---------------------------------------------------------------------------
// Z_n classification

bool is_pk_or_2pk(long long n) {
    if (n <= 1) return false;
    long long m = n;
    if (m % 2 == 0) {
        m /= 2;
        if (m == 1) return true;  // n = 2
        if (m % 2 == 0) {
            // n = 2^k with k >= 2 is the only remaining option.
            while (m % 2 == 0) m /= 2;
            return m == 1;
        }
    }
    // m is odd and > 1: it must be a power of a single odd prime.
    long long p = 3;
    while (p * p <= m && m % p != 0) p += 2;
    if (m % p != 0) return true;  // m prime
    while (m % p == 0) m /= p;
    return m == 1;
}

std::string factorization(long long n) {
    if (n <= 1) return std::to_string(n);
    std::string out;
    auto emit = [&](long long p, int e) {
        if (!out.empty()) out += "*";
        out += std::to_string(p);
        if (e > 1) out += "^" + std::to_string(e);
    };
    for (long long p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) emit(p, e);
    }
    if (n > 1) emit(n, 1);
    return out;
}

std::size_t ZnClassification::mismatches() const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const ZnRow& r) { return !r.match(); }));
}

ZnClassification classify_zn(int max_n, unsigned jobs) {
    if (max_n < 2) throw Error(ErrorKind::usage, "classify needs max_n >= 2");
    ZnClassification out;
    out.max_n = max_n;
    const std::size_t count = static_cast<std::size_t>(max_n - 1);
    out.rows = parallel_map<ZnRow>(count, jobs, [](std::size_t i) {
        const long long n = static_cast<long long>(i) + 2;
        const PropertyReport r = is_gsdf_absorbing(zero_submodule(z_module(n)));
        ZnRow row;
        row.n = n;
        row.factorization = factorization(n);
        row.gsdf = r.holds;
        row.predicted = is_pk_or_2pk(n);
        row.witness = r.witness;
        return row;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Naive oracle

bool naive_gsdf(const Submodule& n) {
    const FiniteModule& m = n.module();
    const FiniteRing r = m.ring();
    for (Index ui = 0; ui < r.order(); ++ui) {
        const RingElt u = r.element(ui);
        for (Index vi = 0; vi < r.order(); ++vi) {
            const RingElt v = r.element(vi);
            const RingElt diff_sq = r.sub(r.mul(u, u), r.mul(v, v));
            const RingElt diff = r.sub(u, v);
            const RingElt sum = r.add(u, v);
            for (Index xi = 0; xi < m.order(); ++xi) {
                const ModElt x = m.element(xi);
                if (!n.contains(m.act(diff_sq, x))) continue;
                if (n.contains(m.act(diff, x))) continue;
                bool hit = false;
                ModElt p = x;
                for (Index k = 1; k <= r.order() && !hit; ++k) {
                    p = m.act(sum, p);
                    hit = n.contains(p);
                }
                if (!hit) return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Suite plumbing

bool SuiteReport::passed() const {
    return violations.empty() &&
           std::all_of(confirmations.begin(), confirmations.end(),
                       [](const SuiteConfirmation& c) { return c.confirmed; });
}

namespace {

struct Partial {
    std::uint64_t instances = 0;
    std::vector<SuiteViolation> violations;
    std::vector<std::string> notes;
};

struct ModuleCase {
    std::string name;
    std::function<FiniteModule()> build;
};

using CaseCheck = std::function<void(const FiniteModule&, Partial&)>;

void run_cases(const std::vector<ModuleCase>& cases, unsigned jobs, const CaseCheck& check,
               SuiteReport& report) {
    auto parts = parallel_map<Partial>(cases.size(), jobs, [&](std::size_t i) {
        Partial p;
        check(cases[i].build(), p);
        return p;
    });
    for (auto& p : parts) {
        report.instances_checked += p.instances;
        for (auto& v : p.violations) report.violations.push_back(std::move(v));
        for (auto& n : p.notes) report.notes.push_back(std::move(n));
    }
}

std::string where(const Submodule& n) { return n.module().key() + " :: " + n.render(); }

void violate(Partial& out, const Submodule& n, const std::string& detail, PropertyReport report) {
    out.violations.push_back({where(n) + " :: " + detail, std::move(report)});
}

bool gsdf(const Submodule& n) { return is_gsdf_absorbing(n).holds; }

// Families -----------------------------------------------------------------

std::vector<ModuleCase> zn_cases(int max_n, int min_n = 2) {
    std::vector<ModuleCase> out;
    for (int n = min_n; n <= max_n; ++n) {
        out.push_back({"Z" + std::to_string(n), [n] { return z_module(n); }});
    }
    return out;
}

std::vector<ModuleCase> zab_cases(int max_ab) {
    std::vector<ModuleCase> out;
    for (int a = 2; a <= max_ab; ++a) {
        for (int b = 2; b <= max_ab; ++b) {
            out.push_back({"Z" + std::to_string(a) + "xZ" + std::to_string(b),
                           [a, b] { return z_product_module(a, b); }});
        }
    }
    return out;
}

const std::vector<int>& idealization_orders() {
    static const std::vector<int> orders{2, 3, 4, 6, 8};
    return orders;
}

std::vector<ModuleCase> idealization_cases() {
    std::vector<ModuleCase> out;
    for (int n : idealization_orders()) {
        out.push_back({"Z" + std::to_string(n) + "|xZ" + std::to_string(n), [n] {
                           const FiniteRing r = make_zmod(n);
                           return self_module(idealization_ring(r, self_module(r)));
                       }});
    }
    return out;
}

struct AmalgamationShape {
    int n1;
    int n2;
};

/// R1 = Z_n1, R2 = Z_n2, f the identity when n1 = n2 and the reduction otherwise.
const std::vector<AmalgamationShape>& amalgamation_shapes() {
    static const std::vector<AmalgamationShape> shapes{{6, 6},  {12, 12}, {12, 6}, {12, 4},
                                                       {12, 3}, {12, 2},  {6, 3},  {6, 2}};
    return shapes;
}

RingHom amalgamation_hom(const FiniteRing& r1, const FiniteRing& r2) {
    return r1.order() == r2.order() ? identity_hom(r1) : reduction_hom(r1, r2);
}

std::vector<Ideal> ideals_of(const FiniteRing& r) {
    return all_submodules(self_module(r)).members();
}

std::vector<ModuleCase> amalgamation_ring_cases() {
    std::vector<ModuleCase> out;
    for (const auto& shape : amalgamation_shapes()) {
        const FiniteRing r2 = make_zmod(shape.n2);
        const std::size_t ideal_count = ideals_of(r2).size();
        for (std::size_t j = 0; j < ideal_count; ++j) {
            out.push_back({"amalg", [shape, j] {
                               const FiniteRing r1 = make_zmod(shape.n1);
                               const FiniteRing r2 = make_zmod(shape.n2);
                               const Ideal jdeal = ideals_of(r2)[j];
                               return self_module(amalgamation_ring(r1, r2, amalgamation_hom(r1, r2), jdeal));
                           }});
        }
    }
    return out;
}

std::vector<ModuleCase> concat(std::initializer_list<std::vector<ModuleCase>> lists) {
    std::vector<ModuleCase> out;
    for (const auto& l : lists) out.insert(out.end(), l.begin(), l.end());
    return out;
}

std::vector<ModuleCase> default_family(int max_n, int max_ab) {
    return concat({zn_cases(max_n), zab_cases(max_ab), idealization_cases(),
                   amalgamation_ring_cases()});
}

// Helpers ------------------------------------------------------------------

std::vector<bool> colon_mask(const Submodule& n, Index x) {
    const FiniteModule& m = n.module();
    const FiniteRing r = m.ring();
    std::vector<bool> mask(r.order());
    for (Index t = 0; t < r.order(); ++t) mask[t] = n.contains(m.act(r.element(t), m.element(x)));
    return mask;
}

RingSubset subset_from_mask(const FiniteRing& r, const std::vector<bool>& mask) {
    RingSubset s{r, {}, true, mask};
    for (Index t = 0; t < r.order(); ++t) {
        if (mask[t]) s.carrier.push_back(t);
    }
    return s;
}

/// One generator per distinct cyclic submodule, zero first.
std::vector<Index> cyclic_representatives(const FiniteModule& m) {
    std::set<std::vector<Index>> seen;
    std::vector<Index> reps;
    for (Index x = 0; x < m.order(); ++x) {
        if (seen.insert(cyclic_submodule(m, x).carrier()).second) reps.push_back(x);
    }
    return reps;
}

// Suites -------------------------------------------------------------------

int param(const std::optional<int>& v, int fallback) { return v.value_or(fallback); }

void eq_case(const FiniteModule& m, Partial& out) {
    const FiniteRing r = m.ring();
    const SubmoduleLattice lattice = all_submodules(m);
    const std::vector<Index> reps = cyclic_representatives(m);
    std::map<std::vector<bool>, bool> sdfp;  // colon ideal -> sdf-absorbing primary
    auto sdf_primary = [&](const std::vector<bool>& mask) {
        auto it = sdfp.find(mask);
        if (it != sdfp.end()) return it->second;
        const bool v = sdf_primary_setwise(subset_from_mask(r, mask)).holds;
        sdfp.emplace(mask, v);
        return v;
    };
    for (const auto& n : lattice.proper_members()) {
        ++out.instances;
        const PropertyReport g = is_gsdf_absorbing(n);
        bool c2 = true;
        for (Index t = 0; t < r.order() && c2; ++t) {
            const Submodule colon = colon_submodule(n, r.element(t));
            if (colon.is_proper()) c2 = gsdf(colon);
        }
        bool c3 = true;
        for (Index x = 0; x < m.order() && c3; ++x) {
            if (!n.contains(x)) c3 = sdf_primary(colon_mask(n, x));
        }
        // K = Rx + Ry over distinct cyclic submodules; K = Rx when y = 0.
        bool c4 = true;
        std::vector<std::vector<bool>> masks;
        for (Index x : reps) masks.push_back(colon_mask(n, x));
        for (std::size_t i = 0; i < reps.size() && c4; ++i) {
            for (std::size_t j = 0; j <= i && c4; ++j) {
                if (n.contains(reps[i]) && n.contains(reps[j])) continue;
                std::vector<bool> mask(r.order());
                for (Index t = 0; t < r.order(); ++t) mask[t] = masks[i][t] && masks[j][t];
                c4 = sdf_primary(mask);
            }
        }
        if (!(g.holds == c2 && c2 == c3 && c3 == c4)) {
            violate(out, n,
                    "(1)=" + std::to_string(g.holds) + " (2)=" + std::to_string(c2) +
                        " (3)=" + std::to_string(c3) + " (4)=" + std::to_string(c4),
                    g);
        }
    }
}

SuiteReport suite_eq(const SuiteParams& p, SuiteReport rep) {
    const int max_n = param(p.max_n, 60), max_ab = param(p.max_ab, 12);
    rep.parameters = {{"max_n", std::to_string(max_n)}, {"max_ab", std::to_string(max_ab)}};
    run_cases(concat({zn_cases(max_n), zab_cases(max_ab)}), p.jobs, eq_case, rep);
    return rep;
}

SuiteReport suite_unit2(const SuiteParams& p, SuiteReport rep) {
    const int max_n = param(p.max_n, 99), max_ab = param(p.max_ab, 12);
    rep.parameters = {{"max_n", std::to_string(max_n)}, {"max_ab", std::to_string(max_ab)}};
    std::vector<ModuleCase> cases;
    for (int n = 3; n <= max_n; n += 2) cases.push_back({"", [n] { return z_module(n); }});
    for (int a = 3; a <= max_ab; a += 2) {
        for (int b = 3; b <= max_ab; b += 2) {
            cases.push_back({"", [a, b] { return z_product_module(a, b); }});
        }
    }
    run_cases(cases, p.jobs, [](const FiniteModule& m, Partial& out) {
        if (!is_unit(m.ring(), m.ring().from_int(2))) return;
        for (const auto& n : all_submodules(m).proper_members()) {
            ++out.instances;
            const PropertyReport g = is_gsdf_absorbing(n);
            const PropertyReport c = is_classical_primary(n);
            if (g.holds != c.holds) violate(out, n, "gsdf != classical primary", g.holds ? c : g);
        }
    }, rep);
    return rep;
}

SuiteReport suite_char2(const SuiteParams& p, SuiteReport rep) {
    std::vector<ModuleCase> cases{
        {"", [] { return z_module(2); }},
        {"", [] { return z_product_module(2, 2); }},
        {"", [] {
             const FiniteRing z2 = make_zmod(2);
             return product_module(self_module(z2), self_module(z2));
         }},
        {"", [] { return self_module(product_ring(make_zmod(2), make_zmod(2))); }},
        {"", [] {
             const FiniteRing z2 = make_zmod(2);
             return self_module(idealization_ring(z2, self_module(z2)));
         }},
        {"", [] {
             const FiniteRing z2 = make_zmod(2);
             const FiniteModule m = self_module(idealization_ring(z2, self_module(z2)));
             return product_module(m, m);
         }},
        {"", [] {
             const FiniteRing z2 = make_zmod(2);
             return self_module(
                 idealization_ring(z2, product_module(self_module(z2), self_module(z2))));
         }},
    };
    rep.parameters = {{"modules", std::to_string(cases.size())}};
    run_cases(cases, p.jobs, [](const FiniteModule& m, Partial& out) {
        if (characteristic(m.ring()) != 2) {
            out.notes.push_back(m.key() + " skipped: characteristic is not 2");
            return;
        }
        for (const auto& n : all_submodules(m).proper_members()) {
            ++out.instances;
            const PropertyReport g = is_gsdf_absorbing(n);
            if (!g.holds) violate(out, n, "not gsdf in characteristic 2", g);
        }
    }, rep);
    return rep;
}

std::vector<ModuleCase> prime_field_products() {
    std::vector<ModuleCase> out;
    const std::vector<int> primes{2, 3, 5, 7};
    for (int p : primes) {
        for (int q : primes) {
            out.push_back({"", [p, q] { return self_module(product_ring(make_zmod(p), make_zmod(q))); }});
        }
    }
    out.push_back({"", [] {
                       return self_module(product_ring(product_ring(make_zmod(2), make_zmod(3)), make_zmod(2)));
                   }});
    out.push_back({"", [] {
                       const FiniteModule s = self_module(product_ring(make_zmod(2), make_zmod(3)));
                       return product_module(s, s);
                   }});
    return out;
}

SuiteReport suite_reduced_zero(const SuiteParams& p, SuiteReport rep) {
    const int max_n = param(p.max_n, 60), max_ab = param(p.max_ab, 12);
    rep.parameters = {{"max_n", std::to_string(max_n)}, {"max_ab", std::to_string(max_ab)}};
    auto cases = concat({zn_cases(max_n), zab_cases(max_ab), prime_field_products(),
                         idealization_cases(), amalgamation_ring_cases()});
    run_cases(cases, p.jobs, [](const FiniteModule& m, Partial& out) {
        if (!is_reduced_module(m)) return;
        ++out.instances;
        const Submodule zero = zero_submodule(m);
        const PropertyReport g = is_gsdf_absorbing(zero);
        const PropertyReport s = is_sdf_absorbing_submodule(zero);
        if (g.holds != s.holds) violate(out, zero, "gsdf(0) != sdf(0) on a reduced module", g.holds ? s : g);
    }, rep);
    return rep;
}

bool squarefree(long long n) {
    for (long long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
    }
    return true;
}

SuiteReport suite_vnr(const SuiteParams& p, SuiteReport rep) {
    const int max_n = param(p.max_n, 60), max_ab = param(p.max_ab, 12);
    rep.parameters = {{"max_n", std::to_string(max_n)}, {"max_ab", std::to_string(max_ab)}};
    std::vector<ModuleCase> cases;
    for (int n = 2; n <= max_n; ++n) {
        if (squarefree(n)) cases.push_back({"", [n] { return z_module(n); }});
    }
    for (int a = 2; a <= max_ab; ++a) {
        for (int b = 2; b <= max_ab; ++b) {
            if (squarefree(std::lcm(a, b))) cases.push_back({"", [a, b] { return z_product_module(a, b); }});
        }
    }
    for (auto& c : prime_field_products()) cases.push_back(std::move(c));
    run_cases(cases, p.jobs, [](const FiniteModule& m, Partial& out) {
        for (const auto& n : all_submodules(m).proper_members()) {
            ++out.instances;
            const PropertyReport g = is_gsdf_absorbing(n);
            const PropertyReport s = is_sdf_absorbing_submodule(n);
            if (g.holds != s.holds) violate(out, n, "gsdf != sdf over a von Neumann regular ring", g.holds ? s : g);
        }
    }, rep);
    return rep;
}

std::string render_family(const std::vector<Submodule>& family) {
    std::string out = "{";
    for (std::size_t i = 0; i < family.size(); ++i) out += (i ? "," : "") + family[i].render();
    return out + "}";
}

SuiteReport suite_maximal_prime(const SuiteParams& p, SuiteReport rep) {
    const int max_n = param(p.max_n, 60), max_ab = param(p.max_ab, 12);
    rep.parameters = {{"max_n", std::to_string(max_n)}, {"max_ab", std::to_string(max_ab)}};
    run_cases(default_family(max_n, max_ab), p.jobs, [](const FiniteModule& m, Partial& out) {
        const auto family = filter_by(all_submodules(m), gsdf);
        for (const auto& q : maximal_members(family)) {
            ++out.instances;
            const PropertyReport pr = is_prime_submodule(q);
            if (!pr.holds) violate(out, q, "maximal gsdf submodule is not prime", pr);
        }
    }, rep);
    const FiniteModule z12 = z_module(12);
    const auto maxima = maximal_members(filter_by(all_submodules(z12), gsdf));
    const std::vector<Submodule> expected{span_indices(z12, {3}), span_indices(z12, {2})};
    rep.confirmations.push_back({"maximal gsdf submodules of Z12 are " + render_family(maxima) +
                                     ", expected {gen[3],gen[2]}",
                                 maxima == expected});
    return rep;
}

SuiteReport suite_decomposition(const SuiteParams& p, SuiteReport rep) {
    const int max_n = param(p.max_n, 100), max_ab = param(p.max_ab, 12);
    rep.parameters = {{"max_n", std::to_string(max_n)}, {"max_ab", std::to_string(max_ab)}};
    run_cases(concat({zn_cases(max_n), zab_cases(max_ab)}), p.jobs, [](const FiniteModule& m, Partial& out) {
        const SubmoduleLattice lattice = all_submodules(m);
        for (const auto& n : lattice.proper_members()) {
            ++out.instances;
            if (!decomposition_check(n, lattice)) {
                violate(out, n, "no gsdf decomposition", is_gsdf_absorbing(n));
            }
        }
    }, rep);
    const FiniteModule z24 = z_module(24);
    const Submodule s3 = span_indices(z24, {3}), s4 = span_indices(z24, {4}),
                    s6 = span_indices(z24, {6}), s12 = span_indices(z24, {12});
    const bool ok = gsdf(s3) && gsdf(s4) && gsdf(s6) && !(s3 == s6) &&
                    intersect_submodules(s3, s4) == s12 && intersect_submodules(s6, s4) == s12;
    rep.confirmations.push_back(
        {"Z24: gen[12] = gen[3] ∩ gen[4] = gen[6] ∩ gen[4] with all three factors gsdf", ok});
    return rep;
}

SuiteReport suite_principal_ideal(const SuiteParams& p, SuiteReport rep) {
    const int max_n = param(p.max_n, 60), max_ab = param(p.max_ab, 12);
    rep.parameters = {{"max_n", std::to_string(max_n)}, {"max_ab", std::to_string(max_ab)}};
    run_cases(concat({zn_cases(max_n), zab_cases(max_ab)}), p.jobs, [](const FiniteModule& m, Partial& out) {
        const FiniteRing r = m.ring();
        const SubmoduleLattice lattice = all_submodules(m);
        std::set<std::vector<Index>> seen;
        for (Index g = 0; g < r.order(); ++g) {
            const Ideal ideal = principal_ideal(r, r.element(g));
            if (!seen.insert(ideal.carrier()).second) continue;
            const Submodule im = scale_submodule(full_submodule(m), r.element(g));
            const FiniteModule im_module = submodule_as_module(im);
            for (const auto& n : lattice.members()) {
                if (!n.is_subset_of(im) || n == im) continue;
                ++out.instances;
                const PropertyReport inner = is_gsdf_absorbing(restrict_to(im_module, n));
                const PropertyReport outer = is_gsdf_absorbing(colon_submodule(n, r.element(g)));
                if (inner.holds != outer.holds) {
                    violate(out, n, "I = " + ideal.render() + ": gsdf in IM != gsdf of (N :_M I)",
                            inner.holds ? outer : inner);
                }
            }
        }
    }, rep);
    return rep;
}

SuiteReport suite_localization(const SuiteParams& p, SuiteReport rep) {
    const std::vector<int> orders{6, 8, 12, 18, 24};
    rep.parameters = {{"z_n", "6,8,12,18,24"}, {"z_a x z_b", "2x6,4x6,3x4"}};
    std::vector<ModuleCase> cases;
    for (int n : orders) cases.push_back({"", [n] { return z_module(n); }});
    cases.push_back({"", [] { return z_product_module(2, 6); }});
    cases.push_back({"", [] { return z_product_module(4, 6); }});
    cases.push_back({"", [] { return z_product_module(3, 4); }});
    run_cases(cases, p.jobs, [](const FiniteModule& m, Partial& out) {
        const auto lattice = all_submodules(m);
        std::uint64_t degenerate = 0;
        for (const auto& s : all_multiplicative_sets(m.ring())) {
            std::optional<LocalizedModule> loc;
            try {
                loc = localize_module(m, s);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::degenerate_localization) throw;
                ++degenerate;
                continue;
            }
            for (const auto& n : lattice.proper_members()) {
                ++out.instances;
                const Submodule sn = localize_submodule(*loc, n);
                if (!sn.is_proper()) continue;
                const PropertyReport local = is_gsdf_absorbing(sn);
                const PropertyReport global = is_gsdf_absorbing(n);
                if (global.holds && !local.holds) {
                    violate(out, n, "S = " + s.render() + ": S^-1 N not gsdf", local);
                }
                if (local.holds && is_saturated(n, s) && !global.holds) {
                    violate(out, n, "S = " + s.render() + ": saturated N not gsdf", global);
                }
            }
        }
        out.notes.push_back(m.key() + ": " + std::to_string(degenerate) +
                            " multiplicative sets give the zero localization");
    }, rep);
    const FiniteRing z12 = make_zmod(12);
    const auto s = MultiplicativeSet::generated_by(z12, {z12.from_int(4)});
    const auto loc = localize_ring(z12, s);
    rep.confirmations.push_back({"Z12, S = " + s.render() + ": e = " + z12.render(loc.idempotent) +
                                     ", |S^-1 R| = " + std::to_string(loc.localized_ring.order()),
                                 s.carrier() == std::vector<Index>{1, 4} &&
                                     loc.idempotent.index == 4 && loc.localized_ring.order() == 3});
    return rep;
}

SuiteReport suite_epimorphism(const SuiteParams& p, SuiteReport rep) {
    const int max_n = param(p.max_n, 60), max_ab = param(p.max_ab, 12);
    rep.parameters = {{"max_n", std::to_string(max_n)}, {"max_ab", std::to_string(max_ab)}};
    run_cases(concat({zn_cases(max_n), zab_cases(max_ab)}), p.jobs, [](const FiniteModule& m, Partial& out) {
        const auto lattice = all_submodules(m);
        for (const auto& k : lattice.proper_members()) {
            const QuotientResult q = quotient_module(m, k);
            for (const auto& n : lattice.proper_members()) {
                if (!k.is_subset_of(n)) continue;
                ++out.instances;
                if (!gsdf(n)) continue;
                const PropertyReport image = is_gsdf_absorbing(q.projection.image(n));
                if (!image.holds) violate(out, n, "f(N) not gsdf, ker f = " + k.render(), image);
            }
            for (const auto& n2 : all_submodules(q.module).proper_members()) {
                ++out.instances;
                if (!gsdf(n2)) continue;
                const Submodule pre = q.projection.preimage(n2);
                const PropertyReport back = is_gsdf_absorbing(pre);
                if (!back.holds) violate(out, pre, "f^-1(N') not gsdf, ker f = " + k.render(), back);
            }
        }
    }, rep);
    return rep;
}

SuiteReport suite_restriction_quotient(const SuiteParams& p, SuiteReport rep) {
    const int max_n = param(p.max_n, 60), max_ab = param(p.max_ab, 12);
    rep.parameters = {{"max_n", std::to_string(max_n)}, {"max_ab", std::to_string(max_ab)}};
    run_cases(concat({zn_cases(max_n), zab_cases(max_ab)}), p.jobs, [](const FiniteModule& m, Partial& out) {
        const auto lattice = all_submodules(m);
        const auto proper = lattice.proper_members();
        std::vector<bool> g;
        for (const auto& n : proper) g.push_back(gsdf(n));
        for (const auto& k : proper) {
            if (k.is_zero()) continue;
            // Part (1): M1 = K inside M2 = M.
            const FiniteModule k_module = submodule_as_module(k);
            for (std::size_t i = 0; i < proper.size(); ++i) {
                if (!g[i] || k.is_subset_of(proper[i])) continue;
                ++out.instances;
                const Submodule meet = intersect_submodules(proper[i], k);
                const PropertyReport r = is_gsdf_absorbing(restrict_to(k_module, meet));
                if (!r.holds) violate(out, proper[i], "N ∩ " + k.render() + " not gsdf in " + k.render(), r);
            }
        }
        for (const auto& k : proper) {
            // Part (2): K ⊆ N, N gsdf in M iff N/K gsdf in M/K.
            const QuotientResult q = quotient_module(m, k);
            for (std::size_t i = 0; i < proper.size(); ++i) {
                if (!k.is_subset_of(proper[i])) continue;
                ++out.instances;
                const PropertyReport r = is_gsdf_absorbing(q.projection.image(proper[i]));
                if (r.holds != g[i]) {
                    violate(out, proper[i], "gsdf(N) != gsdf(N/" + k.render() + ")",
                            g[i] ? r : is_gsdf_absorbing(proper[i]));
                }
            }
        }
    }, rep);
    return rep;
}

SuiteReport suite_intersection(const SuiteParams& p, SuiteReport rep) {
    const int max_n = param(p.max_n, 60), max_ab = param(p.max_ab, 12);
    rep.parameters = {{"max_n", std::to_string(max_n)}, {"max_ab", std::to_string(max_ab)}};
    run_cases(concat({zn_cases(max_n), zab_cases(max_ab)}), p.jobs, [](const FiniteModule& m, Partial& out) {
        const FiniteRing r = m.ring();
        const auto family = filter_by(all_submodules(m), gsdf);
        std::map<std::vector<bool>, std::vector<Index>> radicals;
        auto radical_of = [&](const Submodule& n, Index x) -> const std::vector<Index>& {
            const auto mask = colon_mask(n, x);
            auto it = radicals.find(mask);
            if (it == radicals.end()) {
                it = radicals.emplace(mask, radical(subset_from_mask(r, mask).as_ideal()).carrier()).first;
            }
            return it->second;
        };
        // Distinct N1, N2 never meet the hypothesis: for x in N2 but not N1 the
        // radicals are R and a proper ideal. The diagonal keeps the check populated.
        std::uint64_t skipped = 0, distinct_passed = 0;
        for (std::size_t i = 0; i < family.size(); ++i) {
            for (std::size_t j = i; j < family.size(); ++j) {
                const Submodule meet = intersect_submodules(family[i], family[j]);
                bool hypothesis = true;
                for (Index x = 0; x < m.order() && hypothesis; ++x) {
                    if (meet.contains(x)) continue;
                    hypothesis = radical_of(family[i], x) == radical_of(family[j], x);
                }
                if (!hypothesis) {
                    ++skipped;
                    continue;
                }
                if (i != j) ++distinct_passed;
                ++out.instances;
                const PropertyReport g = is_gsdf_absorbing(meet);
                if (!g.holds) {
                    violate(out, meet, family[i].render() + " ∩ " + family[j].render() + " not gsdf", g);
                }
            }
        }
        if (skipped > 0 || distinct_passed > 0) {
            out.notes.push_back(m.key() + ": " + std::to_string(skipped) +
                                " distinct gsdf pairs skipped (radical hypothesis fails), " +
                                std::to_string(distinct_passed) + " distinct pairs pass it");
        }
    }, rep);

    const FiniteModule z21 = z_module(21);
    const Submodule n1 = span_indices(z21, {3}), n2 = span_indices(z21, {7});
    const Submodule meet = intersect_submodules(n1, n2);
    const PropertyReport g = is_gsdf_absorbing(meet);
    const Witness stated{5, 2, 2, 0};
    rep.confirmations.push_back(
        {"Z21: gen[3] ∩ gen[7] = zero is not gsdf and (u,v,x) = (5,2,2) violates",
         meet.is_zero() && !g.holds && replay_violates(PropertyKind::gsdf, meet, stated)});
    bool hypothesis = true;
    for (Index x = 1; x < z21.order() && hypothesis; ++x) {
        hypothesis = radical(colon_ideal(n1, z21.element(x))) == radical(colon_ideal(n2, z21.element(x)));
    }
    rep.confirmations.push_back({"Z21: the radical hypothesis fails for gen[3], gen[7]", !hypothesis});
    return rep;
}

SuiteReport suite_chain_union(const SuiteParams& p, SuiteReport rep) {
    const int max_n = param(p.max_n, 60), max_ab = param(p.max_ab, 12);
    rep.parameters = {{"max_n", std::to_string(max_n)}, {"max_ab", std::to_string(max_ab)}};
    run_cases(default_family(max_n, max_ab), p.jobs, [](const FiniteModule& m, Partial& out) {
        const auto family = filter_by(all_submodules(m), gsdf);
        for (const auto& chain : maximal_chains(family)) {
            ++out.instances;
            const Submodule& top = chain.back();
            std::set<Index> unite;
            for (const auto& c : chain) unite.insert(c.carrier().begin(), c.carrier().end());
            const std::vector<Index> carrier(unite.begin(), unite.end());
            const PropertyReport g = is_gsdf_absorbing(Submodule::from_carrier(m, carrier));
            if (carrier != top.carrier() || !g.holds) {
                violate(out, top, "union of a chain of " + std::to_string(chain.size()) + " is not gsdf", g);
            }
        }
    }, rep);
    return rep;
}

SuiteReport suite_product(const SuiteParams& p, SuiteReport rep) {
    const int max_ab = param(p.max_ab, 12);
    rep.parameters = {{"max_ab", std::to_string(max_ab)}};
    run_cases(zab_cases(max_ab), p.jobs, [](const FiniteModule& m, Partial& out) {
        const auto [m1, m2] = product_factors(m);
        const auto p1 = all_submodules(m1).proper_members();
        const auto p2 = all_submodules(m2).proper_members();
        std::vector<bool> g1, g2;
        for (const auto& n : p1) g1.push_back(gsdf(n));
        for (const auto& n : p2) g2.push_back(gsdf(n));
        for (std::size_t i = 0; i < p1.size(); ++i) {
            for (std::size_t j = 0; j < p2.size(); ++j) {
                ++out.instances;
                const Submodule prod = product_submodule(m, p1[i], p2[j]);
                const PropertyReport r = is_gsdf_absorbing(prod);
                if (r.holds && !(g1[i] && g2[j])) violate(out, prod, "(1): factor not gsdf", r);
            }
            ++out.instances;
            const Submodule left = product_submodule(m, p1[i], full_submodule(m2));
            const PropertyReport r = is_gsdf_absorbing(left);
            if (r.holds != g1[i]) violate(out, left, "(2): N1 x M2 vs N1", r);
        }
        for (std::size_t j = 0; j < p2.size(); ++j) {
            ++out.instances;
            const Submodule right = product_submodule(m, full_submodule(m1), p2[j]);
            const PropertyReport r = is_gsdf_absorbing(right);
            if (r.holds != g2[j]) violate(out, right, "(3): M1 x N2 vs N2", r);
        }
    }, rep);

    {
        const FiniteModule m = z_product_module(10, 9);
        const Submodule zero = zero_submodule(m);
        const Witness stated{4, 1, m.value({2, 3}).index, 0};
        rep.confirmations.push_back({"Z10 x Z9: zero is not gsdf and (u,v,x) = (4,1,(2,3)) violates",
                                     !gsdf(zero) && replay_violates(PropertyKind::gsdf, zero, stated)});
    }
    {
        // char 3 = 2n-1 with n = 2: u = (n, n), v = (-n, n).
        const FiniteRing z3 = make_zmod(3);
        const FiniteModule m = product_module(self_module(z3), self_module(z3), ProductMode::product_ring);
        const FiniteRing rr = m.ring();
        const Submodule zero = zero_submodule(m);
        const Witness stated{rr.value({2, 2}).index, rr.value({1, 2}).index, m.value({1, 1}).index, 0};
        rep.confirmations.push_back(
            {"Z3 x Z3 over Z3 x Z3: zero x zero is not gsdf and u = (2,2), v = (1,2), x = (1,1) violates",
             gsdf(zero_submodule(self_module(z3))) && !gsdf(zero) &&
                 replay_violates(PropertyKind::gsdf, zero, stated)});
    }
    return rep;
}

SuiteReport suite_idealization(const SuiteParams& p, SuiteReport rep) {
    rep.parameters = {{"z_n", "2,3,4,6,8"}};
    std::vector<ModuleCase> cases;
    for (int n : idealization_orders()) cases.push_back({"", [n] { return self_module(make_zmod(n)); }});
    run_cases(cases, p.jobs, [](const FiniteModule& m, Partial& out) {
        const FiniteRing r = m.ring();
        const FiniteRing t = idealization_ring(r, m);
        const auto ideals = all_submodules(self_module(r)).proper_members();
        const auto subs = all_submodules(m).members();
        for (const auto& i : ideals) {
            const bool i_sdfp = is_sdf_absorbing_primary_ideal(i).holds;
            for (const auto& n : subs) {
                const RingSubset s = idealization_subset(t, i, n);
                if (!s.is_ideal) continue;
                ++out.instances;
                const Ideal in = s.as_ideal();
                const std::string label = "I = " + i.render() + ", N = " + n.render();
                if (!idealization_radical_check(t, i, n)) {
                    violate(out, in, label + ": sqrt(I x N) != sqrt(I) x M", PropertyReport{});
                }
                const PropertyReport r_in = is_sdf_absorbing_primary_ideal(in);
                if (r_in.holds && !i_sdfp) violate(out, in, label + ": (1) fails", is_sdf_absorbing_primary_ideal(i));
                if (n.is_proper()) continue;
                if (r_in.holds != i_sdfp) violate(out, in, label + ": (2) fails", r_in.holds ? is_sdf_absorbing_primary_ideal(i) : r_in);
            }
        }
    }, rep);

    {
        const FiniteRing z6 = make_zmod(6);
        const FiniteModule m = self_module(z6);
        const FiniteRing t = idealization_ring(z6, m);
        const RingSubset s = idealization_subset(t, principal_ideal(z6, z6.from_int(3)), span_indices(m, {2}));
        const Witness stated{t.value({2, 1}).index, t.value({5, 0}).index, std::nullopt, 0};
        const PropertyReport r = sdf_primary_setwise(s);
        rep.confirmations.push_back(
            {"Z6 |x Z6: gen[3] x gen[2] is not an ideal and fails set-wise sdf-primary at ((2,1),(5,0))",
             !s.is_ideal && !r.holds && replay_violates_setwise(s, stated)});
    }
    {
        const FiniteRing z42 = make_zmod(42);
        const FiniteModule m = self_module(z42);
        const FiniteRing t = idealization_ring(z42, m);
        const RingSubset s = idealization_subset(t, principal_ideal(z42, z42.from_int(2)), zero_submodule(m));
        const Submodule zero = zero_submodule(z_module(42));
        const Witness stated{5, 2, 2, 0};
        rep.confirmations.push_back(
            {"Z42 |x Z42: gen[2] x zero satisfies set-wise sdf-primary, yet zero in Z42 is not gsdf ((5,2,2) violates)",
             sdf_primary_setwise(s).holds && !gsdf(zero) && replay_violates(PropertyKind::gsdf, zero, stated)});
    }
    return rep;
}

SuiteReport suite_amalgamation(const SuiteParams& p, SuiteReport rep) {
    rep.parameters = {{"shapes", "Z6-id-Z6,Z12-id-Z12,Z12-Z6,Z12-Z4,Z12-Z3,Z12-Z2,Z6-Z3,Z6-Z2"},
                      {"J", "all ideals"}};
    struct Case {
        AmalgamationShape shape;
        std::size_t j;
    };
    std::vector<Case> instances;
    for (const auto& shape : amalgamation_shapes()) {
        const std::size_t count = ideals_of(make_zmod(shape.n2)).size();
        for (std::size_t j = 0; j < count; ++j) instances.push_back({shape, j});
    }
    struct Outcome {
        Partial partial;
        std::uint64_t n2_agree = 0;
        std::uint64_t n2_total = 0;
    };
    auto outcomes = parallel_map<Outcome>(instances.size(), p.jobs, [&](std::size_t idx) {
        Outcome o;
        const Case c = instances[idx];
        const FiniteRing r1 = make_zmod(c.shape.n1), r2 = make_zmod(c.shape.n2);
        const RingHom f = amalgamation_hom(r1, r2);
        const Ideal j = ideals_of(r2)[c.j];
        const FiniteModule m1 = self_module(r1), m2 = self_module(r2);
        const FiniteModule a = amalgamated_module(m1, m2, f, f.table(), j);
        for (const auto& n1 : all_submodules(m1).proper_members()) {
            ++o.partial.instances;
            const Submodule lifted = amalg_submodule_N1(a, n1);
            const PropertyReport up = is_gsdf_absorbing(lifted);
            if (up.holds != gsdf(n1)) {
                violate(o.partial, lifted, "N1 = " + n1.render() + ": gsdf(N1 |><| JM2) != gsdf(N1)",
                        up.holds ? is_gsdf_absorbing(n1) : up);
            }
        }
        for (const auto& n2 : all_submodules(m2).proper_members()) {
            const Submodule bar = amalg_submodule_N2bar(a, n2);
            if (!bar.is_proper()) continue;
            ++o.n2_total;
            if (gsdf(bar) == gsdf(n2)) ++o.n2_agree;
        }
        return o;
    });
    std::uint64_t agree = 0, total = 0;
    for (auto& o : outcomes) {
        rep.instances_checked += o.partial.instances;
        for (auto& v : o.partial.violations) rep.violations.push_back(std::move(v));
        agree += o.n2_agree;
        total += o.n2_total;
    }
    rep.notes.push_back("overline N2: gsdf agrees with gsdf(N2) on " + std::to_string(agree) + " of " +
                        std::to_string(total) + " proper instances (recorded, not asserted)");
    return rep;
}

SuiteReport suite_hierarchy(const SuiteParams& p, SuiteReport rep) {
    const int max_n = param(p.max_n, 60), max_ab = param(p.max_ab, 12);
    rep.parameters = {{"max_n", std::to_string(max_n)}, {"max_ab", std::to_string(max_ab)}};
    run_cases(default_family(max_n, max_ab), p.jobs, [](const FiniteModule& m, Partial& out) {
        for (const auto& n : all_submodules(m).proper_members()) {
            ++out.instances;
            const PropertyReport prime = is_prime_submodule(n);
            const PropertyReport primary = is_primary_submodule(n);
            const PropertyReport cprimary = is_classical_primary(n);
            const PropertyReport sdf = is_sdf_absorbing_submodule(n);
            const PropertyReport g = is_gsdf_absorbing(n);
            if (prime.holds && !primary.holds) violate(out, n, "prime but not primary", primary);
            if (primary.holds && !cprimary.holds) violate(out, n, "primary but not classical primary", cprimary);
            if (cprimary.holds && !g.holds) violate(out, n, "classical primary but not gsdf", g);
            if (sdf.holds && !g.holds) violate(out, n, "sdf but not gsdf", g);
        }
    }, rep);
    return rep;
}

std::vector<ModuleCase> oracle_cases(Index bound) {
    std::vector<ModuleCase> out;
    auto fits = [bound](long long ring, long long mod) { return ring * mod <= bound; };
    for (int n = 2; fits(n, n); ++n) out.push_back({"", [n] { return z_module(n); }});
    for (int n = 2; n <= static_cast<int>(bound); ++n) {
        for (int d = 1; d < n; ++d) {
            if (n % d == 0 && fits(n, d)) out.push_back({"", [n, d] { return cyclic_module(make_zmod(n), d); }});
        }
    }
    for (int a = 2; a <= 16; ++a) {
        for (int b = 2; b <= 16; ++b) {
            if (fits(std::lcm(a, b), a * b)) out.push_back({"", [a, b] { return z_product_module(a, b); }});
        }
    }
    for (int a = 2; a <= 16; ++a) {
        for (int b = 2; b <= 16; ++b) {
            if (fits(a * b, a * b)) {
                out.push_back({"", [a, b] { return self_module(product_ring(make_zmod(a), make_zmod(b))); }});
                out.push_back({"", [a, b] {
                                   return product_module(self_module(make_zmod(a)), self_module(make_zmod(b)),
                                                         ProductMode::product_ring);
                               }});
            }
        }
    }
    for (int n = 2; fits(n, n * n); ++n) {
        out.push_back({"", [n] { return product_module(self_module(make_zmod(n)), self_module(make_zmod(n))); }});
    }
    for (int n = 2; fits(n * n, n * n); ++n) {
        out.push_back({"", [n] {
                           const FiniteRing r = make_zmod(n);
                           return self_module(idealization_ring(r, self_module(r)));
                       }});
    }
    out.push_back({"", [] {
                       const FiniteRing z2 = make_zmod(2);
                       return self_module(idealization_ring(z2, product_module(self_module(z2), self_module(z2))));
                   }});
    for (int n1 : {2, 4}) {
        for (int n2 : {2, 4}) {
            if (n1 % n2 != 0) continue;
            const std::size_t count = ideals_of(make_zmod(n2)).size();
            for (std::size_t j = 0; j < count; ++j) {
                out.push_back({"", [n1, n2, j] {
                                   const FiniteRing r1 = make_zmod(n1), r2 = make_zmod(n2);
                                   return self_module(amalgamation_ring(r1, r2, amalgamation_hom(r1, r2), ideals_of(r2)[j]));
                               }});
            }
        }
    }
    out.push_back({"", [] {
                       return quotient_module(z_product_module(4, 4), span_indices(z_product_module(4, 4), {5})).module;
                   }});
    return out;
}

SuiteReport suite_oracle(const SuiteParams& p, SuiteReport rep) {
    const Index bound = static_cast<Index>(param(p.max_n, 256));
    rep.parameters = {{"max_RM", std::to_string(bound)}};
    run_cases(oracle_cases(bound), p.jobs, [bound](const FiniteModule& m, Partial& out) {
        if (static_cast<std::uint64_t>(m.ring().order()) * m.order() > bound) return;
        for (const auto& n : all_submodules(m).proper_members()) {
            ++out.instances;
            const PropertyReport fast = is_gsdf_absorbing(n);
            if (fast.holds != naive_gsdf(n)) violate(out, n, "optimized and naive gsdf disagree", fast);
        }
    }, rep);
    return rep;
}

struct SuiteEntry {
    const char* id;
    const char* anchor;
    SuiteReport (*run)(const SuiteParams&, SuiteReport);
};

const std::vector<SuiteEntry>& entries() {
    static const std::vector<SuiteEntry> table{
        {"eq-equivalence",
         "N gsdf; each (N :_M r) with rM not in N gsdf; each (N :_R x), x not in N, sdf-absorbing "
         "primary; each (N :_R K), K finitely generated and not in N, sdf-absorbing primary",
         suite_eq},
        {"unit2", "if 2 is a unit, N is gsdf-absorbing if and only if N is classical primary", suite_unit2},
        {"char2", "in characteristic 2 every proper submodule is gsdf-absorbing", suite_char2},
        {"reduced-zero",
         "in a reduced module the zero submodule is gsdf-absorbing if and only if it is sdf-absorbing",
         suite_reduced_zero},
        {"vnr", "over a von Neumann regular ring gsdf-absorbing and sdf-absorbing coincide", suite_vnr},
        {"maximal-prime", "any maximal gsdf-absorbing submodule is prime", suite_maximal_prime},
        {"decomposition", "every proper submodule of a Noetherian module admits a gsdf-absorbing decomposition",
         suite_decomposition},
        {"principal-ideal",
         "for a principal ideal I and proper N in IM, N is gsdf-absorbing in IM if and only if (N :_M I) is "
         "gsdf-absorbing in M",
         suite_principal_ideal},
        {"localization",
         "N gsdf with S^-1 N proper gives S^-1 N gsdf; S^-1 N gsdf with N S-saturated gives N gsdf",
         suite_localization},
        {"epimorphism",
         "for an epimorphism f, f(N) is gsdf when N is gsdf containing ker f, and f^-1(N') is gsdf when N' is",
         suite_epimorphism},
        {"restriction-quotient",
         "N gsdf in M2 gives N meet M1 gsdf in M1; for K in N, N gsdf if and only if N/K gsdf in M/K",
         suite_restriction_quotient},
        {"intersection",
         "gsdf N1, N2 with equal radicals sqrt(N1 :_R x) = sqrt(N2 :_R x) off N1 meet N2 have a gsdf "
         "intersection",
         suite_intersection},
        {"chain-union", "the union of a directed family of gsdf-absorbing submodules is gsdf-absorbing",
         suite_chain_union},
        {"product",
         "N1 x N2 gsdf forces N1, N2 gsdf; N1 x M2 gsdf iff N1 gsdf; M1 x N2 gsdf iff N2 gsdf",
         suite_product},
        {"idealization",
         "I x N sdf-absorbing primary forces I sdf-absorbing primary; I sdf-absorbing primary iff I x M is; "
         "sqrt(I x N) = sqrt(I) x M",
         suite_idealization},
        {"amalgamation", "N1 amalgamated with JM2 is gsdf-absorbing if and only if N1 is gsdf-absorbing",
         suite_amalgamation},
        {"hierarchy", "prime gives primary gives classical primary gives gsdf; sdf gives gsdf", suite_hierarchy},
        {"oracle", "the optimized gsdf checker agrees with the defining triple loop", suite_oracle},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& suite_catalog() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& e : entries()) out.push_back(e.id);
        return out;
    }();
    return ids;
}

SuiteReport run_suite(const std::string& suite_id, const SuiteParams& params) {
    for (const auto& e : entries()) {
        if (suite_id != e.id) continue;
        SuiteReport rep;
        rep.suite_id = e.id;
        rep.anchor = e.anchor;
        const auto start = std::chrono::steady_clock::now();
        rep = e.run(params, std::move(rep));
        rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start);
        rep.parameters.emplace_back("jobs", std::to_string(params.jobs));
        return rep;
    }
    throw Error(ErrorKind::unknown_suite, "unknown suite '" + suite_id + "'");
}

}  // namespace absorb
