#include "absorb/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "absorb/constructions.hpp"
#include "absorb/error.hpp"

namespace absorb {

Index lattice_bound() {
    if (const char* env = std::getenv("ABSORB_LATTICE_BOUND")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<Index>(v);
    }
    return kDefaultLatticeBound;
}

SubmoduleLattice::SubmoduleLattice(FiniteModule m, std::vector<Submodule> members)
    : module_(std::move(m)), members_(std::move(members)) {
    const std::size_t n = members_.size();
    leq_.assign(n * n, false);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            leq_[a * n + b] = members_[a].size() <= members_[b].size() &&
                              members_[a].is_subset_of(members_[b]);
        }
    }
}

std::optional<std::size_t> SubmoduleLattice::index_of(const Submodule& n) const {
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i] == n) return i;
    }
    return std::nullopt;
}

std::vector<Submodule> SubmoduleLattice::proper_members() const {
    std::vector<Submodule> out;
    for (const auto& s : members_) {
        if (s.is_proper()) out.push_back(s);
    }
    return out;
}

SubmoduleLattice all_submodules(const FiniteModule& m) {
    const Index bound = lattice_bound();
    if (m.order() > bound) {
        throw Error(ErrorKind::size_bound,
                    m.key() + " has " + std::to_string(m.order()) +
                        " elements, above the lattice bound " + std::to_string(bound));
    }
    std::set<std::vector<Index>> seen;
    std::vector<Submodule> members;
    auto add = [&](Submodule s) {
        if (seen.insert(s.carrier()).second) {
            members.push_back(std::move(s));
            return true;
        }
        return false;
    };
    add(zero_submodule(m));
    for (Index x = 0; x < m.order(); ++x) add(cyclic_submodule(m, x));
    // Every submodule is a sum of cyclic ones, so closing under pairwise
    // sums reaches the whole lattice.
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            add(sum_submodules(members[i], members[j]));
        }
    }
    std::sort(members.begin(), members.end(), [](const Submodule& a, const Submodule& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.carrier() < b.carrier();
    });
    return SubmoduleLattice(m, std::move(members));
}

std::vector<Submodule> filter_by(const SubmoduleLattice& lattice, const SubmodulePredicate& pred) {
    std::vector<Submodule> out;
    for (const auto& s : lattice.members()) {
        if (s.is_proper() && pred(s)) out.push_back(s);
    }
    return out;
}

std::vector<Submodule> maximal_members(const std::vector<Submodule>& family) {
    std::vector<Submodule> out;
    for (const auto& a : family) {
        const bool dominated = std::any_of(family.begin(), family.end(), [&](const Submodule& b) {
            return b.size() > a.size() && a.is_subset_of(b);
        });
        if (!dominated) out.push_back(a);
    }
    return out;
}

std::vector<std::vector<Submodule>> maximal_chains(const std::vector<Submodule>& family) {
    const std::size_t n = family.size();
    // covers[a]: members b strictly above a with nothing of the family in between.
    std::vector<std::vector<std::size_t>> covers(n);
    std::vector<bool> has_lower(n, false);
    auto below = [&](std::size_t a, std::size_t b) {
        return family[a].size() < family[b].size() && family[a].is_subset_of(family[b]);
    };
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (!below(a, b)) continue;
            bool direct = true;
            for (std::size_t c = 0; c < n && direct; ++c) {
                if (below(a, c) && below(c, b)) direct = false;
            }
            if (direct) {
                covers[a].push_back(b);
                has_lower[b] = true;
            }
        }
    }
    std::vector<std::vector<Submodule>> out;
    std::vector<std::size_t> path;
    std::function<void(std::size_t)> walk = [&](std::size_t a) {
        path.push_back(a);
        if (covers[a].empty()) {
            std::vector<Submodule> chain;
            for (std::size_t i : path) chain.push_back(family[i]);
            out.push_back(std::move(chain));
        }
        for (std::size_t b : covers[a]) walk(b);
        path.pop_back();
    };
    for (std::size_t a = 0; a < n; ++a) {
        if (!has_lower[a]) walk(a);
    }
    return out;
}

std::vector<Submodule> gsdf_overmodules(const Submodule& n, const SubmoduleLattice& lattice) {
    if (!n.is_proper()) throw Error(ErrorKind::not_proper, "decomposition of the full module");
    std::vector<Submodule> out;
    for (const auto& q : lattice.members()) {
        if (q.is_proper() && n.is_subset_of(q) && is_gsdf_absorbing(q).holds) out.push_back(q);
    }
    return out;
}

bool decomposition_check(const Submodule& n, const SubmoduleLattice& lattice) {
    const auto over = gsdf_overmodules(n, lattice);
    if (over.empty()) return false;
    Submodule meet = over.front();
    for (const auto& q : over) meet = intersect_submodules(meet, q);
    return meet == n;
}

Submodule m_radical(const Submodule& n) {
    if (!n.is_proper()) throw Error(ErrorKind::not_proper, "M-radical of the full module");
    const SubmoduleLattice lattice = all_submodules(n.module());
    Submodule meet = full_submodule(n.module());
    for (const auto& p : lattice.members()) {
        if (p.is_proper() && n.is_subset_of(p) && is_prime_submodule(p).holds) {
            meet = intersect_submodules(meet, p);
        }
    }
    return meet;
}

// ---------------------------------------------------------------------------
// Families and counterexample search

std::optional<Counterexample> search_counterexample(const FamilySpec& family,
                                                   const Hypothesis& hypothesis) {
    std::optional<Counterexample> found;
    std::size_t index = 0;
    family.generate([&](const FamilyInstance& inst) {
        if (auto report = hypothesis(inst)) {
            std::vector<std::string> parts;
            for (const auto& p : inst.parts) parts.push_back(p.render());
            found = Counterexample{index, inst.description, *report, std::move(parts)};
            return false;
        }
        ++index;
        return true;
    });
    return found;
}

FamilySpec zn_gsdf_intersections(int max_n) {
    FamilySpec spec;
    spec.name = "zn-gsdf-intersections(" + std::to_string(max_n) + ")";
    spec.generate = [max_n](const std::function<bool(const FamilyInstance&)>& visit) {
        for (int n = 2; n <= max_n; ++n) {
            const FiniteModule m = z_module(n);
            const auto gsdf = filter_by(all_submodules(m), [](const Submodule& s) {
                return is_gsdf_absorbing(s).holds;
            });
            for (std::size_t i = 0; i < gsdf.size(); ++i) {
                for (std::size_t j = i + 1; j < gsdf.size(); ++j) {
                    FamilyInstance inst{"Z" + std::to_string(n) + ": " + gsdf[i].render() + " ∩ " +
                                            gsdf[j].render(),
                                        intersect_submodules(gsdf[i], gsdf[j]),
                                        {gsdf[i], gsdf[j]}};
                    if (!inst.submodule.is_proper()) continue;
                    if (!visit(inst)) return;
                }
            }
        }
    };
    return spec;
}

FamilySpec zab_gsdf_products(int max_ab, bool second_full) {
    FamilySpec spec;
    spec.name = std::string(second_full ? "zab-gsdf-times-full(" : "zab-gsdf-products(") +
                std::to_string(max_ab) + ")";
    spec.generate = [max_ab, second_full](const std::function<bool(const FamilyInstance&)>& visit) {
        for (int a = 2; a <= max_ab; ++a) {
            for (int b = 2; b <= max_ab; ++b) {
                const FiniteModule p = z_product_module(a, b);
                const auto [m1, m2] = product_factors(p);
                const auto gsdf1 = filter_by(all_submodules(m1), [](const Submodule& s) {
                    return is_gsdf_absorbing(s).holds;
                });
                std::vector<Submodule> seconds;
                if (second_full) {
                    seconds.push_back(full_submodule(m2));
                } else {
                    seconds = filter_by(all_submodules(m2), [](const Submodule& s) {
                        return is_gsdf_absorbing(s).holds;
                    });
                }
                for (const auto& n1 : gsdf1) {
                    for (const auto& n2 : seconds) {
                        FamilyInstance inst{"Z" + std::to_string(a) + " x Z" + std::to_string(b) +
                                                ": " + n1.render() + " x " + n2.render(),
                                            product_submodule(p, n1, n2),
                                            {n1, n2}};
                        if (!visit(inst)) return;
                    }
                }
            }
        }
    };
    return spec;
}

std::optional<PropertyReport> expect_gsdf(const FamilyInstance& inst) {
    PropertyReport r = is_gsdf_absorbing(inst.submodule);
    if (r.holds) return std::nullopt;
    return r;
}

std::optional<PropertyReport> expect_gsdf_iff_first_part(const FamilyInstance& inst) {
    PropertyReport whole = is_gsdf_absorbing(inst.submodule);
    PropertyReport part = is_gsdf_absorbing(inst.parts.at(0));
    if (whole.holds == part.holds) return std::nullopt;
    return whole.holds ? part : whole;
}

}  // namespace absorb
