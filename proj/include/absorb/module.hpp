#pragma once

#include <memory>
#include <string>
#include <vector>

#include "absorb/ring.hpp"

namespace absorb {

namespace detail {
class ModuleNode;
}

enum class ModuleKind {
    cyclic,
    ring_self,
    product,
    product_over_product_ring,
    quotient,
    amalgamated,
    restricted,
    restricted_scalars,
    submodule_as_module,
};

struct ModElt {
    const detail::ModuleNode* owner = nullptr;
    Index index = 0;

    friend bool operator==(const ModElt&, const ModElt&) = default;
};

/// Immutable handle to a finite unital module over a FiniteRing.
class FiniteModule {
public:
    explicit FiniteModule(std::shared_ptr<const detail::ModuleNode> node);

    FiniteRing ring() const;
    Index order() const;
    ModuleKind kind() const;

    ModElt zero() const;
    ModElt element(Index index) const;
    ModElt value(const ElementLiteral& literal) const;
    ModElt add(ModElt a, ModElt b) const;
    ModElt sub(ModElt a, ModElt b) const;
    ModElt neg(ModElt a) const;
    ModElt act(RingElt r, ModElt x) const;

    bool owns(ModElt x) const;

    /// Least e >= 1 with e*x = 0 for every x.
    std::uint64_t exponent() const;

    std::string render(ModElt x) const;
    std::string render(Index x) const;
    const std::string& key() const;
    std::string describe() const;

    bool same_as(const FiniteModule& other) const;

    const detail::ModuleNode& node() const { return *node_; }
    const std::shared_ptr<const detail::ModuleNode>& node_ptr() const { return node_; }

private:
    void check_owner(ModElt x) const;

    std::shared_ptr<const detail::ModuleNode> node_;
};

/// A submodule stored as a sorted carrier plus a membership bitmap.
class Submodule {
public:
    /// Validates closure under addition and scalar action.
    static Submodule from_carrier(const FiniteModule& m, std::vector<Index> carrier);
    /// Skips validation; the caller guarantees closure.
    static Submodule trusted(const FiniteModule& m, std::vector<Index> carrier);

    const FiniteModule& module() const { return module_; }
    const std::vector<Index>& carrier() const { return carrier_; }
    const std::vector<bool>& membership() const { return member_; }
    /// Greedy generating list in canonical index order.
    const std::vector<Index>& generators() const;

    Index size() const { return static_cast<Index>(carrier_.size()); }
    bool contains(Index x) const { return member_[x]; }
    bool contains(ModElt x) const;
    bool is_proper() const { return carrier_.size() < module_.order(); }
    bool is_zero() const { return carrier_.size() == 1; }
    bool is_subset_of(const Submodule& other) const;

    /// e.g. "gen[6]", "zero" or "full".
    std::string render() const;

    friend bool operator==(const Submodule& a, const Submodule& b);

private:
    Submodule(FiniteModule m, std::vector<Index> carrier);

    FiniteModule module_;
    std::vector<Index> carrier_;
    std::vector<bool> member_;
    mutable std::shared_ptr<const std::vector<Index>> generators_;
};

/// An ideal is a submodule of the ring acting on itself.
using Ideal = Submodule;

/// R-linear map between modules over the same ring; verified on construction.
class ModuleHom {
public:
    ModuleHom(FiniteModule domain, FiniteModule codomain, std::vector<Index> table);

    const FiniteModule& domain() const { return domain_; }
    const FiniteModule& codomain() const { return codomain_; }
    const std::vector<Index>& table() const { return table_; }
    Index apply(Index x) const { return table_[x]; }

    Submodule image(const Submodule& n) const;
    Submodule preimage(const Submodule& n) const;
    Submodule kernel() const;
    bool is_surjective() const;

private:
    FiniteModule domain_;
    FiniteModule codomain_;
    std::vector<Index> table_;
};

// Module constructors.
FiniteModule self_module(const FiniteRing& r);
/// Z_d with the action of Z_n; requires r = Z_n and d | n.
FiniteModule cyclic_module(const FiniteRing& r, long long d);
/// The Z-module Z_n, with Z acting through Z_n.
FiniteModule z_module(long long n);
/// Same ring, componentwise operations.
FiniteModule product_module(const FiniteModule& m1, const FiniteModule& m2);
/// (r1,r2)(x1,x2) = (r1x1, r2x2) over the product ring.
FiniteModule product_module_over_product_ring(const FiniteModule& m1, const FiniteModule& m2);
/// The Z-module Z_a x Z_b, with Z acting through Z_lcm(a,b).
FiniteModule z_product_module(long long a, long long b);
/// A submodule regarded as a module in its own right.
FiniteModule submodule_as_module(const Submodule& k);
/// N (a submodule of K's module, contained in K) as a submodule of
/// submodule_as_module(K).
Submodule restrict_to(const FiniteModule& k_module, const Submodule& n);
/// A submodule of submodule_as_module(K) carried back into K's module.
Submodule extend_from(const Submodule& n);

// Ideals.
Ideal zero_ideal(const FiniteRing& r);
Ideal unit_ideal(const FiniteRing& r);
Ideal principal_ideal(const FiniteRing& r, RingElt g);
Ideal ideal_from_generators(const FiniteRing& r, const std::vector<RingElt>& gens);
bool is_ideal_of(const Ideal& i, const FiniteRing& r);
bool contains(const Ideal& i, RingElt a);

// Lattice operations and colons.
Submodule zero_submodule(const FiniteModule& m);
Submodule full_submodule(const FiniteModule& m);
Submodule span(const FiniteModule& m, const std::vector<ModElt>& gens);
Submodule span_indices(const FiniteModule& m, const std::vector<Index>& gens);
Submodule cyclic_submodule(const FiniteModule& m, Index x);
Submodule sum_submodules(const Submodule& a, const Submodule& b);
Submodule intersect_submodules(const Submodule& a, const Submodule& b);
/// r*N for a scalar r.
Submodule scale_submodule(const Submodule& n, RingElt r);
/// I*M, the span of all products i*x.
Submodule ideal_times_module(const Ideal& i, const FiniteModule& m);

/// (N :_R x) = {r : rx in N}; Ann(x) when N = 0.
Ideal colon_ideal(const Submodule& n, ModElt x);
Ideal annihilator(const FiniteModule& m, ModElt x);
/// (N :_M r) = {x : rx in N}.
Submodule colon_submodule(const Submodule& n, RingElt r);
/// (N :_R M) = {r : rM in N}.
Ideal colon_ideal_global(const Submodule& n);
/// (N :_R K) = {r : rK in N}.
Ideal colon_ideal_of(const Submodule& n, const Submodule& k);
/// {u : u^n in I for some n >= 1}.
Ideal radical(const Ideal& i);
/// Intersection of the prime submodules containing N; M when there are none.
Submodule m_radical(const Submodule& n);

/// True when u^2 x = 0 implies ux = 0.
bool is_reduced_module(const FiniteModule& m);

/// Exhaustive action-axiom check for |R|*|M| <= 4096, sampled above.
void verify_module_axioms(const FiniteModule& m);

}  // namespace absorb
