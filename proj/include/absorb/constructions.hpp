#pragma once

#include <optional>
#include <string>
#include <vector>

#include "absorb/module.hpp"
#include "absorb/ring.hpp"

namespace absorb {

// Quotients.

/// R/I for a proper ideal I.
FiniteRing quotient_ring(const FiniteRing& r, const Ideal& i);

struct QuotientResult {
    FiniteModule module;
    ModuleHom projection;
};

/// M/K with the induced action; the projection has kernel K.
QuotientResult quotient_module(const FiniteModule& m, const Submodule& k);

// Products.

enum class ProductMode { same_ring, product_ring };

FiniteModule product_module(const FiniteModule& m1, const FiniteModule& m2, ProductMode mode);

/// N1 x N2 inside a product module built from N1's and N2's modules.
Submodule product_submodule(const FiniteModule& product, const Submodule& n1,
                            const Submodule& n2);

/// The two factor modules of a product module.
std::pair<FiniteModule, FiniteModule> product_factors(const FiniteModule& product);

// Localization.

/// A multiplicatively closed subset containing 1.
class MultiplicativeSet {
public:
    /// Multiplicative closure of the generators, with 1 adjoined.
    static MultiplicativeSet generated_by(const FiniteRing& r, const std::vector<RingElt>& gens);

    const FiniteRing& ring() const { return ring_; }
    /// Sorted element indices.
    const std::vector<Index>& carrier() const { return carrier_; }
    bool contains(Index a) const;
    /// "mset[...]" listing the full carrier.
    std::string render() const;

private:
    MultiplicativeSet(FiniteRing r, std::vector<Index> carrier);

    FiniteRing ring_;
    std::vector<Index> carrier_;
};

/// Every multiplicatively closed subset of R (1 included). Exponential in |R|;
/// intended for small rings.
std::vector<MultiplicativeSet> all_multiplicative_sets(const FiniteRing& r);

/// {x : sx in N for some s in S}.
Submodule saturate(const Submodule& n, const MultiplicativeSet& s);
bool is_saturated(const Submodule& n, const MultiplicativeSet& s);

struct LocalizationResult {
    FiniteRing localized_ring;  // eR with identity e
    RingHom map;                // r -> re, onto eR
    RingElt idempotent;         // e, in the original ring
};

/// Realizes S^-1 R as eR, e = stable_idempotent(prod S).
/// Throws Error(degenerate_localization) when e = 0.
LocalizationResult localize_ring(const FiniteRing& r, const MultiplicativeSet& s);

struct LocalizedModule {
    LocalizationResult ring;
    FiniteModule module;     // eM over eR
    std::vector<Index> map;  // x -> ex, as indices of `module`
};

LocalizedModule localize_module(const FiniteModule& m, const MultiplicativeSet& s);
/// S^-1 N realized as eN inside eM.
Submodule localize_submodule(const LocalizedModule& loc, const Submodule& n);

// Idealization.

/// R x M with (u,x)(v,y) = (uv, uy+vx).
FiniteRing idealization_ring(const FiniteRing& r, const FiniteModule& m);

struct IdealizationParts {
    FiniteRing base;
    FiniteModule module;
};
std::optional<IdealizationParts> idealization_parts(const FiniteRing& r);

/// A subset of a ring, possibly not an ideal.
struct RingSubset {
    FiniteRing ring;
    std::vector<Index> carrier;  // sorted
    bool is_ideal = false;
    std::vector<bool> membership;

    bool contains(Index a) const { return membership[a]; }
    bool is_proper() const { return carrier.size() < ring.order(); }
    /// The subset as an ideal; throws when it is not one.
    Ideal as_ideal() const;
};

/// I x N inside R x M; is_ideal holds iff IM is contained in N.
RingSubset idealization_subset(const FiniteRing& idealized, const Ideal& i, const Submodule& n);
/// Compares sqrt(I x N) with sqrt(I) x M. Throws when I x N is not an ideal.
bool idealization_radical_check(const FiniteRing& idealized, const Ideal& i, const Submodule& n);

// Amalgamation.

/// {(u, f(u)+j) : u in R1, j in J} as a subring of R1 x R2.
FiniteRing amalgamation_ring(const FiniteRing& r1, const FiniteRing& r2, const RingHom& f,
                             const Ideal& j);

struct AmalgamationParts {
    FiniteRing r1;
    FiniteRing r2;
    RingHom f;
    Ideal j;
};
std::optional<AmalgamationParts> amalgamation_parts(const FiniteRing& r);

/// M1 amalgamated with J*M2 along phi: M1 -> M2, over amalgamation_ring(R1,R2,f,J).
/// `phi` lists phi(x1) for each index of M1 and must be R1-linear via f.
FiniteModule amalgamated_module(const FiniteModule& m1, const FiniteModule& m2, const RingHom& f,
                                const std::vector<Index>& phi, const Ideal& j);

struct AmalgamatedModuleParts {
    FiniteModule m1;
    FiniteModule m2;
    std::vector<Index> phi;
    Submodule jm2;
};
std::optional<AmalgamatedModuleParts> amalgamated_module_parts(const FiniteModule& m);

/// Element (x1, phi(x1)+x2) by its coordinates; x2 must lie in J*M2.
Index amalgamated_element(const FiniteModule& m, Index x1, Index x2);

/// {(x1, phi(x1)+x2) : x1 in N1, x2 in J*M2}.
Submodule amalg_submodule_N1(const FiniteModule& amalgamated, const Submodule& n1);
/// {(x1, phi(x1)+x2) : phi(x1)+x2 in N2}.
Submodule amalg_submodule_N2bar(const FiniteModule& amalgamated, const Submodule& n2);

// Scalars.

/// M2 as an R1-module through f: r.x = f(r)x.
FiniteModule restrict_scalars(const FiniteModule& m2, const RingHom& f);

}  // namespace absorb
