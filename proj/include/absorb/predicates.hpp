#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "absorb/constructions.hpp"
#include "absorb/module.hpp"
#include "absorb/ring.hpp"

namespace absorb {

enum class PropertyKind {
    gsdf,
    sdf_submodule,
    primary,
    classical_primary,
    prime,
    sdf_ideal,
    sdf_primary_ideal,
};

/// CLI spelling: gsdf, sdf, primary, cprimary, prime, sdfideal, sdfprimary.
const char* to_string(PropertyKind p);
std::optional<PropertyKind> parse_property(const std::string& name);

/// A failing tuple. Ideal predicates leave x empty; primary and prime leave v empty.
/// When x is empty, u and v are ring elements of the ideal's ring.
struct Witness {
    Index u = 0;
    std::optional<Index> v;
    std::optional<Index> x;
    /// Number of powers examined for the existential k (0 when k is not involved).
    std::uint64_t k_bound = 0;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct PropertyReport {
    PropertyKind property = PropertyKind::gsdf;
    bool holds = true;
    std::optional<Witness> witness;
    /// Pairs (or single scalars) examined over all distinct colon ideals.
    std::uint64_t checked_count = 0;
};

struct PowerHit {
    bool found = false;
    std::optional<std::uint64_t> k;  // smallest k >= 1 with t^k x in N
};

/// Whether t^k x lies in N for some k >= 1, searching one power cycle.
PowerHit exists_power_in(RingElt t, ModElt x, const Submodule& n);

PropertyReport is_gsdf_absorbing(const Submodule& n);
PropertyReport is_sdf_absorbing_submodule(const Submodule& n);
PropertyReport is_primary_submodule(const Submodule& n);
PropertyReport is_classical_primary(const Submodule& n);
PropertyReport is_prime_submodule(const Submodule& n);
PropertyReport is_sdf_absorbing_ideal(const Ideal& i);
/// Default quantifies over all u, v; restrict_nonzero skips u = 0 and v = 0.
PropertyReport is_sdf_absorbing_primary_ideal(const Ideal& i, bool restrict_nonzero = false);

/// Dispatch by kind. Ideal kinds require a submodule of a ring acting on itself.
PropertyReport check_property(PropertyKind kind, const Submodule& n, bool restrict_nonzero = false);

/// sdf-primary condition on an arbitrary subset of a ring (not necessarily
/// an ideal): u^2-v^2 in S implies u-v in S or some (u+v)^k in S.
PropertyReport sdf_primary_setwise(const RingSubset& s, bool restrict_nonzero = false);

/// True when the tuple violates the defining implication of `kind` for N.
/// Evaluated directly from the ring and module operations.
bool replay_violates(PropertyKind kind, const Submodule& n, const Witness& w,
                     bool restrict_nonzero = false);
bool replay_violates_setwise(const RingSubset& s, const Witness& w);

}  // namespace absorb
