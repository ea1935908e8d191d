#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "absorb/module.hpp"
#include "absorb/predicates.hpp"

namespace absorb {

/// Default bound on |M| for lattice enumeration; ABSORB_LATTICE_BOUND overrides it.
inline constexpr Index kDefaultLatticeBound = 2048;
Index lattice_bound();

/// Every submodule of M, ordered by size and then by carrier.
class SubmoduleLattice {
public:
    explicit SubmoduleLattice(FiniteModule m, std::vector<Submodule> members);

    const FiniteModule& module() const { return module_; }
    const std::vector<Submodule>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    /// members()[a] is contained in members()[b].
    bool leq(std::size_t a, std::size_t b) const { return leq_[a * members_.size() + b]; }
    std::optional<std::size_t> index_of(const Submodule& n) const;
    std::vector<Submodule> proper_members() const;

private:
    FiniteModule module_;
    std::vector<Submodule> members_;
    std::vector<bool> leq_;
};

/// Seeds with the cyclic submodules Rx and closes under pairwise sums.
/// Throws Error(size_bound) when |M| exceeds lattice_bound().
SubmoduleLattice all_submodules(const FiniteModule& m);

using SubmodulePredicate = std::function<bool(const Submodule&)>;

/// The proper members satisfying `pred`, in lattice order.
std::vector<Submodule> filter_by(const SubmoduleLattice& lattice, const SubmodulePredicate& pred);
/// Members with no strict superset inside `family`.
std::vector<Submodule> maximal_members(const std::vector<Submodule>& family);
/// Maximal chains (under inclusion) of `family`, each listed bottom to top.
std::vector<std::vector<Submodule>> maximal_chains(const std::vector<Submodule>& family);

/// The gsdf members of the lattice containing N. Throws for N = M.
std::vector<Submodule> gsdf_overmodules(const Submodule& n, const SubmoduleLattice& lattice);
/// N equals the intersection of the gsdf submodules containing it.
bool decomposition_check(const Submodule& n, const SubmoduleLattice& lattice);

/// One instance of a family: a submodule under test plus the submodules it
/// was built from (e.g. the two factors of an intersection).
struct FamilyInstance {
    std::string description;
    Submodule submodule;
    std::vector<Submodule> parts;
};

/// A finite, deterministic stream of instances. `visit` is called in order
/// until it returns false.
struct FamilySpec {
    std::string name;
    std::function<void(const std::function<bool(const FamilyInstance&)>& visit)> generate;
};

/// Returns a failing report when the instance violates the hypothesis.
using Hypothesis = std::function<std::optional<PropertyReport>(const FamilyInstance&)>;

struct Counterexample {
    std::size_t index = 0;
    std::string description;
    PropertyReport report;
    std::vector<std::string> parts;
};

std::optional<Counterexample> search_counterexample(const FamilySpec& family,
                                                   const Hypothesis& hypothesis);

/// N1 ∩ N2 for every pair of distinct gsdf submodules of the Z-module Z_n, 2 <= n <= max_n.
FamilySpec zn_gsdf_intersections(int max_n);
/// N1 x N2 for gsdf N1 in Z_a, N2 in Z_b (2 <= a, b <= max_ab) inside the Z-module Z_a x Z_b.
/// With `second_full`, N2 is the whole of Z_b instead.
FamilySpec zab_gsdf_products(int max_ab, bool second_full);

/// Hypothesis "the instance submodule is gsdf".
std::optional<PropertyReport> expect_gsdf(const FamilyInstance& inst);
/// Hypothesis "the instance is gsdf exactly when its first part is".
std::optional<PropertyReport> expect_gsdf_iff_first_part(const FamilyInstance& inst);

}  // namespace absorb
