#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace absorb {

using Index = std::uint32_t;

namespace detail {
class RingNode;
}

enum class RingKind {
    zmod,
    product,
    quotient,
    idealization,
    amalgamation,
    idempotent_subring,
};

/// Structural element syntax: an integer or a pair of literals.
struct ElementLiteral {
    long long scalar = 0;
    std::vector<ElementLiteral> parts;  // empty for a scalar, two entries for a pair

    ElementLiteral() = default;
    ElementLiteral(long long value) : scalar(value) {}  // NOLINT(google-explicit-constructor)
    ElementLiteral(ElementLiteral first, ElementLiteral second)
        : parts{std::move(first), std::move(second)} {}

    bool is_pair() const { return parts.size() == 2; }
    std::string render() const;

    friend bool operator==(const ElementLiteral&, const ElementLiteral&) = default;
};

/// An element of a finite ring, identified by its canonical index.
/// The owning ring must outlive the element.
struct RingElt {
    const detail::RingNode* owner = nullptr;
    Index index = 0;

    friend bool operator==(const RingElt&, const RingElt&) = default;
};

/// Immutable handle to a finite commutative ring with identity.
///
/// Elements are numbered 0..order()-1 by a mixed-radix encoding over the
/// constructor tree; index 0 is always the additive identity. Copies share
/// the underlying structure.
class FiniteRing {
public:
    explicit FiniteRing(std::shared_ptr<const detail::RingNode> node);

    Index order() const;
    RingKind kind() const;

    RingElt zero() const;
    RingElt one() const;
    RingElt element(Index index) const;
    /// Element from its structural literal, e.g. {2, 1} in Z6 x Z6.
    RingElt value(const ElementLiteral& literal) const;
    /// Image of the integer n under Z -> R.
    RingElt from_int(long long n) const;

    RingElt add(RingElt a, RingElt b) const;
    RingElt sub(RingElt a, RingElt b) const;
    RingElt neg(RingElt a) const;
    RingElt mul(RingElt a, RingElt b) const;
    /// a^k for k >= 1 (k = 0 gives one()).
    RingElt pow(RingElt a, std::uint64_t k) const;

    bool owns(RingElt a) const;

    /// DSL syntax of an element, e.g. "5" or "(2,1)".
    std::string render(RingElt a) const;
    std::string render(Index a) const;
    /// Canonical DSL expression that rebuilds this ring.
    const std::string& key() const;
    /// Human-readable name using the usual glyphs.
    std::string describe() const;

    bool same_as(const FiniteRing& other) const;

    const detail::RingNode& node() const { return *node_; }
    const std::shared_ptr<const detail::RingNode>& node_ptr() const { return node_; }

private:
    void check_owner(RingElt a) const;

    std::shared_ptr<const detail::RingNode> node_;
};

/// Ring homomorphism given by its index table; verified exhaustively on
/// construction.
class RingHom {
public:
    RingHom(FiniteRing domain, FiniteRing codomain, std::vector<Index> table,
            std::string label = {});

    const FiniteRing& domain() const { return domain_; }
    const FiniteRing& codomain() const { return codomain_; }
    const std::vector<Index>& table() const { return table_; }
    /// "id", "redmap" or a "table[...]" rendering.
    const std::string& label() const { return label_; }

    RingElt operator()(RingElt a) const;
    Index apply(Index a) const { return table_[a]; }

private:
    FiniteRing domain_;
    FiniteRing codomain_;
    std::vector<Index> table_;
    std::string label_;
};

struct PowerOrbit {
    /// Smallest p >= 1 with t^p = t^(p+period).
    std::uint64_t preperiod = 0;
    std::uint64_t period = 0;
    /// t^1, ..., t^(preperiod+period-1), all distinct.
    std::vector<RingElt> orbit;
};

FiniteRing make_zmod(long long n);
FiniteRing product_ring(const FiniteRing& left, const FiniteRing& right);

RingHom identity_hom(const FiniteRing& r);
/// Canonical reduction Z_m -> Z_n; requires n | m.
RingHom reduction_hom(const FiniteRing& from, const FiniteRing& to);

std::vector<RingElt> units(const FiniteRing& r);
bool is_unit(const FiniteRing& r, RingElt a);
bool is_idempotent(const FiniteRing& r, RingElt a);
/// Additive order of 1.
std::uint64_t characteristic(const FiniteRing& r);

PowerOrbit power_orbit(const FiniteRing& r, RingElt t);
/// The unique idempotent among the powers t^k, k >= 1.
RingElt stable_idempotent(const FiniteRing& r, RingElt t);

/// Exhaustive axiom check for order <= 64, otherwise 1000 seeded random
/// triples. Throws Error(construction) on failure.
void verify_ring_axioms(const FiniteRing& r);

}  // namespace absorb
