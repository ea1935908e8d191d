#pragma once

#include <string>
#include <vector>

#include "absorb/detail/nodes.hpp"

namespace absorb::detail {

class ZModNode final : public RingNode {
public:
    explicit ZModNode(Index n);

    RingKind kind() const override { return RingKind::zmod; }
    Index order() const override { return n_; }
    Index one() const override { return 1; }
    Index add(Index a, Index b) const override {
        const std::uint64_t s = std::uint64_t(a) + b;
        return static_cast<Index>(s >= n_ ? s - n_ : s);
    }
    Index neg(Index a) const override { return a == 0 ? 0 : n_ - a; }
    Index mul(Index a, Index b) const override {
        return static_cast<Index>((std::uint64_t(a) * b) % n_);
    }
    std::string render(Index a) const override { return std::to_string(a); }
    Index encode(const ElementLiteral& lit) const override;
    std::string describe() const override { return "Z" + std::to_string(n_); }

    Index modulus() const { return n_; }

private:
    Index n_;
};

class ProductRingNode final : public RingNode {
public:
    ProductRingNode(FiniteRing left, FiniteRing right);

    RingKind kind() const override { return RingKind::product; }
    Index order() const override;
    Index one() const override;
    Index add(Index a, Index b) const override;
    Index neg(Index a) const override;
    Index mul(Index a, Index b) const override;
    std::string render(Index a) const override;
    Index encode(const ElementLiteral& lit) const override;
    std::string describe() const override;

    const FiniteRing& left() const { return left_; }
    const FiniteRing& right() const { return right_; }
    Index first(Index a) const { return a / right_.order(); }
    Index second(Index a) const { return a % right_.order(); }
    Index compose(Index a, Index b) const { return a * right_.order() + b; }

private:
    FiniteRing left_;
    FiniteRing right_;
};

class QuotientRingNode final : public RingNode {
public:
    QuotientRingNode(FiniteRing base, const Ideal& ideal);

    RingKind kind() const override { return RingKind::quotient; }
    Index order() const override { return static_cast<Index>(reps_.size()); }
    Index one() const override;
    Index add(Index a, Index b) const override;
    Index neg(Index a) const override;
    Index mul(Index a, Index b) const override;
    std::string render(Index a) const override;
    Index encode(const ElementLiteral& lit) const override;
    std::string describe() const override;

    const FiniteRing& base() const { return base_; }
    Index project(Index base_element) const { return coset_of_[base_element]; }
    Index representative(Index coset) const { return reps_[coset]; }

private:
    FiniteRing base_;
    std::string modulus_key_;
    std::vector<Index> reps_;
    std::vector<Index> coset_of_;
};

class IdempotentSubringNode final : public RingNode {
public:
    IdempotentSubringNode(FiniteRing base, Index idempotent, std::string key);

    RingKind kind() const override { return RingKind::idempotent_subring; }
    Index order() const override { return carrier_.size(); }
    Index one() const override;
    Index add(Index a, Index b) const override;
    Index neg(Index a) const override;
    Index mul(Index a, Index b) const override;
    std::string render(Index a) const override;
    Index encode(const ElementLiteral& lit) const override;
    std::string describe() const override;

    const FiniteRing& base() const { return base_; }
    Index idempotent() const { return e_; }
    const SubsetIndex& carrier() const { return carrier_; }

private:
    FiniteRing base_;
    Index e_;
    SubsetIndex carrier_;
};

}  // namespace absorb::detail
