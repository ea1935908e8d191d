#pragma once

#include <string>
#include <vector>

#include "absorb/detail/nodes.hpp"

namespace absorb::detail {

/// Z_d acted on by Z_n (d | n): r.x = r*x mod d.
class CyclicModuleNode final : public ModuleNode {
public:
    CyclicModuleNode(FiniteRing ring, Index d);

    ModuleKind kind() const override { return ModuleKind::cyclic; }
    FiniteRing ring() const override { return ring_; }
    Index order() const override { return d_; }
    Index add(Index a, Index b) const override {
        const std::uint64_t s = std::uint64_t(a) + b;
        return static_cast<Index>(s >= d_ ? s - d_ : s);
    }
    Index neg(Index a) const override { return a == 0 ? 0 : d_ - a; }
    Index act(Index r, Index x) const override {
        return static_cast<Index>((std::uint64_t(r % d_) * x) % d_);
    }
    std::string render(Index x) const override { return std::to_string(x); }
    Index encode(const ElementLiteral& lit) const override;
    std::string describe() const override;

private:
    FiniteRing ring_;
    Index d_;
};

/// R acting on itself. Held by its ring node, so it keeps only a raw
/// back-pointer.
class SelfModuleNode final : public ModuleNode {
public:
    explicit SelfModuleNode(const RingNode* ring);

    ModuleKind kind() const override { return ModuleKind::ring_self; }
    FiniteRing ring() const override;
    Index order() const override { return ring_->order(); }
    Index add(Index a, Index b) const override { return ring_->add(a, b); }
    Index neg(Index a) const override { return ring_->neg(a); }
    Index act(Index r, Index x) const override { return ring_->mul(r, x); }
    std::string render(Index x) const override { return ring_->render(x); }
    Index encode(const ElementLiteral& lit) const override { return ring_->encode(lit); }
    std::string describe() const override;

private:
    const RingNode* ring_;
};

/// Shared mixed-radix encoding for the two product module flavours.
class PairModuleBase : public ModuleNode {
public:
    PairModuleBase(FiniteModule m1, FiniteModule m2);

    Index order() const override { return m1_.order() * m2_.order(); }
    Index add(Index a, Index b) const override;
    Index neg(Index a) const override;
    std::string render(Index x) const override;
    Index encode(const ElementLiteral& lit) const override;

    const FiniteModule& first_module() const { return m1_; }
    const FiniteModule& second_module() const { return m2_; }
    Index first(Index x) const { return x / m2_.order(); }
    Index second(Index x) const { return x % m2_.order(); }
    Index compose(Index a, Index b) const { return a * m2_.order() + b; }

protected:
    FiniteModule m1_;
    FiniteModule m2_;
};

class ProductModuleNode final : public PairModuleBase {
public:
    ProductModuleNode(FiniteModule m1, FiniteModule m2);

    ModuleKind kind() const override { return ModuleKind::product; }
    FiniteRing ring() const override { return m1_.ring(); }
    Index act(Index r, Index x) const override;
    std::string describe() const override;
};

class ProductRingModuleNode final : public PairModuleBase {
public:
    ProductRingModuleNode(FiniteModule m1, FiniteModule m2, FiniteRing product);

    ModuleKind kind() const override { return ModuleKind::product_over_product_ring; }
    FiniteRing ring() const override { return ring_; }
    Index act(Index r, Index x) const override;
    std::string describe() const override;

private:
    FiniteRing ring_;
    Index right_order_;
};

/// Cosets of K numbered by least representative.
class QuotientModuleNode final : public ModuleNode {
public:
    QuotientModuleNode(FiniteModule base, const Submodule& kernel);

    ModuleKind kind() const override { return ModuleKind::quotient; }
    FiniteRing ring() const override { return base_.ring(); }
    Index order() const override { return static_cast<Index>(reps_.size()); }
    Index add(Index a, Index b) const override;
    Index neg(Index a) const override;
    Index act(Index r, Index x) const override;
    std::string render(Index x) const override;
    Index encode(const ElementLiteral& lit) const override;
    std::string describe() const override;

    const FiniteModule& base() const { return base_; }
    Index project(Index x) const { return coset_of_[x]; }
    Index representative(Index c) const { return reps_[c]; }

private:
    FiniteModule base_;
    std::string kernel_key_;
    std::vector<Index> reps_;
    std::vector<Index> coset_of_;
};

/// A subset-carried module: elements are a sorted subset of a base module,
/// scalars come from `ring`, mapped into the base ring by `scalar_to_base`.
class SubsetModuleNode : public ModuleNode {
public:
    SubsetModuleNode(FiniteModule base, FiniteRing ring, std::vector<Index> base_scalar,
                     std::vector<Index> members);

    FiniteRing ring() const override { return ring_; }
    Index order() const override { return carrier_.size(); }
    Index add(Index a, Index b) const override;
    Index neg(Index a) const override;
    Index act(Index r, Index x) const override;
    std::string render(Index x) const override;
    Index encode(const ElementLiteral& lit) const override;

    const FiniteModule& base() const { return base_; }
    const SubsetIndex& carrier() const { return carrier_; }

protected:
    FiniteModule base_;
    FiniteRing ring_;
    std::vector<Index> base_scalar_;
    SubsetIndex carrier_;
};

class SubmoduleModuleNode final : public SubsetModuleNode {
public:
    explicit SubmoduleModuleNode(const Submodule& k);

    ModuleKind kind() const override { return ModuleKind::submodule_as_module; }
    std::string describe() const override;

private:
    std::string sub_key_;
};

/// eM over eR.
class RestrictedModuleNode final : public SubsetModuleNode {
public:
    RestrictedModuleNode(FiniteModule base, FiniteRing localized, std::vector<Index> base_scalar,
                         Index idempotent, std::string key);

    ModuleKind kind() const override { return ModuleKind::restricted; }
    std::string describe() const override;

private:
    Index e_;
};

/// M2 regarded as an R1-module through f.
class RestrictScalarsNode final : public ModuleNode {
public:
    RestrictScalarsNode(FiniteModule base, RingHom f);

    ModuleKind kind() const override { return ModuleKind::restricted_scalars; }
    FiniteRing ring() const override { return f_.domain(); }
    Index order() const override { return base_.order(); }
    Index add(Index a, Index b) const override { return base_.node().add(a, b); }
    Index neg(Index a) const override { return base_.node().neg(a); }
    Index act(Index r, Index x) const override { return base_.node().act(f_.apply(r), x); }
    std::string render(Index x) const override { return base_.node().render(x); }
    Index encode(const ElementLiteral& lit) const override { return base_.node().encode(lit); }
    std::string describe() const override;

    const FiniteModule& base() const { return base_; }
    const RingHom& hom() const { return f_; }

private:
    FiniteModule base_;
    RingHom f_;
};

}  // namespace absorb::detail
