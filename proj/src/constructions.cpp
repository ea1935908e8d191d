#include "absorb/constructions.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "absorb/detail/nodes.hpp"
#include "absorb/error.hpp"
#include "module_nodes.hpp"
#include "ring_nodes.hpp"

namespace absorb {

namespace detail {
namespace {

/// R x M, index = r * |M| + x.
class IdealizationNode final : public RingNode {
public:
    IdealizationNode(FiniteRing base, FiniteModule module)
        : base_(std::move(base)), module_(std::move(module)) {
        set_key("idealize(" + base_.key() + "," + module_.key() + ")");
    }

    RingKind kind() const override { return RingKind::idealization; }
    Index order() const override { return base_.order() * module_.order(); }
    Index one() const override { return compose(base_.node().one(), 0); }
    Index add(Index a, Index b) const override {
        return compose(base_.node().add(ring_part(a), ring_part(b)),
                       module_.node().add(module_part(a), module_part(b)));
    }
    Index neg(Index a) const override {
        return compose(base_.node().neg(ring_part(a)), module_.node().neg(module_part(a)));
    }
    Index mul(Index a, Index b) const override {
        const auto& r = base_.node();
        const auto& m = module_.node();
        const Index u = ring_part(a), v = ring_part(b);
        const Index x = module_part(a), y = module_part(b);
        return compose(r.mul(u, v), m.add(m.act(u, y), m.act(v, x)));
    }
    std::string render(Index a) const override {
        return "(" + base_.node().render(ring_part(a)) + "," +
               module_.node().render(module_part(a)) + ")";
    }
    Index encode(const ElementLiteral& lit) const override {
        if (!lit.is_pair()) throw Error(ErrorKind::elaboration, "expected a pair in " + key());
        return compose(base_.node().encode(lit.parts[0]), module_.node().encode(lit.parts[1]));
    }
    std::string describe() const override {
        return base_.describe() + " ⋉ " + module_.describe();
    }

    const FiniteRing& base() const { return base_; }
    const FiniteModule& module() const { return module_; }
    Index ring_part(Index a) const { return a / module_.order(); }
    Index module_part(Index a) const { return a % module_.order(); }
    Index compose(Index r, Index x) const { return r * module_.order() + x; }

private:
    FiniteRing base_;
    FiniteModule module_;
};

/// R1 amalgamated along J, index = u * |J| + position of j in J.
class AmalgamationNode final : public RingNode {
public:
    AmalgamationNode(FiniteRing r1, FiniteRing r2, RingHom f, Ideal j)
        : r1_(std::move(r1)),
          r2_(std::move(r2)),
          f_(std::move(f)),
          j_(std::move(j)),
          jidx_(j_.carrier(), r2_.order()) {
        set_key("amalg(" + r1_.key() + "," + r2_.key() + "," + f_.label() + "," + j_.render() +
                ")");
    }

    RingKind kind() const override { return RingKind::amalgamation; }
    Index order() const override { return r1_.order() * jidx_.size(); }
    Index one() const override { return compose(r1_.node().one(), 0); }
    Index add(Index a, Index b) const override {
        return compose(r1_.node().add(first(a), first(b)),
                       jidx_.position(r2_.node().add(jpart(a), jpart(b))));
    }
    Index neg(Index a) const override {
        return compose(r1_.node().neg(first(a)), jidx_.position(r2_.node().neg(jpart(a))));
    }
    Index mul(Index a, Index b) const override {
        const auto& n2 = r2_.node();
        const Index u = r1_.node().mul(first(a), first(b));
        const Index prod = n2.mul(second(a), second(b));
        return compose(u, jidx_.position(n2.add(prod, n2.neg(f_.apply(u)))));
    }
    std::string render(Index a) const override {
        return "(" + r1_.node().render(first(a)) + "," + r2_.node().render(second(a)) + ")";
    }
    Index encode(const ElementLiteral& lit) const override {
        if (!lit.is_pair()) throw Error(ErrorKind::elaboration, "expected a pair in " + key());
        const Index u = r1_.node().encode(lit.parts[0]);
        const Index s = r2_.node().encode(lit.parts[1]);
        const Index j = r2_.node().add(s, r2_.node().neg(f_.apply(u)));
        if (!jidx_.contains(j)) {
            throw Error(ErrorKind::elaboration, lit.render() + " is not in " + key());
        }
        return compose(u, jidx_.position(j));
    }
    std::string describe() const override {
        return r1_.describe() + " ⋈^" + f_.label() + " " + j_.render();
    }

    const FiniteRing& r1() const { return r1_; }
    const FiniteRing& r2() const { return r2_; }
    const RingHom& f() const { return f_; }
    const Ideal& j() const { return j_; }

    Index first(Index a) const { return a / jidx_.size(); }
    /// The J-coordinate as an element of R2.
    Index jpart(Index a) const { return jidx_.member(a % jidx_.size()); }
    /// f(u) + j as an element of R2.
    Index second(Index a) const { return r2_.node().add(f_.apply(first(a)), jpart(a)); }
    Index compose(Index u, Index jpos) const { return u * jidx_.size() + jpos; }

private:
    FiniteRing r1_;
    FiniteRing r2_;
    RingHom f_;
    Ideal j_;
    SubsetIndex jidx_;
};

/// M1 amalgamated with J*M2; index = x1 * |JM2| + position of x2.
class AmalgamatedModuleNode final : public ModuleNode {
public:
    AmalgamatedModuleNode(FiniteRing ring, FiniteModule m1, FiniteModule m2,
                          std::vector<Index> phi, Submodule jm2, std::string key)
        : ring_(std::move(ring)),
          amalg_(dynamic_cast<const AmalgamationNode&>(ring_.node())),
          m1_(std::move(m1)),
          m2_(std::move(m2)),
          phi_(std::move(phi)),
          jm2_(std::move(jm2)),
          jidx_(jm2_.carrier(), m2_.order()) {
        set_key(std::move(key));
    }

    ModuleKind kind() const override { return ModuleKind::amalgamated; }
    FiniteRing ring() const override { return ring_; }
    Index order() const override { return m1_.order() * jidx_.size(); }
    Index add(Index a, Index b) const override {
        return compose(m1_.node().add(first(a), first(b)),
                       jidx_.position(m2_.node().add(x2(a), x2(b))));
    }
    Index neg(Index a) const override {
        return compose(m1_.node().neg(first(a)), jidx_.position(m2_.node().neg(x2(a))));
    }
    Index act(Index r, Index x) const override {
        // (u, f(u)+j)(x1, phi(x1)+x2) = (ux1, phi(ux1) + f(u)x2 + j phi(x1) + j x2)
        const auto& n2 = m2_.node();
        const Index u = amalg_.first(r);
        const Index j = amalg_.jpart(r);
        const Index fu = amalg_.f().apply(u);
        const Index x1 = first(x);
        const Index y2 = x2(x);
        const Index ux1 = m1_.node().act(u, x1);
        const Index rest = n2.add(n2.add(n2.act(fu, y2), n2.act(j, phi_[x1])), n2.act(j, y2));
        return compose(ux1, jidx_.position(rest));
    }
    std::string render(Index x) const override {
        return "(" + m1_.node().render(first(x)) + "," + m2_.node().render(second(x)) + ")";
    }
    Index encode(const ElementLiteral& lit) const override {
        if (!lit.is_pair()) throw Error(ErrorKind::elaboration, "expected a pair in " + key());
        const Index a = m1_.node().encode(lit.parts[0]);
        const Index b = m2_.node().encode(lit.parts[1]);
        const Index y2 = m2_.node().add(b, m2_.node().neg(phi_[a]));
        if (!jidx_.contains(y2)) {
            throw Error(ErrorKind::elaboration, lit.render() + " is not in " + key());
        }
        return compose(a, jidx_.position(y2));
    }
    std::string describe() const override {
        return m1_.describe() + " ⋈^φ J(" + m2_.describe() + ")";
    }

    const FiniteModule& m1() const { return m1_; }
    const FiniteModule& m2() const { return m2_; }
    const std::vector<Index>& phi() const { return phi_; }
    const Submodule& jm2() const { return jm2_; }
    const SubsetIndex& jindex() const { return jidx_; }

    Index first(Index x) const { return x / jidx_.size(); }
    Index x2(Index x) const { return jidx_.member(x % jidx_.size()); }
    /// phi(x1) + x2 in M2.
    Index second(Index x) const { return m2_.node().add(phi_[first(x)], x2(x)); }
    Index compose(Index x1, Index pos) const { return x1 * jidx_.size() + pos; }

private:
    FiniteRing ring_;
    const AmalgamationNode& amalg_;
    FiniteModule m1_;
    FiniteModule m2_;
    std::vector<Index> phi_;
    Submodule jm2_;
    SubsetIndex jidx_;
};

}  // namespace
}  // namespace detail

// ---------------------------------------------------------------------------
// Quotients

FiniteRing quotient_ring(const FiniteRing& r, const Ideal& i) {
    if (!is_ideal_of(i, r)) throw Error(ErrorKind::cross_owner, "ideal is not of " + r.key());
    if (!i.is_proper()) throw Error(ErrorKind::not_proper, "quotient by the unit ideal");
    FiniteRing q(std::make_shared<detail::QuotientRingNode>(r, i));
    verify_ring_axioms(q);
    return q;
}

QuotientResult quotient_module(const FiniteModule& m, const Submodule& k) {
    if (!k.module().same_as(m)) throw Error(ErrorKind::cross_owner, "kernel is not in " + m.key());
    auto node = std::make_shared<detail::QuotientModuleNode>(m, k);
    std::vector<Index> table(m.order());
    for (Index x = 0; x < m.order(); ++x) table[x] = node->project(x);
    FiniteModule q(node);
    return {q, ModuleHom(m, q, std::move(table))};
}

// ---------------------------------------------------------------------------
// Products

FiniteModule product_module(const FiniteModule& m1, const FiniteModule& m2, ProductMode mode) {
    return mode == ProductMode::same_ring ? product_module(m1, m2)
                                          : product_module_over_product_ring(m1, m2);
}

std::pair<FiniteModule, FiniteModule> product_factors(const FiniteModule& product) {
    const auto* node = dynamic_cast<const detail::PairModuleBase*>(&product.node());
    if (node == nullptr) throw Error(ErrorKind::construction, product.key() + " is not a product");
    return {node->first_module(), node->second_module()};
}

Submodule product_submodule(const FiniteModule& product, const Submodule& n1,
                            const Submodule& n2) {
    const auto* node = dynamic_cast<const detail::PairModuleBase*>(&product.node());
    if (node == nullptr) throw Error(ErrorKind::construction, product.key() + " is not a product");
    if (!n1.module().same_as(node->first_module()) || !n2.module().same_as(node->second_module())) {
        throw Error(ErrorKind::cross_owner, "factor submodules do not match " + product.key());
    }
    std::vector<Index> carrier;
    carrier.reserve(std::size_t(n1.size()) * n2.size());
    for (Index a : n1.carrier()) {
        for (Index b : n2.carrier()) carrier.push_back(node->compose(a, b));
    }
    return Submodule::trusted(product, std::move(carrier));
}

// ---------------------------------------------------------------------------
// Multiplicative sets and localization

MultiplicativeSet::MultiplicativeSet(FiniteRing r, std::vector<Index> carrier)
    : ring_(std::move(r)), carrier_(std::move(carrier)) {}

namespace {
std::vector<Index> multiplicative_closure(const FiniteRing& r, std::vector<Index> seed) {
    const auto& node = r.node();
    std::vector<bool> in(r.order(), false);
    std::deque<Index> queue;
    auto push = [&](Index a) {
        if (!in[a]) {
            in[a] = true;
            queue.push_back(a);
        }
    };
    push(node.one());
    for (Index a : seed) push(a);
    std::vector<Index> members;
    while (!queue.empty()) {
        const Index a = queue.front();
        queue.pop_front();
        members.push_back(a);
        for (std::size_t i = 0; i < members.size(); ++i) push(node.mul(a, members[i]));
    }
    std::sort(members.begin(), members.end());
    return members;
}
}  // namespace

MultiplicativeSet MultiplicativeSet::generated_by(const FiniteRing& r,
                                                  const std::vector<RingElt>& gens) {
    std::vector<Index> seed;
    for (const RingElt& g : gens) {
        if (!r.owns(g)) throw Error(ErrorKind::cross_owner, "generator outside " + r.key());
        seed.push_back(g.index);
    }
    return MultiplicativeSet(r, multiplicative_closure(r, std::move(seed)));
}

bool MultiplicativeSet::contains(Index a) const {
    return std::binary_search(carrier_.begin(), carrier_.end(), a);
}

std::string MultiplicativeSet::render() const {
    std::string out = "mset[";
    for (std::size_t i = 0; i < carrier_.size(); ++i) {
        if (i) out += ",";
        out += ring_.render(carrier_[i]);
    }
    return out + "]";
}

std::vector<MultiplicativeSet> all_multiplicative_sets(const FiniteRing& r) {
    std::set<std::vector<Index>> seen;
    std::deque<std::vector<Index>> queue;
    auto start = multiplicative_closure(r, {});
    seen.insert(start);
    queue.push_back(start);
    while (!queue.empty()) {
        const std::vector<Index> cur = queue.front();
        queue.pop_front();
        for (Index a = 0; a < r.order(); ++a) {
            if (std::binary_search(cur.begin(), cur.end(), a)) continue;
            std::vector<Index> seed = cur;
            seed.push_back(a);
            auto next = multiplicative_closure(r, std::move(seed));
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    std::vector<MultiplicativeSet> out;
    for (const auto& carrier : seen) {
        std::vector<RingElt> gens;
        for (Index a : carrier) gens.push_back(r.element(a));
        out.push_back(MultiplicativeSet::generated_by(r, gens));
    }
    return out;
}

Submodule saturate(const Submodule& n, const MultiplicativeSet& s) {
    const FiniteModule& m = n.module();
    if (!m.ring().same_as(s.ring())) {
        throw Error(ErrorKind::cross_owner, "multiplicative set is not over " + m.ring().key());
    }
    std::vector<Index> out;
    for (Index x = 0; x < m.order(); ++x) {
        for (Index t : s.carrier()) {
            if (n.contains(m.node().act(t, x))) {
                out.push_back(x);
                break;
            }
        }
    }
    return Submodule::trusted(m, std::move(out));
}

bool is_saturated(const Submodule& n, const MultiplicativeSet& s) { return saturate(n, s) == n; }

LocalizationResult localize_ring(const FiniteRing& r, const MultiplicativeSet& s) {
    if (!r.same_as(s.ring())) {
        throw Error(ErrorKind::cross_owner, "multiplicative set is not over " + r.key());
    }
    Index t = r.node().one();
    for (Index a : s.carrier()) t = r.node().mul(t, a);
    const RingElt e = stable_idempotent(r, r.element(t));
    if (e.index == 0) {
        throw Error(ErrorKind::degenerate_localization,
                    "localizing " + r.key() + " at " + s.render() + " gives the zero ring");
    }
    auto node = std::make_shared<detail::IdempotentSubringNode>(
        r, e.index, "loc(" + r.key() + "," + s.render() + ")");
    std::vector<Index> table(r.order());
    for (Index a = 0; a < r.order(); ++a) {
        table[a] = node->carrier().position(r.node().mul(a, e.index));
    }
    FiniteRing local(node);
    RingHom map(r, local, std::move(table), "loc");
    return {local, map, e};
}

LocalizedModule localize_module(const FiniteModule& m, const MultiplicativeSet& s) {
    LocalizationResult lr = localize_ring(m.ring(), s);
    const auto& sub = dynamic_cast<const detail::IdempotentSubringNode&>(lr.localized_ring.node());
    auto node = std::make_shared<detail::RestrictedModuleNode>(
        m, lr.localized_ring, sub.carrier().members(), lr.idempotent.index,
        "locm(" + m.key() + "," + s.render() + ")");
    std::vector<Index> map(m.order());
    for (Index x = 0; x < m.order(); ++x) {
        map[x] = node->carrier().position(m.node().act(lr.idempotent.index, x));
    }
    FiniteModule local(node);
    verify_module_axioms(local);
    return {lr, local, std::move(map)};
}

Submodule localize_submodule(const LocalizedModule& loc, const Submodule& n) {
    const auto& node = dynamic_cast<const detail::RestrictedModuleNode&>(loc.module.node());
    if (!n.module().same_as(node.base())) {
        throw Error(ErrorKind::cross_owner, "submodule is not of " + node.base().key());
    }
    std::vector<Index> out;
    for (Index x : n.carrier()) out.push_back(loc.map[x]);
    return Submodule::trusted(loc.module, std::move(out));
}

// ---------------------------------------------------------------------------
// Idealization

FiniteRing idealization_ring(const FiniteRing& r, const FiniteModule& m) {
    if (!m.ring().same_as(r)) {
        throw Error(ErrorKind::construction, m.key() + " is not a module over " + r.key());
    }
    if (std::uint64_t(r.order()) * m.order() > 0xFFFFFFFULL) {
        throw Error(ErrorKind::size_bound, "idealization too large");
    }
    FiniteRing out(std::make_shared<detail::IdealizationNode>(r, m));
    verify_ring_axioms(out);
    return out;
}

std::optional<IdealizationParts> idealization_parts(const FiniteRing& r) {
    const auto* node = dynamic_cast<const detail::IdealizationNode*>(&r.node());
    if (node == nullptr) return std::nullopt;
    return IdealizationParts{node->base(), node->module()};
}

Ideal RingSubset::as_ideal() const {
    if (!is_ideal) throw Error(ErrorKind::construction, "subset is not an ideal");
    return Submodule::trusted(self_module(ring), carrier);
}

RingSubset idealization_subset(const FiniteRing& idealized, const Ideal& i, const Submodule& n) {
    const auto* node = dynamic_cast<const detail::IdealizationNode*>(&idealized.node());
    if (node == nullptr) throw Error(ErrorKind::construction, idealized.key() + " is not R ⋉ M");
    if (!is_ideal_of(i, node->base())) {
        throw Error(ErrorKind::cross_owner, "ideal is not of " + node->base().key());
    }
    if (!n.module().same_as(node->module())) {
        throw Error(ErrorKind::cross_owner, "submodule is not of " + node->module().key());
    }
    RingSubset out{idealized, {}, true, std::vector<bool>(idealized.order(), false)};
    for (Index a : i.carrier()) {
        for (Index x : n.carrier()) out.carrier.push_back(node->compose(a, x));
    }
    std::sort(out.carrier.begin(), out.carrier.end());
    for (Index c : out.carrier) out.membership[c] = true;
    const FiniteModule& m = node->module();
    for (Index a : i.carrier()) {
        for (Index y = 0; y < m.order() && out.is_ideal; ++y) {
            if (!n.contains(m.node().act(a, y))) out.is_ideal = false;
        }
    }
    return out;
}

bool idealization_radical_check(const FiniteRing& idealized, const Ideal& i, const Submodule& n) {
    const RingSubset sub = idealization_subset(idealized, i, n);
    if (!sub.is_ideal) {
        throw Error(ErrorKind::construction, "I ⋉ N is not an ideal, so it has no radical");
    }
    const auto& node = dynamic_cast<const detail::IdealizationNode&>(idealized.node());
    const Ideal root_i = radical(i);
    const Ideal root = radical(sub.as_ideal());
    for (Index a = 0; a < idealized.order(); ++a) {
        if (root.contains(a) != root_i.contains(node.ring_part(a))) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Amalgamation

FiniteRing amalgamation_ring(const FiniteRing& r1, const FiniteRing& r2, const RingHom& f,
                             const Ideal& j) {
    if (!f.domain().same_as(r1) || !f.codomain().same_as(r2)) {
        throw Error(ErrorKind::construction, "hom does not map " + r1.key() + " to " + r2.key());
    }
    if (!is_ideal_of(j, r2)) throw Error(ErrorKind::cross_owner, "J is not an ideal of " + r2.key());
    if (std::uint64_t(r1.order()) * j.size() > 0xFFFFFFFULL) {
        throw Error(ErrorKind::size_bound, "amalgamation too large");
    }
    FiniteRing out(std::make_shared<detail::AmalgamationNode>(r1, r2, f, j));
    verify_ring_axioms(out);
    return out;
}

std::optional<AmalgamationParts> amalgamation_parts(const FiniteRing& r) {
    const auto* node = dynamic_cast<const detail::AmalgamationNode*>(&r.node());
    if (node == nullptr) return std::nullopt;
    return AmalgamationParts{node->r1(), node->r2(), node->f(), node->j()};
}

FiniteModule amalgamated_module(const FiniteModule& m1, const FiniteModule& m2, const RingHom& f,
                                const std::vector<Index>& phi, const Ideal& j) {
    const FiniteRing r1 = m1.ring();
    const FiniteRing r2 = m2.ring();
    if (phi.size() != m1.order()) throw Error(ErrorKind::construction, "phi table size mismatch");
    for (Index y : phi) {
        if (y >= m2.order()) throw Error(ErrorKind::construction, "phi entry out of range");
    }
    const auto& n1 = m1.node();
    const auto& n2 = m2.node();
    for (Index a = 0; a < m1.order(); ++a) {
        for (Index b = a; b < m1.order(); ++b) {
            if (phi[n1.add(a, b)] != n2.add(phi[a], phi[b])) {
                throw Error(ErrorKind::construction, "phi is not additive");
            }
        }
        for (Index r = 0; r < r1.order(); ++r) {
            if (phi[n1.act(r, a)] != n2.act(f.apply(r), phi[a])) {
                throw Error(ErrorKind::construction, "phi is not R1-linear through f");
            }
        }
    }
    FiniteRing ring = amalgamation_ring(r1, r2, f, j);
    Submodule jm2 = ideal_times_module(j, m2);
    std::string key = "amalgm(" + m1.key() + "," + m2.key() + "," + f.label() + "," +
                      j.render() + ")";
    FiniteModule out(std::make_shared<detail::AmalgamatedModuleNode>(ring, m1, m2, phi, jm2,
                                                                     std::move(key)));
    verify_module_axioms(out);
    return out;
}

namespace {
const detail::AmalgamatedModuleNode& amalgamated_node(const FiniteModule& m) {
    const auto* node = dynamic_cast<const detail::AmalgamatedModuleNode*>(&m.node());
    if (node == nullptr) throw Error(ErrorKind::construction, m.key() + " is not amalgamated");
    return *node;
}
}  // namespace

std::optional<AmalgamatedModuleParts> amalgamated_module_parts(const FiniteModule& m) {
    const auto* node = dynamic_cast<const detail::AmalgamatedModuleNode*>(&m.node());
    if (node == nullptr) return std::nullopt;
    return AmalgamatedModuleParts{node->m1(), node->m2(), node->phi(), node->jm2()};
}

Index amalgamated_element(const FiniteModule& m, Index x1, Index x2) {
    const auto& node = amalgamated_node(m);
    return node.compose(x1, node.jindex().position(x2));
}

Submodule amalg_submodule_N1(const FiniteModule& amalgamated, const Submodule& n1) {
    const auto& node = amalgamated_node(amalgamated);
    if (!n1.module().same_as(node.m1())) {
        throw Error(ErrorKind::cross_owner, "N1 is not a submodule of " + node.m1().key());
    }
    std::vector<Index> out;
    for (Index x1 : n1.carrier()) {
        for (Index pos = 0; pos < node.jindex().size(); ++pos) out.push_back(node.compose(x1, pos));
    }
    return Submodule::from_carrier(amalgamated, std::move(out));
}

Submodule amalg_submodule_N2bar(const FiniteModule& amalgamated, const Submodule& n2) {
    const auto& node = amalgamated_node(amalgamated);
    if (!n2.module().same_as(node.m2())) {
        throw Error(ErrorKind::cross_owner, "N2 is not a submodule of " + node.m2().key());
    }
    std::vector<Index> out;
    for (Index x = 0; x < amalgamated.order(); ++x) {
        if (n2.contains(node.second(x))) out.push_back(x);
    }
    return Submodule::from_carrier(amalgamated, std::move(out));
}

FiniteModule restrict_scalars(const FiniteModule& m2, const RingHom& f) {
    if (!f.codomain().same_as(m2.ring())) {
        throw Error(ErrorKind::construction,
                    "hom codomain " + f.codomain().key() + " is not the ring of " + m2.key());
    }
    return FiniteModule(std::make_shared<detail::RestrictScalarsNode>(m2, f));
}

}  // namespace absorb
