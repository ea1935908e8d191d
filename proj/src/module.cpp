#include "absorb/module.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "absorb/detail/nodes.hpp"
#include "absorb/error.hpp"
#include "module_nodes.hpp"
#include "ring_nodes.hpp"

namespace absorb {

namespace detail {

ModuleNode::~ModuleNode() = default;

const ModuleTables& ModuleNode::tables() const {
    const std::uint64_t cells = std::uint64_t(ring().order()) * order();
    if (cells > (1ULL << 24)) {
        throw Error(ErrorKind::size_bound,
                    "module " + key() + " is too large for an action table");
    }
    std::call_once(tables_once_, [this] {
        auto t = std::make_unique<ModuleTables>();
        t->ring_order = ring().order();
        t->order = order();
        t->act.resize(std::size_t(t->ring_order) * t->order);
        t->neg.resize(t->order);
        for (Index x = 0; x < t->order; ++x) t->neg[x] = neg(x);
        for (Index r = 0; r < t->ring_order; ++r) {
            for (Index x = 0; x < t->order; ++x) {
                t->act[std::size_t(r) * t->order + x] = act(r, x);
            }
        }
        tables_ = std::move(t);
    });
    return *tables_;
}

std::shared_ptr<ModuleNode> make_self_module_node(const RingNode* ring) {
    return std::make_shared<SelfModuleNode>(ring);
}

CyclicModuleNode::CyclicModuleNode(FiniteRing ring, Index d) : ring_(std::move(ring)), d_(d) {
    set_key("cyc(" + ring_.key() + "," + std::to_string(d) + ")");
}

Index CyclicModuleNode::encode(const ElementLiteral& lit) const {
    if (lit.is_pair()) throw Error(ErrorKind::elaboration, "expected an integer in " + key());
    long long r = lit.scalar % static_cast<long long>(d_);
    if (r < 0) r += d_;
    return static_cast<Index>(r);
}

std::string CyclicModuleNode::describe() const {
    return "Z" + std::to_string(d_) + " over " + ring_.describe();
}

SelfModuleNode::SelfModuleNode(const RingNode* ring) : ring_(ring) {
    set_key("self(" + ring->key() + ")");
}

FiniteRing SelfModuleNode::ring() const { return FiniteRing(ring_->shared_from_this()); }

std::string SelfModuleNode::describe() const { return ring_->describe() + " over itself"; }

PairModuleBase::PairModuleBase(FiniteModule m1, FiniteModule m2)
    : m1_(std::move(m1)), m2_(std::move(m2)) {}

Index PairModuleBase::add(Index a, Index b) const {
    return compose(m1_.node().add(first(a), first(b)), m2_.node().add(second(a), second(b)));
}

Index PairModuleBase::neg(Index a) const {
    return compose(m1_.node().neg(first(a)), m2_.node().neg(second(a)));
}

std::string PairModuleBase::render(Index x) const {
    return "(" + m1_.node().render(first(x)) + "," + m2_.node().render(second(x)) + ")";
}

Index PairModuleBase::encode(const ElementLiteral& lit) const {
    if (!lit.is_pair()) throw Error(ErrorKind::elaboration, "expected a pair in " + key());
    return compose(m1_.node().encode(lit.parts[0]), m2_.node().encode(lit.parts[1]));
}

ProductModuleNode::ProductModuleNode(FiniteModule m1, FiniteModule m2)
    : PairModuleBase(std::move(m1), std::move(m2)) {
    set_key("prod(" + m1_.key() + "," + m2_.key() + ")");
}

Index ProductModuleNode::act(Index r, Index x) const {
    return compose(m1_.node().act(r, first(x)), m2_.node().act(r, second(x)));
}

std::string ProductModuleNode::describe() const {
    return "(" + m1_.describe() + ") × (" + m2_.describe() + ")";
}

ProductRingModuleNode::ProductRingModuleNode(FiniteModule m1, FiniteModule m2,
                                             FiniteRing product)
    : PairModuleBase(std::move(m1), std::move(m2)),
      ring_(std::move(product)),
      right_order_(m2_.ring().order()) {
    set_key("prodr(" + m1_.key() + "," + m2_.key() + ")");
}

Index ProductRingModuleNode::act(Index r, Index x) const {
    return compose(m1_.node().act(r / right_order_, first(x)),
                   m2_.node().act(r % right_order_, second(x)));
}

std::string ProductRingModuleNode::describe() const {
    return "(" + m1_.describe() + ") × (" + m2_.describe() + ") over " + ring_.describe();
}

QuotientModuleNode::QuotientModuleNode(FiniteModule base, const Submodule& kernel)
    : base_(std::move(base)), kernel_key_(kernel.render()) {
    const Index n = base_.order();
    coset_of_.assign(n, ~Index{0});
    for (Index a = 0; a < n; ++a) {
        if (coset_of_[a] != ~Index{0}) continue;
        const Index id = static_cast<Index>(reps_.size());
        reps_.push_back(a);
        for (Index k : kernel.carrier()) coset_of_[base_.node().add(a, k)] = id;
    }
    set_key("quotm(" + base_.key() + "," + kernel_key_ + ")");
}

Index QuotientModuleNode::add(Index a, Index b) const {
    return coset_of_[base_.node().add(reps_[a], reps_[b])];
}

Index QuotientModuleNode::neg(Index a) const { return coset_of_[base_.node().neg(reps_[a])]; }

Index QuotientModuleNode::act(Index r, Index x) const {
    return coset_of_[base_.node().act(r, reps_[x])];
}

std::string QuotientModuleNode::render(Index x) const { return base_.node().render(reps_[x]); }

Index QuotientModuleNode::encode(const ElementLiteral& lit) const {
    return coset_of_[base_.node().encode(lit)];
}

std::string QuotientModuleNode::describe() const {
    return "(" + base_.describe() + ")/" + kernel_key_;
}

SubsetModuleNode::SubsetModuleNode(FiniteModule base, FiniteRing ring,
                                   std::vector<Index> base_scalar, std::vector<Index> members)
    : base_(std::move(base)),
      ring_(std::move(ring)),
      base_scalar_(std::move(base_scalar)),
      carrier_(std::move(members), base_.order()) {}

Index SubsetModuleNode::add(Index a, Index b) const {
    return carrier_.position(base_.node().add(carrier_.member(a), carrier_.member(b)));
}

Index SubsetModuleNode::neg(Index a) const {
    return carrier_.position(base_.node().neg(carrier_.member(a)));
}

Index SubsetModuleNode::act(Index r, Index x) const {
    return carrier_.position(base_.node().act(base_scalar_[r], carrier_.member(x)));
}

std::string SubsetModuleNode::render(Index x) const {
    return base_.node().render(carrier_.member(x));
}

Index SubsetModuleNode::encode(const ElementLiteral& lit) const {
    const Index outer = base_.node().encode(lit);
    if (!carrier_.contains(outer)) {
        throw Error(ErrorKind::elaboration, lit.render() + " is not in " + key());
    }
    return carrier_.position(outer);
}

namespace {
std::vector<Index> identity_table(Index n) {
    std::vector<Index> t(n);
    std::iota(t.begin(), t.end(), Index{0});
    return t;
}
}  // namespace

SubmoduleModuleNode::SubmoduleModuleNode(const Submodule& k)
    : SubsetModuleNode(k.module(), k.module().ring(), identity_table(k.module().ring().order()),
                       k.carrier()),
      sub_key_(k.render()) {
    set_key("subm(" + base_.key() + "," + sub_key_ + ")");
}

std::string SubmoduleModuleNode::describe() const {
    return sub_key_ + " in " + base_.describe();
}

RestrictedModuleNode::RestrictedModuleNode(FiniteModule base, FiniteRing localized,
                                           std::vector<Index> base_scalar, Index idempotent,
                                           std::string key)
    : SubsetModuleNode(base, std::move(localized), std::move(base_scalar), [&] {
          std::vector<Index> members;
          for (Index x = 0; x < base.order(); ++x) members.push_back(base.node().act(idempotent, x));
          return members;
      }()),
      e_(idempotent) {
    set_key(std::move(key));
}

std::string RestrictedModuleNode::describe() const {
    return base_.ring().render(e_) + "·(" + base_.describe() + ")";
}

RestrictScalarsNode::RestrictScalarsNode(FiniteModule base, RingHom f)
    : base_(std::move(base)), f_(std::move(f)) {
    set_key("restrict(" + base_.key() + "," + f_.domain().key() + "," + f_.label() + ")");
}

std::string RestrictScalarsNode::describe() const {
    return base_.describe() + " via " + f_.label();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// FiniteModule

FiniteModule::FiniteModule(std::shared_ptr<const detail::ModuleNode> node)
    : node_(std::move(node)) {}

FiniteRing FiniteModule::ring() const { return node_->ring(); }
Index FiniteModule::order() const { return node_->order(); }
ModuleKind FiniteModule::kind() const { return node_->kind(); }
ModElt FiniteModule::zero() const { return {node_.get(), 0}; }

ModElt FiniteModule::element(Index index) const {
    if (index >= order()) {
        throw Error(ErrorKind::elaboration,
                    "index " + std::to_string(index) + " out of range for " + key());
    }
    return {node_.get(), index};
}

ModElt FiniteModule::value(const ElementLiteral& literal) const {
    return {node_.get(), node_->encode(literal)};
}

bool FiniteModule::owns(ModElt x) const {
    if (x.owner == node_.get()) return true;
    return x.owner != nullptr && x.owner->key() == node_->key() && x.index < order();
}

void FiniteModule::check_owner(ModElt x) const {
    if (!owns(x)) throw Error(ErrorKind::cross_owner, "element does not belong to " + key());
}

ModElt FiniteModule::add(ModElt a, ModElt b) const {
    check_owner(a);
    check_owner(b);
    return {node_.get(), node_->add(a.index, b.index)};
}

ModElt FiniteModule::sub(ModElt a, ModElt b) const {
    check_owner(a);
    check_owner(b);
    return {node_.get(), node_->add(a.index, node_->neg(b.index))};
}

ModElt FiniteModule::neg(ModElt a) const {
    check_owner(a);
    return {node_.get(), node_->neg(a.index)};
}

ModElt FiniteModule::act(RingElt r, ModElt x) const {
    check_owner(x);
    if (!ring().owns(r)) throw Error(ErrorKind::cross_owner, "scalar outside " + ring().key());
    return {node_.get(), node_->act(r.index, x.index)};
}

std::uint64_t FiniteModule::exponent() const {
    std::uint64_t e = 1;
    for (Index x = 0; x < order(); ++x) {
        std::uint64_t k = 1;
        Index acc = x;
        while (acc != 0) {
            acc = node_->add(acc, x);
            ++k;
        }
        e = std::lcm(e, k);
    }
    return e;
}

std::string FiniteModule::render(ModElt x) const {
    check_owner(x);
    return node_->render(x.index);
}

std::string FiniteModule::render(Index x) const { return node_->render(x); }
const std::string& FiniteModule::key() const { return node_->key(); }
std::string FiniteModule::describe() const { return node_->describe(); }

bool FiniteModule::same_as(const FiniteModule& other) const {
    return node_ == other.node_ || node_->key() == other.node_->key();
}

// ---------------------------------------------------------------------------
// Submodule

Submodule::Submodule(FiniteModule m, std::vector<Index> carrier)
    : module_(std::move(m)), carrier_(std::move(carrier)), member_(module_.order(), false) {
    for (Index x : carrier_) member_[x] = true;
}

Submodule Submodule::trusted(const FiniteModule& m, std::vector<Index> carrier) {
    std::sort(carrier.begin(), carrier.end());
    carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
    return Submodule(m, std::move(carrier));
}

Submodule Submodule::from_carrier(const FiniteModule& m, std::vector<Index> carrier) {
    for (Index x : carrier) {
        if (x >= m.order()) throw Error(ErrorKind::construction, "carrier index out of range");
    }
    Submodule s = trusted(m, std::move(carrier));
    const auto& node = m.node();
    if (s.carrier_.empty() || s.carrier_.front() != 0) {
        throw Error(ErrorKind::construction, "carrier must contain 0");
    }
    for (Index a : s.carrier_) {
        if (!s.member_[node.neg(a)]) throw Error(ErrorKind::construction, "not closed under negation");
        for (Index b : s.carrier_) {
            if (!s.member_[node.add(a, b)]) {
                throw Error(ErrorKind::construction, "not closed under addition");
            }
        }
        for (Index r = 0; r < m.ring().order(); ++r) {
            if (!s.member_[node.act(r, a)]) {
                throw Error(ErrorKind::construction, "not closed under the scalar action");
            }
        }
    }
    return s;
}

const std::vector<Index>& Submodule::generators() const {
    if (!generators_) {
        std::vector<Index> gens;
        Submodule current = zero_submodule(module_);
        for (Index x : carrier_) {
            if (current.contains(x)) continue;
            gens.push_back(x);
            current = sum_submodules(current, cyclic_submodule(module_, x));
        }
        generators_ = std::make_shared<const std::vector<Index>>(std::move(gens));
    }
    return *generators_;
}

bool Submodule::contains(ModElt x) const {
    if (!module_.owns(x)) throw Error(ErrorKind::cross_owner, "element outside " + module_.key());
    return member_[x.index];
}

bool Submodule::is_subset_of(const Submodule& other) const {
    if (!module_.same_as(other.module_)) {
        throw Error(ErrorKind::cross_owner, "submodules of different modules");
    }
    for (Index x : carrier_) {
        if (!other.member_[x]) return false;
    }
    return true;
}

std::string Submodule::render() const {
    if (is_zero()) return "zero";
    if (!is_proper()) return "full";
    std::string out = "gen[";
    bool first = true;
    for (Index g : generators()) {
        if (!first) out += ",";
        first = false;
        out += module_.render(g);
    }
    return out + "]";
}

bool operator==(const Submodule& a, const Submodule& b) {
    return a.module_.same_as(b.module_) && a.carrier_ == b.carrier_;
}

// ---------------------------------------------------------------------------
// ModuleHom

ModuleHom::ModuleHom(FiniteModule domain, FiniteModule codomain, std::vector<Index> table)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table)) {
    if (!domain_.ring().same_as(codomain_.ring())) {
        throw Error(ErrorKind::construction, "module hom between modules over different rings");
    }
    if (table_.size() != domain_.order()) {
        throw Error(ErrorKind::construction, "module hom table size mismatch");
    }
    const auto& d = domain_.node();
    const auto& c = codomain_.node();
    for (Index x : table_) {
        if (x >= codomain_.order()) throw Error(ErrorKind::construction, "hom entry out of range");
    }
    for (Index a = 0; a < domain_.order(); ++a) {
        for (Index b = a; b < domain_.order(); ++b) {
            if (table_[d.add(a, b)] != c.add(table_[a], table_[b])) {
                throw Error(ErrorKind::construction, "module map is not additive");
            }
        }
        for (Index r = 0; r < domain_.ring().order(); ++r) {
            if (table_[d.act(r, a)] != c.act(r, table_[a])) {
                throw Error(ErrorKind::construction, "module map is not linear");
            }
        }
    }
}

Submodule ModuleHom::image(const Submodule& n) const {
    if (!n.module().same_as(domain_)) throw Error(ErrorKind::cross_owner, "image of a foreign submodule");
    std::vector<Index> out;
    for (Index x : n.carrier()) out.push_back(table_[x]);
    return Submodule::trusted(codomain_, std::move(out));
}

Submodule ModuleHom::preimage(const Submodule& n) const {
    if (!n.module().same_as(codomain_)) {
        throw Error(ErrorKind::cross_owner, "preimage of a foreign submodule");
    }
    std::vector<Index> out;
    for (Index x = 0; x < domain_.order(); ++x) {
        if (n.contains(table_[x])) out.push_back(x);
    }
    return Submodule::trusted(domain_, std::move(out));
}

Submodule ModuleHom::kernel() const { return preimage(zero_submodule(codomain_)); }

bool ModuleHom::is_surjective() const {
    std::vector<bool> hit(codomain_.order(), false);
    for (Index y : table_) hit[y] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

// ---------------------------------------------------------------------------
// Module constructors

FiniteModule self_module(const FiniteRing& r) { return r.node().self_module(); }

FiniteModule cyclic_module(const FiniteRing& r, long long d) {
    if (r.kind() != RingKind::zmod) {
        throw Error(ErrorKind::elaboration, "cyc needs a Zn ring, got " + r.key());
    }
    if (d < 1 || r.order() % d != 0) {
        throw Error(ErrorKind::elaboration,
                    "cyc(" + r.key() + "," + std::to_string(d) + "): " + std::to_string(d) +
                        " does not divide " + std::to_string(r.order()));
    }
    return FiniteModule(std::make_shared<detail::CyclicModuleNode>(r, static_cast<Index>(d)));
}

FiniteModule z_module(long long n) { return cyclic_module(make_zmod(n), n); }

FiniteModule product_module(const FiniteModule& m1, const FiniteModule& m2) {
    if (!m1.ring().same_as(m2.ring())) {
        throw Error(ErrorKind::construction,
                    "prod needs modules over the same ring (" + m1.ring().key() + " vs " +
                        m2.ring().key() + "); use prodr for the product ring action");
    }
    FiniteModule m(std::make_shared<detail::ProductModuleNode>(m1, m2));
    verify_module_axioms(m);
    return m;
}

FiniteModule product_module_over_product_ring(const FiniteModule& m1, const FiniteModule& m2) {
    FiniteRing r = product_ring(m1.ring(), m2.ring());
    FiniteModule m(std::make_shared<detail::ProductRingModuleNode>(m1, m2, r));
    verify_module_axioms(m);
    return m;
}

FiniteModule z_product_module(long long a, long long b) {
    FiniteRing r = make_zmod(std::lcm(a, b));
    return product_module(cyclic_module(r, a), cyclic_module(r, b));
}

FiniteModule submodule_as_module(const Submodule& k) {
    return FiniteModule(std::make_shared<detail::SubmoduleModuleNode>(k));
}

Submodule restrict_to(const FiniteModule& k_module, const Submodule& n) {
    const auto* node = dynamic_cast<const detail::SubmoduleModuleNode*>(&k_module.node());
    if (node == nullptr) throw Error(ErrorKind::construction, "not a submodule-as-module");
    if (!n.module().same_as(node->base())) {
        throw Error(ErrorKind::cross_owner, "submodule of a different module");
    }
    std::vector<Index> out;
    for (Index x : n.carrier()) {
        if (!node->carrier().contains(x)) {
            throw Error(ErrorKind::construction, "submodule is not contained in the carrier");
        }
        out.push_back(node->carrier().position(x));
    }
    return Submodule::trusted(k_module, std::move(out));
}

Submodule extend_from(const Submodule& n) {
    const auto* node = dynamic_cast<const detail::SubmoduleModuleNode*>(&n.module().node());
    if (node == nullptr) throw Error(ErrorKind::construction, "not a submodule-as-module");
    std::vector<Index> out;
    for (Index x : n.carrier()) out.push_back(node->carrier().member(x));
    return Submodule::trusted(node->base(), std::move(out));
}

// ---------------------------------------------------------------------------
// Ideals

Ideal zero_ideal(const FiniteRing& r) { return zero_submodule(self_module(r)); }
Ideal unit_ideal(const FiniteRing& r) { return full_submodule(self_module(r)); }

Ideal principal_ideal(const FiniteRing& r, RingElt g) {
    if (!r.owns(g)) throw Error(ErrorKind::cross_owner, "generator outside " + r.key());
    return cyclic_submodule(self_module(r), g.index);
}

Ideal ideal_from_generators(const FiniteRing& r, const std::vector<RingElt>& gens) {
    std::vector<Index> idx;
    for (const RingElt& g : gens) {
        if (!r.owns(g)) throw Error(ErrorKind::cross_owner, "generator outside " + r.key());
        idx.push_back(g.index);
    }
    return span_indices(self_module(r), idx);
}

bool is_ideal_of(const Ideal& i, const FiniteRing& r) {
    return i.module().kind() == ModuleKind::ring_self && i.module().ring().same_as(r);
}

bool contains(const Ideal& i, RingElt a) { return i.contains(a.index); }

// ---------------------------------------------------------------------------
// Lattice operations

Submodule zero_submodule(const FiniteModule& m) { return Submodule::trusted(m, {0}); }

Submodule full_submodule(const FiniteModule& m) {
    std::vector<Index> all(m.order());
    std::iota(all.begin(), all.end(), Index{0});
    return Submodule::trusted(m, std::move(all));
}

Submodule cyclic_submodule(const FiniteModule& m, Index x) {
    std::vector<Index> out;
    const auto& node = m.node();
    for (Index r = 0; r < m.ring().order(); ++r) out.push_back(node.act(r, x));
    return Submodule::trusted(m, std::move(out));
}

Submodule span_indices(const FiniteModule& m, const std::vector<Index>& gens) {
    Submodule acc = zero_submodule(m);
    for (Index g : gens) {
        if (g >= m.order()) throw Error(ErrorKind::cross_owner, "generator outside " + m.key());
        if (acc.contains(g)) continue;
        acc = sum_submodules(acc, cyclic_submodule(m, g));
    }
    return acc;
}

Submodule span(const FiniteModule& m, const std::vector<ModElt>& gens) {
    std::vector<Index> idx;
    for (const ModElt& g : gens) {
        if (!m.owns(g)) throw Error(ErrorKind::cross_owner, "generator outside " + m.key());
        idx.push_back(g.index);
    }
    return span_indices(m, idx);
}

Submodule sum_submodules(const Submodule& a, const Submodule& b) {
    if (!a.module().same_as(b.module())) {
        throw Error(ErrorKind::cross_owner, "sum of submodules of different modules");
    }
    if (a.is_subset_of(b)) return b;
    if (b.is_subset_of(a)) return a;
    const FiniteModule& m = a.module();
    const auto& node = m.node();
    std::vector<bool> hit(m.order(), false);
    std::vector<Index> out;
    for (Index x : a.carrier()) {
        for (Index y : b.carrier()) {
            const Index s = node.add(x, y);
            if (!hit[s]) {
                hit[s] = true;
                out.push_back(s);
            }
        }
    }
    return Submodule::trusted(m, std::move(out));
}

Submodule intersect_submodules(const Submodule& a, const Submodule& b) {
    if (!a.module().same_as(b.module())) {
        throw Error(ErrorKind::cross_owner, "intersection of submodules of different modules");
    }
    std::vector<Index> out;
    for (Index x : a.carrier()) {
        if (b.contains(x)) out.push_back(x);
    }
    return Submodule::trusted(a.module(), std::move(out));
}

Submodule scale_submodule(const Submodule& n, RingElt r) {
    const FiniteModule& m = n.module();
    if (!m.ring().owns(r)) throw Error(ErrorKind::cross_owner, "scalar outside " + m.ring().key());
    std::vector<Index> out;
    for (Index x : n.carrier()) out.push_back(m.node().act(r.index, x));
    return Submodule::trusted(m, std::move(out));
}

Submodule ideal_times_module(const Ideal& i, const FiniteModule& m) {
    if (!is_ideal_of(i, m.ring())) {
        throw Error(ErrorKind::cross_owner, "ideal is not over the acting ring of " + m.key());
    }
    std::vector<Index> products;
    std::vector<bool> seen(m.order(), false);
    for (Index j : i.carrier()) {
        for (Index y = 0; y < m.order(); ++y) {
            const Index p = m.node().act(j, y);
            if (!seen[p]) {
                seen[p] = true;
                products.push_back(p);
            }
        }
    }
    return span_indices(m, products);
}

// ---------------------------------------------------------------------------
// Colons and radicals

Ideal colon_ideal(const Submodule& n, ModElt x) {
    const FiniteModule& m = n.module();
    if (!m.owns(x)) throw Error(ErrorKind::cross_owner, "element outside " + m.key());
    const FiniteRing r = m.ring();
    std::vector<Index> out;
    for (Index s = 0; s < r.order(); ++s) {
        if (n.contains(m.node().act(s, x.index))) out.push_back(s);
    }
    return Submodule::trusted(self_module(r), std::move(out));
}

Ideal annihilator(const FiniteModule& m, ModElt x) { return colon_ideal(zero_submodule(m), x); }

Submodule colon_submodule(const Submodule& n, RingElt r) {
    const FiniteModule& m = n.module();
    if (!m.ring().owns(r)) throw Error(ErrorKind::cross_owner, "scalar outside " + m.ring().key());
    std::vector<Index> out;
    for (Index x = 0; x < m.order(); ++x) {
        if (n.contains(m.node().act(r.index, x))) out.push_back(x);
    }
    return Submodule::trusted(m, std::move(out));
}

Ideal colon_ideal_global(const Submodule& n) {
    return colon_ideal_of(n, full_submodule(n.module()));
}

Ideal colon_ideal_of(const Submodule& n, const Submodule& k) {
    if (!n.module().same_as(k.module())) {
        throw Error(ErrorKind::cross_owner, "colon of submodules of different modules");
    }
    const FiniteModule& m = n.module();
    const FiniteRing r = m.ring();
    std::vector<Index> out;
    const auto& gens = k.generators();
    for (Index s = 0; s < r.order(); ++s) {
        bool inside = true;
        for (Index g : gens) {
            if (!n.contains(m.node().act(s, g))) {
                inside = false;
                break;
            }
        }
        if (inside) out.push_back(s);
    }
    return Submodule::trusted(self_module(r), std::move(out));
}

Ideal radical(const Ideal& i) {
    const FiniteModule& m = i.module();
    if (m.kind() != ModuleKind::ring_self) {
        throw Error(ErrorKind::construction, "radical expects an ideal");
    }
    const FiniteRing r = m.ring();
    std::vector<Index> out;
    for (Index u = 0; u < r.order(); ++u) {
        const PowerOrbit orbit = power_orbit(r, r.element(u));
        for (const RingElt& p : orbit.orbit) {
            if (i.contains(p.index)) {
                out.push_back(u);
                break;
            }
        }
    }
    return Submodule::trusted(m, std::move(out));
}

bool is_reduced_module(const FiniteModule& m) {
    const FiniteRing r = m.ring();
    const auto& node = m.node();
    for (Index u = 0; u < r.order(); ++u) {
        const Index u2 = r.node().mul(u, u);
        for (Index x = 0; x < m.order(); ++x) {
            if (node.act(u2, x) == 0 && node.act(u, x) != 0) return false;
        }
    }
    return true;
}

void verify_module_axioms(const FiniteModule& m) {
    const FiniteRing r = m.ring();
    const auto& rn = r.node();
    const auto& node = m.node();
    const Index nr = r.order();
    const Index nm = m.order();
    auto fail = [&](const char* what) {
        throw Error(ErrorKind::construction, m.key() + ": module axiom " + what + " fails");
    };
    auto scalar_pair = [&](Index a, Index b, Index x) {
        if (node.act(rn.add(a, b), x) != node.add(node.act(a, x), node.act(b, x))) fail("(r+s)x");
        if (node.act(rn.mul(a, b), x) != node.act(a, node.act(b, x))) fail("(rs)x");
    };
    auto vector_pair = [&](Index a, Index x, Index y) {
        if (node.act(a, node.add(x, y)) != node.add(node.act(a, x), node.act(a, y))) fail("r(x+y)");
        if (node.add(x, y) != node.add(y, x)) fail("x+y=y+x");
    };
    for (Index x = 0; x < nm; ++x) {
        if (node.act(rn.one(), x) != x) fail("1x=x");
        if (node.add(x, node.neg(x)) != 0) fail("x-x=0");
    }
    if (std::uint64_t(nr) * nm <= 4096) {
        for (Index a = 0; a < nr; ++a) {
            for (Index x = 0; x < nm; ++x) {
                for (Index b = 0; b < nr; ++b) scalar_pair(a, b, x);
                for (Index y = 0; y < nm; ++y) vector_pair(a, x, y);
            }
        }
        return;
    }
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Index> pr(0, nr - 1), pm(0, nm - 1);
    for (int i = 0; i < 1000; ++i) {
        scalar_pair(pr(rng), pr(rng), pm(rng));
        vector_pair(pr(rng), pm(rng), pm(rng));
    }
}

}  // namespace absorb
