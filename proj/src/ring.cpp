#include "absorb/ring.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "absorb/detail/nodes.hpp"
#include "absorb/error.hpp"
#include "absorb/module.hpp"
#include "ring_nodes.hpp"

namespace absorb {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_order: return "invalid-order";
        case ErrorKind::cross_owner: return "cross-owner";
        case ErrorKind::not_proper: return "not-proper";
        case ErrorKind::size_bound: return "size-bound";
        case ErrorKind::degenerate_localization: return "degenerate-localization";
        case ErrorKind::construction: return "construction";
        case ErrorKind::parse: return "parse";
        case ErrorKind::elaboration: return "elaboration";
        case ErrorKind::unknown_suite: return "unknown-suite";
        case ErrorKind::usage: return "usage";
    }
    return "error";
}

std::string ElementLiteral::render() const {
    if (!is_pair()) return std::to_string(scalar);
    return "(" + parts[0].render() + "," + parts[1].render() + ")";
}

namespace detail {

RingNode::~RingNode() = default;

const RingTables& RingNode::tables() const {
    if (order() > kMaxTableOrder) {
        throw Error(ErrorKind::size_bound,
                    "ring " + key() + " has order " + std::to_string(order()) +
                        ", above the table bound " + std::to_string(kMaxTableOrder));
    }
    std::call_once(tables_once_, [this] {
        auto t = std::make_unique<RingTables>();
        const Index n = order();
        t->order = n;
        t->add.resize(std::size_t(n) * n);
        t->mul.resize(std::size_t(n) * n);
        t->neg.resize(n);
        t->square.resize(n);
        t->stable.resize(n);
        for (Index a = 0; a < n; ++a) {
            t->neg[a] = neg(a);
            for (Index b = a; b < n; ++b) {
                const Index s = add(a, b);
                const Index p = mul(a, b);
                t->add[std::size_t(a) * n + b] = s;
                t->add[std::size_t(b) * n + a] = s;
                t->mul[std::size_t(a) * n + b] = p;
                t->mul[std::size_t(b) * n + a] = p;
            }
        }
        std::vector<Index> seen_at(n, 0);
        for (Index a = 0; a < n; ++a) {
            t->square[a] = t->mul_at(a, a);
            // Walk the power sequence until it repeats; the cycle holds
            // exactly one idempotent.
            std::vector<Index> powers;
            Index cur = a;
            const Index stamp = a + 1;
            while (seen_at[cur] != stamp) {
                seen_at[cur] = stamp;
                powers.push_back(cur);
                cur = t->mul_at(cur, a);
            }
            // cur is the first repeated power; the cycle starts there.
            auto start = std::find(powers.begin(), powers.end(), cur);
            Index idem = cur;
            for (auto it = start; it != powers.end(); ++it) {
                if (t->mul_at(*it, *it) == *it) {
                    idem = *it;
                    break;
                }
            }
            t->stable[a] = idem;
        }
        tables_ = std::move(t);
    });
    return *tables_;
}

FiniteModule RingNode::self_module() const {
    std::call_once(self_once_, [this] { self_ = make_self_module_node(this); });
    // Aliasing handle: keeps this ring alive while pointing at the embedded
    // self-module node.
    std::shared_ptr<const RingNode> owner = shared_from_this();
    return FiniteModule(std::shared_ptr<const ModuleNode>(owner, self_.get()));
}

std::optional<MaskVerdict> RingNode::memo_find(const std::string& key) const {
    std::lock_guard lock(memo_mutex_);
    auto it = memo_.find(key);
    if (it == memo_.end()) return std::nullopt;
    return it->second;
}

void RingNode::memo_store(const std::string& key, const MaskVerdict& verdict) const {
    std::lock_guard lock(memo_mutex_);
    memo_.emplace(key, verdict);
}

SubsetIndex::SubsetIndex(std::vector<Index> members, std::size_t universe)
    : members_(std::move(members)), positions_(universe, kAbsent) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (Index i = 0; i < members_.size(); ++i) positions_[members_[i]] = i;
}

Index SubsetIndex::position(Index outer) const {
    if (outer >= positions_.size() || positions_[outer] == kAbsent) {
        throw Error(ErrorKind::elaboration, "element outside the carrier");
    }
    return positions_[outer];
}

// ---------------------------------------------------------------------------
// Z_n

ZModNode::ZModNode(Index n) : n_(n) { set_key("Zn(" + std::to_string(n) + ")"); }

Index ZModNode::encode(const ElementLiteral& lit) const {
    if (lit.is_pair()) throw Error(ErrorKind::elaboration, "expected an integer in " + key());
    long long r = lit.scalar % static_cast<long long>(n_);
    if (r < 0) r += n_;
    return static_cast<Index>(r);
}

// ---------------------------------------------------------------------------
// Product ring, index = a * |right| + b

ProductRingNode::ProductRingNode(FiniteRing left, FiniteRing right)
    : left_(std::move(left)), right_(std::move(right)) {
    set_key("prod(" + left_.key() + "," + right_.key() + ")");
}

Index ProductRingNode::order() const { return left_.order() * right_.order(); }

Index ProductRingNode::one() const { return compose(left_.node().one(), right_.node().one()); }

Index ProductRingNode::add(Index a, Index b) const {
    return compose(left_.node().add(first(a), first(b)), right_.node().add(second(a), second(b)));
}

Index ProductRingNode::neg(Index a) const {
    return compose(left_.node().neg(first(a)), right_.node().neg(second(a)));
}

Index ProductRingNode::mul(Index a, Index b) const {
    return compose(left_.node().mul(first(a), first(b)), right_.node().mul(second(a), second(b)));
}

std::string ProductRingNode::render(Index a) const {
    return "(" + left_.node().render(first(a)) + "," + right_.node().render(second(a)) + ")";
}

Index ProductRingNode::encode(const ElementLiteral& lit) const {
    if (!lit.is_pair()) throw Error(ErrorKind::elaboration, "expected a pair in " + key());
    return compose(left_.node().encode(lit.parts[0]), right_.node().encode(lit.parts[1]));
}

std::string ProductRingNode::describe() const {
    return left_.describe() + " × " + right_.describe();
}

// ---------------------------------------------------------------------------
// Quotient ring: cosets numbered by their least representative

QuotientRingNode::QuotientRingNode(FiniteRing base, const Ideal& ideal)
    : base_(std::move(base)), modulus_key_(ideal.render()) {
    const Index n = base_.order();
    coset_of_.assign(n, ~Index{0});
    for (Index a = 0; a < n; ++a) {
        if (coset_of_[a] != ~Index{0}) continue;
        const Index id = static_cast<Index>(reps_.size());
        reps_.push_back(a);
        for (Index i : ideal.carrier()) coset_of_[base_.node().add(a, i)] = id;
    }
    set_key("quot(" + base_.key() + "," + modulus_key_ + ")");
}

Index QuotientRingNode::one() const { return coset_of_[base_.node().one()]; }

Index QuotientRingNode::add(Index a, Index b) const {
    return coset_of_[base_.node().add(reps_[a], reps_[b])];
}

Index QuotientRingNode::neg(Index a) const { return coset_of_[base_.node().neg(reps_[a])]; }

Index QuotientRingNode::mul(Index a, Index b) const {
    return coset_of_[base_.node().mul(reps_[a], reps_[b])];
}

std::string QuotientRingNode::render(Index a) const { return base_.node().render(reps_[a]); }

Index QuotientRingNode::encode(const ElementLiteral& lit) const {
    return coset_of_[base_.node().encode(lit)];
}

std::string QuotientRingNode::describe() const {
    return base_.describe() + "/" + modulus_key_;
}

// ---------------------------------------------------------------------------
// eR with identity e

IdempotentSubringNode::IdempotentSubringNode(FiniteRing base, Index idempotent, std::string key)
    : base_(std::move(base)), e_(idempotent) {
    std::vector<Index> members;
    for (Index r = 0; r < base_.order(); ++r) members.push_back(base_.node().mul(e_, r));
    carrier_ = SubsetIndex(std::move(members), base_.order());
    set_key(std::move(key));
}

Index IdempotentSubringNode::one() const { return carrier_.position(e_); }

Index IdempotentSubringNode::add(Index a, Index b) const {
    return carrier_.position(base_.node().add(carrier_.member(a), carrier_.member(b)));
}

Index IdempotentSubringNode::neg(Index a) const {
    return carrier_.position(base_.node().neg(carrier_.member(a)));
}

Index IdempotentSubringNode::mul(Index a, Index b) const {
    return carrier_.position(base_.node().mul(carrier_.member(a), carrier_.member(b)));
}

std::string IdempotentSubringNode::render(Index a) const {
    return base_.node().render(carrier_.member(a));
}

Index IdempotentSubringNode::encode(const ElementLiteral& lit) const {
    const Index outer = base_.node().encode(lit);
    if (!carrier_.contains(outer)) {
        throw Error(ErrorKind::elaboration,
                    lit.render() + " is not in " + base_.node().render(e_) + "·" + base_.key());
    }
    return carrier_.position(outer);
}

std::string IdempotentSubringNode::describe() const {
    return base_.node().render(e_) + "·" + base_.describe();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// FiniteRing

FiniteRing::FiniteRing(std::shared_ptr<const detail::RingNode> node) : node_(std::move(node)) {}

Index FiniteRing::order() const { return node_->order(); }
RingKind FiniteRing::kind() const { return node_->kind(); }
RingElt FiniteRing::zero() const { return {node_.get(), 0}; }
RingElt FiniteRing::one() const { return {node_.get(), node_->one()}; }

RingElt FiniteRing::element(Index index) const {
    if (index >= order()) {
        throw Error(ErrorKind::elaboration,
                    "index " + std::to_string(index) + " out of range for " + key());
    }
    return {node_.get(), index};
}

RingElt FiniteRing::value(const ElementLiteral& literal) const {
    return {node_.get(), node_->encode(literal)};
}

RingElt FiniteRing::from_int(long long n) const {
    const bool negative = n < 0;
    unsigned long long m = negative ? 0ULL - static_cast<unsigned long long>(n) : n;
    Index acc = 0;
    Index term = node_->one();
    while (m != 0) {
        if (m & 1ULL) acc = node_->add(acc, term);
        term = node_->add(term, term);
        m >>= 1;
    }
    return {node_.get(), negative ? node_->neg(acc) : acc};
}

bool FiniteRing::owns(RingElt a) const {
    if (a.owner == node_.get()) return true;
    return a.owner != nullptr && a.owner->key() == node_->key() && a.index < order();
}

void FiniteRing::check_owner(RingElt a) const {
    if (!owns(a)) {
        throw Error(ErrorKind::cross_owner, "element does not belong to " + key());
    }
}

RingElt FiniteRing::add(RingElt a, RingElt b) const {
    check_owner(a);
    check_owner(b);
    return {node_.get(), node_->add(a.index, b.index)};
}

RingElt FiniteRing::sub(RingElt a, RingElt b) const {
    check_owner(a);
    check_owner(b);
    return {node_.get(), node_->add(a.index, node_->neg(b.index))};
}

RingElt FiniteRing::neg(RingElt a) const {
    check_owner(a);
    return {node_.get(), node_->neg(a.index)};
}

RingElt FiniteRing::mul(RingElt a, RingElt b) const {
    check_owner(a);
    check_owner(b);
    return {node_.get(), node_->mul(a.index, b.index)};
}

RingElt FiniteRing::pow(RingElt a, std::uint64_t k) const {
    check_owner(a);
    Index result = node_->one();
    Index base = a.index;
    while (k != 0) {
        if (k & 1ULL) result = node_->mul(result, base);
        base = node_->mul(base, base);
        k >>= 1;
    }
    return {node_.get(), result};
}

std::string FiniteRing::render(RingElt a) const {
    check_owner(a);
    return node_->render(a.index);
}

std::string FiniteRing::render(Index a) const { return node_->render(a); }
const std::string& FiniteRing::key() const { return node_->key(); }
std::string FiniteRing::describe() const { return node_->describe(); }

bool FiniteRing::same_as(const FiniteRing& other) const {
    return node_ == other.node_ || node_->key() == other.node_->key();
}

// ---------------------------------------------------------------------------
// Homomorphisms

RingHom::RingHom(FiniteRing domain, FiniteRing codomain, std::vector<Index> table,
                 std::string label)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      table_(std::move(table)),
      label_(std::move(label)) {
    const auto& d = domain_.node();
    const auto& c = codomain_.node();
    if (table_.size() != d.order()) {
        throw Error(ErrorKind::construction, "hom table size does not match the domain order");
    }
    for (Index x : table_) {
        if (x >= c.order()) throw Error(ErrorKind::construction, "hom table entry out of range");
    }
    if (table_[0] != 0) throw Error(ErrorKind::construction, "hom must send 0 to 0");
    if (table_[d.one()] != c.one()) throw Error(ErrorKind::construction, "hom must send 1 to 1");
    for (Index a = 0; a < d.order(); ++a) {
        for (Index b = a; b < d.order(); ++b) {
            if (table_[d.add(a, b)] != c.add(table_[a], table_[b]) ||
                table_[d.mul(a, b)] != c.mul(table_[a], table_[b])) {
                throw Error(ErrorKind::construction,
                            "map " + domain_.key() + " -> " + codomain_.key() +
                                " is not a ring homomorphism at (" + d.render(a) + "," +
                                d.render(b) + ")");
            }
        }
    }
    if (label_.empty()) {
        std::ostringstream os;
        os << "table[";
        for (Index i = 0; i < table_.size(); ++i) {
            if (i) os << ",";
            os << i << "->" << table_[i];
        }
        os << "]";
        label_ = os.str();
    }
}

RingElt RingHom::operator()(RingElt a) const {
    if (!domain_.owns(a)) throw Error(ErrorKind::cross_owner, "element outside the hom domain");
    return codomain_.element(table_[a.index]);
}

RingHom identity_hom(const FiniteRing& r) {
    std::vector<Index> table(r.order());
    std::iota(table.begin(), table.end(), Index{0});
    return RingHom(r, r, std::move(table), "id");
}

RingHom reduction_hom(const FiniteRing& from, const FiniteRing& to) {
    if (from.kind() != RingKind::zmod || to.kind() != RingKind::zmod ||
        from.order() % to.order() != 0) {
        throw Error(ErrorKind::construction,
                    "no canonical reduction " + from.key() + " -> " + to.key());
    }
    std::vector<Index> table(from.order());
    for (Index a = 0; a < from.order(); ++a) table[a] = a % to.order();
    return RingHom(from, to, std::move(table), "redmap");
}

// ---------------------------------------------------------------------------
// Constructors and element-level queries

FiniteRing make_zmod(long long n) {
    if (n < 2) {
        throw Error(ErrorKind::invalid_order,
                    "Zn(" + std::to_string(n) + "): order must be at least 2");
    }
    if (n > 0xFFFFFFFLL) throw Error(ErrorKind::size_bound, "Zn order too large");
    return FiniteRing(std::make_shared<detail::ZModNode>(static_cast<Index>(n)));
}

FiniteRing product_ring(const FiniteRing& left, const FiniteRing& right) {
    if (std::uint64_t(left.order()) * right.order() > 0xFFFFFFFULL) {
        throw Error(ErrorKind::size_bound, "product ring too large");
    }
    FiniteRing r(std::make_shared<detail::ProductRingNode>(left, right));
    verify_ring_axioms(r);
    return r;
}

std::vector<RingElt> units(const FiniteRing& r) {
    std::vector<RingElt> out;
    for (Index a = 0; a < r.order(); ++a) {
        if (is_unit(r, r.element(a))) out.push_back(r.element(a));
    }
    return out;
}

bool is_unit(const FiniteRing& r, RingElt a) {
    const auto& node = r.node();
    const Index one = node.one();
    for (Index w = 0; w < r.order(); ++w) {
        if (node.mul(a.index, w) == one) return true;
    }
    return false;
}

bool is_idempotent(const FiniteRing& r, RingElt a) { return r.mul(a, a) == a; }

std::uint64_t characteristic(const FiniteRing& r) {
    const auto& node = r.node();
    std::uint64_t c = 1;
    Index acc = node.one();
    while (acc != 0) {
        acc = node.add(acc, node.one());
        ++c;
    }
    return c;
}

PowerOrbit power_orbit(const FiniteRing& r, RingElt t) {
    if (!r.owns(t)) throw Error(ErrorKind::cross_owner, "element outside " + r.key());
    const auto& node = r.node();
    std::vector<std::uint64_t> first_exponent(r.order(), 0);
    PowerOrbit out;
    Index cur = t.index;
    std::uint64_t k = 1;
    while (first_exponent[cur] == 0) {
        first_exponent[cur] = k;
        out.orbit.push_back(r.element(cur));
        cur = node.mul(cur, t.index);
        ++k;
    }
    out.preperiod = first_exponent[cur];
    out.period = k - first_exponent[cur];
    return out;
}

RingElt stable_idempotent(const FiniteRing& r, RingElt t) {
    const PowerOrbit orbit = power_orbit(r, t);
    for (std::size_t i = orbit.preperiod - 1; i < orbit.orbit.size(); ++i) {
        if (is_idempotent(r, orbit.orbit[i])) return orbit.orbit[i];
    }
    throw Error(ErrorKind::construction, "power cycle without an idempotent");
}

void verify_ring_axioms(const FiniteRing& r) {
    const auto& node = r.node();
    const Index n = r.order();
    if (node.one() == 0) throw Error(ErrorKind::construction, r.key() + ": 1 = 0");
    auto fail = [&](const char* what, Index a, Index b, Index c) {
        throw Error(ErrorKind::construction,
                    r.key() + ": " + what + " fails at (" + node.render(a) + "," +
                        node.render(b) + "," + node.render(c) + ")");
    };
    auto check_triple = [&](Index a, Index b, Index c) {
        if (node.add(node.add(a, b), c) != node.add(a, node.add(b, c))) fail("+assoc", a, b, c);
        if (node.mul(node.mul(a, b), c) != node.mul(a, node.mul(b, c))) fail("*assoc", a, b, c);
        if (node.mul(a, node.add(b, c)) != node.add(node.mul(a, b), node.mul(a, c))) {
            fail("distributivity", a, b, c);
        }
    };
    auto check_pair = [&](Index a, Index b) {
        if (node.add(a, b) != node.add(b, a)) fail("+comm", a, b, 0);
        if (node.mul(a, b) != node.mul(b, a)) fail("*comm", a, b, 0);
    };
    auto check_single = [&](Index a) {
        if (node.mul(node.one(), a) != a) fail("identity", a, 0, 0);
        if (node.add(a, 0) != a) fail("zero", a, 0, 0);
        if (node.add(a, node.neg(a)) != 0) fail("negation", a, 0, 0);
    };
    if (n <= 64) {
        for (Index a = 0; a < n; ++a) {
            check_single(a);
            for (Index b = 0; b < n; ++b) {
                check_pair(a, b);
                for (Index c = 0; c < n; ++c) check_triple(a, b, c);
            }
        }
        return;
    }
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Index> pick(0, n - 1);
    for (int i = 0; i < 1000; ++i) {
        const Index a = pick(rng), b = pick(rng), c = pick(rng);
        check_single(a);
        check_pair(a, b);
        check_triple(a, b, c);
    }
}

}  // namespace absorb
