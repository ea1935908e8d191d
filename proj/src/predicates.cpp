#include "absorb/predicates.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "absorb/detail/nodes.hpp"
#include "absorb/error.hpp"

namespace absorb {

const char* to_string(PropertyKind p) {
    switch (p) {
        case PropertyKind::gsdf: return "gsdf";
        case PropertyKind::sdf_submodule: return "sdf";
        case PropertyKind::primary: return "primary";
        case PropertyKind::classical_primary: return "cprimary";
        case PropertyKind::prime: return "prime";
        case PropertyKind::sdf_ideal: return "sdfideal";
        case PropertyKind::sdf_primary_ideal: return "sdfprimary";
    }
    return "?";
}

std::optional<PropertyKind> parse_property(const std::string& name) {
    for (PropertyKind p : {PropertyKind::gsdf, PropertyKind::sdf_submodule, PropertyKind::primary,
                           PropertyKind::classical_primary, PropertyKind::prime,
                           PropertyKind::sdf_ideal, PropertyKind::sdf_primary_ideal}) {
        if (name == to_string(p)) return p;
    }
    return std::nullopt;
}

namespace {

/// Ring arithmetic through the flat tables when they exist.
class RingOps {
public:
    explicit RingOps(const FiniteRing& r) : node_(&r.node()), n_(r.order()) {
        if (n_ <= detail::kMaxTableOrder) t_ = &node_->tables();
    }

    Index order() const { return n_; }
    Index add(Index a, Index b) const { return t_ ? t_->add_at(a, b) : node_->add(a, b); }
    Index sub(Index a, Index b) const {
        return t_ ? t_->sub_at(a, b) : node_->add(a, node_->neg(b));
    }
    Index mul(Index a, Index b) const { return t_ ? t_->mul_at(a, b) : node_->mul(a, b); }
    Index sq(Index a) const { return t_ ? t_->square[a] : node_->mul(a, a); }
    /// The idempotent of the power cycle of a.
    Index stab(Index a) const {
        if (t_) return t_->stable[a];
        std::vector<bool> seen(n_, false);
        std::vector<Index> powers;
        Index cur = a;
        while (!seen[cur]) {
            seen[cur] = true;
            powers.push_back(cur);
            cur = node_->mul(cur, a);
        }
        for (auto it = std::find(powers.begin(), powers.end(), cur); it != powers.end(); ++it) {
            if (node_->mul(*it, *it) == *it) return *it;
        }
        return cur;
    }

private:
    const detail::RingNode* node_;
    const detail::RingTables* t_ = nullptr;
    Index n_;
};

class ModuleOps {
public:
    explicit ModuleOps(const FiniteModule& m) : node_(&m.node()) {
        if (std::uint64_t(m.ring().order()) * m.order() <= (1ULL << 24)) t_ = &node_->tables();
    }
    Index act(Index r, Index x) const { return t_ ? t_->act_at(r, x) : node_->act(r, x); }

private:
    const detail::ModuleNode* node_;
    const detail::ModuleTables* t_ = nullptr;
};

using Mask = std::string;  // one byte per ring element

void require_proper(const Submodule& n, PropertyKind kind) {
    if (!n.is_proper()) {
        throw Error(ErrorKind::not_proper,
                    std::string(to_string(kind)) + " needs a proper submodule, got the full module " +
                        n.module().key());
    }
}

void require_ideal(const Submodule& n, PropertyKind kind) {
    if (n.module().kind() != ModuleKind::ring_self) {
        throw Error(ErrorKind::construction,
                    std::string(to_string(kind)) + " applies to ideals, got a submodule of " +
                        n.module().key());
    }
}

/// (N : x) as a byte mask.
Mask colon_mask(const ModuleOps& ops, const Submodule& n, Index x, Index ring_order) {
    Mask m(ring_order, 0);
    for (Index r = 0; r < ring_order; ++r) m[r] = n.contains(ops.act(r, x)) ? 1 : 0;
    return m;
}

std::uint64_t orbit_length(const FiniteRing& r, Index t) {
    return power_orbit(r, r.element(t)).orbit.size();
}

/// First failing (u, v) in the scan order of the predicate, for one mask.
using PairScan = detail::MaskVerdict (*)(const RingOps&, const Mask&, const Mask*);

detail::MaskVerdict scan_gsdf(const RingOps& ops, const Mask& m, const Mask*) {
    detail::MaskVerdict out;
    const Index n = ops.order();
    for (Index u = 0; u < n; ++u) {
        const Index u2 = ops.sq(u);
        for (Index v = 0; v <= u; ++v) {
            ++out.checked;
            if (m[ops.sub(u2, ops.sq(v))] && !m[ops.sub(u, v)] && !m[ops.stab(ops.add(u, v))]) {
                out.fails = true;
                out.u = u;
                out.v = v;
                return out;
            }
        }
    }
    return out;
}

detail::MaskVerdict scan_gsdf_nonzero(const RingOps& ops, const Mask& m, const Mask*) {
    detail::MaskVerdict out;
    const Index n = ops.order();
    for (Index u = 1; u < n; ++u) {
        const Index u2 = ops.sq(u);
        for (Index v = 1; v <= u; ++v) {
            ++out.checked;
            if (m[ops.sub(u2, ops.sq(v))] && !m[ops.sub(u, v)] && !m[ops.stab(ops.add(u, v))]) {
                out.fails = true;
                out.u = u;
                out.v = v;
                return out;
            }
        }
    }
    return out;
}

/// sdf over a colon mask m and an annihilator mask a.
detail::MaskVerdict scan_sdf(const RingOps& ops, const Mask& m, const Mask* ann) {
    detail::MaskVerdict out;
    const Mask& a = *ann;
    const Index n = ops.order();
    for (Index u = 0; u < n; ++u) {
        if (a[u]) continue;
        const Index u2 = ops.sq(u);
        for (Index v = 0; v <= u; ++v) {
            if (a[v]) continue;
            ++out.checked;
            if (m[ops.sub(u2, ops.sq(v))] && !m[ops.sub(u, v)] && !m[ops.add(u, v)]) {
                out.fails = true;
                out.u = u;
                out.v = v;
                return out;
            }
        }
    }
    return out;
}

detail::MaskVerdict scan_cprimary(const RingOps& ops, const Mask& m, const Mask*) {
    detail::MaskVerdict out;
    const Index n = ops.order();
    for (Index u = 0; u < n; ++u) {
        if (m[u]) {
            out.checked += n;
            continue;
        }
        for (Index v = 0; v < n; ++v) {
            ++out.checked;
            if (m[ops.mul(u, v)] && !m[ops.stab(v)]) {
                out.fails = true;
                out.u = u;
                out.v = v;
                return out;
            }
        }
    }
    return out;
}

detail::MaskVerdict scan_sdf_ideal(const RingOps& ops, const Mask& m, const Mask*) {
    detail::MaskVerdict out;
    const Index n = ops.order();
    for (Index u = 1; u < n; ++u) {
        const Index u2 = ops.sq(u);
        for (Index v = 1; v <= u; ++v) {
            ++out.checked;
            if (m[ops.sub(u2, ops.sq(v))] && !m[ops.add(u, v)] && !m[ops.sub(u, v)]) {
                out.fails = true;
                out.u = u;
                out.v = v;
                return out;
            }
        }
    }
    return out;
}

detail::MaskVerdict cached_scan(const FiniteRing& r, const RingOps& ops, char tag, PairScan scan,
                                const Mask& m, const Mask* extra) {
    std::string key;
    key.reserve(1 + m.size() * (extra ? 2 : 1));
    key.push_back(tag);
    key += m;
    if (extra) key += *extra;
    if (auto hit = r.node().memo_find(key)) return *hit;
    const detail::MaskVerdict v = scan(ops, m, extra);
    r.node().memo_store(key, v);
    return v;
}

/// Runs a pair scan over every x outside N, grouped by colon ideal, and
/// reports the lexicographically least failure (u, v, x).
PropertyReport pair_predicate(const Submodule& n, PropertyKind kind, char tag, PairScan scan,
                              bool with_ann) {
    require_proper(n, kind);
    const FiniteModule& m = n.module();
    const FiniteRing r = m.ring();
    const RingOps rops(r);
    const ModuleOps mops(m);
    const Submodule zero = zero_submodule(m);
    std::map<std::pair<Mask, Mask>, Index> first_x;
    std::vector<std::pair<Mask, Mask>> order;
    for (Index x = 0; x < m.order(); ++x) {
        if (n.contains(x)) continue;
        std::pair<Mask, Mask> k{colon_mask(mops, n, x, r.order()),
                                with_ann ? colon_mask(mops, zero, x, r.order()) : Mask{}};
        if (first_x.emplace(k, x).second) order.push_back(std::move(k));
    }
    PropertyReport out;
    out.property = kind;
    std::optional<std::tuple<Index, Index, Index>> best;
    for (const auto& k : order) {
        const auto v = cached_scan(r, rops, tag, scan, k.first, with_ann ? &k.second : nullptr);
        out.checked_count += v.checked;
        if (!v.fails) continue;
        const std::tuple<Index, Index, Index> cand{v.u, v.v, first_x.at(k)};
        if (!best || cand < *best) best = cand;
    }
    if (best) {
        out.holds = false;
        Witness w;
        w.u = std::get<0>(*best);
        w.v = std::get<1>(*best);
        w.x = std::get<2>(*best);
        if (kind == PropertyKind::gsdf) w.k_bound = orbit_length(r, rops.add(w.u, *w.v));
        if (kind == PropertyKind::classical_primary) w.k_bound = orbit_length(r, *w.v);
        if (kind == PropertyKind::sdf_submodule) w.k_bound = 1;
        out.witness = w;
    }
    return out;
}

/// Shared body of primary and prime: ux in N, x not in N, u outside `allowed`.
PropertyReport single_predicate(const Submodule& n, PropertyKind kind, const Ideal& allowed) {
    require_proper(n, kind);
    const FiniteModule& m = n.module();
    const FiniteRing r = m.ring();
    const ModuleOps mops(m);
    std::map<Mask, Index> first_x;
    std::vector<Mask> order;
    for (Index x = 0; x < m.order(); ++x) {
        if (n.contains(x)) continue;
        Mask k = colon_mask(mops, n, x, r.order());
        if (first_x.emplace(k, x).second) order.push_back(std::move(k));
    }
    PropertyReport out;
    out.property = kind;
    std::optional<std::pair<Index, Index>> best;
    for (const Mask& k : order) {
        for (Index u = 0; u < r.order(); ++u) {
            ++out.checked_count;
            if (k[u] && !allowed.contains(u)) {
                const std::pair<Index, Index> cand{u, first_x.at(k)};
                if (!best || cand < *best) best = cand;
                break;
            }
        }
    }
    if (best) {
        out.holds = false;
        Witness w;
        w.u = best->first;
        w.x = best->second;
        out.witness = w;
    }
    return out;
}

/// Ideal predicates: the mask is the ideal itself.
PropertyReport ideal_predicate(const Ideal& i, PropertyKind kind, char tag, PairScan scan) {
    require_ideal(i, kind);
    require_proper(i, kind);
    const FiniteRing r = i.module().ring();
    const RingOps ops(r);
    Mask m(r.order(), 0);
    for (Index a : i.carrier()) m[a] = 1;
    const auto v = cached_scan(r, ops, tag, scan, m, nullptr);
    PropertyReport out;
    out.property = kind;
    out.checked_count = v.checked;
    if (v.fails) {
        out.holds = false;
        Witness w;
        w.u = v.u;
        w.v = v.v;
        if (kind == PropertyKind::sdf_primary_ideal) w.k_bound = orbit_length(r, ops.add(v.u, v.v));
        out.witness = w;
    }
    return out;
}

/// Direct search for some k in 1..|R| with t^k x in N, using only node operations.
bool naive_power_in(const FiniteModule& m, const Submodule& n, Index t, Index x) {
    const auto& rn = m.ring().node();
    Index p = t;
    for (Index k = 1; k <= m.ring().order(); ++k) {
        if (n.contains(m.node().act(p, x))) return true;
        p = rn.mul(p, t);
    }
    return false;
}

}  // namespace

PowerHit exists_power_in(RingElt t, ModElt x, const Submodule& n) {
    const FiniteModule& m = n.module();
    const FiniteRing r = m.ring();
    if (!r.owns(t) || !m.owns(x)) throw Error(ErrorKind::cross_owner, "foreign element");
    const PowerOrbit orbit = power_orbit(r, t);
    for (std::size_t k = 0; k < orbit.orbit.size(); ++k) {
        if (n.contains(m.node().act(orbit.orbit[k].index, x.index))) return {true, k + 1};
    }
    return {false, std::nullopt};
}

PropertyReport is_gsdf_absorbing(const Submodule& n) {
    return pair_predicate(n, PropertyKind::gsdf, 'g', scan_gsdf, false);
}

PropertyReport is_sdf_absorbing_submodule(const Submodule& n) {
    return pair_predicate(n, PropertyKind::sdf_submodule, 's', scan_sdf, true);
}

PropertyReport is_classical_primary(const Submodule& n) {
    return pair_predicate(n, PropertyKind::classical_primary, 'c', scan_cprimary, false);
}

PropertyReport is_primary_submodule(const Submodule& n) {
    require_proper(n, PropertyKind::primary);
    return single_predicate(n, PropertyKind::primary, radical(colon_ideal_global(n)));
}

PropertyReport is_prime_submodule(const Submodule& n) {
    require_proper(n, PropertyKind::prime);
    return single_predicate(n, PropertyKind::prime, colon_ideal_global(n));
}

PropertyReport is_sdf_absorbing_ideal(const Ideal& i) {
    return ideal_predicate(i, PropertyKind::sdf_ideal, 'i', scan_sdf_ideal);
}

PropertyReport is_sdf_absorbing_primary_ideal(const Ideal& i, bool restrict_nonzero) {
    return restrict_nonzero
               ? ideal_predicate(i, PropertyKind::sdf_primary_ideal, 'n', scan_gsdf_nonzero)
               : ideal_predicate(i, PropertyKind::sdf_primary_ideal, 'g', scan_gsdf);
}

PropertyReport check_property(PropertyKind kind, const Submodule& n, bool restrict_nonzero) {
    switch (kind) {
        case PropertyKind::gsdf: return is_gsdf_absorbing(n);
        case PropertyKind::sdf_submodule: return is_sdf_absorbing_submodule(n);
        case PropertyKind::primary: return is_primary_submodule(n);
        case PropertyKind::classical_primary: return is_classical_primary(n);
        case PropertyKind::prime: return is_prime_submodule(n);
        case PropertyKind::sdf_ideal: return is_sdf_absorbing_ideal(n);
        case PropertyKind::sdf_primary_ideal:
            return is_sdf_absorbing_primary_ideal(n, restrict_nonzero);
    }
    throw Error(ErrorKind::usage, "unknown property");
}

PropertyReport sdf_primary_setwise(const RingSubset& s, bool restrict_nonzero) {
    if (!s.is_proper()) {
        throw Error(ErrorKind::not_proper, "sdf-primary needs a proper subset of " + s.ring.key());
    }
    const FiniteRing& r = s.ring;
    const auto& node = r.node();
    const Index n = r.order();
    // hit[t]: some power t^k (k >= 1) lies in the subset, found by walking the orbit.
    std::vector<std::uint8_t> hit(n, 0);
    for (Index t = 0; t < n; ++t) {
        for (const RingElt& p : power_orbit(r, r.element(t)).orbit) {
            if (s.contains(p.index)) {
                hit[t] = 1;
                break;
            }
        }
    }
    PropertyReport out;
    out.property = PropertyKind::sdf_primary_ideal;
    const Index start = restrict_nonzero ? 1 : 0;
    for (Index u = start; u < n; ++u) {
        const Index u2 = node.mul(u, u);
        for (Index v = start; v < n; ++v) {
            ++out.checked_count;
            const Index d = node.add(u2, node.neg(node.mul(v, v)));
            if (s.contains(d) && !s.contains(node.add(u, node.neg(v))) && !hit[node.add(u, v)]) {
                out.holds = false;
                Witness w;
                w.u = u;
                w.v = v;
                w.k_bound = orbit_length(r, node.add(u, v));
                out.witness = w;
                return out;
            }
        }
    }
    return out;
}

bool replay_violates(PropertyKind kind, const Submodule& n, const Witness& w,
                     bool restrict_nonzero) {
    const FiniteModule& m = n.module();
    const FiniteRing r = m.ring();
    const auto& rn = r.node();
    const auto& mn = m.node();
    auto sub = [&](Index a, Index b) { return rn.add(a, rn.neg(b)); };
    auto in = [&](Index a, Index x) { return n.contains(mn.act(a, x)); };
    const Index u = w.u;
    switch (kind) {
        case PropertyKind::gsdf:
        case PropertyKind::sdf_submodule: {
            if (!w.v || !w.x) return false;
            const Index v = *w.v, x = *w.x;
            const Index d = sub(rn.mul(u, u), rn.mul(v, v));
            if (!in(d, x) || in(sub(u, v), x)) return false;
            if (kind == PropertyKind::gsdf) return !naive_power_in(m, n, rn.add(u, v), x);
            return mn.act(u, x) != 0 && mn.act(v, x) != 0 && !in(rn.add(u, v), x);
        }
        case PropertyKind::classical_primary: {
            if (!w.v || !w.x) return false;
            const Index v = *w.v, x = *w.x;
            return in(rn.mul(u, v), x) && !in(u, x) && !naive_power_in(m, n, v, x);
        }
        case PropertyKind::primary:
        case PropertyKind::prime: {
            if (!w.x) return false;
            const Index x = *w.x;
            if (!in(u, x) || n.contains(x)) return false;
            // u M inside N, or some power of u does that.
            auto sends_m_into_n = [&](Index s) {
                for (Index y = 0; y < m.order(); ++y) {
                    if (!in(s, y)) return false;
                }
                return true;
            };
            if (kind == PropertyKind::prime) return !sends_m_into_n(u);
            Index p = u;
            for (Index k = 1; k <= r.order(); ++k) {
                if (sends_m_into_n(p)) return false;
                p = rn.mul(p, u);
            }
            return true;
        }
        case PropertyKind::sdf_ideal:
        case PropertyKind::sdf_primary_ideal: {
            if (!w.v || m.kind() != ModuleKind::ring_self) return false;
            const Index v = *w.v;
            const bool nonzero = kind == PropertyKind::sdf_ideal || restrict_nonzero;
            if (nonzero && (u == 0 || v == 0)) return false;
            if (!n.contains(sub(rn.mul(u, u), rn.mul(v, v))) || n.contains(sub(u, v))) return false;
            if (kind == PropertyKind::sdf_ideal) return !n.contains(rn.add(u, v));
            return !naive_power_in(m, n, rn.add(u, v), rn.one());
        }
    }
    return false;
}

bool replay_violates_setwise(const RingSubset& s, const Witness& w) {
    if (!w.v) return false;
    const auto& rn = s.ring.node();
    const Index u = w.u, v = *w.v;
    auto sub = [&](Index a, Index b) { return rn.add(a, rn.neg(b)); };
    if (!s.contains(sub(rn.mul(u, u), rn.mul(v, v))) || s.contains(sub(u, v))) return false;
    const Index t = rn.add(u, v);
    Index p = t;
    for (Index k = 1; k <= s.ring.order(); ++k) {
        if (s.contains(p)) return false;
        p = rn.mul(p, t);
    }
    return true;
}

}  // namespace absorb
