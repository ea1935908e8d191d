#pragma once

// Reference implementations used to cross-check the library. They use only
// element arithmetic (add, mul, act) and plain loops, never the colon-ideal
// or power-orbit machinery of the checkers.

#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "absorb/module.hpp"
#include "absorb/predicates.hpp"
#include "absorb/ring.hpp"

namespace oracle {

using absorb::FiniteModule;
using absorb::FiniteRing;
using absorb::Index;
using absorb::ModElt;
using absorb::RingElt;
using absorb::Submodule;

struct Tuple {
    Index u = 0;
    std::optional<Index> v;
    std::optional<Index> x;

    friend bool operator==(const Tuple&, const Tuple&) = default;
};

inline std::optional<Tuple> from_witness(const std::optional<absorb::Witness>& w) {
    if (!w) return std::nullopt;
    return Tuple{w->u, w->v, w->x};
}

class Checker {
public:
    explicit Checker(const Submodule& n)
        : m_(n.module()), r_(m_.ring()), in_(n.carrier().begin(), n.carrier().end()) {}

    bool in(ModElt x) const { return in_.count(x.index) != 0; }
    RingElt ring_elt(Index i) const { return r_.element(i); }
    ModElt mod_elt(Index i) const { return m_.element(i); }

    /// t^k x in N for some 1 <= k <= |R|.
    bool some_power(RingElt t, ModElt x) const {
        ModElt cur = x;
        for (Index k = 1; k <= r_.order(); ++k) {
            cur = m_.act(t, cur);
            if (in(cur)) return true;
        }
        return false;
    }

    bool all_in(RingElt r) const {
        for (Index i = 0; i < m_.order(); ++i)
            if (!in(m_.act(r, mod_elt(i)))) return false;
        return true;
    }

    /// u^k M in N for some k, i.e. u in the radical of (N :_R M).
    bool in_radical_of_colon(RingElt u) const {
        RingElt p = u;
        for (Index k = 1; k <= r_.order(); ++k) {
            if (all_in(p)) return true;
            p = r_.mul(p, u);
        }
        return false;
    }

    std::optional<Tuple> gsdf() const {
        for (Index u = 0; u < r_.order(); ++u)
            for (Index v = 0; v <= u; ++v) {
                RingElt a = ring_elt(u), b = ring_elt(v);
                RingElt d2 = r_.sub(r_.mul(a, a), r_.mul(b, b));
                RingElt dm = r_.sub(a, b), dp = r_.add(a, b);
                for (Index x = 0; x < m_.order(); ++x) {
                    ModElt e = mod_elt(x);
                    if (!in(m_.act(d2, e))) continue;
                    if (in(m_.act(dm, e)) || some_power(dp, e)) continue;
                    return Tuple{u, v, x};
                }
            }
        return std::nullopt;
    }

    std::optional<Tuple> sdf() const {
        for (Index u = 0; u < r_.order(); ++u)
            for (Index v = 0; v <= u; ++v) {
                RingElt a = ring_elt(u), b = ring_elt(v);
                RingElt d2 = r_.sub(r_.mul(a, a), r_.mul(b, b));
                RingElt dm = r_.sub(a, b), dp = r_.add(a, b);
                for (Index x = 0; x < m_.order(); ++x) {
                    ModElt e = mod_elt(x);
                    if (m_.act(a, e) == m_.zero() || m_.act(b, e) == m_.zero()) continue;
                    if (!in(m_.act(d2, e))) continue;
                    if (in(m_.act(dm, e)) || in(m_.act(dp, e))) continue;
                    return Tuple{u, v, x};
                }
            }
        return std::nullopt;
    }

    std::optional<Tuple> cprimary() const {
        for (Index u = 0; u < r_.order(); ++u)
            for (Index v = 0; v < r_.order(); ++v) {
                RingElt a = ring_elt(u), b = ring_elt(v);
                for (Index x = 0; x < m_.order(); ++x) {
                    ModElt e = mod_elt(x);
                    if (!in(m_.act(r_.mul(a, b), e))) continue;
                    if (in(m_.act(a, e)) || some_power(b, e)) continue;
                    return Tuple{u, v, x};
                }
            }
        return std::nullopt;
    }

    std::optional<Tuple> primary() const {
        for (Index u = 0; u < r_.order(); ++u) {
            RingElt a = ring_elt(u);
            for (Index x = 0; x < m_.order(); ++x) {
                ModElt e = mod_elt(x);
                if (!in(m_.act(a, e)) || in(e)) continue;
                if (in_radical_of_colon(a)) continue;
                return Tuple{u, std::nullopt, x};
            }
        }
        return std::nullopt;
    }

    std::optional<Tuple> prime() const {
        for (Index u = 0; u < r_.order(); ++u) {
            RingElt a = ring_elt(u);
            for (Index x = 0; x < m_.order(); ++x) {
                ModElt e = mod_elt(x);
                if (!in(m_.act(a, e)) || in(e)) continue;
                if (all_in(a)) continue;
                return Tuple{u, std::nullopt, x};
            }
        }
        return std::nullopt;
    }

private:
    FiniteModule m_;
    FiniteRing r_;
    std::set<Index> in_;
};

/// Ideal predicates, for an ideal I of R given as a subset of R.
class IdealChecker {
public:
    IdealChecker(const FiniteRing& r, const std::vector<Index>& carrier)
        : r_(r), in_(carrier.begin(), carrier.end()) {}

    bool in(RingElt a) const { return in_.count(a.index) != 0; }

    std::optional<Tuple> sdf_ideal() const {
        for (Index u = 1; u < r_.order(); ++u)
            for (Index v = 1; v <= u; ++v) {
                RingElt a = r_.element(u), b = r_.element(v);
                if (!in(r_.sub(r_.mul(a, a), r_.mul(b, b)))) continue;
                if (in(r_.add(a, b)) || in(r_.sub(a, b))) continue;
                return Tuple{u, v, std::nullopt};
            }
        return std::nullopt;
    }

    std::optional<Tuple> sdf_primary(bool restrict_nonzero = false) const {
        const Index lo = restrict_nonzero ? 1 : 0;
        for (Index u = lo; u < r_.order(); ++u)
            for (Index v = lo; v <= u; ++v) {
                RingElt a = r_.element(u), b = r_.element(v);
                if (!in(r_.sub(r_.mul(a, a), r_.mul(b, b)))) continue;
                if (in(r_.sub(a, b))) continue;
                RingElt s = r_.add(a, b), p = s;
                bool hit = false;
                for (Index k = 1; k <= r_.order() && !hit; ++k) {
                    hit = in(p);
                    p = r_.mul(p, s);
                }
                if (hit) continue;
                return Tuple{u, v, std::nullopt};
            }
        return std::nullopt;
    }

private:
    FiniteRing r_;
    std::set<Index> in_;
};

/// gsdf of (0) in the Z-module Z_n by integer arithmetic alone.
inline bool zn_zero_gsdf(long long n) {
    for (long long u = 0; u < n; ++u)
        for (long long v = 0; v <= u; ++v) {
            const long long d2 = ((u * u - v * v) % n + n) % n;
            for (long long x = 0; x < n; ++x) {
                if (d2 * x % n != 0) continue;
                if ((u - v) * x % n == 0) continue;
                long long p = x;
                bool hit = false;
                for (long long k = 1; k <= n && !hit; ++k) {
                    p = p * ((u + v) % n) % n;
                    hit = p == 0;
                }
                if (!hit) return false;
            }
        }
    return true;
}

/// Every submodule of M, found by testing each subset containing 0 for
/// closure. Only for |M| <= 16.
inline std::vector<std::vector<Index>> power_set_submodules(const FiniteModule& m) {
    const Index n = m.order();
    const FiniteRing r = m.ring();
    std::vector<std::vector<Index>> out;
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<bool> in(n, false);
        in[0] = true;
        for (Index i = 1; i < n; ++i) in[i] = (mask >> (i - 1)) & 1u;
        bool closed = true;
        for (Index a = 0; a < n && closed; ++a) {
            if (!in[a]) continue;
            for (Index b = 0; b < n && closed; ++b)
                if (in[b] && !in[m.add(m.element(a), m.element(b)).index]) closed = false;
            for (Index s = 0; s < r.order() && closed; ++s)
                if (!in[m.act(r.element(s), m.element(a)).index]) closed = false;
        }
        if (!closed) continue;
        std::vector<Index> carrier;
        for (Index i = 0; i < n; ++i)
            if (in[i]) carrier.push_back(i);
        out.push_back(std::move(carrier));
    }
    return out;
}

}  // namespace oracle
