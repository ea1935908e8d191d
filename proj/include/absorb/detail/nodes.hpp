#pragma once

// Structure nodes behind FiniteRing and FiniteModule. Each concrete
// constructor (Z_n, products, quotients, ...) is a subclass that evaluates
// its operations by structural formula; flat operation tables are built on
// first use for the exhaustive checkers.

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "absorb/module.hpp"
#include "absorb/ring.hpp"

namespace absorb::detail {

/// Largest ring order for which operation tables are materialized.
inline constexpr Index kMaxTableOrder = 2048;

struct RingTables {
    Index order = 0;
    std::vector<Index> add;     // order * order
    std::vector<Index> mul;     // order * order
    std::vector<Index> neg;     // order
    std::vector<Index> square;  // order
    /// The idempotent in the power cycle of each element.
    std::vector<Index> stable;  // order

    Index add_at(Index a, Index b) const { return add[std::size_t(a) * order + b]; }
    Index mul_at(Index a, Index b) const { return mul[std::size_t(a) * order + b]; }
    Index sub_at(Index a, Index b) const { return add_at(a, neg[b]); }
};

/// Cached verdict of a mask-level check: the first failing pair, if any.
struct MaskVerdict {
    bool fails = false;
    Index u = 0;
    Index v = 0;
    std::uint64_t checked = 0;
};

class RingNode : public std::enable_shared_from_this<RingNode> {
public:
    virtual ~RingNode();

    virtual RingKind kind() const = 0;
    virtual Index order() const = 0;
    virtual Index one() const = 0;
    virtual Index add(Index a, Index b) const = 0;
    virtual Index neg(Index a) const = 0;
    virtual Index mul(Index a, Index b) const = 0;
    virtual std::string render(Index a) const = 0;
    /// Inverse of render; throws Error(elaboration) for a literal outside the carrier.
    virtual Index encode(const ElementLiteral& literal) const = 0;
    virtual std::string describe() const = 0;

    const std::string& key() const { return key_; }

    /// Throws Error(size_bound) above kMaxTableOrder.
    const RingTables& tables() const;

    /// The ring acting on itself; shares this node's lifetime.
    FiniteModule self_module() const;

    std::optional<MaskVerdict> memo_find(const std::string& key) const;
    void memo_store(const std::string& key, const MaskVerdict& verdict) const;

protected:
    void set_key(std::string key) { key_ = std::move(key); }

private:
    std::string key_;
    mutable std::once_flag tables_once_;
    mutable std::unique_ptr<RingTables> tables_;
    mutable std::once_flag self_once_;
    mutable std::shared_ptr<ModuleNode> self_;
    mutable std::mutex memo_mutex_;
    mutable std::unordered_map<std::string, MaskVerdict> memo_;
};

struct ModuleTables {
    Index ring_order = 0;
    Index order = 0;
    std::vector<Index> act;  // ring_order * order, row r holds r*x
    std::vector<Index> neg;  // order

    Index act_at(Index r, Index x) const { return act[std::size_t(r) * order + x]; }
};

class ModuleNode {
public:
    virtual ~ModuleNode();

    virtual ModuleKind kind() const = 0;
    virtual FiniteRing ring() const = 0;
    virtual Index order() const = 0;
    virtual Index add(Index a, Index b) const = 0;
    virtual Index neg(Index a) const = 0;
    virtual Index act(Index r, Index x) const = 0;
    virtual std::string render(Index x) const = 0;
    virtual Index encode(const ElementLiteral& literal) const = 0;
    virtual std::string describe() const = 0;

    const std::string& key() const { return key_; }

    /// Throws Error(size_bound) when |R|*|M| exceeds 2^24.
    const ModuleTables& tables() const;

protected:
    void set_key(std::string key) { key_ = std::move(key); }

private:
    std::string key_;
    mutable std::once_flag tables_once_;
    mutable std::unique_ptr<ModuleTables> tables_;
};

/// Builds the node of the ring acting on itself (used by RingNode).
std::shared_ptr<ModuleNode> make_self_module_node(const RingNode* ring);

/// Dense index lookup for carriers stored as sorted subsets of a larger
/// index space.
class SubsetIndex {
public:
    SubsetIndex() = default;
    SubsetIndex(std::vector<Index> members, std::size_t universe);

    Index size() const { return static_cast<Index>(members_.size()); }
    Index member(Index i) const { return members_[i]; }
    /// Position of an element of the universe; throws if absent.
    Index position(Index outer) const;
    bool contains(Index outer) const { return positions_[outer] != kAbsent; }
    const std::vector<Index>& members() const { return members_; }

private:
    static constexpr Index kAbsent = ~Index{0};
    std::vector<Index> members_;
    std::vector<Index> positions_;
};

}  // namespace absorb::detail
