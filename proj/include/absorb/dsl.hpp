#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "absorb/constructions.hpp"
#include "absorb/module.hpp"
#include "absorb/ring.hpp"

namespace absorb {

/// Location of a node in the source text; line and column are 1-based.
struct SourceSpan {
    std::size_t offset = 0;
    std::size_t length = 0;
    int line = 1;
    int column = 1;
};

/// Parse tree of the spec language. Forms:
///   call    name(arg, ...)        e.g. Zn(12), prod(A,B)
///   list    name[item, ...]       e.g. gen[2,(1,0)], mset[5], table[0->0,1->1]
///   word    name                  e.g. zero, full, id, redmap
///   integer 12, -1
///   pair    (a, b)
///   arrow   a->b                  (inside table[...])
struct SpecNode {
    enum class Kind { call, list, word, integer, pair, arrow };

    Kind kind = Kind::word;
    std::string name;
    long long value = 0;
    std::vector<SpecNode> children;
    SourceSpan span;

    /// Structural equality; spans are ignored.
    friend bool operator==(const SpecNode& a, const SpecNode& b);
};

/// Throws Error(parse) with "line L, column C: ..." on malformed input.
SpecNode parse_spec(const std::string& text);
/// Canonical text, without whitespace. parse_spec(render_spec(n)) == n.
std::string render_spec(const SpecNode& node);

/// Elaboration throws Error(elaboration) carrying the offending node's location.
FiniteRing elaborate_ring(const SpecNode& node);
/// A ring expression in module position stands for the ring acting on itself.
FiniteModule elaborate_module(const SpecNode& node);
Submodule elaborate_submodule(const SpecNode& node, const FiniteModule& m);
Ideal elaborate_ideal(const SpecNode& node, const FiniteRing& r);
MultiplicativeSet elaborate_mset(const SpecNode& node, const FiniteRing& r);
RingHom elaborate_hom(const SpecNode& node, const FiniteRing& domain, const FiniteRing& codomain);
ElementLiteral elaborate_element(const SpecNode& node);

FiniteRing parse_ring(const std::string& text);
FiniteModule parse_module(const std::string& text);
Submodule parse_submodule(const std::string& text, const FiniteModule& m);

}  // namespace absorb
