#include "absorb/dsl.hpp"

#include <cctype>
#include <optional>

#include "absorb/error.hpp"

namespace absorb {

bool operator==(const SpecNode& a, const SpecNode& b) {
    return a.kind == b.kind && a.name == b.name && a.value == b.value && a.children == b.children;
}

namespace {

std::string at(const SourceSpan& s) {
    return "line " + std::to_string(s.line) + ", column " + std::to_string(s.column);
}

// ---------------------------------------------------------------------------
// Lexer and parser

struct Token {
    enum class Kind { ident, integer, punct, end };
    Kind kind = Kind::end;
    std::string text;
    SourceSpan span;
};

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) { advance(); }

    SpecNode parse_all() {
        SpecNode n = parse_expr();
        if (tok_.kind != Token::Kind::end) fail(tok_, "unexpected '" + tok_.text + "' after expression");
        return n;
    }

private:
    [[noreturn]] void fail(const Token& t, const std::string& msg) const {
        throw Error(ErrorKind::parse, at(t.span) + ": " + msg);
    }

    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        tok_ = Token{};
        tok_.span = {pos_, 0, line_, col_};
        if (pos_ >= text_.size()) {
            tok_.text = "end of input";
            return;
        }
        const std::size_t start = pos_;
        const char c = text_[pos_];
        auto is_digit = [&](std::size_t i) {
            return i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]));
        };
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            tok_.kind = Token::Kind::ident;
        } else if (is_digit(pos_) || (c == '-' && is_digit(pos_ + 1))) {
            ++pos_;
            while (is_digit(pos_)) ++pos_;
            tok_.kind = Token::Kind::integer;
        } else if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            pos_ += 2;
            tok_.kind = Token::Kind::punct;
        } else if (c == '(' || c == ')' || c == '[' || c == ']' || c == ',') {
            ++pos_;
            tok_.kind = Token::Kind::punct;
        } else {
            Token bad = tok_;
            bad.text = std::string(1, c);
            fail(bad, "unexpected character '" + bad.text + "'");
        }
        tok_.text = text_.substr(start, pos_ - start);
        tok_.span.length = pos_ - start;
        col_ += static_cast<int>(pos_ - start);
    }

    bool is(const char* punct) const { return tok_.kind == Token::Kind::punct && tok_.text == punct; }

    void expect(const char* punct) {
        if (!is(punct)) fail(tok_, std::string("expected '") + punct + "' but found '" + tok_.text + "'");
        advance();
    }

    void close(SpecNode& n) { n.span.length = tok_.span.offset - n.span.offset; }

    SpecNode parse_expr() {
        SpecNode n = parse_atom();
        if (is("->")) {
            SpecNode arrow;
            arrow.kind = SpecNode::Kind::arrow;
            arrow.span = n.span;
            advance();
            arrow.children.push_back(std::move(n));
            arrow.children.push_back(parse_atom());
            close(arrow);
            return arrow;
        }
        return n;
    }

    SpecNode parse_atom() {
        SpecNode n;
        n.span = tok_.span;
        if (tok_.kind == Token::Kind::integer) {
            n.kind = SpecNode::Kind::integer;
            try {
                n.value = std::stoll(tok_.text);
            } catch (const std::out_of_range&) {
                fail(tok_, "integer " + tok_.text + " out of range");
            }
            advance();
            close(n);
            return n;
        }
        if (is("(")) {
            advance();
            n.kind = SpecNode::Kind::pair;
            n.children.push_back(parse_expr());
            expect(",");
            n.children.push_back(parse_expr());
            expect(")");
            close(n);
            return n;
        }
        if (tok_.kind != Token::Kind::ident) fail(tok_, "expected an expression but found '" + tok_.text + "'");
        n.name = tok_.text;
        advance();
        if (is("(") || is("[")) {
            const bool call = is("(");
            n.kind = call ? SpecNode::Kind::call : SpecNode::Kind::list;
            advance();
            const char* closer = call ? ")" : "]";
            if (!is(closer)) {
                n.children.push_back(parse_expr());
                while (is(",")) {
                    advance();
                    n.children.push_back(parse_expr());
                }
            }
            expect(closer);
        } else {
            n.kind = SpecNode::Kind::word;
        }
        close(n);
        return n;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_;
};

// ---------------------------------------------------------------------------
// Elaboration helpers

[[noreturn]] void fail(const SpecNode& n, const std::string& msg) {
    throw Error(ErrorKind::elaboration, at(n.span) + ": " + msg);
}

bool located(const Error& e) { return e.kind() == ErrorKind::elaboration && std::string(e.what()).rfind("line ", 0) == 0; }

/// Runs `build`, attaching n's location to any library error it raises.
template <typename F>
auto located_at(const SpecNode& n, F&& build) -> decltype(build()) {
    try {
        return build();
    } catch (const Error& e) {
        if (located(e)) throw;
        fail(n, e.what());
    }
}

void require_arity(const SpecNode& n, std::size_t arity) {
    if (n.children.size() != arity) {
        fail(n, n.name + " takes " + std::to_string(arity) + " arguments, got " +
                    std::to_string(n.children.size()));
    }
}

long long require_int(const SpecNode& n) {
    if (n.kind != SpecNode::Kind::integer) fail(n, "expected an integer");
    return n.value;
}

/// Ring constructors are unambiguous except prod, which is a ring when both
/// arguments are.
bool is_ring_form(const SpecNode& n) {
    if (n.kind != SpecNode::Kind::call) return false;
    if (n.name == "Zn" || n.name == "quot" || n.name == "idealize" || n.name == "amalg" ||
        n.name == "loc") {
        return true;
    }
    return n.name == "prod" && n.children.size() == 2 && is_ring_form(n.children[0]) &&
           is_ring_form(n.children[1]);
}

std::vector<ElementLiteral> list_items(const SpecNode& n, const char* name) {
    if (n.kind != SpecNode::Kind::list || n.name != name) fail(n, std::string("expected ") + name + "[...]");
    std::vector<ElementLiteral> out;
    for (const auto& c : n.children) out.push_back(elaborate_element(c));
    return out;
}

}  // namespace

SpecNode parse_spec(const std::string& text) { return Parser(text).parse_all(); }

std::string render_spec(const SpecNode& n) {
    auto join = [&](const char* open, const char* close) {
        std::string out = open;
        for (std::size_t i = 0; i < n.children.size(); ++i) {
            if (i) out += ",";
            out += render_spec(n.children[i]);
        }
        return out + close;
    };
    switch (n.kind) {
        case SpecNode::Kind::call: return n.name + join("(", ")");
        case SpecNode::Kind::list: return n.name + join("[", "]");
        case SpecNode::Kind::word: return n.name;
        case SpecNode::Kind::integer: return std::to_string(n.value);
        case SpecNode::Kind::pair: return join("(", ")");
        case SpecNode::Kind::arrow:
            return render_spec(n.children[0]) + "->" + render_spec(n.children[1]);
    }
    return {};
}

ElementLiteral elaborate_element(const SpecNode& n) {
    if (n.kind == SpecNode::Kind::integer) return ElementLiteral(n.value);
    if (n.kind == SpecNode::Kind::pair) {
        return ElementLiteral(elaborate_element(n.children[0]), elaborate_element(n.children[1]));
    }
    fail(n, "expected an element (integer or pair)");
}

FiniteRing elaborate_ring(const SpecNode& n) {
    if (n.kind != SpecNode::Kind::call) fail(n, "expected a ring expression");
    return located_at(n, [&]() -> FiniteRing {
        const auto& a = n.children;
        if (n.name == "Zn") {
            require_arity(n, 1);
            return make_zmod(require_int(a[0]));
        }
        if (n.name == "prod") {
            require_arity(n, 2);
            return product_ring(elaborate_ring(a[0]), elaborate_ring(a[1]));
        }
        if (n.name == "quot") {
            require_arity(n, 2);
            const FiniteRing r = elaborate_ring(a[0]);
            return quotient_ring(r, elaborate_ideal(a[1], r));
        }
        if (n.name == "idealize") {
            require_arity(n, 2);
            const FiniteRing r = elaborate_ring(a[0]);
            const FiniteModule m = elaborate_module(a[1]);
            if (!m.ring().same_as(r)) fail(a[1], "module is over " + m.ring().key() + ", not " + r.key());
            return idealization_ring(r, m);
        }
        if (n.name == "amalg") {
            require_arity(n, 4);
            const FiniteRing r1 = elaborate_ring(a[0]);
            const FiniteRing r2 = elaborate_ring(a[1]);
            const RingHom f = elaborate_hom(a[2], r1, r2);
            return amalgamation_ring(r1, r2, f, elaborate_ideal(a[3], r2));
        }
        if (n.name == "loc") {
            require_arity(n, 2);
            const FiniteRing r = elaborate_ring(a[0]);
            return localize_ring(r, elaborate_mset(a[1], r)).localized_ring;
        }
        fail(n, "unknown ring constructor '" + n.name + "'");
    });
}

FiniteModule elaborate_module(const SpecNode& n) {
    if (is_ring_form(n)) return self_module(elaborate_ring(n));
    if (n.kind != SpecNode::Kind::call) fail(n, "expected a module expression");
    return located_at(n, [&]() -> FiniteModule {
        const auto& a = n.children;
        if (n.name == "self") {
            require_arity(n, 1);
            return self_module(elaborate_ring(a[0]));
        }
        if (n.name == "cyc") {
            require_arity(n, 2);
            return cyclic_module(elaborate_ring(a[0]), require_int(a[1]));
        }
        if (n.name == "prod" || n.name == "prodr") {
            require_arity(n, 2);
            const FiniteModule m1 = elaborate_module(a[0]);
            const FiniteModule m2 = elaborate_module(a[1]);
            if (n.name == "prodr") return product_module(m1, m2, ProductMode::product_ring);
            if (!m1.ring().same_as(m2.ring())) {
                fail(n, "prod needs modules over one ring (" + m1.ring().key() + " vs " +
                            m2.ring().key() + "); use prodr for the product ring");
            }
            return product_module(m1, m2, ProductMode::same_ring);
        }
        if (n.name == "quotm") {
            require_arity(n, 2);
            const FiniteModule m = elaborate_module(a[0]);
            return quotient_module(m, elaborate_submodule(a[1], m)).module;
        }
        if (n.name == "subm") {
            require_arity(n, 2);
            const FiniteModule m = elaborate_module(a[0]);
            return submodule_as_module(elaborate_submodule(a[1], m));
        }
        if (n.name == "locm") {
            require_arity(n, 2);
            const FiniteModule m = elaborate_module(a[0]);
            return localize_module(m, elaborate_mset(a[1], m.ring())).module;
        }
        if (n.name == "restrict") {
            require_arity(n, 3);
            const FiniteModule m = elaborate_module(a[0]);
            const FiniteRing r1 = elaborate_ring(a[1]);
            return restrict_scalars(m, elaborate_hom(a[2], r1, m.ring()));
        }
        if (n.name == "amalgm") {
            require_arity(n, 4);
            const FiniteModule m1 = elaborate_module(a[0]);
            const FiniteModule m2 = elaborate_module(a[1]);
            const RingHom f = elaborate_hom(a[2], m1.ring(), m2.ring());
            const Ideal j = elaborate_ideal(a[3], m2.ring());
            std::vector<Index> phi;
            if (m1.kind() == ModuleKind::ring_self && m2.kind() == ModuleKind::ring_self) {
                phi = f.table();  // self modules share the ring's indexing
            } else if (m1.same_as(m2) && f.label() == "id") {
                phi.resize(m1.order());
                for (Index x = 0; x < m1.order(); ++x) phi[x] = x;
            } else {
                fail(n, "cannot derive phi: use self modules, or M1 = M2 with f = id");
            }
            return amalgamated_module(m1, m2, f, phi, j);
        }
        fail(n, "unknown module constructor '" + n.name + "'");
    });
}

Submodule elaborate_submodule(const SpecNode& n, const FiniteModule& m) {
    if (n.kind == SpecNode::Kind::word && n.name == "zero") return zero_submodule(m);
    if (n.kind == SpecNode::Kind::word && n.name == "full") return full_submodule(m);
    if (n.kind != SpecNode::Kind::list || n.name != "gen") fail(n, "expected gen[...], zero or full");
    return located_at(n, [&] {
        std::vector<ModElt> gens;
        for (const auto& c : n.children) {
            gens.push_back(located_at(c, [&] { return m.value(elaborate_element(c)); }));
        }
        return span(m, gens);
    });
}

Ideal elaborate_ideal(const SpecNode& n, const FiniteRing& r) {
    return elaborate_submodule(n, self_module(r));
}

MultiplicativeSet elaborate_mset(const SpecNode& n, const FiniteRing& r) {
    const auto items = list_items(n, "mset");
    return located_at(n, [&] {
        std::vector<RingElt> gens;
        for (std::size_t i = 0; i < items.size(); ++i) {
            gens.push_back(located_at(n.children[i], [&] { return r.value(items[i]); }));
        }
        return MultiplicativeSet::generated_by(r, gens);
    });
}

RingHom elaborate_hom(const SpecNode& n, const FiniteRing& domain, const FiniteRing& codomain) {
    return located_at(n, [&]() -> RingHom {
        if (n.kind == SpecNode::Kind::word && n.name == "id") {
            if (!domain.same_as(codomain)) {
                fail(n, "id needs equal rings (" + domain.key() + " vs " + codomain.key() + ")");
            }
            return identity_hom(domain);
        }
        if (n.kind == SpecNode::Kind::word && n.name == "redmap") return reduction_hom(domain, codomain);
        if (n.kind == SpecNode::Kind::list && n.name == "table") {
            std::vector<std::optional<Index>> slots(domain.order());
            for (const auto& c : n.children) {
                if (c.kind != SpecNode::Kind::arrow) fail(c, "expected a -> b");
                const long long from = require_int(c.children[0]);
                const long long to = require_int(c.children[1]);
                if (from < 0 || from >= domain.order()) fail(c, "index " + std::to_string(from) + " outside the domain");
                if (to < 0 || to >= codomain.order()) fail(c, "index " + std::to_string(to) + " outside the codomain");
                if (slots[from] && *slots[from] != static_cast<Index>(to)) {
                    fail(c, "index " + std::to_string(from) + " mapped twice");
                }
                slots[from] = static_cast<Index>(to);
            }
            std::vector<Index> table;
            for (Index i = 0; i < slots.size(); ++i) {
                if (!slots[i]) fail(n, "no image given for index " + std::to_string(i));
                table.push_back(*slots[i]);
            }
            return RingHom(domain, codomain, std::move(table));
        }
        fail(n, "expected id, redmap or table[...]");
    });
}

FiniteRing parse_ring(const std::string& text) { return elaborate_ring(parse_spec(text)); }
FiniteModule parse_module(const std::string& text) { return elaborate_module(parse_spec(text)); }
Submodule parse_submodule(const std::string& text, const FiniteModule& m) {
    return elaborate_submodule(parse_spec(text), m);
}

}  // namespace absorb
