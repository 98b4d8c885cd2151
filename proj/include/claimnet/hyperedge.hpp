#pragma once
// Semantic hyperedge data model and its textual notation.
//
// A hyperedge is either an atom ("plays/P", "mary/C") or an ordered
// sequence of at least two hyperedges whose first element acts as the
// connector:
//
//   (says/P john/C (plays/P mary/C chess/C))
//
// Atom labels are case-folded (ASCII) at parse time; roles and unknown
// type letters are carried verbatim so values round-trip through
// serialize()/parse_notation().

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace claimnet {

struct Atom {
    std::string label;      // non-empty, lowercase
    char type = 'C';        // single uppercase letter: C, P, M, B, J, ...
    std::string roles;      // optional, one character per argument position

    bool operator==(const Atom&) const = default;
    auto operator<=>(const Atom&) const = default;
};

class Hyperedge {
public:
    Hyperedge() : node_(Atom{}) {}
    explicit Hyperedge(Atom a) : node_(std::move(a)) {}
    // Non-atomic edges carry at least two elements; the first is the connector.
    explicit Hyperedge(std::vector<Hyperedge> elements);

    bool is_atom() const { return std::holds_alternative<Atom>(node_); }
    const Atom& atom() const { return std::get<Atom>(node_); }
    const std::vector<Hyperedge>& elements() const { return std::get<std::vector<Hyperedge>>(node_); }

    const Hyperedge& connector() const { return elements().front(); }
    std::span<const Hyperedge> arguments() const;

    bool operator==(const Hyperedge&) const = default;

private:
    std::variant<Atom, std::vector<Hyperedge>> node_;
};

enum class ParseErrorKind {
    UnbalancedParens,
    EmptyEdge,     // fewer than two elements inside parens
    BadAtom,       // missing /TYPE suffix or invalid type letter
    TrailingInput, // more than one top-level expression
    EmptyInput,
};

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::size_t position, std::string token, const std::string& what)
        : std::runtime_error(what), kind(kind), position(position), token(std::move(token)) {}

    ParseErrorKind kind;
    std::size_t position; // byte offset into the input
    std::string token;    // offending token, when applicable
};

class NotARelationError : public std::runtime_error {
public:
    explicit NotARelationError(const std::string& what) : std::runtime_error(what) {}
};

// Parses a single complete hyperedge expression. Whitespace between tokens
// is normalized; atom labels are case-folded. Throws ParseError on any
// malformed input (never crashes, whatever the bytes).
Hyperedge parse_notation(std::string_view text);

// Canonical single-space, fully parenthesized notation.
// parse_notation(serialize(h)) == h for any value produced by the parser.
std::string serialize(const Hyperedge& h);

// All atoms reachable by full recursion, with multiplicity, in depth-first
// pre-order (connector before arguments).
std::vector<Atom> atoms(const Hyperedge& h);

// Innermost predicate atom of a connector expression. Modifier applications
// such as (not/M found/P) are entered through their last element, other
// compounds through their connector.
std::optional<Atom> innermost_predicate(const Hyperedge& connector);

// True when h is non-atomic and its connector contains a predicate atom.
bool is_relation(const Hyperedge& h);

// Argument filling the subject role: the argument at the position of 's' in
// the predicate atom's role string, or the first argument when no roles are
// present. Null for zero-argument relations. Throws NotARelationError when
// the connector holds no predicate atom.
const Hyperedge* subject_of(const Hyperedge& h);

// ASCII-lowercases A-Z bytes, leaving all other bytes (including UTF-8
// sequences) untouched.
std::string fold_case(std::string_view s);

} // namespace claimnet
