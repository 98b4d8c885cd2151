#include "claimnet/hyperedge.hpp"

#include <sstream>

namespace claimnet {

Hyperedge::Hyperedge(std::vector<Hyperedge> elements) : node_(std::move(elements)) {
    if (std::get<std::vector<Hyperedge>>(node_).size() < 2) {
        throw std::invalid_argument("non-atomic hyperedge needs at least two elements");
    }
}

std::span<const Hyperedge> Hyperedge::arguments() const {
    const auto& els = elements();
    return {els.data() + 1, els.size() - 1};
}

std::string fold_case(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

Atom parse_atom_token(std::string_view token, std::size_t position) {
    auto bad = [&](const char* why) -> ParseError {
        return ParseError(ParseErrorKind::BadAtom, position, std::string(token),
                          "bad atom '" + std::string(token) + "': " + why);
    };
    const auto slash = token.rfind('/');
    if (slash == std::string_view::npos) throw bad("missing /TYPE suffix");
    if (slash == 0) throw bad("empty label");
    std::string_view label = token.substr(0, slash);
    std::string_view rest = token.substr(slash + 1);
    if (rest.empty()) throw bad("missing type letter");
    const char type = rest[0];
    if (type < 'A' || type > 'Z') throw bad("type must be a single uppercase letter");
    Atom atom;
    atom.label = fold_case(label);
    atom.type = type;
    if (rest.size() > 1) {
        if (rest[1] != '.' || rest.size() < 3) throw bad("malformed role suffix");
        atom.roles = std::string(rest.substr(2));
    }
    return atom;
}

} // namespace

Hyperedge parse_notation(std::string_view text) {
    std::vector<std::vector<Hyperedge>> stack;
    std::vector<std::size_t> open_positions;
    std::optional<Hyperedge> result;

    auto emit = [&](Hyperedge e, std::size_t position) {
        if (!stack.empty()) {
            stack.back().push_back(std::move(e));
        } else if (result.has_value()) {
            throw ParseError(ParseErrorKind::TrailingInput, position, "",
                             "trailing content after a complete hyperedge");
        } else {
            result = std::move(e);
        }
    };

    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        const char c = text[i];
        if (is_space(c)) {
            ++i;
        } else if (c == '(') {
            if (stack.empty() && result.has_value()) {
                throw ParseError(ParseErrorKind::TrailingInput, i, "",
                                 "trailing content after a complete hyperedge");
            }
            stack.emplace_back();
            open_positions.push_back(i);
            ++i;
        } else if (c == ')') {
            if (stack.empty()) {
                throw ParseError(ParseErrorKind::UnbalancedParens, i, "",
                                 "unmatched ')' at offset " + std::to_string(i));
            }
            if (stack.back().size() < 2) {
                throw ParseError(ParseErrorKind::EmptyEdge, open_positions.back(), "",
                                 "hyperedge with fewer than two elements");
            }
            Hyperedge e(std::move(stack.back()));
            stack.pop_back();
            open_positions.pop_back();
            emit(std::move(e), i);
            ++i;
        } else {
            const std::size_t start = i;
            while (i < n && !is_space(text[i]) && text[i] != '(' && text[i] != ')') ++i;
            emit(Hyperedge(parse_atom_token(text.substr(start, i - start), start)), start);
        }
    }
    if (!stack.empty()) {
        throw ParseError(ParseErrorKind::UnbalancedParens, open_positions.back(), "",
                         "unmatched '(' at offset " + std::to_string(open_positions.back()));
    }
    if (!result.has_value()) {
        throw ParseError(ParseErrorKind::EmptyInput, 0, "", "empty input");
    }
    return std::move(*result);
}

namespace {

void serialize_into(const Hyperedge& h, std::string& out) {
    if (h.is_atom()) {
        const Atom& a = h.atom();
        out += a.label;
        out += '/';
        out += a.type;
        if (!a.roles.empty()) {
            out += '.';
            out += a.roles;
        }
        return;
    }
    out += '(';
    bool first = true;
    for (const Hyperedge& e : h.elements()) {
        if (!first) out += ' ';
        first = false;
        serialize_into(e, out);
    }
    out += ')';
}

void collect_atoms(const Hyperedge& h, std::vector<Atom>& out) {
    if (h.is_atom()) {
        out.push_back(h.atom());
        return;
    }
    for (const Hyperedge& e : h.elements()) collect_atoms(e, out);
}

} // namespace

std::string serialize(const Hyperedge& h) {
    std::string out;
    serialize_into(h, out);
    return out;
}

std::vector<Atom> atoms(const Hyperedge& h) {
    std::vector<Atom> out;
    collect_atoms(h, out);
    return out;
}

std::optional<Atom> innermost_predicate(const Hyperedge& connector) {
    const Hyperedge* cur = &connector;
    while (!cur->is_atom()) {
        // (m x): a modifier chain wraps its target as the last element
        const Hyperedge* head = &cur->elements().front();
        while (!head->is_atom()) head = &head->elements().front();
        cur = head->atom().type == 'M' ? &cur->elements().back() : &cur->elements().front();
    }
    if (cur->atom().type == 'P') return cur->atom();
    return std::nullopt;
}

bool is_relation(const Hyperedge& h) {
    return !h.is_atom() && innermost_predicate(h.connector()).has_value();
}

const Hyperedge* subject_of(const Hyperedge& h) {
    if (h.is_atom()) throw NotARelationError("atomic hyperedge has no subject");
    const auto pred = innermost_predicate(h.connector());
    if (!pred.has_value()) {
        throw NotARelationError("connector of '" + serialize(h) + "' contains no predicate atom");
    }
    const auto args = h.arguments();
    if (args.empty()) return nullptr;
    if (!pred->roles.empty()) {
        const auto pos = pred->roles.find('s');
        if (pos == std::string::npos || pos >= args.size()) return nullptr;
        return &args[pos];
    }
    return &args[0];
}

} // namespace claimnet
