#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "claimnet/hyperedge.hpp"
#include "claimnet/rng.hpp"
#include "test_util.hpp"

using namespace claimnet;

TEST_CASE("parse: flat relation") {
    const Hyperedge h = parse_notation("(plays/P mary/C chess/C)");
    REQUIRE_FALSE(h.is_atom());
    CHECK(h.elements().size() == 3);
    CHECK(h.connector().atom() == Atom{"plays", 'P', ""});
    CHECK(h.arguments()[0].atom() == Atom{"mary", 'C', ""});
    CHECK(h.arguments()[1].atom() == Atom{"chess", 'C', ""});
}

TEST_CASE("parse: atomic hyperedge") {
    const Hyperedge h = parse_notation("x/C");
    REQUIRE(h.is_atom());
    CHECK(h.atom() == Atom{"x", 'C', ""});
}

TEST_CASE("parse: nested relation") {
    const Hyperedge h = parse_notation("(says/P john/C (plays/P mary/C chess/C))");
    REQUIRE(h.elements().size() == 3);
    const Hyperedge& inner = h.arguments()[1];
    REQUIRE_FALSE(inner.is_atom());
    CHECK(inner.connector().atom().label == "plays");
    CHECK(serialize(h) == "(says/P john/C (plays/P mary/C chess/C))");
}

TEST_CASE("parse: unbalanced parens") {
    CHECK_THROWS_AS(parse_notation("(of/B mayor/C berlin/C"), ParseError);
    try {
        parse_notation("(of/B mayor/C berlin/C");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseErrorKind::UnbalancedParens);
        CHECK(e.position == 0);
    }
    try {
        parse_notation("a/C)");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseErrorKind::UnbalancedParens);
        CHECK(e.position == 3);
    }
}

TEST_CASE("parse: empty edge and bad atoms") {
    try {
        parse_notation("(x/C)");
        FAIL("expected EmptyEdge");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseErrorKind::EmptyEdge);
    }
    try {
        parse_notation("()");
        FAIL("expected EmptyEdge");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseErrorKind::EmptyEdge);
    }
    for (const char* bad : {"mary", "mary/", "/C", "mary/c", "mary/CC", "mary/C.", "(a/P mary)"}) {
        try {
            parse_notation(bad);
            FAIL("expected BadAtom for: ", bad);
        } catch (const ParseError& e) {
            CHECK(e.kind == ParseErrorKind::BadAtom);
        }
    }
    try {
        parse_notation("x/C y/C");
        FAIL("expected TrailingInput");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseErrorKind::TrailingInput);
    }
    try {
        parse_notation("   ");
        FAIL("expected EmptyInput");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseErrorKind::EmptyInput);
    }
}

TEST_CASE("parse: whitespace normalization and case folding") {
    const Hyperedge a = parse_notation("  (plays/P   mary/C\tchess/C) ");
    const Hyperedge b = parse_notation("(Plays/P MARY/C chess/C)");
    CHECK(a == b);
    CHECK(serialize(a) == "(plays/P mary/C chess/C)");
}

TEST_CASE("parse: roles suffix round-trips") {
    const Hyperedge h = parse_notation("(plays/P.so mary/C chess/C)");
    CHECK(h.connector().atom().roles == "so");
    CHECK(serialize(h) == "(plays/P.so mary/C chess/C)");
}

TEST_CASE("parse: unknown type letters are preserved") {
    const Hyperedge h = parse_notation("(x/Q a/Z b/C)");
    CHECK(h.connector().atom().type == 'Q');
    CHECK(serialize(h) == "(x/Q a/Z b/C)");
}

TEST_CASE("serialize: atom") {
    CHECK(serialize(Hyperedge(Atom{"first", 'M', ""})) == "first/M");
}

TEST_CASE("serialize: modifier application round-trips") {
    const std::string text = "(first/M (of/B mayor/C berlin/C))";
    CHECK(serialize(parse_notation(text)) == text);
}

TEST_CASE("round-trip property: random edges, depth <= 6") {
    Rng rng(13);
    for (int i = 0; i < 2000; ++i) {
        const Hyperedge h = testutil::random_hyperedge(rng, 6);
        const std::string text = serialize(h);
        CHECK(parse_notation(text) == h);
    }
}

TEST_CASE("atoms: flat edge") {
    const auto got = atoms(parse_notation("(plays/P mary/C chess/C)"));
    REQUIRE(got.size() == 3);
    CHECK(got[0] == Atom{"plays", 'P', ""});
    CHECK(got[1] == Atom{"mary", 'C', ""});
    CHECK(got[2] == Atom{"chess", 'C', ""});
}

TEST_CASE("atoms: conjunction of relations") {
    const auto got = atoms(parse_notation("(and/J (reads/P john/C) (plays/P mary/C chess/C))"));
    CHECK(got.size() == 6);
    CHECK(got[0] == Atom{"and", 'J', ""});
}

TEST_CASE("atoms: matches independent walker on random edges") {
    Rng rng(99);
    for (int i = 0; i < 500; ++i) {
        const Hyperedge h = testutil::random_hyperedge(rng, 5);
        std::multiset<std::string> got;
        for (const Atom& a : atoms(h)) {
            got.insert(a.label + "/" + a.type + (a.roles.empty() ? "" : "." + a.roles));
        }
        CHECK(got == testutil::atom_multiset_oracle(h));
    }
}

TEST_CASE("atoms cardinality equals token count of serialization") {
    Rng rng(7);
    for (int i = 0; i < 500; ++i) {
        const Hyperedge h = testutil::random_hyperedge(rng, 5);
        const std::string text = serialize(h);
        std::size_t tokens = 0;
        bool in_token = false;
        for (const char c : text) {
            const bool meta = c == ' ' || c == '(' || c == ')';
            if (!meta && !in_token) ++tokens;
            in_token = !meta;
        }
        CHECK(atoms(h).size() == tokens);
    }
}

TEST_CASE("connector and arguments") {
    const Hyperedge h = parse_notation("(a/P b/C)");
    CHECK(h.connector().atom() == Atom{"a", 'P', ""});
    CHECK(h.arguments().size() == h.elements().size() - 1);
}

TEST_CASE("subject_of: explicit role") {
    const Hyperedge h = parse_notation("(plays/P.so mary/C chess/C)");
    REQUIRE(subject_of(h) != nullptr);
    CHECK(subject_of(h)->atom().label == "mary");
}

TEST_CASE("subject_of: first-argument fallback") {
    const Hyperedge h = parse_notation("(plays/P mary/C chess/C)");
    REQUIRE(subject_of(h) != nullptr);
    CHECK(subject_of(h)->atom().label == "mary");
}

TEST_CASE("subject_of: role on single compound argument") {
    const Hyperedge h = parse_notation("(is/P.s (the/M ekc/C))");
    REQUIRE(subject_of(h) != nullptr);
    CHECK(serialize(*subject_of(h)) == "(the/M ekc/C)");
}

TEST_CASE("subject_of: role outside arguments and non-relations") {
    const Hyperedge h = parse_notation("(plays/P.xs mary/C)");
    CHECK(subject_of(h) == nullptr); // 's' points at position 1, one argument only
    CHECK_THROWS_AS(subject_of(parse_notation("(of/B mayor/C berlin/C)")), NotARelationError);
    CHECK_THROWS_AS(subject_of(parse_notation("x/C")), NotARelationError);
}

TEST_CASE("innermost predicate through modifier chains") {
    const Hyperedge h = parse_notation("((not/M found/P) we/C evidence/C)");
    const auto pred = innermost_predicate(h.connector());
    REQUIRE(pred.has_value());
    CHECK(pred->label == "found");
    CHECK(is_relation(h));
    REQUIRE(subject_of(h) != nullptr);
    CHECK(subject_of(h)->atom().label == "we");
}

TEST_CASE("parser totality: arbitrary bytes give typed errors only") {
    Rng rng(1234);
    int parsed = 0;
    for (int i = 0; i < 20000; ++i) {
        const std::size_t len = rng.below(64);
        std::string s;
        for (std::size_t j = 0; j < len; ++j) {
            s += static_cast<char>(rng.below(256));
        }
        try {
            (void)parse_notation(s);
            ++parsed;
        } catch (const ParseError&) {
            // expected
        }
    }
    CHECK(parsed >= 0); // reached the end without crashing
}
