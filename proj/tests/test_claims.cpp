#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "claimnet/claims.hpp"
#include "claimnet/hyperedge.hpp"
#include "claimnet/rng.hpp"
#include "test_util.hpp"

using namespace claimnet;

namespace {

const AtomLexicon& lex() {
    static const AtomLexicon instance = AtomLexicon::defaults();
    return instance;
}

Hyperedge parse(const std::string& s) { return parse_notation(s); }

SentenceRecord sentence(const std::string& id, int index, const std::string& text) {
    return SentenceRecord{id, index, parse(text)};
}

} // namespace

TEST_CASE("default lexicon matches the shipped atom sets") {
    const AtomLexicon& l = lex();
    CHECK(l.positive_claim_predicates.size() == 20);
    CHECK(l.positive_claim_predicates.count("show"));
    CHECK(l.positive_claim_predicates.count("follow"));
    CHECK(l.negative_claim_predicates ==
          std::set<std::string>{"reject", "challenge", "fail"});
    CHECK(l.ekc_concepts == std::set<std::string>{"kuznets", "ekc", "turning"});
    CHECK(l.curve_concepts == std::set<std::string>{"curve", "shape", "shaped"});
    CHECK(l.negative_modifiers == std::set<std::string>{"not", "n't", "no", "little", "poor"});
    CHECK(l.result_concepts ==
          std::set<std::string>{"result", "finding", "test", "evidence", "support"});
    for (const auto& p : l.positive_claim_predicates) {
        CHECK_FALSE(l.negative_claim_predicates.count(p));
    }
}

TEST_CASE("lemma map keeps predicate and concept homographs apart") {
    CHECK(lex().lemma("found", 'P') == "find");
    CHECK(lex().lemma("finding", 'P') == "find");
    CHECK(lex().lemma("finding", 'C') == "finding");
    CHECK(lex().lemma("findings", 'C') == "finding");
    CHECK(lex().lemma("supports", 'P') == "support");
    CHECK(lex().lemma("supports", 'C') == "support");
    CHECK(lex().lemma("unmapped", 'P') == "unmapped");
}

TEST_CASE("rule E: direct concept") {
    const auto [matched, trigger] = is_ekc_reference(parse("(the/M (ekc/C hypothesis/C))"), lex());
    CHECK(matched);
    CHECK(trigger == EkcTrigger::DirectConcept);
}

TEST_CASE("rule E: u-curve") {
    const auto [matched, trigger] = is_ekc_reference(parse("(u/C (inverted/M curve/C))"), lex());
    CHECK(matched);
    CHECK(trigger == EkcTrigger::UCurve);
}

TEST_CASE("rule E: n-curve") {
    const auto [matched, trigger] = is_ekc_reference(parse("(n/C (shaped/M curve/C))"), lex());
    CHECK(matched);
    CHECK(trigger == EkcTrigger::NCurve);
}

TEST_CASE("rule E: unrelated edge") {
    CHECK_FALSE(is_ekc_reference(parse("(plays/P mary/C chess/C)"), lex()).matched);
    // u/C needs a curve concept among its arguments
    CHECK_FALSE(is_ekc_reference(parse("(u/C boat/C)"), lex()).matched);
}

TEST_CASE("rule N: negated predicate with result concept argument") {
    CHECK(is_negated(parse("((not/M find/P) we/C (evidence/C))"), lex()));
}

TEST_CASE("rule N: negation nested inside an argument") {
    CHECK(is_negated(parse("(find/P we/C (no/M evidence/C))"), lex()));
}

TEST_CASE("rule N: negated EKC reference") {
    CHECK(is_negated(parse("(find/P we/C (no/M (ekc/C curve/C)))"), lex()));
}

TEST_CASE("rule N: negation without claim content stays false") {
    CHECK_FALSE(is_negated(parse("(plays/P mary/C chess/C)"), lex()));
    CHECK_FALSE(is_negated(parse("((not/M play/P) mary/C chess/C)"), lex()));
}

TEST_CASE("detect: plain confirmation") {
    CHECK(detect_claim(parse("(confirm/P.so results/C (the/M (ekc/C hypothesis/C)))"), lex()));
}

TEST_CASE("detect: EKC in the subject disqualifies") {
    CHECK_FALSE(detect_claim(parse("(reveal/P.so (the/M (ekc/C hypothesis/C)) x/C)"), lex()));
}

TEST_CASE("detect: unrelated relation") {
    CHECK_FALSE(detect_claim(parse("(plays/P mary/C chess/C)"), lex()));
}

TEST_CASE("detect: inflected predicate matches through the lemma map") {
    CHECK(detect_claim(parse("(confirmed/P.so results/C (the/M ekc/C))"), lex()));
}

TEST_CASE("detect: non-relation raises") {
    CHECK_THROWS_AS(detect_claim(parse("(of/B mayor/C berlin/C)"), lex()), NotARelationError);
}

TEST_CASE("classify: positive result") {
    const auto rec =
        classify_claim(parse("(support/P.so results/C (validity/C (of/B ekc/C hypothesis/C)))"),
                       lex());
    REQUIRE(rec.has_value());
    CHECK(rec->label == ClaimLabel::PositiveResult);
    CHECK(rec->predicate_atom.label == "support");
    CHECK_FALSE(rec->negated);
}

TEST_CASE("classify: negated positive predicate") {
    const auto rec =
        classify_claim(parse("((not/M find/P.so) we/C (evidence/C (of/B ekc/C x/C)))"), lex());
    REQUIRE(rec.has_value());
    CHECK(rec->label == ClaimLabel::NegativeResult);
    CHECK(rec->negated);
    CHECK(rec->predicate_atom.label == "find");
}

TEST_CASE("classify: n-curve finding refutes") {
    const auto rec = classify_claim(parse("(find/P.so we/C (n/C (shaped/M curve/C)))"), lex());
    REQUIRE(rec.has_value());
    CHECK(rec->label == ClaimLabel::NegativeResult);
    CHECK(rec->ekc_trigger == EkcTrigger::NCurve);
    CHECK_FALSE(rec->negated);
}

TEST_CASE("classify: plain negative predicate") {
    const auto rec = classify_claim(parse("(reject/P.so test/C (the/M ekc/C))"), lex());
    REQUIRE(rec.has_value());
    CHECK(rec->label == ClaimLabel::NegativeResult);
    CHECK(rec->predicate_atom.label == "reject");
}

TEST_CASE("decision table: all eight cases") {
    struct Case {
        const char* text;
        ClaimLabel expected;
    };
    // predicate class x N(h) x n-curve, constructed per cell
    const Case cases[] = {
        // P+, N=false, n-curve=false -> positive
        {"(confirm/P.so results/C (the/M (ekc/C hypothesis/C)))", ClaimLabel::PositiveResult},
        // P+, N=false, n-curve=true -> negative
        {"(find/P.so we/C (n/C (shaped/M curve/C)))", ClaimLabel::NegativeResult},
        // P+, N=true, n-curve=false -> negative
        {"((not/M find/P.so) we/C (evidence/C (of/B ekc/C x/C)))", ClaimLabel::NegativeResult},
        // P+, N=true, n-curve=true -> X
        {"((not/M find/P.so) we/C (and/J (evidence/C (of/B ekc/C x/C)) (n/C (shaped/M curve/C))))",
         ClaimLabel::Unknown},
        // P-, N=false, n-curve=false -> negative
        {"(reject/P.so test/C (the/M ekc/C))", ClaimLabel::NegativeResult},
        // P-, N=false, n-curve=true -> X
        {"(reject/P.so we/C (n/C (inverted/M curve/C)))", ClaimLabel::Unknown},
        // P-, N=true, n-curve=false -> X
        {"((not/M reject/P.so) we/C (the/M (ekc/C hypothesis/C)))", ClaimLabel::Unknown},
        // P-, N=true, n-curve=true -> X
        {"((not/M reject/P.so) we/C (and/J (ekc/C hypothesis/C) (n/C curve/C)))",
         ClaimLabel::Unknown},
    };
    for (const Case& c : cases) {
        INFO(c.text);
        const auto rec = classify_claim(parse(c.text), lex());
        REQUIRE(rec.has_value());
        CHECK(rec->label == c.expected);
    }
}

TEST_CASE("no detection implies no classification") {
    for (const char* text :
         {"(plays/P mary/C chess/C)", "(reveal/P.so (the/M ekc/C) x/C)", "x/C",
          "(of/B mayor/C berlin/C)"}) {
        CHECK_FALSE(classify_claim(parse(text), lex()).has_value());
    }
}

TEST_CASE("monotone embedding: wrapped claims stay detected") {
    const std::string inner = "(confirm/P.so results/C (the/M (ekc/C hypothesis/C)))";
    const SentenceRecord outer = sentence("a1", 0, "(says/P smith/C " + inner + ")");
    const auto records = classify_sentence(outer, lex());
    REQUIRE(records.size() == 1);
    CHECK(records[0].label == ClaimLabel::PositiveResult);

    // the embedding relation's own subject exclusion only applies to the
    // relation bearing the claim predicate
    const SentenceRecord ekc_subject_outer =
        sentence("a1", 1, "(says/P (the/M ekc/C) " + inner + ")");
    const auto records2 = classify_sentence(ekc_subject_outer, lex());
    REQUIRE(records2.size() == 1);
    CHECK(records2[0].label == ClaimLabel::PositiveResult);
}

TEST_CASE("empty lexicon detects nothing") {
    const AtomLexicon empty = AtomLexicon::empty();
    Rng rng(5);
    for (int i = 0; i < 300; ++i) {
        const Hyperedge h = testutil::random_hyperedge(rng, 4);
        if (h.is_atom() || !is_relation(h)) continue;
        CHECK_FALSE(detect_claim(h, empty));
    }
    CHECK_FALSE(
        detect_claim(parse("(confirm/P.so results/C (the/M ekc/C))"), empty));
}

TEST_CASE("classify_abstract: empty input") {
    const auto out = classify_abstract({}, lex());
    CHECK_FALSE(out.has_positive);
    CHECK_FALSE(out.has_negative);
    CHECK(out.records.empty());
}

TEST_CASE("classify_abstract: mixed positive and negative sentences") {
    const std::vector<SentenceRecord> sentences = {
        sentence("a1", 0, "(confirm/P.so results/C (the/M (ekc/C hypothesis/C)))"),
        sentence("a1", 1, "((not/M find/P.so) we/C (evidence/C (of/B ekc/C x/C)))"),
    };
    const auto out = classify_abstract(sentences, lex());
    CHECK(out.has_positive);
    CHECK(out.has_negative);
    CHECK(out.records.size() == 2);
    CHECK(out.records[0].article_id == "a1");
    CHECK(out.records[0].sentence_index == 0);
    CHECK(out.records[1].sentence_index == 1);
}

TEST_CASE("classify_abstract: unknown labels set no flag but stay recorded") {
    const std::vector<SentenceRecord> sentences = {
        sentence("a1", 0, "((not/M reject/P.so) we/C (the/M (ekc/C hypothesis/C)))"),
    };
    const auto out = classify_abstract(sentences, lex());
    CHECK_FALSE(out.has_positive);
    CHECK_FALSE(out.has_negative);
    REQUIRE(out.records.size() == 1);
    CHECK(out.records[0].label == ClaimLabel::Unknown);
}

TEST_CASE("classify_abstract: mixed article ids raise") {
    const std::vector<SentenceRecord> sentences = {
        sentence("a1", 0, "(plays/P mary/C chess/C)"),
        sentence("a2", 0, "(plays/P mary/C chess/C)"),
    };
    CHECK_THROWS_AS(classify_abstract(sentences, lex()), MixedArticleIdsError);
}

TEST_CASE("a sentence can carry several claims") {
    const SentenceRecord s = sentence(
        "a1", 0,
        "(and/J (confirm/P.so results/C (the/M ekc/C)) "
        "((not/M find/P.so) we/C (evidence/C (of/B ekc/C x/C))))");
    const auto records = classify_sentence(s, lex());
    REQUIRE(records.size() == 2);
    CHECK(records[0].label == ClaimLabel::PositiveResult);
    CHECK(records[1].label == ClaimLabel::NegativeResult);
}

TEST_CASE("topics: co2 and gdp") {
    const auto topics = extract_topics(
        parse("(between/B relationship/C (and/J (co2/C emissions/C) gdp/C))"), lex(),
        TopicLexicon::defaults());
    CHECK(topics == std::set{TopicCategory::GHG});
}

TEST_CASE("topics: three-way conjunction") {
    const auto topics = extract_topics(
        parse("(between/B relationship/C (and/J energy/C income/C water/C))"), lex(),
        TopicLexicon::defaults());
    CHECK(topics == std::set{TopicCategory::Energy, TopicCategory::Water});
}

TEST_CASE("topics: pattern absent") {
    const auto topics =
        extract_topics(parse("(plays/P mary/C chess/C)"), lex(), TopicLexicon::defaults());
    CHECK(topics.empty());
    // conjunction connector is required
    const auto not_conj = extract_topics(
        parse("(between/B relationship/C (of/B co2/C gdp/C))"), lex(), TopicLexicon::defaults());
    CHECK(not_conj.empty());
}

TEST_CASE("topics: pattern found inside a larger sentence") {
    const auto topics = extract_topics(
        parse("(examine/P we/C (between/B (the/M relationship/C) (and/J so2/C gdp/C)))"), lex(),
        TopicLexicon::defaults());
    CHECK(topics == std::set{TopicCategory::SOx});
}

TEST_CASE("correction: paper defaults") {
    const CorrectionFactors f;
    const auto neg10 = correct_counts(0, 10, f);
    CHECK(neg10.negative == doctest::Approx(10.0 * 0.833 / 0.366).epsilon(1e-12));
    CHECK(std::abs(neg10.negative - 22.76) < 0.005);
    const auto pos100 = correct_counts(100, 0, f);
    CHECK(std::abs(pos100.positive - 95.51) < 0.005);
    CHECK(correct_counts(0, 0, f).positive == 0.0);
}

TEST_CASE("correction: identity factors change nothing") {
    const auto out = correct_counts(17, 23, CorrectionFactors::identity());
    CHECK(out.positive == 17.0);
    CHECK(out.negative == 23.0);
}

TEST_CASE("correction is linear") {
    const CorrectionFactors f;
    Rng rng(21);
    for (int i = 0; i < 100; ++i) {
        const double a = static_cast<double>(rng.below(1000));
        const double b = static_cast<double>(rng.below(1000));
        const auto sum = correct_counts(a + b, a + b, f);
        const auto xa = correct_counts(a, a, f);
        const auto xb = correct_counts(b, b, f);
        CHECK(sum.positive == doctest::Approx(xa.positive + xb.positive).epsilon(1e-12));
        CHECK(sum.negative == doctest::Approx(xa.negative + xb.negative).epsilon(1e-12));
    }
}

TEST_CASE("correction factors outside (0,1] are rejected") {
    CorrectionFactors f;
    f.recall_neg = 0.0;
    CHECK_THROWS(correct_counts(1, 1, f));
}
