#pragma once
// Rule engine for EKC result claims.
//
// A relation carries a claim when its predicate contains a claim predicate,
// the relation mentions EKC somewhere (directly, or through a U-/N-curve
// construction), and the EKC mention is not confined to the subject.
// Detected claims are classified as positive, negative or unknown from the
// predicate polarity, negation, and the presence of an N-curve.

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "claimnet/hyperedge.hpp"
#include "claimnet/hyperedge_io.hpp"
#include "claimnet/lexicon.hpp"

namespace claimnet {

enum class ClaimLabel { PositiveResult, NegativeResult, Unknown };

std::string claim_label_name(ClaimLabel label);

enum class EkcTrigger { DirectConcept, UCurve, NCurve };

std::string ekc_trigger_name(EkcTrigger trigger);

struct EkcCheck {
    bool matched = false;
    std::optional<EkcTrigger> trigger;
};

struct ClaimRecord {
    std::string article_id;
    int sentence_index = -1;
    ClaimLabel label = ClaimLabel::Unknown;
    EkcTrigger ekc_trigger = EkcTrigger::DirectConcept;
    Atom predicate_atom;
    bool negated = false;
};

class MixedArticleIdsError : public std::runtime_error {
public:
    explicit MixedArticleIdsError(const std::string& what) : std::runtime_error(what) {}
};

// Helper rule E: does any sub-hyperedge reference EKC? Either a direct EKC
// concept atom, or a (u/C c) / (n/C c) edge whose arguments contain a curve
// concept. The reported trigger is the first match in depth-first order.
EkcCheck is_ekc_reference(const Hyperedge& h, const AtomLexicon& lex);

// Helper rule N: does h contain, at any depth, a sub-edge whose connector
// carries a negative modifier and one of whose arguments carries a claim
// predicate, a result concept, or an EKC reference?
bool is_negated(const Hyperedge& h, const AtomLexicon& lex);

// True when some sub-edge matches (n/C c) with a curve concept among c.
bool contains_n_curve(const Hyperedge& h, const AtomLexicon& lex);

// Claim detection for a single relation: claim predicate present, EKC
// referenced, and the subject itself carrying no EKC reference. Throws
// NotARelationError when h is not a relation.
bool detect_claim(const Hyperedge& h, const AtomLexicon& lex);

// Classifies one relation; empty when h is not a relation or carries no
// claim. Ids are left for the caller to stamp. Double negations are not
// resolved.
std::optional<ClaimRecord> classify_claim(const Hyperedge& h, const AtomLexicon& lex);

// Every sub-relation of a sentence is tested independently; a sentence can
// yield several claims.
std::vector<ClaimRecord> classify_sentence(const SentenceRecord& sentence, const AtomLexicon& lex);

struct AbstractClaims {
    bool has_positive = false;
    bool has_negative = false;
    std::vector<ClaimRecord> records; // includes Unknown-labeled claims
};

// All sentences must share one article id (MixedArticleIdsError otherwise).
// Unknown labels set neither flag but stay in records.
AbstractClaims classify_abstract(std::span<const SentenceRecord> sentences, const AtomLexicon& lex);

// Topic pattern: (between/B relationship/C (and/J X Y ...)); conjunct
// concepts are mapped through the topic lexicon.
std::set<TopicCategory> extract_topics(const Hyperedge& h, const AtomLexicon& lex,
                                       const TopicLexicon& topics);

// Classifier count correction: corrected = raw * precision / recall.
struct CorrectedCounts {
    double positive = 0.0;
    double negative = 0.0;
};

CorrectedCounts correct_counts(double raw_pos, double raw_neg, const CorrectionFactors& f);

} // namespace claimnet
