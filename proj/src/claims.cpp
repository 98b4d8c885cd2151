#include "claimnet/claims.hpp"

#include <algorithm>

namespace claimnet {

std::string claim_label_name(ClaimLabel label) {
    switch (label) {
        case ClaimLabel::PositiveResult: return "positive";
        case ClaimLabel::NegativeResult: return "negative";
        case ClaimLabel::Unknown: return "unknown";
    }
    return "?";
}

std::string ekc_trigger_name(EkcTrigger trigger) {
    switch (trigger) {
        case EkcTrigger::DirectConcept: return "direct-concept";
        case EkcTrigger::UCurve: return "u-curve";
        case EkcTrigger::NCurve: return "n-curve";
    }
    return "?";
}

namespace {

bool atom_in(const Atom& a, const std::set<std::string>& labels, char type,
             const AtomLexicon& lex) {
    return a.type == type && labels.count(lex.lemma(a.label, a.type)) > 0;
}

bool any_atom_in(const Hyperedge& h, const std::set<std::string>& labels, char type,
                 const AtomLexicon& lex) {
    if (h.is_atom()) return atom_in(h.atom(), labels, type, lex);
    for (const Hyperedge& e : h.elements()) {
        if (any_atom_in(e, labels, type, lex)) return true;
    }
    return false;
}

// (u/C c) / (n/C c) with a curve concept among the arguments.
std::optional<EkcTrigger> curve_pattern(const Hyperedge& h, const AtomLexicon& lex) {
    if (h.is_atom()) return std::nullopt;
    const Hyperedge& conn = h.connector();
    if (!conn.is_atom() || conn.atom().type != 'C') return std::nullopt;
    const std::string& label = conn.atom().label;
    if (label != "u" && label != "n") return std::nullopt;
    for (const Hyperedge& arg : h.arguments()) {
        if (any_atom_in(arg, lex.curve_concepts, 'C', lex)) {
            return label == "u" ? EkcTrigger::UCurve : EkcTrigger::NCurve;
        }
    }
    return std::nullopt;
}

std::optional<EkcTrigger> ekc_search(const Hyperedge& h, const AtomLexicon& lex) {
    if (h.is_atom()) {
        if (atom_in(h.atom(), lex.ekc_concepts, 'C', lex)) return EkcTrigger::DirectConcept;
        return std::nullopt;
    }
    if (const auto t = curve_pattern(h, lex)) return t;
    for (const Hyperedge& e : h.elements()) {
        if (const auto t = ekc_search(e, lex)) return t;
    }
    return std::nullopt;
}

bool claim_predicate_or_result(const Hyperedge& h, const AtomLexicon& lex) {
    if (h.is_atom()) {
        const Atom& a = h.atom();
        return atom_in(a, lex.positive_claim_predicates, 'P', lex) ||
               atom_in(a, lex.negative_claim_predicates, 'P', lex) ||
               atom_in(a, lex.result_concepts, 'C', lex);
    }
    for (const Hyperedge& e : h.elements()) {
        if (claim_predicate_or_result(e, lex)) return true;
    }
    return false;
}

} // namespace

EkcCheck is_ekc_reference(const Hyperedge& h, const AtomLexicon& lex) {
    const auto trigger = ekc_search(h, lex);
    return {trigger.has_value(), trigger};
}

bool contains_n_curve(const Hyperedge& h, const AtomLexicon& lex) {
    if (h.is_atom()) return false;
    if (curve_pattern(h, lex) == EkcTrigger::NCurve) return true;
    for (const Hyperedge& e : h.elements()) {
        if (contains_n_curve(e, lex)) return true;
    }
    return false;
}

bool is_negated(const Hyperedge& h, const AtomLexicon& lex) {
    if (h.is_atom()) return false;
    const bool negated_connector =
        any_atom_in(h.connector(), lex.negative_modifiers, 'M', lex);
    if (negated_connector) {
        for (const Hyperedge& arg : h.arguments()) {
            if (claim_predicate_or_result(arg, lex) || is_ekc_reference(arg, lex).matched) {
                return true;
            }
        }
    }
    for (const Hyperedge& e : h.elements()) {
        if (is_negated(e, lex)) return true;
    }
    return false;
}

namespace {

// Atoms of the connector expression, the relation's compound predicate.
void predicate_atoms(const Hyperedge& connector, std::vector<Atom>& out) {
    if (connector.is_atom()) {
        out.push_back(connector.atom());
        return;
    }
    for (const Hyperedge& e : connector.elements()) predicate_atoms(e, out);
}

struct PredicateMatch {
    bool has_positive = false;
    bool has_negative = false;
    Atom first_positive;
    Atom first_negative;
};

PredicateMatch match_predicate(const Hyperedge& h, const AtomLexicon& lex) {
    PredicateMatch m;
    std::vector<Atom> preds;
    predicate_atoms(h.connector(), preds);
    for (const Atom& a : preds) {
        if (!m.has_positive && atom_in(a, lex.positive_claim_predicates, 'P', lex)) {
            m.has_positive = true;
            m.first_positive = a;
        }
        if (!m.has_negative && atom_in(a, lex.negative_claim_predicates, 'P', lex)) {
            m.has_negative = true;
            m.first_negative = a;
        }
    }
    return m;
}

} // namespace

bool detect_claim(const Hyperedge& h, const AtomLexicon& lex) {
    if (h.is_atom() || !is_relation(h)) {
        throw NotARelationError("detect_claim needs a relation");
    }
    const PredicateMatch m = match_predicate(h, lex);
    if (!m.has_positive && !m.has_negative) return false;
    if (!is_ekc_reference(h, lex).matched) return false;
    // A claim whose EKC reference sits in the subject is not a result.
    const Hyperedge* subject = subject_of(h);
    if (subject != nullptr && is_ekc_reference(*subject, lex).matched) return false;
    return true;
}

std::optional<ClaimRecord> classify_claim(const Hyperedge& h, const AtomLexicon& lex) {
    if (h.is_atom() || !is_relation(h)) return std::nullopt;
    if (!detect_claim(h, lex)) return std::nullopt;

    const PredicateMatch m = match_predicate(h, lex);
    const bool negated = is_negated(h, lex);
    const bool n_curve = contains_n_curve(h, lex);

    ClaimRecord rec;
    rec.negated = negated;
    rec.ekc_trigger = *is_ekc_reference(h, lex).trigger;
    if (m.has_negative) {
        // P-: only the plain case (no negation, no N-curve) is a readable
        // refutation; everything else is unknown.
        rec.predicate_atom = m.first_negative;
        rec.label = (!negated && !n_curve) ? ClaimLabel::NegativeResult : ClaimLabel::Unknown;
    } else {
        rec.predicate_atom = m.first_positive;
        if (negated && n_curve) {
            rec.label = ClaimLabel::Unknown;
        } else if (negated || n_curve) {
            rec.label = ClaimLabel::NegativeResult;
        } else {
            rec.label = ClaimLabel::PositiveResult;
        }
    }
    return rec;
}

namespace {

void classify_subedges(const Hyperedge& h, const AtomLexicon& lex,
                       std::vector<ClaimRecord>& out) {
    if (h.is_atom()) return;
    if (auto rec = classify_claim(h, lex)) out.push_back(std::move(*rec));
    for (const Hyperedge& e : h.elements()) classify_subedges(e, lex, out);
}

} // namespace

std::vector<ClaimRecord> classify_sentence(const SentenceRecord& sentence, const AtomLexicon& lex) {
    std::vector<ClaimRecord> records;
    classify_subedges(sentence.edge, lex, records);
    for (ClaimRecord& rec : records) {
        rec.article_id = sentence.article_id;
        rec.sentence_index = sentence.sentence_index;
    }
    return records;
}

AbstractClaims classify_abstract(std::span<const SentenceRecord> sentences, const AtomLexicon& lex) {
    AbstractClaims out;
    for (const SentenceRecord& s : sentences) {
        if (s.article_id != sentences.front().article_id) {
            throw MixedArticleIdsError("abstract mixes article ids '" +
                                       sentences.front().article_id + "' and '" + s.article_id +
                                       "'");
        }
        for (ClaimRecord& rec : classify_sentence(s, lex)) {
            if (rec.label == ClaimLabel::PositiveResult) out.has_positive = true;
            if (rec.label == ClaimLabel::NegativeResult) out.has_negative = true;
            out.records.push_back(std::move(rec));
        }
    }
    return out;
}

namespace {

void collect_concept_lemmas(const Hyperedge& h, const AtomLexicon& lex,
                            std::vector<std::string>& out) {
    for (const Atom& a : atoms(h)) {
        if (a.type == 'C') out.push_back(lex.lemma(a.label, a.type));
    }
}

void topic_search(const Hyperedge& h, const AtomLexicon& lex, const TopicLexicon& topics,
                  std::set<TopicCategory>& out) {
    if (h.is_atom()) return;
    const Hyperedge& conn = h.connector();
    const auto args = h.arguments();
    if (conn.is_atom() && conn.atom().type == 'B' && conn.atom().label == "between" &&
        args.size() >= 2 && any_atom_in(args[0], {"relationship"}, 'C', lex) &&
        !args[1].is_atom()) {
        const Hyperedge& conj = args[1].connector();
        if (conj.is_atom() && conj.atom().type == 'J') {
            for (const Hyperedge& conjunct : args[1].arguments()) {
                std::vector<std::string> lemmas;
                collect_concept_lemmas(conjunct, lex, lemmas);
                for (const std::string& lemma : lemmas) {
                    if (const auto topic = topics.lookup(lemma)) out.insert(*topic);
                }
            }
        }
    }
    for (const Hyperedge& e : h.elements()) topic_search(e, lex, topics, out);
}

} // namespace

std::set<TopicCategory> extract_topics(const Hyperedge& h, const AtomLexicon& lex,
                                       const TopicLexicon& topics) {
    std::set<TopicCategory> out;
    topic_search(h, lex, topics, out);
    return out;
}

CorrectedCounts correct_counts(double raw_pos, double raw_neg, const CorrectionFactors& f) {
    f.validate();
    return {raw_pos * f.precision_pos / f.recall_pos, raw_neg * f.precision_neg / f.recall_neg};
}

} // namespace claimnet
