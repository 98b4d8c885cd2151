#pragma once
// Closed lexicons driving claim detection and topic extraction, plus the
// classifier correction factors. The shipped defaults live in
// data/lexicon.ini and data/topics.ini; defaults() returns the same values.

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "claimnet/ini.hpp"

namespace claimnet {

enum class TopicCategory {
    GHG,
    Energy,
    Water,
    Waste,
    Footprint,
    SOx,
    NOx,
    LocalAirPollutants,
};

constexpr std::array<TopicCategory, 8> kAllTopics = {
    TopicCategory::GHG,       TopicCategory::Energy, TopicCategory::Water,
    TopicCategory::Waste,     TopicCategory::Footprint, TopicCategory::SOx,
    TopicCategory::NOx,       TopicCategory::LocalAirPollutants,
};

std::string topic_name(TopicCategory t);
std::optional<TopicCategory> topic_from_name(const std::string& name);

class AtomLexicon {
public:
    std::set<std::string> positive_claim_predicates; // lemmas, type P
    std::set<std::string> negative_claim_predicates; // lemmas, type P
    std::set<std::string> ekc_concepts;              // type C
    std::set<std::string> curve_concepts;            // type C
    std::set<std::string> negative_modifiers;        // type M
    std::set<std::string> result_concepts;           // type C
    // Inflected form -> lemma, keyed "label/T" so predicate and concept
    // homographs (finding/P vs finding/C) stay apart.
    std::map<std::string, std::string> lemma_map;

    static AtomLexicon defaults();
    static AtomLexicon empty() { return AtomLexicon(); }
    static AtomLexicon from_ini(const IniFile& ini);
    static AtomLexicon load(const std::string& path);

    // Lemma of a typed atom label; unmapped labels map to themselves.
    std::string lemma(const std::string& label, char type) const;

    void validate() const; // P+ and P- must be disjoint
};

class TopicLexicon {
public:
    std::map<std::string, TopicCategory> concept_to_topic; // lemma -> category

    static TopicLexicon defaults();
    static TopicLexicon from_ini(const IniFile& ini);
    static TopicLexicon load(const std::string& path);

    std::optional<TopicCategory> lookup(const std::string& lemma) const;
};

struct CorrectionFactors {
    double precision_pos = 0.809;
    double recall_pos = 0.847;
    double precision_neg = 0.833;
    double recall_neg = 0.366;

    static CorrectionFactors identity() { return {1.0, 1.0, 1.0, 1.0}; }
    void validate() const; // each factor in (0, 1]
};

} // namespace claimnet
