#include "claimnet/lexicon.hpp"

#include <algorithm>
#include <string_view>

namespace claimnet {

std::string topic_name(TopicCategory t) {
    switch (t) {
        case TopicCategory::GHG: return "GHG";
        case TopicCategory::Energy: return "Energy";
        case TopicCategory::Water: return "Water";
        case TopicCategory::Waste: return "Waste";
        case TopicCategory::Footprint: return "Footprint";
        case TopicCategory::SOx: return "SOx";
        case TopicCategory::NOx: return "NOx";
        case TopicCategory::LocalAirPollutants: return "LocalAirPollutants";
    }
    return "?";
}

std::optional<TopicCategory> topic_from_name(const std::string& name) {
    for (TopicCategory t : kAllTopics) {
        if (topic_name(t) == name) return t;
    }
    return std::nullopt;
}

namespace {

const char* kPositivePredicates[] = {
    "show", "indicate", "confirm", "support", "suggest", "reveal", "provide",
    "validate", "exist", "demonstrate", "verify", "imply", "illustrate",
    "find", "point", "exhibit", "establish", "obtain", "hold", "follow",
};

const char* kNegativePredicates[] = {"reject", "challenge", "fail"};

// Third person, past, gerund for each claim predicate; plural for each
// result concept.
const std::pair<const char*, const char*> kLemmaEntries[] = {
    {"shows/P", "show"}, {"showed/P", "show"}, {"shown/P", "show"}, {"showing/P", "show"},
    {"indicates/P", "indicate"}, {"indicated/P", "indicate"}, {"indicating/P", "indicate"},
    {"confirms/P", "confirm"}, {"confirmed/P", "confirm"}, {"confirming/P", "confirm"},
    {"supports/P", "support"}, {"supported/P", "support"}, {"supporting/P", "support"},
    {"suggests/P", "suggest"}, {"suggested/P", "suggest"}, {"suggesting/P", "suggest"},
    {"reveals/P", "reveal"}, {"revealed/P", "reveal"}, {"revealing/P", "reveal"},
    {"provides/P", "provide"}, {"provided/P", "provide"}, {"providing/P", "provide"},
    {"validates/P", "validate"}, {"validated/P", "validate"}, {"validating/P", "validate"},
    {"exists/P", "exist"}, {"existed/P", "exist"}, {"existing/P", "exist"},
    {"demonstrates/P", "demonstrate"}, {"demonstrated/P", "demonstrate"},
    {"demonstrating/P", "demonstrate"},
    {"verifies/P", "verify"}, {"verified/P", "verify"}, {"verifying/P", "verify"},
    {"implies/P", "imply"}, {"implied/P", "imply"}, {"implying/P", "imply"},
    {"illustrates/P", "illustrate"}, {"illustrated/P", "illustrate"},
    {"illustrating/P", "illustrate"},
    {"finds/P", "find"}, {"found/P", "find"}, {"finding/P", "find"},
    {"points/P", "point"}, {"pointed/P", "point"}, {"pointing/P", "point"},
    {"exhibits/P", "exhibit"}, {"exhibited/P", "exhibit"}, {"exhibiting/P", "exhibit"},
    {"establishes/P", "establish"}, {"established/P", "establish"},
    {"establishing/P", "establish"},
    {"obtains/P", "obtain"}, {"obtained/P", "obtain"}, {"obtaining/P", "obtain"},
    {"holds/P", "hold"}, {"held/P", "hold"}, {"holding/P", "hold"},
    {"follows/P", "follow"}, {"followed/P", "follow"}, {"following/P", "follow"},
    {"rejects/P", "reject"}, {"rejected/P", "reject"}, {"rejecting/P", "reject"},
    {"challenges/P", "challenge"}, {"challenged/P", "challenge"},
    {"challenging/P", "challenge"},
    {"fails/P", "fail"}, {"failed/P", "fail"}, {"failing/P", "fail"},
    {"results/C", "result"}, {"findings/C", "finding"}, {"tests/C", "test"},
    {"evidences/C", "evidence"}, {"supports/C", "support"},
    {"relationships/C", "relationship"},
};

const std::pair<const char*, TopicCategory> kTopicEntries[] = {
    {"co2", TopicCategory::GHG}, {"carbon", TopicCategory::GHG},
    {"ghg", TopicCategory::GHG}, {"ghgs", TopicCategory::GHG},
    {"greenhouse", TopicCategory::GHG}, {"methane", TopicCategory::GHG},
    {"ch4", TopicCategory::GHG}, {"n2o", TopicCategory::GHG},
    {"energy", TopicCategory::Energy}, {"electricity", TopicCategory::Energy},
    {"oil", TopicCategory::Energy}, {"coal", TopicCategory::Energy},
    {"gas", TopicCategory::Energy}, {"petroleum", TopicCategory::Energy},
    {"fuel", TopicCategory::Energy}, {"renewable", TopicCategory::Energy},
    {"renewables", TopicCategory::Energy}, {"biomass", TopicCategory::Energy},
    {"water", TopicCategory::Water}, {"wastewater", TopicCategory::Water},
    {"freshwater", TopicCategory::Water}, {"bod", TopicCategory::Water},
    {"cod", TopicCategory::Water},
    {"waste", TopicCategory::Waste}, {"wastes", TopicCategory::Waste},
    {"garbage", TopicCategory::Waste}, {"landfill", TopicCategory::Waste},
    {"footprint", TopicCategory::Footprint}, {"footprints", TopicCategory::Footprint},
    {"sulphur", TopicCategory::SOx}, {"sulfur", TopicCategory::SOx},
    {"so2", TopicCategory::SOx}, {"sox", TopicCategory::SOx},
    {"nox", TopicCategory::NOx}, {"nitrogen", TopicCategory::NOx},
    {"no2", TopicCategory::NOx},
    {"pm10", TopicCategory::LocalAirPollutants}, {"pm2.5", TopicCategory::LocalAirPollutants},
    {"co", TopicCategory::LocalAirPollutants}, {"smoke", TopicCategory::LocalAirPollutants},
    {"particulate", TopicCategory::LocalAirPollutants},
    {"particulates", TopicCategory::LocalAirPollutants},
    {"monoxide", TopicCategory::LocalAirPollutants},
};

} // namespace

AtomLexicon AtomLexicon::defaults() {
    AtomLexicon lex;
    for (const char* p : kPositivePredicates) lex.positive_claim_predicates.insert(p);
    for (const char* p : kNegativePredicates) lex.negative_claim_predicates.insert(p);
    lex.ekc_concepts = {"kuznets", "ekc", "turning"};
    lex.curve_concepts = {"curve", "shape", "shaped"};
    lex.negative_modifiers = {"not", "n't", "no", "little", "poor"};
    lex.result_concepts = {"result", "finding", "test", "evidence", "support"};
    for (const auto& [from, to] : kLemmaEntries) lex.lemma_map.emplace(from, to);
    lex.validate();
    return lex;
}

AtomLexicon AtomLexicon::from_ini(const IniFile& ini) {
    AtomLexicon lex;
    auto fill = [&ini](std::set<std::string>& dst, const char* section) {
        for (const auto& v : ini.values(section)) dst.insert(v);
    };
    fill(lex.positive_claim_predicates, "claim_predicates.positive");
    fill(lex.negative_claim_predicates, "claim_predicates.negative");
    fill(lex.ekc_concepts, "ekc");
    fill(lex.curve_concepts, "curve");
    fill(lex.negative_modifiers, "negation");
    fill(lex.result_concepts, "result");
    for (const auto& [k, v] : ini.kv("lemmas")) {
        if (k.size() < 3 || k[k.size() - 2] != '/') {
            throw std::runtime_error("lemma key must be 'label/T': " + k);
        }
        lex.lemma_map[k] = v;
    }
    lex.validate();
    return lex;
}

AtomLexicon AtomLexicon::load(const std::string& path) {
    return from_ini(IniFile::load(path));
}

std::string AtomLexicon::lemma(const std::string& label, char type) const {
    const auto it = lemma_map.find(label + "/" + type);
    return it == lemma_map.end() ? label : it->second;
}

void AtomLexicon::validate() const {
    for (const auto& p : positive_claim_predicates) {
        if (negative_claim_predicates.count(p)) {
            throw std::runtime_error("claim predicate in both P+ and P-: " + p);
        }
    }
}

TopicLexicon TopicLexicon::defaults() {
    TopicLexicon lex;
    for (const auto& [lemma, topic] : kTopicEntries) lex.concept_to_topic.emplace(lemma, topic);
    return lex;
}

TopicLexicon TopicLexicon::from_ini(const IniFile& ini) {
    TopicLexicon lex;
    for (const auto& section : ini.sections) {
        constexpr std::string_view prefix = "topics.";
        if (section.name.rfind(prefix, 0) != 0) continue;
        const auto topic = topic_from_name(section.name.substr(prefix.size()));
        if (!topic.has_value()) throw std::runtime_error("unknown topic section: " + section.name);
        for (const auto& e : section.entries) {
            const auto [it, inserted] = lex.concept_to_topic.emplace(e.value, *topic);
            if (!inserted && it->second != *topic) {
                throw std::runtime_error("concept mapped to two topics: " + e.value);
            }
        }
    }
    return lex;
}

TopicLexicon TopicLexicon::load(const std::string& path) {
    return from_ini(IniFile::load(path));
}

std::optional<TopicCategory> TopicLexicon::lookup(const std::string& lemma) const {
    const auto it = concept_to_topic.find(lemma);
    if (it == concept_to_topic.end()) return std::nullopt;
    return it->second;
}

void CorrectionFactors::validate() const {
    for (double f : {precision_pos, recall_pos, precision_neg, recall_neg}) {
        if (!(f > 0.0 && f <= 1.0)) {
            throw std::runtime_error("correction factors must lie in (0, 1]");
        }
    }
}

} // namespace claimnet
