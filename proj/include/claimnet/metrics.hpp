#pragma once
// Table and figure statistics: corrected positive/negative shares, topic
// ratios and shares, per-block metrics, journal profiles, worlds of
// references, and economics shares.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "claimnet/author_graph.hpp"
#include "claimnet/blockmodel.hpp"
#include "claimnet/claims.hpp"
#include "claimnet/corpus.hpp"

namespace claimnet {

class PartitionMismatchError : public std::runtime_error {
public:
    explicit PartitionMismatchError(const std::string& what) : std::runtime_error(what) {}
};

class AnchorUnknownError : public std::runtime_error {
public:
    explicit AnchorUnknownError(const std::string& anchor)
        : std::runtime_error("anchor author not in corpus: " + anchor) {}
};

struct ClaimsIndex {
    std::map<std::string, AbstractClaims> by_article;

    static ClaimsIndex build(const Corpus& corpus, const AtomLexicon& lex);
    bool has_positive(const std::string& id) const;
    bool has_negative(const std::string& id) const;
};

struct TopicsIndex {
    std::map<std::string, std::set<TopicCategory>> by_article;

    static TopicsIndex build(const Corpus& corpus, const AtomLexicon& lex,
                             const TopicLexicon& topics);
    const std::set<TopicCategory>& topics_of(const std::string& id) const;
};

// ---------------------------------------------------------------------------
// Positive/negative result shares per year (fig 2)

struct YearPosNeg {
    int year = 0;
    int articles = 0;
    int raw_positive = 0;
    int raw_negative = 0;
    double positive_share = 0.0; // corrected, clamped to 1
    double negative_share = 0.0;
    bool clamped = false;
};

std::vector<YearPosNeg> posneg_timeseries(const Corpus& corpus, const ClaimsIndex& claims,
                                          const CorrectionFactors& factors);

// ---------------------------------------------------------------------------
// Topic ratio table (table 2) and topic shares (fig 3)

struct TopicRatioTable {
    std::vector<std::string> row_labels; // period labels plus "aggregate"
    // ratio[row][topic]: corrected positive count / corrected negative
    // count; empty when the denominator is zero
    std::vector<std::map<TopicCategory, std::optional<double>>> ratios;
};

TopicRatioTable topic_ratio_table(const Corpus& corpus, const ClaimsIndex& claims,
                                  const TopicsIndex& topics, const PeriodScheme& scheme,
                                  const CorrectionFactors& factors);

struct TopicShares {
    struct PeriodRow {
        std::string label;
        int articles = 0;
        std::map<TopicCategory, double> percentage; // of the period's articles
    };
    std::vector<PeriodRow> periods;
    double coverage_percentage = 0.0; // articles with at least one category
};

TopicShares topic_share_chart(const Corpus& corpus, const TopicsIndex& topics,
                              const PeriodScheme& scheme);

// ---------------------------------------------------------------------------
// Block metrics (table 3) and topic share by block (table 4)

struct BlockMetrics {
    int block = 0;
    int author_count = 0;
    double pos_ratio = 0.0; // corrected share of the block's articles
    double neg_ratio = 0.0;
    double endogamy = 0.0; // received weight coming from co-authors
    double mean_year = 0.0;
    double mean_articles = 0.0;          // #A
    double mean_articles_per_year = 0.0; // #A normalized by activity span
    double mean_unique_coauthors = 0.0;  // k
};

std::vector<BlockMetrics> block_metrics(const Corpus& corpus, const ClaimsIndex& claims,
                                        const AuthorGraph& unpruned, const Partition& partition,
                                        const CorrectionFactors& factors);

struct BlockTopicShares {
    std::vector<std::map<TopicCategory, double>> share; // per block
    std::map<TopicCategory, int> max_block;             // bold cells
};

BlockTopicShares topic_share_by_block(const Corpus& corpus, const TopicsIndex& topics,
                                      const Partition& partition);

// ---------------------------------------------------------------------------
// Journal profiles (table 5), worlds of references (fig 5, table 6)

struct JournalProfile {
    std::string journal;
    std::optional<int> founded;
    int article_count = 0;
    std::vector<int> per_period; // same order as the scheme
    double share_citing_a = 0.0;
    double share_citing_b = 0.0;
    std::optional<double> r; // share_a / (share_a + share_b)
};

std::vector<JournalProfile> journal_table(const Corpus& corpus, const CitationGraph& citations,
                                          const PeriodScheme& scheme, const std::string& anchor_a,
                                          const std::string& anchor_b, int min_articles = 20);

std::set<std::string> world_of_references(const Corpus& corpus, const CitationGraph& citations,
                                          const std::string& anchor);

struct WorYear {
    int year = 0;
    int articles = 0;
    double share_world_a = 0.0;
    double share_world_b = 0.0;
};

std::vector<WorYear> wor_timeseries(const Corpus& corpus, const CitationGraph& citations,
                                    const std::string& anchor_a, const std::string& anchor_b);

struct BlockWorldShares {
    std::vector<double> share_world_a; // per block
    std::vector<double> share_world_b;
};

BlockWorldShares block_world_shares(const Corpus& corpus, const Partition& partition,
                                    const std::set<std::string>& world_a,
                                    const std::set<std::string>& world_b);

// ---------------------------------------------------------------------------
// Economics share per period

struct EconShares {
    struct Row {
        std::string label;
        int start_year = 0;
        int end_year = 0;
        int articles = 0;      // in qualifying journals, inside the range
        int econ_articles = 0; // thereof in economics journals
        std::optional<double> share;
    };
    std::vector<Row> periods;
    std::vector<Row> first_period_split; // three five-year slices
};

EconShares econ_share_by_period(const Corpus& corpus, const PeriodScheme& scheme,
                                const JournalClassifier& classifier, int min_articles = 20);

} // namespace claimnet
