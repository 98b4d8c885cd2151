#pragma once
// Weighted directed author-citation network. Each article citation A->B
// induces weight-1 edges from every author of A to every author of B.
// Simplification keeps authors with enough received weight and each
// surviving source's top-k outgoing targets.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "claimnet/corpus.hpp"

namespace claimnet {

struct AuthorGraph {
    std::set<std::string> nodes;
    std::map<std::pair<std::string, std::string>, long> edges; // (source, target) -> weight
    std::string period_label;
    long self_loop_weight = 0; // flagged: author citing their own article

    long total_weight() const;
    // In-weight per node, self-loops included; absent nodes answer 0.
    std::map<std::string, long> received() const;
};

struct PrunedAuthorGraph {
    std::set<std::string> nodes;
    std::map<std::pair<std::string, std::string>, long> edges;
    int k_out = 3;
    long min_received = 10;
    std::string period_label;
    std::map<std::string, long> received_unpruned; // over retained nodes
};

// Full author graph over the given article citation edges. Self-loops are
// kept (and flagged) so endogamy can be measured later.
AuthorGraph build_author_graph(const CitationGraph& citations, const Corpus& corpus);

// Two stages: drop nodes whose received weight in g is below min_received,
// then keep each surviving source's k_out heaviest outgoing edges among
// surviving targets (ties to the lexicographically smaller target).
// Self-loops never survive pruning.
PrunedAuthorGraph prune(const AuthorGraph& g, int k_out = 3, long min_received = 10);

struct CumulativeNetwork {
    std::string label;
    int end_year = 0;
    AuthorGraph full;
    PrunedAuthorGraph pruned;
};

// One cumulative network per period: citing articles with year <= the
// period's end year, then pruned.
std::vector<CumulativeNetwork> cumulative_networks(const CitationGraph& citations,
                                                   const Corpus& corpus,
                                                   const PeriodScheme& scheme, int k_out = 3,
                                                   long min_received = 10);

} // namespace claimnet
