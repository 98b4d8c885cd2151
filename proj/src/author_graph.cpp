#include "claimnet/author_graph.hpp"

#include <algorithm>

namespace claimnet {

long AuthorGraph::total_weight() const {
    long total = 0;
    for (const auto& [key, w] : edges) total += w;
    return total;
}

std::map<std::string, long> AuthorGraph::received() const {
    std::map<std::string, long> in;
    for (const std::string& node : nodes) in[node] = 0;
    for (const auto& [key, w] : edges) in[key.second] += w;
    return in;
}

namespace {

AuthorGraph build_filtered(const CitationGraph& citations, const Corpus& corpus,
                           int max_citing_year) {
    AuthorGraph g;
    for (const CitationEdge& e : citations.edges) {
        const Article& citing = corpus.article(e.citing);
        if (citing.year > max_citing_year) continue;
        const Article& cited = corpus.article(e.cited);
        for (const std::string& a : citing.authors) {
            g.nodes.insert(a);
            for (const std::string& b : cited.authors) {
                g.nodes.insert(b);
                g.edges[{a, b}] += 1;
                if (a == b) g.self_loop_weight += 1;
            }
        }
    }
    return g;
}

} // namespace

AuthorGraph build_author_graph(const CitationGraph& citations, const Corpus& corpus) {
    return build_filtered(citations, corpus, 2100);
}

PrunedAuthorGraph prune(const AuthorGraph& g, int k_out, long min_received) {
    PrunedAuthorGraph out;
    out.k_out = k_out;
    out.min_received = min_received;
    out.period_label = g.period_label;

    const auto received = g.received();
    for (const auto& [node, in_weight] : received) {
        if (in_weight >= min_received) {
            out.nodes.insert(node);
            out.received_unpruned[node] = in_weight;
        }
    }

    // Outgoing edges of each retained source towards retained targets,
    // heaviest first, lexicographic target as the tie-break.
    std::map<std::string, std::vector<std::pair<std::string, long>>> outgoing;
    for (const auto& [key, w] : g.edges) {
        const auto& [source, target] = key;
        if (source == target) continue;
        if (!out.nodes.count(source) || !out.nodes.count(target)) continue;
        outgoing[source].push_back({target, w});
    }
    for (auto& [source, targets] : outgoing) {
        std::sort(targets.begin(), targets.end(),
                  [](const auto& x, const auto& y) {
                      if (x.second != y.second) return x.second > y.second;
                      return x.first < y.first;
                  });
        const std::size_t keep = std::min<std::size_t>(targets.size(), k_out);
        for (std::size_t i = 0; i < keep; ++i) {
            out.edges[{source, targets[i].first}] = targets[i].second;
        }
    }
    return out;
}

std::vector<CumulativeNetwork> cumulative_networks(const CitationGraph& citations,
                                                   const Corpus& corpus,
                                                   const PeriodScheme& scheme, int k_out,
                                                   long min_received) {
    scheme.validate();
    std::vector<CumulativeNetwork> out;
    for (const Period& p : scheme.periods) {
        CumulativeNetwork net;
        net.label = p.label;
        net.end_year = p.end_year;
        net.full = build_filtered(citations, corpus, p.end_year);
        net.full.period_label = p.label;
        net.pruned = prune(net.full, k_out, min_received);
        out.push_back(std::move(net));
    }
    return out;
}

} // namespace claimnet
