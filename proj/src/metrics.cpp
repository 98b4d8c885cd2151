#include "claimnet/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace claimnet {

ClaimsIndex ClaimsIndex::build(const Corpus& corpus, const AtomLexicon& lex) {
    ClaimsIndex index;
    for (const Article& a : corpus.articles) {
        index.by_article.emplace(a.id, classify_abstract(a.sentences, lex));
    }
    return index;
}

bool ClaimsIndex::has_positive(const std::string& id) const {
    const auto it = by_article.find(id);
    return it != by_article.end() && it->second.has_positive;
}

bool ClaimsIndex::has_negative(const std::string& id) const {
    const auto it = by_article.find(id);
    return it != by_article.end() && it->second.has_negative;
}

TopicsIndex TopicsIndex::build(const Corpus& corpus, const AtomLexicon& lex,
                               const TopicLexicon& topics) {
    TopicsIndex index;
    for (const Article& a : corpus.articles) {
        std::set<TopicCategory> found;
        for (const SentenceRecord& s : a.sentences) {
            for (TopicCategory t : extract_topics(s.edge, lex, topics)) found.insert(t);
        }
        index.by_article.emplace(a.id, std::move(found));
    }
    return index;
}

const std::set<TopicCategory>& TopicsIndex::topics_of(const std::string& id) const {
    static const std::set<TopicCategory> kEmpty;
    const auto it = by_article.find(id);
    return it == by_article.end() ? kEmpty : it->second;
}

// ---------------------------------------------------------------------------

std::vector<YearPosNeg> posneg_timeseries(const Corpus& corpus, const ClaimsIndex& claims,
                                          const CorrectionFactors& factors) {
    std::map<int, YearPosNeg> by_year;
    for (const Article& a : corpus.articles) {
        YearPosNeg& row = by_year[a.year];
        row.year = a.year;
        row.articles += 1;
        if (claims.has_positive(a.id)) row.raw_positive += 1;
        if (claims.has_negative(a.id)) row.raw_negative += 1;
    }
    std::vector<YearPosNeg> out;
    for (auto& [year, row] : by_year) {
        (void)year;
        const CorrectedCounts corrected =
            correct_counts(row.raw_positive, row.raw_negative, factors);
        double pos = corrected.positive / row.articles;
        double neg = corrected.negative / row.articles;
        row.clamped = pos > 1.0 || neg > 1.0;
        row.positive_share = std::min(pos, 1.0);
        row.negative_share = std::min(neg, 1.0);
        out.push_back(row);
    }
    return out;
}

// ---------------------------------------------------------------------------

TopicRatioTable topic_ratio_table(const Corpus& corpus, const ClaimsIndex& claims,
                                  const TopicsIndex& topics, const PeriodScheme& scheme,
                                  const CorrectionFactors& factors) {
    scheme.validate();
    TopicRatioTable table;
    // raw counts per row (periods then aggregate) per topic
    const std::size_t rows = scheme.periods.size() + 1;
    std::vector<std::map<TopicCategory, std::pair<int, int>>> counts(rows);
    for (const Article& a : corpus.articles) {
        const auto period = assign_period(a.year, scheme);
        if (!period.has_value()) continue;
        std::size_t row = 0;
        while (scheme.periods[row].label != *period) ++row;
        const bool pos = claims.has_positive(a.id);
        const bool neg = claims.has_negative(a.id);
        if (!pos && !neg) continue;
        for (TopicCategory t : topics.topics_of(a.id)) {
            for (const std::size_t r : {row, rows - 1}) {
                if (pos) counts[r][t].first += 1;
                if (neg) counts[r][t].second += 1;
            }
        }
    }
    for (const Period& p : scheme.periods) table.row_labels.push_back(p.label);
    table.row_labels.push_back("aggregate");
    table.ratios.resize(rows);
    for (std::size_t row = 0; row < rows; ++row) {
        for (TopicCategory t : kAllTopics) {
            const auto it = counts[row].find(t);
            const int raw_pos = it == counts[row].end() ? 0 : it->second.first;
            const int raw_neg = it == counts[row].end() ? 0 : it->second.second;
            const CorrectedCounts corrected = correct_counts(raw_pos, raw_neg, factors);
            if (corrected.negative > 0.0) {
                table.ratios[row][t] = corrected.positive / corrected.negative;
            } else {
                table.ratios[row][t] = std::nullopt;
            }
        }
    }
    return table;
}

TopicShares topic_share_chart(const Corpus& corpus, const TopicsIndex& topics,
                              const PeriodScheme& scheme) {
    scheme.validate();
    TopicShares out;
    int covered = 0;
    std::map<std::string, TopicShares::PeriodRow> rows;
    for (const Period& p : scheme.periods) {
        rows[p.label].label = p.label;
        for (TopicCategory t : kAllTopics) rows[p.label].percentage[t] = 0.0;
    }
    for (const Article& a : corpus.articles) {
        const auto& article_topics = topics.topics_of(a.id);
        if (!article_topics.empty()) ++covered;
        const auto period = assign_period(a.year, scheme);
        if (!period.has_value()) continue;
        TopicShares::PeriodRow& row = rows[*period];
        row.articles += 1;
        for (TopicCategory t : article_topics) row.percentage[t] += 1.0;
    }
    for (const Period& p : scheme.periods) {
        TopicShares::PeriodRow row = rows[p.label];
        if (row.articles > 0) {
            for (auto& [t, v] : row.percentage) v = 100.0 * v / row.articles;
        }
        out.periods.push_back(std::move(row));
    }
    out.coverage_percentage =
        corpus.articles.empty() ? 0.0 : 100.0 * covered / corpus.articles.size();
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// Distinct articles with at least one author in the block.
std::vector<std::set<std::string>> articles_by_block(const Corpus& corpus,
                                                     const Partition& partition) {
    std::vector<std::set<std::string>> out(partition.num_blocks);
    for (const Article& a : corpus.articles) {
        for (const std::string& author : a.authors) {
            const auto it = partition.assignment.find(author);
            if (it != partition.assignment.end()) out[it->second].insert(a.id);
        }
    }
    return out;
}

} // namespace

std::vector<BlockMetrics> block_metrics(const Corpus& corpus, const ClaimsIndex& claims,
                                        const AuthorGraph& unpruned, const Partition& partition,
                                        const CorrectionFactors& factors) {
    // author -> their articles, co-authors
    std::map<std::string, std::vector<const Article*>> articles_of;
    std::map<std::string, std::set<std::string>> coauthors_of;
    std::set<std::pair<std::string, std::string>> coauthor_pairs;
    for (const Article& a : corpus.articles) {
        for (const std::string& u : a.authors) {
            articles_of[u].push_back(&a);
            for (const std::string& v : a.authors) {
                if (u == v) continue;
                coauthors_of[u].insert(v);
                coauthor_pairs.insert({u, v});
            }
        }
    }
    for (const auto& [author, block] : partition.assignment) {
        (void)block;
        if (!articles_of.count(author)) {
            throw PartitionMismatchError("partition author without corpus articles: " + author);
        }
    }

    const auto block_articles = articles_by_block(corpus, partition);
    std::vector<BlockMetrics> out(partition.num_blocks);
    std::vector<std::vector<std::string>> members(partition.num_blocks);
    for (const auto& [author, block] : partition.assignment) members[block].push_back(author);

    // endogamy: received weight whose source is a co-author (or the author
    // themselves, for self-loops kept in the unpruned graph)
    std::vector<double> received_total(partition.num_blocks, 0.0);
    std::vector<double> received_coauthor(partition.num_blocks, 0.0);
    for (const auto& [key, w] : unpruned.edges) {
        const auto& [source, target] = key;
        const auto it = partition.assignment.find(target);
        if (it == partition.assignment.end()) continue;
        received_total[it->second] += w;
        if (source == target || coauthor_pairs.count({source, target})) {
            received_coauthor[it->second] += w;
        }
    }

    for (int block = 0; block < partition.num_blocks; ++block) {
        BlockMetrics& m = out[block];
        m.block = block;
        m.author_count = static_cast<int>(members[block].size());

        int raw_pos = 0;
        int raw_neg = 0;
        double year_sum = 0.0;
        for (const std::string& id : block_articles[block]) {
            if (claims.has_positive(id)) ++raw_pos;
            if (claims.has_negative(id)) ++raw_neg;
            year_sum += corpus.article(id).year;
        }
        const std::size_t n_articles = block_articles[block].size();
        if (n_articles > 0) {
            const CorrectedCounts corrected = correct_counts(raw_pos, raw_neg, factors);
            m.pos_ratio = std::min(corrected.positive / n_articles, 1.0);
            m.neg_ratio = std::min(corrected.negative / n_articles, 1.0);
            m.mean_year = year_sum / n_articles;
        }
        m.endogamy = received_total[block] > 0.0
                         ? received_coauthor[block] / received_total[block]
                         : 0.0;

        double sum_articles = 0.0;
        double sum_per_year = 0.0;
        double sum_coauthors = 0.0;
        for (const std::string& author : members[block]) {
            const auto& list = articles_of.at(author);
            sum_articles += static_cast<double>(list.size());
            int first = list.front()->year;
            int last = first;
            for (const Article* a : list) {
                first = std::min(first, a->year);
                last = std::max(last, a->year);
            }
            sum_per_year += static_cast<double>(list.size()) / (last - first + 1);
            const auto co = coauthors_of.find(author);
            sum_coauthors += co == coauthors_of.end() ? 0.0 : co->second.size();
        }
        if (m.author_count > 0) {
            m.mean_articles = sum_articles / m.author_count;
            m.mean_articles_per_year = sum_per_year / m.author_count;
            m.mean_unique_coauthors = sum_coauthors / m.author_count;
        }
    }
    return out;
}

BlockTopicShares topic_share_by_block(const Corpus& corpus, const TopicsIndex& topics,
                                      const Partition& partition) {
    const auto block_articles = articles_by_block(corpus, partition);
    BlockTopicShares out;
    out.share.resize(partition.num_blocks);
    for (int block = 0; block < partition.num_blocks; ++block) {
        std::map<TopicCategory, double> counts;
        for (TopicCategory t : kAllTopics) counts[t] = 0.0;
        for (const std::string& id : block_articles[block]) {
            for (TopicCategory t : topics.topics_of(id)) counts[t] += 1.0;
        }
        if (!block_articles[block].empty()) {
            for (auto& [t, v] : counts) v /= static_cast<double>(block_articles[block].size());
        }
        out.share[block] = std::move(counts);
    }
    for (TopicCategory t : kAllTopics) {
        double best = 0.0;
        int best_block = -1;
        for (int block = 0; block < partition.num_blocks; ++block) {
            const double v = out.share[block].at(t);
            if (v > best) {
                best = v;
                best_block = block;
            }
        }
        if (best_block >= 0) out.max_block[t] = best_block;
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::set<std::string> articles_of_author(const Corpus& corpus, const std::string& anchor) {
    std::set<std::string> out;
    for (const Article& a : corpus.articles) {
        for (const std::string& author : a.authors) {
            if (author == anchor) {
                out.insert(a.id);
                break;
            }
        }
    }
    return out;
}

// Articles with a resolved reference to an article authored by the anchor.
std::set<std::string> articles_citing(const Corpus& corpus, const CitationGraph& citations,
                                      const std::string& anchor) {
    const std::set<std::string> anchored = articles_of_author(corpus, anchor);
    if (anchored.empty()) throw AnchorUnknownError(anchor);
    std::set<std::string> out;
    for (const CitationEdge& e : citations.edges) {
        if (anchored.count(e.cited)) out.insert(e.citing);
    }
    return out;
}

} // namespace

std::vector<JournalProfile> journal_table(const Corpus& corpus, const CitationGraph& citations,
                                          const PeriodScheme& scheme, const std::string& anchor_a,
                                          const std::string& anchor_b, int min_articles) {
    scheme.validate();
    const std::set<std::string> cites_a = articles_citing(corpus, citations, anchor_a);
    const std::set<std::string> cites_b = articles_citing(corpus, citations, anchor_b);

    std::map<std::string, JournalProfile> profiles;
    std::map<std::string, std::pair<int, int>> citing_counts; // journal -> (a, b)
    for (const Article& a : corpus.articles) {
        JournalProfile& p = profiles[a.journal];
        if (p.article_count == 0) {
            p.journal = a.journal;
            p.per_period.assign(scheme.periods.size(), 0);
        }
        p.article_count += 1;
        if (a.journal_founded.has_value()) {
            p.founded = p.founded.has_value() ? std::min(*p.founded, *a.journal_founded)
                                              : *a.journal_founded;
        }
        const auto period = assign_period(a.year, scheme);
        if (period.has_value()) {
            for (std::size_t i = 0; i < scheme.periods.size(); ++i) {
                if (scheme.periods[i].label == *period) p.per_period[i] += 1;
            }
        }
        if (cites_a.count(a.id)) citing_counts[a.journal].first += 1;
        if (cites_b.count(a.id)) citing_counts[a.journal].second += 1;
    }

    std::vector<JournalProfile> out;
    for (auto& [journal, p] : profiles) {
        if (p.article_count < min_articles) continue;
        const auto& [na, nb] = citing_counts[journal];
        p.share_citing_a = static_cast<double>(na) / p.article_count;
        p.share_citing_b = static_cast<double>(nb) / p.article_count;
        if (p.share_citing_a + p.share_citing_b > 0.0) {
            p.r = p.share_citing_a / (p.share_citing_a + p.share_citing_b);
        }
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), [](const JournalProfile& x, const JournalProfile& y) {
        if (x.r.has_value() != y.r.has_value()) return x.r.has_value(); // undefined r last
        if (x.r.has_value() && *x.r != *y.r) return *x.r > *y.r;
        return x.journal < y.journal;
    });
    return out;
}

std::set<std::string> world_of_references(const Corpus& corpus, const CitationGraph& citations,
                                          const std::string& anchor) {
    const std::set<std::string> anchored = articles_of_author(corpus, anchor);
    if (anchored.empty()) throw AnchorUnknownError(anchor);
    std::set<std::string> journals;
    for (const CitationEdge& e : citations.edges) {
        if (anchored.count(e.citing)) journals.insert(corpus.article(e.cited).journal);
    }
    return journals;
}

std::vector<WorYear> wor_timeseries(const Corpus& corpus, const CitationGraph& citations,
                                    const std::string& anchor_a, const std::string& anchor_b) {
    const std::set<std::string> world_a = world_of_references(corpus, citations, anchor_a);
    const std::set<std::string> world_b = world_of_references(corpus, citations, anchor_b);
    std::map<int, WorYear> by_year;
    for (const Article& a : corpus.articles) {
        WorYear& row = by_year[a.year];
        row.year = a.year;
        row.articles += 1;
        if (world_a.count(a.journal)) row.share_world_a += 1.0;
        if (world_b.count(a.journal)) row.share_world_b += 1.0;
    }
    std::vector<WorYear> out;
    for (auto& [year, row] : by_year) {
        (void)year;
        row.share_world_a /= row.articles;
        row.share_world_b /= row.articles;
        out.push_back(row);
    }
    return out;
}

BlockWorldShares block_world_shares(const Corpus& corpus, const Partition& partition,
                                    const std::set<std::string>& world_a,
                                    const std::set<std::string>& world_b) {
    const auto block_articles = articles_by_block(corpus, partition);
    BlockWorldShares out;
    out.share_world_a.assign(partition.num_blocks, 0.0);
    out.share_world_b.assign(partition.num_blocks, 0.0);
    for (int block = 0; block < partition.num_blocks; ++block) {
        if (block_articles[block].empty()) continue;
        for (const std::string& id : block_articles[block]) {
            const std::string& journal = corpus.article(id).journal;
            if (world_a.count(journal)) out.share_world_a[block] += 1.0;
            if (world_b.count(journal)) out.share_world_b[block] += 1.0;
        }
        out.share_world_a[block] /= static_cast<double>(block_articles[block].size());
        out.share_world_b[block] /= static_cast<double>(block_articles[block].size());
    }
    return out;
}

EconShares econ_share_by_period(const Corpus& corpus, const PeriodScheme& scheme,
                                const JournalClassifier& classifier, int min_articles) {
    scheme.validate();
    std::map<std::string, int> journal_counts;
    for (const Article& a : corpus.articles) journal_counts[a.journal] += 1;
    std::set<std::string> qualifying;
    for (const auto& [journal, count] : journal_counts) {
        if (count >= min_articles) qualifying.insert(journal);
    }

    auto tally = [&](const std::string& label, int start, int end) {
        EconShares::Row row;
        row.label = label;
        row.start_year = start;
        row.end_year = end;
        for (const Article& a : corpus.articles) {
            if (a.year < start || a.year > end) continue;
            if (!qualifying.count(a.journal)) continue;
            row.articles += 1;
            if (classifier.is_economics(a.journal)) row.econ_articles += 1;
        }
        if (row.articles > 0) {
            row.share = static_cast<double>(row.econ_articles) / row.articles;
        }
        return row;
    };

    EconShares out;
    for (const Period& p : scheme.periods) {
        out.periods.push_back(tally(p.label, p.start_year, p.end_year));
    }
    const int s = scheme.periods.front().start_year;
    for (int slice = 0; slice < 3; ++slice) {
        const int start = s + 1 + 5 * slice;
        const int end = start + 4;
        out.first_period_split.push_back(
            tally(std::to_string(start) + "-" + std::to_string(end), start, end));
    }
    return out;
}

} // namespace claimnet
