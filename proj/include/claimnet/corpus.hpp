#pragma once
// Bibliographic corpus: article records joined with their abstract
// hyperedges, internal-citation resolution by exact case-insensitive
// title + year, period labels, and journal economics classification.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "claimnet/hyperedge_io.hpp"
#include "claimnet/ini.hpp"

namespace claimnet {

struct RawReference {
    std::string title;
    std::optional<int> year;

    bool operator==(const RawReference&) const = default;
};

struct Article {
    std::string id;
    std::string title;
    int year = 0;
    std::vector<std::string> authors; // normalized author keys, in order
    std::string journal;
    std::optional<int> journal_founded;
    std::vector<RawReference> references;
    std::vector<SentenceRecord> sentences;
};

class DuplicateArticleIdError : public std::runtime_error {
public:
    explicit DuplicateArticleIdError(const std::string& id)
        : std::runtime_error("duplicate article id: " + id), id(id) {}
    std::string id;
};

struct Corpus {
    std::vector<Article> articles;
    std::map<std::string, std::size_t> by_id;
    // Hyperedge lines whose article_id matches no article, in file order.
    std::vector<std::string> unknown_hyperedge_ids;

    const Article& article(const std::string& id) const { return articles.at(by_id.at(id)); }
    bool has(const std::string& id) const { return by_id.count(id) > 0; }
};

// Case-fold (ASCII), collapse whitespace runs, trim. Idempotent.
std::string normalize_title(std::string_view title);

// Author key: case-folded "surname initials" with punctuation dropped.
// normalize_author("Stern, D.I.") == "stern di". Idempotent.
std::string normalize_author(std::string_view author);

struct Period {
    std::string label;
    int start_year = 0;
    int end_year = 0; // inclusive
};

struct PeriodScheme {
    std::vector<Period> periods;

    static PeriodScheme defaults(); // P1 1995-2011, P2 2012-2016, P3 2017-2021
    void validate() const;          // ordered and disjoint
    int final_end_year() const { return periods.back().end_year; }
};

std::optional<std::string> assign_period(int year, const PeriodScheme& scheme);

// Bibliographic CSV columns: id, title, year, authors (semicolon-separated
// "Surname, I."), journal, journal_founded, references (pipe-separated
// "title::year").
Corpus load_corpus(const std::string& bibliographic_path, const std::string& hyperedge_path);
Corpus load_corpus(std::istream& bibliographic, std::istream& hyperedges);

struct CitationEdge {
    std::string citing;
    std::string cited;

    bool operator==(const CitationEdge&) const = default;
    auto operator<=>(const CitationEdge&) const = default;
};

struct AmbiguousReference {
    std::string citing;
    std::string ref_title;
    int ref_year = 0;
    std::vector<std::string> candidates; // sorted article ids
};

struct CitationGraph {
    std::vector<CitationEdge> edges; // deduplicated, sorted
    std::vector<AmbiguousReference> ambiguous;
    std::vector<std::string> self_edges;  // citing==cited article ids, sorted
    int temporal_violations = 0;          // cited.year > citing.year
};

// Internal citation matching: a reference resolves to the corpus article
// with equal normalized title and year; both fields are required.
// References matching several articles are reported and skipped.
CitationGraph match_citations(const Corpus& corpus);

// Economics rule: the journal name contains the word "economic" (case
// insensitive), overridable per journal by config patterns.
struct JournalClassifier {
    std::vector<std::string> include_patterns; // normalized substrings
    std::vector<std::string> exclude_patterns;

    static JournalClassifier from_ini(const IniFile& ini);
    static JournalClassifier load(const std::string& path);

    bool is_economics(const std::string& journal) const;
};

} // namespace claimnet
