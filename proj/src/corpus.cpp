#include "claimnet/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "claimnet/csv.hpp"
#include "claimnet/hyperedge.hpp"

namespace claimnet {

std::string normalize_title(std::string_view title) {
    std::string out;
    out.reserve(title.size());
    bool pending_space = false;
    for (char c : title) {
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f') {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out += ' ';
            pending_space = false;
        }
        out += (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
    }
    return out;
}

std::string normalize_author(std::string_view author) {
    std::string out;
    out.reserve(author.size());
    bool pending_space = false;
    for (char c : author) {
        if (c == ' ' || c == '\t' || c == ',') {
            pending_space = !out.empty();
            continue;
        }
        if (c == '.') continue;
        if (pending_space) {
            out += ' ';
            pending_space = false;
        }
        out += (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
    }
    return out;
}

PeriodScheme PeriodScheme::defaults() {
    return {{{"P1", 1995, 2011}, {"P2", 2012, 2016}, {"P3", 2017, 2021}}};
}

void PeriodScheme::validate() const {
    if (periods.empty()) throw std::runtime_error("period scheme is empty");
    for (std::size_t i = 0; i < periods.size(); ++i) {
        const Period& p = periods[i];
        if (p.start_year > p.end_year) {
            throw std::runtime_error("period " + p.label + " ends before it starts");
        }
        if (i > 0 && periods[i - 1].end_year >= p.start_year) {
            throw std::runtime_error("periods overlap or are out of order at " + p.label);
        }
    }
}

std::optional<std::string> assign_period(int year, const PeriodScheme& scheme) {
    for (const Period& p : scheme.periods) {
        if (year >= p.start_year && year <= p.end_year) return p.label;
    }
    return std::nullopt;
}

namespace {

int parse_int_field(const std::string& value, const std::string& what, std::size_t row) {
    int out = 0;
    const std::string t = trim(value);
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
    if (ec != std::errc{} || ptr != t.data() + t.size()) {
        throw MalformedRecordError(row, "bad " + what + ": '" + value + "'");
    }
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

std::vector<RawReference> parse_references(const std::string& field, std::size_t row) {
    std::vector<RawReference> refs;
    if (trim(field).empty()) return refs;
    for (const std::string& part : split(field, '|')) {
        const std::string t = trim(part);
        if (t.empty()) continue;
        RawReference ref;
        const auto sep = t.rfind("::");
        if (sep == std::string::npos) {
            ref.title = t;
        } else {
            ref.title = trim(t.substr(0, sep));
            const std::string y = trim(t.substr(sep + 2));
            if (!y.empty()) ref.year = parse_int_field(y, "reference year", row);
        }
        if (normalize_title(ref.title).empty()) {
            throw MalformedRecordError(row, "reference with empty title");
        }
        refs.push_back(std::move(ref));
    }
    return refs;
}

} // namespace

Corpus load_corpus(std::istream& bibliographic, std::istream& hyperedges) {
    Corpus corpus;
    const CsvTable table = read_csv(bibliographic);
    if (!table.header.empty()) {
        const std::size_t c_id = table.column("id");
        const std::size_t c_title = table.column("title");
        const std::size_t c_year = table.column("year");
        const std::size_t c_authors = table.column("authors");
        const std::size_t c_journal = table.column("journal");
        const std::size_t c_founded = table.column("journal_founded");
        const std::size_t c_refs = table.column("references");
        for (std::size_t i = 0; i < table.rows.size(); ++i) {
            const auto& row = table.rows[i];
            const std::size_t line = i + 2; // 1-based, after header
            Article a;
            a.id = trim(row[c_id]);
            if (a.id.empty()) throw MalformedRecordError(line, "empty article id");
            a.title = row[c_title];
            a.year = parse_int_field(row[c_year], "year", line);
            if (a.year < 1900 || a.year > 2100) {
                throw MalformedRecordError(line, "year out of range: " + row[c_year]);
            }
            for (const std::string& author : split(row[c_authors], ';')) {
                const std::string key = normalize_author(author);
                if (!key.empty()) a.authors.push_back(key);
            }
            if (a.authors.empty()) throw MalformedRecordError(line, "article without authors");
            a.journal = trim(row[c_journal]);
            if (!trim(row[c_founded]).empty()) {
                a.journal_founded = parse_int_field(row[c_founded], "journal_founded", line);
            }
            a.references = parse_references(row[c_refs], line);
            if (corpus.by_id.count(a.id)) throw DuplicateArticleIdError(a.id);
            corpus.by_id.emplace(a.id, corpus.articles.size());
            corpus.articles.push_back(std::move(a));
        }
    }

    std::set<std::pair<std::string, int>> seen_sentences;
    std::size_t line_number = 0;
    // re-scan line numbers through the strict reader by tracking order
    std::vector<SentenceRecord> records = read_hyperedge_file(hyperedges);
    for (SentenceRecord& rec : records) {
        ++line_number;
        const auto it = corpus.by_id.find(rec.article_id);
        if (it == corpus.by_id.end()) {
            corpus.unknown_hyperedge_ids.push_back(rec.article_id);
            continue;
        }
        if (!seen_sentences.emplace(rec.article_id, rec.sentence_index).second) {
            throw MalformedRecordError(line_number, "duplicate sentence " + rec.article_id + "#" +
                                                        std::to_string(rec.sentence_index));
        }
        corpus.articles[it->second].sentences.push_back(std::move(rec));
    }
    for (Article& a : corpus.articles) {
        std::sort(a.sentences.begin(), a.sentences.end(),
                  [](const SentenceRecord& x, const SentenceRecord& y) {
                      return x.sentence_index < y.sentence_index;
                  });
    }
    return corpus;
}

Corpus load_corpus(const std::string& bibliographic_path, const std::string& hyperedge_path) {
    std::ifstream bib(bibliographic_path, std::ios::binary);
    if (!bib) throw std::runtime_error("cannot open bibliographic file: " + bibliographic_path);
    std::ifstream hyp(hyperedge_path, std::ios::binary);
    if (!hyp) throw std::runtime_error("cannot open hyperedge file: " + hyperedge_path);
    return load_corpus(bib, hyp);
}

CitationGraph match_citations(const Corpus& corpus) {
    std::map<std::pair<std::string, int>, std::vector<std::string>> index;
    for (const Article& a : corpus.articles) {
        index[{normalize_title(a.title), a.year}].push_back(a.id);
    }
    for (auto& [key, ids] : index) std::sort(ids.begin(), ids.end());

    CitationGraph graph;
    std::set<CitationEdge> edges;
    std::set<std::string> self_edges;
    for (const Article& a : corpus.articles) {
        for (const RawReference& ref : a.references) {
            if (!ref.year.has_value()) continue; // both fields are required
            const auto it = index.find({normalize_title(ref.title), *ref.year});
            if (it == index.end()) continue; // external reference
            const auto& candidates = it->second;
            if (candidates.size() > 1) {
                graph.ambiguous.push_back({a.id, ref.title, *ref.year, candidates});
                continue;
            }
            const std::string& cited = candidates.front();
            if (cited == a.id) self_edges.insert(a.id);
            edges.insert({a.id, cited});
        }
    }
    graph.edges.assign(edges.begin(), edges.end());
    graph.self_edges.assign(self_edges.begin(), self_edges.end());
    std::sort(graph.ambiguous.begin(), graph.ambiguous.end(),
              [](const AmbiguousReference& x, const AmbiguousReference& y) {
                  return std::tie(x.citing, x.ref_title, x.ref_year) <
                         std::tie(y.citing, y.ref_title, y.ref_year);
              });
    for (const CitationEdge& e : graph.edges) {
        if (corpus.article(e.cited).year > corpus.article(e.citing).year) {
            ++graph.temporal_violations;
        }
    }
    return graph;
}

JournalClassifier JournalClassifier::from_ini(const IniFile& ini) {
    JournalClassifier jc;
    for (const auto& v : ini.values("journals.economics_include")) {
        jc.include_patterns.push_back(normalize_title(v));
    }
    for (const auto& v : ini.values("journals.economics_exclude")) {
        jc.exclude_patterns.push_back(normalize_title(v));
    }
    return jc;
}

JournalClassifier JournalClassifier::load(const std::string& path) {
    return from_ini(IniFile::load(path));
}

bool JournalClassifier::is_economics(const std::string& journal) const {
    const std::string name = normalize_title(journal);
    for (const std::string& p : exclude_patterns) {
        if (name.find(p) != std::string::npos) return false;
    }
    for (const std::string& p : include_patterns) {
        if (name.find(p) != std::string::npos) return true;
    }
    return name.find("economic") != std::string::npos;
}

} // namespace claimnet
