#pragma once
// Shared helpers for the test suites: random generators and independent
// oracles kept apart from the implementation paths they check.

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "claimnet/corpus.hpp"
#include "claimnet/hyperedge.hpp"
#include "claimnet/rng.hpp"

namespace testutil {

inline claimnet::Atom random_atom(claimnet::Rng& rng) {
    static const char* kLabels[] = {"plays", "mary", "chess",  "ekc",   "curve", "found",
                                    "berlin", "of",   "mayor", "first", "x",     "alpha"};
    static const char kTypes[] = {'C', 'P', 'M', 'B', 'J', 'X'};
    claimnet::Atom a;
    a.label = kLabels[rng.below(sizeof kLabels / sizeof kLabels[0])];
    a.type = kTypes[rng.below(sizeof kTypes / sizeof kTypes[0])];
    if (rng.chance(0.2)) {
        const char* kRoles[] = {"s", "so", "sox"};
        a.roles = kRoles[rng.below(3)];
    }
    return a;
}

inline claimnet::Hyperedge random_hyperedge(claimnet::Rng& rng, int max_depth) {
    if (max_depth == 0 || rng.chance(0.4)) return claimnet::Hyperedge(random_atom(rng));
    const std::size_t arity = 2 + rng.below(3);
    std::vector<claimnet::Hyperedge> elements;
    for (std::size_t i = 0; i < arity; ++i) {
        elements.push_back(random_hyperedge(rng, max_depth - 1));
    }
    return claimnet::Hyperedge(std::move(elements));
}

// Independent walker used as the oracle for atoms(): collects atoms through
// a different traversal (explicit stack, reversed order) than the library.
inline std::multiset<std::string> atom_multiset_oracle(const claimnet::Hyperedge& h) {
    std::multiset<std::string> out;
    std::vector<const claimnet::Hyperedge*> stack = {&h};
    while (!stack.empty()) {
        const claimnet::Hyperedge* cur = stack.back();
        stack.pop_back();
        if (cur->is_atom()) {
            const claimnet::Atom& a = cur->atom();
            out.insert(a.label + "/" + a.type +
                       (a.roles.empty() ? "" : "." + a.roles));
        } else {
            for (const claimnet::Hyperedge& e : cur->elements()) stack.push_back(&e);
        }
    }
    return out;
}

inline double adjusted_rand_index(const std::vector<int>& a, const std::vector<int>& b) {
    const std::size_t n = a.size();
    std::map<std::pair<int, int>, long> contingency;
    std::map<int, long> row;
    std::map<int, long> col;
    for (std::size_t i = 0; i < n; ++i) {
        contingency[{a[i], b[i]}] += 1;
        row[a[i]] += 1;
        col[b[i]] += 1;
    }
    auto choose2 = [](long m) { return m * (m - 1) / 2.0; };
    double sum_ij = 0.0;
    for (const auto& [key, m] : contingency) {
        (void)key;
        sum_ij += choose2(m);
    }
    double sum_a = 0.0;
    for (const auto& [key, m] : row) {
        (void)key;
        sum_a += choose2(m);
    }
    double sum_b = 0.0;
    for (const auto& [key, m] : col) {
        (void)key;
        sum_b += choose2(m);
    }
    const double total = choose2(static_cast<long>(n));
    const double expected = sum_a * sum_b / total;
    const double maximum = (sum_a + sum_b) / 2.0;
    if (maximum == expected) return 1.0;
    return (sum_ij - expected) / (maximum - expected);
}

// In-memory corpus construction for fixtures.
struct ArticleSpec {
    std::string id;
    std::string title;
    int year = 2000;
    std::vector<std::string> authors; // raw "Surname, I." form
    std::string journal = "Journal Of Tests";
    std::string founded; // empty = none
    std::vector<std::pair<std::string, std::string>> references; // title, year ("" = none)
};

inline std::string bibliographic_csv(const std::vector<ArticleSpec>& articles) {
    std::ostringstream out;
    out << "id,title,year,authors,journal,journal_founded,references\n";
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += '"';
            q += c;
        }
        return q + "\"";
    };
    for (const ArticleSpec& a : articles) {
        std::string authors;
        for (std::size_t i = 0; i < a.authors.size(); ++i) {
            if (i) authors += ";";
            authors += a.authors[i];
        }
        std::string refs;
        for (std::size_t i = 0; i < a.references.size(); ++i) {
            if (i) refs += "|";
            refs += a.references[i].first;
            if (!a.references[i].second.empty()) refs += "::" + a.references[i].second;
        }
        out << a.id << "," << quote(a.title) << "," << a.year << "," << quote(authors) << ","
            << quote(a.journal) << "," << a.founded << "," << quote(refs) << "\n";
    }
    return out.str();
}

inline claimnet::Corpus make_corpus(const std::vector<ArticleSpec>& articles,
                                    const std::string& hyperedge_lines = "") {
    std::istringstream bib(bibliographic_csv(articles));
    std::istringstream hyp(hyperedge_lines);
    return claimnet::load_corpus(bib, hyp);
}

} // namespace testutil
