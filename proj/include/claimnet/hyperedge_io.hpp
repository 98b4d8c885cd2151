#pragma once
// Hyperedge ingestion file: UTF-8 text, one record per line,
// `article_id<TAB>sentence_index<TAB>notation`. Lines starting with '#'
// are comments.

#include <iosfwd>
#include <string>
#include <vector>

#include "claimnet/hyperedge.hpp"

namespace claimnet {

struct SentenceRecord {
    std::string article_id;
    int sentence_index = 0;
    Hyperedge edge;

    bool operator==(const SentenceRecord&) const = default;
};

struct LineError {
    std::size_t line_number = 0; // 1-based
    std::string message;
};

// Strict read: throws MalformedRecordError (carrying the line number) on the
// first bad line.
class MalformedRecordError : public std::runtime_error {
public:
    MalformedRecordError(std::size_t line_number, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
          line_number(line_number) {}
    std::size_t line_number;
};

std::vector<SentenceRecord> read_hyperedge_file(std::istream& in);
std::vector<SentenceRecord> read_hyperedge_file(const std::string& path);

// Lenient scan for parse-check: collects one LineError per bad line instead
// of throwing. Good lines still produce records.
std::vector<SentenceRecord> scan_hyperedge_file(std::istream& in, std::vector<LineError>& errors);

} // namespace claimnet
