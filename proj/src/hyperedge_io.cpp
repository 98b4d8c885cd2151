#include "claimnet/hyperedge_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace claimnet {

namespace {

bool parse_line(const std::string& line, std::size_t line_number, SentenceRecord& out,
                std::string& error) {
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos) {
        error = "expected article_id<TAB>sentence_index<TAB>hyperedge";
        return false;
    }
    out.article_id = line.substr(0, t1);
    if (out.article_id.empty()) {
        error = "empty article_id";
        return false;
    }
    const std::string_view idx(line.data() + t1 + 1, t2 - t1 - 1);
    auto [ptr, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), out.sentence_index);
    if (ec != std::errc{} || ptr != idx.data() + idx.size() || out.sentence_index < 0) {
        error = "sentence_index is not a non-negative integer";
        return false;
    }
    try {
        out.edge = parse_notation(std::string_view(line).substr(t2 + 1));
    } catch (const ParseError& e) {
        error = e.what();
        return false;
    }
    (void)line_number;
    return true;
}

template <typename OnError>
std::vector<SentenceRecord> read_lines(std::istream& in, OnError on_error) {
    std::vector<SentenceRecord> records;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        SentenceRecord rec;
        std::string error;
        if (parse_line(line, line_number, rec, error)) {
            records.push_back(std::move(rec));
        } else {
            on_error(line_number, error);
        }
    }
    return records;
}

} // namespace

std::vector<SentenceRecord> read_hyperedge_file(std::istream& in) {
    return read_lines(in, [](std::size_t line_number, const std::string& error) {
        throw MalformedRecordError(line_number, error);
    });
}

std::vector<SentenceRecord> read_hyperedge_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open hyperedge file: " + path);
    return read_hyperedge_file(in);
}

std::vector<SentenceRecord> scan_hyperedge_file(std::istream& in, std::vector<LineError>& errors) {
    return read_lines(in, [&errors](std::size_t line_number, const std::string& error) {
        errors.push_back({line_number, error});
    });
}

} // namespace claimnet
