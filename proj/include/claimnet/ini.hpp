#pragma once
// Sectioned key-value text files used for lexicons and run configuration.
//
//   [section.name]
//   key = value
//   bare-entry            # set-style sections list one entry per line
//
// '#' and ';' start full-line comments. Keys and values are trimmed.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace claimnet {

struct IniEntry {
    std::string key;   // empty for bare entries
    std::string value; // the bare entry itself when key is empty
    std::size_t line_number = 0;
};

struct IniSection {
    std::string name;
    std::vector<IniEntry> entries;
};

class IniError : public std::runtime_error {
public:
    IniError(std::size_t line_number, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
          line_number(line_number) {}
    std::size_t line_number;
};

class IniFile {
public:
    static IniFile parse(const std::string& text);
    static IniFile load(const std::string& path);

    const IniSection* find(const std::string& name) const;
    // All bare values (and values of key-less entries) of a section; empty when absent.
    std::vector<std::string> values(const std::string& name) const;
    // key=value pairs of a section as a map; later keys win.
    std::map<std::string, std::string> kv(const std::string& name) const;

    std::vector<IniSection> sections;
};

std::string trim(const std::string& s);

} // namespace claimnet
