#include "claimnet/ini.hpp"

#include <fstream>
#include <sstream>

namespace claimnet {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

IniFile IniFile::parse(const std::string& text) {
    IniFile file;
    std::istringstream in(text);
    std::string line;
    std::size_t line_number = 0;
    IniSection* current = nullptr;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']' || t.size() < 3) throw IniError(line_number, "malformed section header");
            file.sections.push_back({trim(t.substr(1, t.size() - 2)), {}});
            current = &file.sections.back();
            continue;
        }
        if (current == nullptr) throw IniError(line_number, "entry before any [section]");
        IniEntry entry;
        entry.line_number = line_number;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            entry.value = t;
        } else {
            entry.key = trim(t.substr(0, eq));
            entry.value = trim(t.substr(eq + 1));
            if (entry.key.empty()) throw IniError(line_number, "empty key");
        }
        current->entries.push_back(std::move(entry));
    }
    return file;
}

IniFile IniFile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

const IniSection* IniFile::find(const std::string& name) const {
    for (const auto& s : sections) {
        if (s.name == name) return &s;
    }
    return nullptr;
}

std::vector<std::string> IniFile::values(const std::string& name) const {
    std::vector<std::string> out;
    for (const auto& s : sections) {
        if (s.name != name) continue;
        for (const auto& e : s.entries) out.push_back(e.value);
    }
    return out;
}

std::map<std::string, std::string> IniFile::kv(const std::string& name) const {
    std::map<std::string, std::string> out;
    for (const auto& s : sections) {
        if (s.name != name) continue;
        for (const auto& e : s.entries) {
            if (!e.key.empty()) out[e.key] = e.value;
        }
    }
    return out;
}

} // namespace claimnet
