#include "antijam/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace antijam {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::string where(const std::string& section, const std::string& key) {
    return "[" + section + "] " + key;
}

double parse_double(const std::string& section, const std::string& key, const std::string& text) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || trim(end).size() != 0) {
        throw ConfigError("bad_value", where(section, key) + " = '" + text + "' is not a number");
    }
    return v;
}

}  // namespace

Config Config::parse(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError("bad_value", "line " + std::to_string(lineno) + ": unterminated section header");
            }
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("bad_value", "line " + std::to_string(lineno) + ": expected key = value");
        }
        Entry e;
        e.section = section;
        e.key = trim(line.substr(0, eq));
        e.value = trim(line.substr(eq + 1));
        if (e.key.empty()) {
            throw ConfigError("bad_value", "line " + std::to_string(lineno) + ": empty key");
        }
        cfg.entries_.push_back(std::move(e));
    }
    return cfg;
}

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("io_error", "cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

const Config::Entry* Config::find(const std::string& section, const std::string& key) const {
    for (const auto& e : entries_) {
        if (e.section == section && e.key == key) return &e;
    }
    return nullptr;
}

bool Config::has_section(const std::string& section) const {
    for (const auto& e : entries_) {
        if (e.section == section) return true;
    }
    return false;
}

bool Config::has(const std::string& section, const std::string& key) const {
    return find(section, key) != nullptr;
}

std::vector<std::string> Config::keys(const std::string& section) const {
    std::vector<std::string> out;
    for (const auto& e : entries_) {
        if (e.section == section) out.push_back(e.key);
    }
    return out;
}

const std::string& Config::get_string(const std::string& section, const std::string& key) const {
    const Entry* e = find(section, key);
    if (!e) throw ConfigError("missing_field", where(section, key));
    return e->value;
}

std::string Config::get_string_or(const std::string& section, const std::string& key,
                                  const std::string& fallback) const {
    const Entry* e = find(section, key);
    return e ? e->value : fallback;
}

double Config::get_double(const std::string& section, const std::string& key) const {
    return parse_double(section, key, get_string(section, key));
}

double Config::get_double_or(const std::string& section, const std::string& key, double fallback) const {
    const Entry* e = find(section, key);
    return e ? parse_double(section, key, e->value) : fallback;
}

long long Config::get_int(const std::string& section, const std::string& key) const {
    const double v = get_double(section, key);
    const long long n = static_cast<long long>(v);
    if (static_cast<double>(n) != v) {
        throw ConfigError("bad_value", where(section, key) + " must be an integer");
    }
    return n;
}

long long Config::get_int_or(const std::string& section, const std::string& key, long long fallback) const {
    return has(section, key) ? get_int(section, key) : fallback;
}

std::uint64_t Config::get_u64(const std::string& section, const std::string& key) const {
    const std::string& text = get_string(section, key);
    char* end = nullptr;
    const unsigned long long v = std::strtoull(text.c_str(), &end, 10);
    if (end == text.c_str() || trim(end).size() != 0) {
        throw ConfigError("bad_value", where(section, key) + " = '" + text + "' is not an unsigned integer");
    }
    return v;
}

std::uint64_t Config::get_u64_or(const std::string& section, const std::string& key,
                                 std::uint64_t fallback) const {
    return has(section, key) ? get_u64(section, key) : fallback;
}

std::vector<double> Config::get_doubles(const std::string& section, const std::string& key) const {
    std::istringstream in(get_string(section, key));
    std::vector<double> out;
    std::string token;
    while (in >> token) out.push_back(parse_double(section, key, token));
    if (out.empty()) throw ConfigError("bad_value", where(section, key) + " is empty");
    return out;
}

void Config::set(const std::string& section, const std::string& key, const std::string& value) {
    for (auto& e : entries_) {
        if (e.section == section && e.key == key) {
            e.value = value;
            return;
        }
    }
    entries_.push_back(Entry{section, key, value});
}

}  // namespace antijam
