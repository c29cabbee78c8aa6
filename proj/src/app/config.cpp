#include "pairabs/app.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <stdexcept>

namespace pairabs::app {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string normalize_key(std::string key) {
    std::replace(key.begin(), key.end(), '_', '-');
    return key;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> parse_config(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw std::invalid_argument("config line " + std::to_string(lineno) + ": empty key");
        entries.emplace_back(normalize_key(key), value);
    }
    return entries;
}

std::vector<std::string> splice_config(const std::vector<std::pair<std::string, std::string>>& entries,
                                       const std::vector<std::string>& args,
                                       const std::vector<std::string>& flag_keys) {
    std::set<std::string> on_command_line;
    for (const auto& a : args) {
        if (a.rfind("--", 0) != 0) continue;
        const std::string name = a.substr(2);
        on_command_line.insert(name.substr(0, name.find('=')));
    }

    std::vector<std::string> out;
    for (const auto& [key, value] : entries) {
        if (on_command_line.contains(key)) continue;
        if (std::find(flag_keys.begin(), flag_keys.end(), key) != flag_keys.end()) {
            if (value == "true" || value == "1" || value == "yes") out.push_back("--" + key);
            else if (value != "false" && value != "0" && value != "no")
                throw std::invalid_argument("config key " + key + " expects true or false");
            continue;
        }
        out.push_back("--" + key);
        out.push_back(value);
    }
    out.insert(out.end(), args.begin(), args.end());
    return out;
}

}  // namespace pairabs::app
