#include "rainbow/config.hpp"

#include <fstream>

namespace rainbow {

void Config::set(const std::string& key, const std::string& value) {
    int v;
    try {
        v = std::stoi(value);
    } catch (const std::exception&) {
        throw std::domain_error("config value for '" + key + "' is not an integer: " + value);
    }
    if (key == "search_exhaustive_max_n")
        search_exhaustive_max_n = v;
    else if (key == "search_pruned_max_n")
        search_pruned_max_n = v;
    else if (key == "staden_max_n")
        staden_max_n = v;
    else if (key == "sumfree_enum_max_n")
        sumfree_enum_max_n = v;
    else if (key == "extremal_max_n")
        extremal_max_n = v;
    else if (key == "hypergraph_edges_max_n")
        hypergraph_edges_max_n = v;
    else
        throw std::domain_error("unknown config key '" + key + "'");
}

Config Config::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open config file: " + path);
    Config cfg;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::domain_error("config line missing '=': " + line);
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t\r"));
            s.erase(s.find_last_not_of(" \t\r") + 1);
            return s;
        };
        cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

}  // namespace rainbow
