#pragma once

// Exhaustive-work thresholds. Exceeding one is a refusal (exit code 3 at the
// CLI), never silent truncation. Every key can be raised from a key=value
// config file.

#include <stdexcept>
#include <string>

namespace rainbow {

struct ThresholdRefusal : std::runtime_error {
    ThresholdRefusal(const std::string& what, const std::string& key)
        : std::runtime_error(what + " (raise '" + key + "' in the config file to override)"),
          config_key(key) {}
    std::string config_key;
};

struct Config {
    int search_exhaustive_max_n = 16;
    int search_pruned_max_n = 22;
    int staden_max_n = 16;
    int sumfree_enum_max_n = 26;
    int extremal_max_n = 20;
    int hypergraph_edges_max_n = 200;

    // key=value lines; '#' starts a comment; unknown keys are an error.
    static Config load(const std::string& path);
    void set(const std::string& key, const std::string& value);
};

}  // namespace rainbow
