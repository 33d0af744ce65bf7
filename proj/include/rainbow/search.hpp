#pragma once

// g(n, r) = max over A in [n] of g(A, r): exhaustive and bound-pruned subset
// search with full argmax collection, plus the conjecture comparison harness.

#include <optional>
#include <string>
#include <vector>

#include "rainbow/config.hpp"
#include "rainbow/counting.hpp"
#include "rainbow/integer_set.hpp"

namespace rainbow {

enum class SearchMode { Exhaustive, Pruned };

std::string to_string(SearchMode mode);
SearchMode search_mode_from_string(const std::string& s);

struct SearchResult {
    int n = 0;
    int r = 0;
    int min_size = 0;
    SearchMode mode = SearchMode::Exhaustive;
    BigCount g_max;
    std::vector<IntegerSet> argmax;  // every maximizer, sorted by encoding
    // Search statistics. Deterministic for fixed inputs (pruning compares
    // against the best of strictly larger sizes, fixed before a size group
    // starts), but they legitimately differ between the two modes.
    long long explored = 0;
    long long pruned = 0;
};

// Iterates subsets by size descending, mask ascending within a size. Pruned
// mode skips A when the matching bound (exact, certified >= g) is strictly
// below the best count among larger sizes; both modes return identical
// g_max and argmax. Work is sharded across `jobs` threads; results and
// statistics do not depend on the thread count.
SearchResult extremal_search(int n, int r, int min_size, SearchMode mode,
                             const Config& cfg = {}, int jobs = 1,
                             CountCache* cache = nullptr);

// The conjectured extremal set for (n, r): I1 for even n and 4 <= r <= 7,
// I2 for even n and r >= 8, [n] for odd n and r = 4, I3 for odd n and
// r >= 5. The search is restricted to |A| >= ceil(n/2)+1 exactly where the
// r >= 8 theorem applies. r <= 3 is out of conjecture range and reported
// informationally against [n]. Never asserts; reports MATCH / NO-MATCH.
struct ConjectureReport {
    int n = 0;
    int r = 0;
    std::string case_name;
    bool in_range = false;
    std::optional<IntegerSet> predicted_set;  // empty when degenerate at this n
    std::optional<BigCount> predicted_value;  // engine count of the predicted set
    std::optional<BigCount> predicted_formula;  // inline closed form, when defined
    bool formula_extrapolated = false;  // n below the closed-form validity range
    SearchResult search;
    bool value_match = false;
    bool unique_extremal_match = false;
    std::string verdict;  // MATCH | NO-MATCH | informational
};

ConjectureReport conjecture_report(int n, int r, const Config& cfg = {}, int jobs = 1,
                                   CountCache* cache = nullptr);

}  // namespace rainbow
