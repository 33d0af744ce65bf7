#pragma once

// Exhaustive small-n verification of the structural results: minimum
// Schur-triple counts per size, the sum-free trichotomy, and the maximum
// restricted sum-free sets.

#include <functional>
#include <vector>

#include "rainbow/config.hpp"
#include "rainbow/integer_set.hpp"

namespace rainbow {

// Yields every classical sum-free subset of [n] (x + y = z forbidden,
// x = y included) exactly once, by backtracking with forbidden-sum
// propagation. Deterministic order.
void enumerate_sumfree(int n, const std::function<void(const IntegerSet&)>& yield,
                       const Config& cfg = {});
long long count_sumfree(int n, const Config& cfg = {});

// Which of the trichotomy cases hold for a sum-free S in [n]:
//   (i) |S| <= ceil(2n/5), (ii) S all odd, (iii) |S| <= min(S).
// At least one always holds. The 2n/5 boundary must be read non-strict and
// integer-rounded: the mod-5 pattern {2,3,7,8,...} is sum-free with even
// elements, small minimum, and size exactly ceil(2n/5), so rational 2n/5
// already fails at n = 4 ({1,4}). Exhaustive scans through n = 20 show
// ceil(2n/5) is tight. Non-sum-free input is a domain error.
struct TrichotomyFlags {
    bool case_i = false;
    bool case_ii = false;
    bool case_iii = false;
    // case (i) is the only one holding and 5|S| >= 2n: the sets that pin
    // down how the boundary has to be read.
    bool only_case_i_at_boundary = false;
};
TrichotomyFlags df_trichotomy_check(const IntegerSet& s);

// For each m with ceil(n/2) < m <= n, the exhaustive minimum of the
// classical Schur-triple count over |A| = m, compared against
// (m - ceil(n/2)) (m - floor(n/2)) with expected unique minimizer
// [n - m + 1, n]. All tied minimizers are reported.
struct StadenRow {
    int n = 0;
    int m = 0;
    long long min_count = 0;
    long long formula = 0;
    std::vector<IntegerSet> argmins;
    bool value_matches = false;
    bool unique_matches = false;
    bool matches_theorem = false;
};
std::vector<StadenRow> staden_verify(int n, const Config& cfg = {}, int jobs = 1);

// All maximum restricted sum-free subsets of [n]. The size claim
// floor(n/2) + 1 is stated for n >= 7; below that the report is
// informational only.
struct RestrictedExtremalReport {
    int n = 0;
    int max_size = 0;
    std::vector<IntegerSet> extremal_sets;  // sorted by canonical encoding
    bool claim_applies = false;             // n >= 7
    bool size_matches_claim = false;        // max_size == floor(n/2) + 1
};
RestrictedExtremalReport restricted_sumfree_extremal(int n, const Config& cfg = {});

}  // namespace rainbow
