#pragma once

// Computable upper bounds and auxiliary counts: link graphs and their
// matchings, the matching-based coloring bound, the large-matching case
// check, the many-triples exponent bound, the dense-set bound RHS, pairs
// covered by no triple, and disjoint pair covers.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/counting.hpp"
#include "rainbow/integer_set.hpp"
#include "rainbow/numeric.hpp"

namespace rainbow {

// Graph on A \ {t} with an edge {x, y} exactly when {t, x, y} is a
// restricted triple of A. Maximum degree is at most 2 (a vertex can pair
// with t only as the complementary summand or as a summand of t), so the
// components are paths and cycles.
struct LinkGraph {
    int t = 0;
    std::vector<int> vertices;                // A \ {t}, ascending
    std::vector<std::pair<int, int>> edges;   // x < y, sorted
};

LinkGraph link_graph(int t, const IntegerSet& a);

// Exact maximum matching by component decomposition: a path with e edges
// contributes floor((e+1)/2), a cycle with e edges floor(e/2).
int max_matching(const LinkGraph& g);
int matching_number(int t, const IntegerSet& a);  // k(t, A)

// min over t in A of r^(|A|-2k(t,A)) * (3r-2)^k(t,A). The per-edge factor
// 3r-2 = r + 2(r-1) counts the colorings of a matched pair given t's color.
// Always >= g(A, r).
struct MatchingBoundEntry {
    BigCount value;
    int best_t = 0;  // smallest t attaining the min
    int k = 0;       // k(best_t, A)
};
MatchingBoundEntry matching_bound(const IntegerSet& a, int r);

// Large-matching cases for |A| = ceil(n/2) + c, c > 1, r >= 8:
//   (i)  some k(t,A) >= 2(c-1)    implies g(A,r) < r^(ceil(n/2)+1)
//   (ii) some k(t,A) >= 2(c-1)+1  implies g(A,r) < r^(ceil(n/2)-1) (3r-2)
// Precondition failures are reported as inapplicable, not errors.
struct Prop51Report {
    bool applicable = false;
    std::string reason;  // set when inapplicable
    int c = 0;
    struct Witness {
        int t;
        int k;
    };
    std::vector<Witness> case_i;
    std::vector<Witness> case_ii;
    BigCount bound_case_i;   // r^(ceil(n/2)+1), meaningful when case_i nonempty
    BigCount bound_case_ii;  // r^(ceil(n/2)-1) * (3r-2), when case_ii nonempty
};
Prop51Report prop51_check(const IntegerSet& a, int r);

// r^(|A| - 3(2 lg r - lg(3r-2)) mu n / (2 lg r)) with mu = s(A)/n^2 by
// default (the largest valid instantiation). lg is log base 2. The exponent
// is irrational in general, so the value is a 50-digit float; when mu = 0 the
// bound collapses to the exact integer r^|A|.
struct ManySchurBoundEntry {
    bool applicable = false;  // r >= 4 and mu <= s(A)/n^2
    std::string reason;
    BigRat mu;
    bool mu_is_default = true;
    Real exponent;
    Real value;
    bool exact_integer = false;
    BigCount exact_value;  // set when exact_integer
};
ManySchurBoundEntry many_schur_bound(const IntegerSet& a, int r,
                                     std::optional<BigRat> mu_override = std::nullopt);

// Certified "bound >= g": the float path rounds the bound downward before
// comparing, so true is conservative.
bool many_schur_dominates(const ManySchurBoundEntry& bound, int r, const BigCount& g);

// C(r,2) * 2^a + 2^(n - n/(26 lg n)). Asymptotic statement evaluated as
// written; informational only, never asserted as a bound at small n.
Real dense_bound(int n, int r, int a);

// Where the dense bound empirically starts dominating g([n], r). Scans
// n = 2..max_n with exact counts; `dominates` is conservative (the float
// bound is rounded down before comparing). At r = 3 domination holds from
// n = 2; for large r it can fail throughout desk scale, in which case
// onset = -1. Reported, never asserted.
struct DenseCrossoverRow {
    int n = 0;
    BigCount g_full;
    Real bound;
    bool dominates = false;
};
struct DenseCrossoverReport {
    int r = 0;
    int max_n = 0;
    std::vector<DenseCrossoverRow> rows;  // n = 2..max_n
    int onset = -1;  // smallest n dominating through max_n, -1 if none
};
DenseCrossoverReport dense_crossover(int r, int max_n, CountCache* cache = nullptr);

// F: ordered pairs (a, b), a < b, both in A, contained in no restricted
// triple of A, classified by the four proof cases. Checks
// |F| <= (1 - |A|/n) n^2 + n/6.
struct NonTriplePairs {
    std::vector<std::pair<int, int>> pairs;  // sorted
    long long f1 = 0;  // a+b in [n]\A, b = 2a
    long long f2 = 0;  // a+b > n,      b = 2a
    long long f3 = 0;  // a+b in [n]\A, b-a in [n]\A
    long long f4 = 0;  // a+b > n,      b-a in [n]\A
    BigRat bound;
    bool bound_holds = true;
};
NonTriplePairs non_triple_pairs(const IntegerSet& a);

// Greedy maximal family of pairwise-disjoint pairs {a,b} in
// A \ (excluded + {t}) with {a,b,t} a restricted triple. Seeds with the
// complementary pairs (a + b = t) when t > 2n/5 and with the shifted pairs
// (a, t + a), t < a <= n - t, otherwise, then extends with every remaining
// candidate. Requires 1 <= t <= n.
std::vector<std::pair<int, int>> disjoint_pair_cover(int t, const IntegerSet& a,
                                                     const IntegerSet& excluded);

}  // namespace rainbow
