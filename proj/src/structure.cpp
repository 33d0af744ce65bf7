#include "rainbow/structure.hpp"

#include <algorithm>
#include <bit>

#include "rainbow/parallel.hpp"

namespace rainbow {

namespace {

// Shared include/exclude recursion. `forbidden` holds the sums that would
// close a triple with the already-chosen elements; `classical` also forbids
// doubles 2v.
struct SumfreeEnum {
    int n;
    bool classical;
    const std::function<void(const IntegerSet&)>& yield;
    std::vector<int> chosen;
    std::vector<int> forbid_count;  // how many chosen pairs sum to each value

    SumfreeEnum(int n_, bool classical_, const std::function<void(const IntegerSet&)>& y)
        : n(n_), classical(classical_), yield(y), forbid_count(static_cast<size_t>(2 * n_ + 2), 0) {}

    void run(int v) {
        if (v > n) {
            IntegerSet s(n);
            for (int m : chosen) s.insert(m);
            yield(s);
            return;
        }
        if (forbid_count[static_cast<size_t>(v)] == 0) {
            for (int x : chosen) ++forbid_count[static_cast<size_t>(x + v)];
            if (classical) ++forbid_count[static_cast<size_t>(2 * v)];
            chosen.push_back(v);
            run(v + 1);
            chosen.pop_back();
            if (classical) --forbid_count[static_cast<size_t>(2 * v)];
            for (int x : chosen) --forbid_count[static_cast<size_t>(x + v)];
        }
        run(v + 1);
    }
};

}  // namespace

void enumerate_sumfree(int n, const std::function<void(const IntegerSet&)>& yield,
                       const Config& cfg) {
    if (n < 0) throw std::domain_error("n must be nonnegative");
    if (n > cfg.sumfree_enum_max_n)
        throw ThresholdRefusal("sum-free enumeration refused for n = " + std::to_string(n) +
                                   " > " + std::to_string(cfg.sumfree_enum_max_n),
                               "sumfree_enum_max_n");
    if (n == 0) {
        yield(IntegerSet(0));
        return;
    }
    SumfreeEnum e(n, /*classical=*/true, yield);
    e.run(1);
}

long long count_sumfree(int n, const Config& cfg) {
    long long count = 0;
    enumerate_sumfree(
        n, [&](const IntegerSet&) { ++count; }, cfg);
    return count;
}

TrichotomyFlags df_trichotomy_check(const IntegerSet& s) {
    if (schur_triple_count(s) != 0) throw std::domain_error("set is not sum-free");
    TrichotomyFlags f;
    int n = s.ambient();
    int size = s.size();
    f.case_i = size <= (2 * n + 4) / 5;  // ceil(2n/5)
    f.case_ii = true;
    for (int m : s.members())
        if (m % 2 == 0) {
            f.case_ii = false;
            break;
        }
    f.case_iii = s.empty() || size <= s.min_element();
    f.only_case_i_at_boundary = f.case_i && !f.case_ii && !f.case_iii && 5 * size >= 2 * n;
    return f;
}

namespace {

long long schur_count_mask(int n, uint64_t mask) {
    long long count = 0;
    for (int x = 1; x <= n; ++x) {
        if (!((mask >> (x - 1)) & 1)) continue;
        for (int y = x; x + y <= n; ++y) {
            if (!((mask >> (y - 1)) & 1)) continue;
            if ((mask >> (x + y - 1)) & 1) ++count;
        }
    }
    return count;
}

StadenRow staden_row(int n, int m) {
    StadenRow row;
    row.n = n;
    row.m = m;
    row.formula = static_cast<long long>(m - (n + 1) / 2) * (m - n / 2);
    long long best = -1;
    std::vector<uint64_t> argmins;
    // Gosper's hack over all m-subsets of [n]
    uint64_t mask = (uint64_t{1} << m) - 1;
    uint64_t limit = uint64_t{1} << n;
    while (mask < limit) {
        long long c = schur_count_mask(n, mask);
        if (best < 0 || c < best) {
            best = c;
            argmins.assign(1, mask);
        } else if (c == best) {
            argmins.push_back(mask);
        }
        uint64_t lo = mask & (~mask + 1);
        uint64_t left = mask + lo;
        uint64_t changed = mask ^ left;
        mask = left | ((changed / lo) >> 2);
    }
    row.min_count = best;
    for (uint64_t am : argmins) row.argmins.push_back(IntegerSet::from_mask(n, am));
    std::sort(row.argmins.begin(), row.argmins.end());
    row.value_matches = row.min_count == row.formula;
    IntegerSet expected = IntegerSet::interval(n, n - m + 1, n);
    row.unique_matches = row.argmins.size() == 1 && row.argmins.front() == expected;
    row.matches_theorem = row.value_matches && row.unique_matches;
    return row;
}

}  // namespace

std::vector<StadenRow> staden_verify(int n, const Config& cfg, int jobs) {
    if (n < 0) throw std::domain_error("n must be nonnegative");
    if (n > 62) throw std::domain_error("exhaustive subset scan supports n <= 62");
    if (n > cfg.staden_max_n)
        throw ThresholdRefusal("exhaustive Staden check refused for n = " + std::to_string(n) +
                                   " > " + std::to_string(cfg.staden_max_n),
                               "staden_max_n");
    int first_m = (n + 1) / 2 + 1;
    int count = n - first_m + 1;
    if (count <= 0) return {};
    std::vector<StadenRow> rows(static_cast<size_t>(count));
    parallel_for(jobs, count,
                 [&](int i) { rows[static_cast<size_t>(i)] = staden_row(n, first_m + i); });
    return rows;
}

RestrictedExtremalReport restricted_sumfree_extremal(int n, const Config& cfg) {
    if (n < 0) throw std::domain_error("n must be nonnegative");
    if (n > cfg.extremal_max_n)
        throw ThresholdRefusal("restricted extremal search refused for n = " +
                                   std::to_string(n) + " > " + std::to_string(cfg.extremal_max_n),
                               "extremal_max_n");
    RestrictedExtremalReport rep;
    rep.n = n;
    rep.claim_applies = n >= 7;

    int best = -1;
    std::vector<IntegerSet> argmax;
    std::function<void(const IntegerSet&)> record = [&](const IntegerSet& s) {
        int sz = s.size();
        if (sz > best) {
            best = sz;
            argmax.assign(1, s);
        } else if (sz == best) {
            argmax.push_back(s);
        }
    };
    if (n == 0) {
        record(IntegerSet(0));
    } else {
        SumfreeEnum e(n, /*classical=*/false, record);
        e.run(1);
    }
    rep.max_size = best;
    std::sort(argmax.begin(), argmax.end());
    rep.extremal_sets = std::move(argmax);
    rep.size_matches_claim = rep.max_size == n / 2 + 1;
    return rep;
}

}  // namespace rainbow
