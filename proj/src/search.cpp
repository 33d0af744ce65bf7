#include "rainbow/search.hpp"

#include <algorithm>

#include "rainbow/bounds.hpp"
#include "rainbow/parallel.hpp"

namespace rainbow {

std::string to_string(SearchMode mode) {
    return mode == SearchMode::Exhaustive ? "exhaustive" : "pruned";
}

SearchMode search_mode_from_string(const std::string& s) {
    if (s == "exhaustive") return SearchMode::Exhaustive;
    if (s == "pruned") return SearchMode::Pruned;
    throw std::domain_error("unknown search mode '" + s + "'");
}

namespace {

std::vector<uint64_t> masks_of_size(int n, int size) {
    std::vector<uint64_t> out;
    if (size == 0) {
        out.push_back(0);
        return out;
    }
    if (size > n) return out;
    uint64_t mask = (uint64_t{1} << size) - 1;
    uint64_t limit = uint64_t{1} << n;
    while (mask < limit) {
        out.push_back(mask);
        uint64_t lo = mask & (~mask + 1);
        uint64_t left = mask + lo;
        uint64_t changed = mask ^ left;
        mask = left | ((changed / lo) >> 2);
    }
    return out;
}

BigCount upper_bound_for(const IntegerSet& a, int r) {
    if (a.empty() || r < 3) return pow_big(r, static_cast<unsigned long>(a.size()));
    return matching_bound(a, r).value;
}

}  // namespace

SearchResult extremal_search(int n, int r, int min_size, SearchMode mode, const Config& cfg,
                             int jobs, CountCache* cache) {
    if (n < 0) throw std::domain_error("n must be nonnegative");
    if (n > 62) throw std::domain_error("subset search supports n <= 62");
    if (r < 0) throw std::domain_error("r must be nonnegative");
    if (min_size < 0) min_size = 0;
    int limit = mode == SearchMode::Exhaustive ? cfg.search_exhaustive_max_n
                                               : cfg.search_pruned_max_n;
    if (n > limit)
        throw ThresholdRefusal(
            to_string(mode) + " search refused for n = " + std::to_string(n) + " > " +
                std::to_string(limit),
            mode == SearchMode::Exhaustive ? "search_exhaustive_max_n" : "search_pruned_max_n");

    CountCache local_cache;
    CountCache& memo = cache ? *cache : local_cache;

    SearchResult result;
    result.n = n;
    result.r = r;
    result.min_size = min_size;
    result.mode = mode;

    bool have_best = false;
    BigCount best;
    std::vector<IntegerSet> argmax;

    for (int size = n; size >= min_size; --size) {
        // the matching bound never exceeds r^|A|, so once r^size drops below
        // the incumbent the whole size group prunes; the counter matches what
        // the per-mask test would have recorded
        if (mode == SearchMode::Pruned && have_best &&
            pow_big(r, static_cast<unsigned long>(size)) < best) {
            result.pruned += binomial(static_cast<unsigned>(n), static_cast<unsigned>(size))
                                 .convert_to<long long>();
            continue;
        }
        std::vector<uint64_t> masks = masks_of_size(n, size);
        if (masks.empty()) continue;
        // slot per mask: unset = pruned; counts merge in mask order afterwards
        std::vector<std::optional<BigCount>> counts(masks.size());
        int count = static_cast<int>(masks.size());
        parallel_for(jobs, count, [&](int i) {
            IntegerSet a = IntegerSet::from_mask(n, masks[static_cast<size_t>(i)]);
            if (mode == SearchMode::Pruned && have_best &&
                upper_bound_for(a, r) < best)
                return;
            counts[static_cast<size_t>(i)] = count_partition_cached(a, r, memo);
        });

        BigCount group_best;
        bool group_have = false;
        std::vector<uint64_t> group_ties;
        for (size_t i = 0; i < masks.size(); ++i) {
            if (!counts[i]) {
                ++result.pruned;
                continue;
            }
            ++result.explored;
            const BigCount& g = *counts[i];
            if (!group_have || g > group_best) {
                group_best = g;
                group_have = true;
                group_ties.assign(1, masks[i]);
            } else if (g == group_best) {
                group_ties.push_back(masks[i]);
            }
        }
        if (!group_have) continue;
        if (!have_best || group_best > best) {
            best = group_best;
            have_best = true;
            argmax.clear();
        }
        if (group_best == best)
            for (uint64_t m : group_ties) argmax.push_back(IntegerSet::from_mask(n, m));
    }

    if (!have_best) {
        // min_size > n leaves nothing to search
        result.g_max = 0;
        return result;
    }
    result.g_max = best;
    std::sort(argmax.begin(), argmax.end());
    result.argmax = std::move(argmax);
    return result;
}

ConjectureReport conjecture_report(int n, int r, const Config& cfg, int jobs,
                                   CountCache* cache) {
    if (n < 1) throw std::domain_error("conjecture report requires n >= 1");
    ConjectureReport rep;
    rep.n = n;
    rep.r = r;
    rep.in_range = r >= 4;

    bool even = n % 2 == 0;
    int min_size = 0;
    BigCount rr = r;
    if (!rep.in_range) {
        rep.case_name = "out-of-range";  // r <= 3: three-color theorem territory
        rep.predicted_set = IntegerSet::full(n);
    } else if (even && r <= 7) {
        rep.case_name = "even-4<=r<=7";
        if (n >= 4) {
            rep.predicted_set = IntegerSet::i1(n);
            rep.predicted_formula =
                pow_big(rr, static_cast<unsigned long>(n / 2 - 2)) * (3 * r - 2) * (3 * r - 2);
            rep.formula_extrapolated = n < 6;
        }
    } else if (even) {
        rep.case_name = "even-r>=8";
        min_size = (n + 1) / 2 + 1;
        rep.predicted_set = IntegerSet::i2(n);
        rep.predicted_formula = pow_big(rr, static_cast<unsigned long>(n / 2 + 1));
        rep.formula_extrapolated = n < 6;
    } else if (r == 4) {
        rep.case_name = "odd-r=4";
        rep.predicted_set = IntegerSet::full(n);
    } else {
        rep.case_name = r >= 8 ? "odd-r>=8" : "odd-5<=r<=7";
        if (r >= 8) min_size = (n + 1) / 2 + 1;
        if (n >= 3) {
            rep.predicted_set = IntegerSet::i3(n);
            rep.predicted_formula =
                pow_big(rr, static_cast<unsigned long>((n + 1) / 2 - 1)) * (3 * r - 2);
            rep.formula_extrapolated = n < 5;
        }
    }

    CountCache local_cache;
    CountCache& memo = cache ? *cache : local_cache;
    SearchMode mode = n <= cfg.search_exhaustive_max_n ? SearchMode::Exhaustive
                                                       : SearchMode::Pruned;
    rep.search = extremal_search(n, r, min_size, mode, cfg, jobs, &memo);

    if (rep.predicted_set) {
        rep.predicted_value = count_partition_cached(*rep.predicted_set, r, memo);
        rep.value_match = rep.search.g_max == *rep.predicted_value;
        rep.unique_extremal_match =
            rep.search.argmax.size() == 1 && rep.search.argmax.front() == *rep.predicted_set;
    }
    if (!rep.in_range)
        rep.verdict = "informational";
    else
        rep.verdict = rep.value_match && rep.unique_extremal_match ? "MATCH" : "NO-MATCH";
    return rep;
}

}  // namespace rainbow
