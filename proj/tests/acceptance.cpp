// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exits nonzero if any fail.
//
// Usage: rainbow_acceptance <path-to-rainbow-cli>
// The CLI path is used by the determinism criterion (worker-count byte
// identity and cache transparency are exercised through the real binary).

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "rainbow/bounds.hpp"
#include "rainbow/containers.hpp"
#include "rainbow/counting.hpp"
#include "rainbow/json_io.hpp"
#include "rainbow/search.hpp"
#include "rainbow/structure.hpp"
#include "rainbow/templates.hpp"

using namespace rainbow;
namespace fs = std::filesystem;

namespace {

std::string g_cli_path;

struct Outcome {
    bool pass = true;
    std::string detail;
    double budget_seconds = 0;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
    void note(const std::string& info) {
        if (!detail.empty()) detail += "; ";
        detail += info;
    }
};

std::string run_cli(const std::string& args) {
    std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return out;
    while (size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    pclose(pipe);
    return out;
}

// ---- criterion 1: closed forms --------------------------------------------

Outcome closed_form_suite() {
    Outcome o;
    o.budget_seconds = 120;
    for (int r = 3; r <= 9; ++r) {
        for (int n = 6; n <= 14; n += 2) {
            if (count_partition(IntegerSet::i1(n), r).g != closed_form(ClosedFormFamily::I1, n, r))
                o.fail("I1 n=" + std::to_string(n) + " r=" + std::to_string(r));
            if (count_partition(IntegerSet::i2(n), r).g != closed_form(ClosedFormFamily::I2, n, r))
                o.fail("I2 n=" + std::to_string(n) + " r=" + std::to_string(r));
        }
        for (int n = 5; n <= 13; n += 2)
            if (count_partition(IntegerSet::i3(n), r).g != closed_form(ClosedFormFamily::I3, n, r))
                o.fail("I3 n=" + std::to_string(n) + " r=" + std::to_string(r));
    }
    return o;
}

// ---- criterion 2: oracle equivalence ---------------------------------------

Outcome oracle_equivalence() {
    Outcome o;
    o.budget_seconds = 300;
    for (uint64_t mask = 0; mask < 256; ++mask) {
        IntegerSet a = IntegerSet::from_mask(8, mask);
        for (int r : {3, 4})
            if (count_partition(a, r).g != count_naive(a, r)) {
                o.fail("subset of [8] mask=" + std::to_string(mask) + " r=" + std::to_string(r));
                return o;
            }
    }
    std::mt19937_64 rng(12001);
    for (int i = 0; i < 500; ++i) {
        IntegerSet a = oracle::random_subset(12, rng);
        for (int r = 3; r <= 9; ++r)
            if (count_partition(a, r).g != count_naive(a, r)) {
                o.fail("random " + a.to_literal() + " r=" + std::to_string(r));
                return o;
            }
    }
    return o;
}

// ---- criterion 3: pinned values --------------------------------------------

Outcome pinned_values() {
    Outcome o;
    o.budget_seconds = 60;
    struct Pin {
        IntegerSet a;
        int r;
        BigCount expected;
    };
    std::vector<Pin> pins = {
        {IntegerSet(3, {1, 2, 3}), 3, 21}, {IntegerSet::full(4), 3, 51},
        {IntegerSet::full(4), 8, 736},     {IntegerSet::i1(6), 3, 147},
        {IntegerSet::i1(6), 8, 3872},      {IntegerSet::i3(7), 5, 1625},
    };
    for (const Pin& pin : pins) {
        std::string where = "g(" + pin.a.to_literal() + "," + std::to_string(pin.r) + ")";
        if (oracle::g_enumerate(pin.a, pin.r) != pin.expected)
            o.fail(where + ": independent enumeration disagrees with the pin");
        if (count_naive(pin.a, pin.r) != pin.expected) o.fail(where + ": naive engine");
        if (count_partition(pin.a, pin.r).g != pin.expected) o.fail(where + ": partition engine");
    }
    return o;
}

// ---- criterion 4: two-color lower bound -------------------------------------

Outcome two_color_lower_bound() {
    Outcome o;
    o.budget_seconds = 120;
    CountCache memo;
    for (int r : {3, 4, 8}) {
        for (uint64_t mask = 1; mask < (1u << 10); ++mask) {
            IntegerSet a = IntegerSet::from_mask(10, mask);
            BigCount lower = binomial(static_cast<unsigned>(r), 2) *
                                 (pow_big(2, static_cast<unsigned long>(a.size())) - 2) +
                             r;
            if (count_partition_cached(a, r, memo) < lower) {
                o.fail("A=" + a.to_literal() + " r=" + std::to_string(r));
                return o;
            }
        }
        BigCount g_full = count_partition_cached(IntegerSet::full(10), r, memo);
        BigCount lower_full =
            binomial(static_cast<unsigned>(r), 2) * (pow_big(2, 10) - 2) + r;
        o.note("gap at [10], r=" + std::to_string(r) + ": " +
               big_to_string(g_full - lower_full));
    }
    return o;
}

// ---- criterion 5: Staden exhaustive -----------------------------------------

Outcome staden_exhaustive() {
    Outcome o;
    o.budget_seconds = 600;
    Config cfg;
    long long rows = 0, value_ok = 0;
    for (int n = 4; n <= 14; ++n)
        for (const StadenRow& row : staden_verify(n, cfg, 4)) {
            ++rows;
            value_ok += row.value_matches;
            if (!row.value_matches)
                o.fail("minimum != formula at n=" + std::to_string(n) +
                       " m=" + std::to_string(row.m));
            if (!row.unique_matches) {
                std::string ties;
                for (const auto& s : row.argmins) ties += (ties.empty() ? "" : "|") + s.to_literal();
                o.fail("minimizer not unique at n=" + std::to_string(n) +
                       " m=" + std::to_string(row.m) + " (argmins " + ties + ")");
            }
        }
    o.note("minimum value matched the formula on " + std::to_string(value_ok) + "/" +
           std::to_string(rows) + " rows");
    return o;
}

// ---- criterion 6: s([n]) closed form ----------------------------------------

Outcome triple_count_closed_form() {
    Outcome o;
    o.budget_seconds = 60;
    for (int n = 1; n <= 1000; ++n)
        if (restricted_triple_count(IntegerSet::full(n)) != full_interval_triple_count(n)) {
            o.fail("n=" + std::to_string(n));
            return o;
        }
    return o;
}

// ---- criterion 7: trichotomy -------------------------------------------------

Outcome trichotomy_exhaustive() {
    Outcome o;
    o.budget_seconds = 300;
    long long boundary = 0, total = 0;
    for (int n = 1; n <= 18; ++n)
        enumerate_sumfree(n, [&](const IntegerSet& s) {
            ++total;
            auto f = df_trichotomy_check(s);
            if (!(f.case_i || f.case_ii || f.case_iii))
                o.fail("no case holds for " + s.to_literal() + " in [" +
                       std::to_string(s.ambient()) + "]");
            if (f.only_case_i_at_boundary) ++boundary;
        });
    o.note(std::to_string(total) + " sets checked, " + std::to_string(boundary) +
           " only-case-(i) boundary sets (integer 2n/5 reading)");
    return o;
}

// ---- criterion 8: bound soundness --------------------------------------------

Outcome bound_soundness() {
    Outcome o;
    o.budget_seconds = 600;
    std::mt19937_64 rng(8001);
    CountCache memo;
    for (int i = 0; i < 1000; ++i) {
        IntegerSet a = oracle::random_subset(14, rng);
        if (a.empty()) continue;
        for (int t : a.members())
            if (2 * matching_number(t, a) < triples_through_count(t, a)) {
                o.fail("matching inequality at t=" + std::to_string(t) + " A=" + a.to_literal());
                return o;
            }
        for (int r = 3; r <= 9; ++r) {
            BigCount g = count_partition_cached(a, r, memo);
            if (matching_bound(a, r).value < g) {
                o.fail("matching bound below g for " + a.to_literal() + " r=" + std::to_string(r));
                return o;
            }
            if (r >= 4 && !many_schur_dominates(many_schur_bound(a, r), r, g)) {
                o.fail("many-triples bound below g for " + a.to_literal() +
                       " r=" + std::to_string(r));
                return o;
            }
        }
    }
    return o;
}

// ---- criterion 9: pairs in no triple ----------------------------------------

Outcome non_triple_pair_bound() {
    Outcome o;
    o.budget_seconds = 60;
    std::mt19937_64 rng(9001);
    for (int i = 0; i < 1000; ++i) {
        int n = 10 + static_cast<int>(rng() % 51);
        IntegerSet a = oracle::random_subset(n, rng);
        auto f = non_triple_pairs(a);
        if (!f.bound_holds) {
            o.fail("bound violated for " + a.to_literal() + " in [" + std::to_string(n) + "]");
            return o;
        }
    }
    auto tight = non_triple_pairs(IntegerSet::full(12));
    if (tight.pairs.size() != 2 || tight.bound != BigRat(2))
        o.fail("tight case [12] expected |F| = 2 = n/6");
    return o;
}

// ---- criterion 10: container diagnostics ------------------------------------

Outcome container_diagnostics() {
    Outcome o;
    o.budget_seconds = 300;
    for (int n = 1; n <= 30; ++n)
        for (int r = 3; r <= 5; ++r)
            if (BigCount(enumerate_hypergraph_edges(n, r).size()) !=
                hypergraph_stats(n, r).edge_count) {
                o.fail("edge count n=" + std::to_string(n) + " r=" + std::to_string(r));
                return o;
            }
    for (int n = 5; n <= 50; ++n)
        for (int r = 3; r <= 9; ++r) {
            auto st = hypergraph_stats(n, r);
            if (st.delta2 != BigCount(2) * (r - 2) || st.delta3 != 1) {
                o.fail("co-degree scan n=" + std::to_string(n) + " r=" + std::to_string(r));
                return o;
            }
        }
    for (int r = 3; r <= 9; ++r) {
        auto feas = min_feasible_n(r);
        if (!hypothesis_check(feas.min_n, r).all_hold)
            o.fail("hypotheses fail at min_feasible_n, r=" + std::to_string(r));
        if (hypothesis_check(feas.min_n - 1, r).all_hold)
            o.fail("hypotheses already hold below min_feasible_n, r=" + std::to_string(r));
    }
    return o;
}

// ---- criterion 11: search determinism ----------------------------------------

std::string result_block(const std::string& cli_json) {
    Json j = Json::parse(cli_json);
    return j.at("result").dump();
}

Outcome search_determinism() {
    Outcome o;
    o.budget_seconds = 1800;
    Config cfg;
    for (int n = 1; n <= 12; ++n)
        for (int r : {3, 4, 8}) {
            CountCache memo;
            auto ex = extremal_search(n, r, 0, SearchMode::Exhaustive, cfg, 2, &memo);
            auto pr = extremal_search(n, r, 0, SearchMode::Pruned, cfg, 2, &memo);
            if (ex.g_max != pr.g_max || ex.argmax != pr.argmax ||
                ex.n != pr.n || ex.r != pr.r || ex.min_size != pr.min_size) {
                o.fail("mode mismatch at n=" + std::to_string(n) + " r=" + std::to_string(r));
                return o;
            }
        }
    // worker-count byte identity, in process (full result incl. statistics)
    for (int r : {3, 8}) {
        CountCache c1, c2;
        auto jobs1 = extremal_search(11, r, 0, SearchMode::Pruned, cfg, 1, &c1);
        auto jobs8 = extremal_search(11, r, 0, SearchMode::Pruned, cfg, 8, &c2);
        if (search_result_to_json(jobs1).dump() != search_result_to_json(jobs8).dump()) {
            o.fail("in-process jobs 1 vs 8 differ at r=" + std::to_string(r));
            return o;
        }
    }
    // and through the real binary
    std::string a = run_cli("search --n 10 --r 3 --mode pruned --jobs 1");
    std::string b = run_cli("search --n 10 --r 3 --mode pruned --jobs 8");
    if (a.empty() || b.empty()) {
        o.fail("CLI did not produce output");
        return o;
    }
    if (result_block(a) != result_block(b)) {
        o.fail("CLI jobs 1 vs 8 result blocks differ");
        return o;
    }
    // cache transparency: cold vs warm byte-identical except the repro block
    fs::path dir = fs::temp_directory_path() / "rainbow-acceptance-cache";
    fs::remove_all(dir);
    std::string args = "count --set 1..8 --r 5 --cache-dir " + dir.string();
    Json cold = Json::parse(run_cli(args));
    Json warm = Json::parse(run_cli(args));
    if (warm.at("repro").at("cache_hit") != true) o.fail("second run missed the cache");
    cold.erase("repro");
    warm.erase("repro");
    if (cold.dump() != warm.dump()) o.fail("cold/warm outputs differ outside repro block");
    fs::remove_all(dir);
    return o;
}

// ---- criterion 12: template bridge -------------------------------------------

Outcome template_bridge() {
    Outcome o;
    o.budget_seconds = 120;
    for (uint32_t pa = 0; pa < 8; ++pa)
        for (uint32_t pb = 0; pb < 8; ++pb)
            for (uint32_t pc = 0; pc < 8; ++pc)
                if (rainbow_choices(pa, pb, pc) != oracle::rainbow_choices_brute(pa, pb, pc, 3)) {
                    o.fail("inclusion-exclusion mismatch at palettes " + std::to_string(pa) +
                           "," + std::to_string(pb) + "," + std::to_string(pc));
                    return o;
                }
    int r = 3;
    Template full = Template::full(7, r);
    for (uint64_t mask = 0; mask < (1u << 7); ++mask) {
        IntegerSet a = IntegerSet::from_mask(7, mask);
        std::vector<int> ms = a.members();
        long long zero_rs = 0;
        std::vector<int> colors(ms.size(), 1);
        for (;;) {
            Template t = Template::from_coloring(a, r, colors);
            if (is_subtemplate(t, full) && rs_count(t) == 0) ++zero_rs;
            size_t pos = 0;
            while (pos < colors.size() && ++colors[pos] > r) colors[pos++] = 1;
            if (pos == colors.size()) break;
        }
        if (BigCount(zero_rs) != count_naive(a, r)) {
            o.fail("bridge mismatch for A=" + a.to_literal());
            return o;
        }
    }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: rainbow_acceptance <path-to-rainbow-cli> [criterion-id]\n";
        return 2;
    }
    g_cli_path = argv[1];
    int only = argc > 2 ? std::atoi(argv[2]) : 0;

    struct Criterion {
        int id;
        std::string name;
        Outcome (*run)();
    };
    std::vector<Criterion> criteria = {
        {1, "closed-form suite (I1, I2, I3 vs partition engine)", closed_form_suite},
        {2, "oracle equivalence (partition = naive)", oracle_equivalence},
        {3, "pinned exact values", pinned_values},
        {4, "two-color lower bound", two_color_lower_bound},
        {5, "minimum Schur triples, exhaustive (value + unique minimizer)", staden_exhaustive},
        {6, "s([n]) closed form, n <= 1000", triple_count_closed_form},
        {7, "sum-free trichotomy, exhaustive n <= 18", trichotomy_exhaustive},
        {8, "bound soundness on seeded subsets of [14]", bound_soundness},
        {9, "pairs-in-no-triple bound", non_triple_pair_bound},
        {10, "container diagnostics", container_diagnostics},
        {11, "search determinism and mode equivalence", search_determinism},
        {12, "template bridge", template_bridge},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        auto start = std::chrono::steady_clock::now();
        Outcome o = c.run();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.budget_seconds > 0 && secs > o.budget_seconds)
            o.fail("exceeded runtime budget of " + std::to_string(o.budget_seconds) + "s");
        std::printf("%s criterion-%02d %s (%.1fs)%s%s\n", o.pass ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), secs, o.detail.empty() ? "" : " -- ",
                    o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    if (failures) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
