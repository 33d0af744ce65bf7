// Command-line surface for the rainbow sum-free coloring toolkit. All
// subcommands emit JSON by default (counts as decimal strings); --format
// switches to CSV or an aligned table. Exit codes: 0 success, 2 domain or
// usage error, 3 threshold refusal.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "rainbow/bounds.hpp"
#include "rainbow/config.hpp"
#include "rainbow/containers.hpp"
#include "rainbow/counting.hpp"
#include "rainbow/json_io.hpp"
#include "rainbow/search.hpp"
#include "rainbow/structure.hpp"
#include "rainbow/templates.hpp"

namespace fs = std::filesystem;
using namespace rainbow;

namespace {

struct GlobalOpts {
    std::string format = "json";
    std::string cache_dir;
    std::string config_path;
    int jobs = 1;
    uint64_t seed = 0;

    Config config() const {
        return config_path.empty() ? Config{} : Config::load(config_path);
    }

    fs::path cache_file() const {
        std::string dir = cache_dir;
        if (dir.empty())
            if (const char* env = std::getenv("RAINBOW_SCHUR_CACHE_DIR")) dir = env;
        if (dir.empty()) dir = ".rainbow-schur-cache";
        return fs::path(dir) / "counts.jsonl";
    }
};

// ---- output helpers --------------------------------------------------------

void print_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> width;
    for (const auto& row : rows)
        for (size_t c = 0; c < row.size(); ++c) {
            if (c >= width.size()) width.push_back(0);
            width[c] = std::max(width[c], row[c].size());
        }
    for (const auto& row : rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            std::cout << row[c];
            if (c + 1 < row.size())
                std::cout << std::string(width[c] - row[c].size() + 2, ' ');
        }
        std::cout << "\n";
    }
}

std::string scalar_to_string(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// Generic CSV/table rendering: an embedded array of flat objects becomes the
// row set, otherwise the top-level scalars become a key/value listing.
void emit(const Json& payload, const std::string& format, const std::string& rows_key = "") {
    if (format == "json") {
        std::cout << payload.dump(2) << "\n";
        return;
    }
    Json rows = Json::array();
    if (!rows_key.empty() && payload.contains(rows_key) && payload.at(rows_key).is_array())
        rows = payload.at(rows_key);
    else if (payload.is_array())
        rows = payload;

    if (!rows.empty() && rows.front().is_object()) {
        std::vector<std::string> header;
        for (auto& [k, v] : rows.front().items()) header.push_back(k);
        if (format == "csv") {
            for (size_t i = 0; i < header.size(); ++i)
                std::cout << header[i] << (i + 1 < header.size() ? "," : "\n");
            for (const auto& row : rows)
                for (size_t i = 0; i < header.size(); ++i)
                    std::cout << scalar_to_string(row.at(header[i]))
                              << (i + 1 < header.size() ? "," : "\n");
        } else {
            std::vector<std::vector<std::string>> table{header};
            for (const auto& row : rows) {
                std::vector<std::string> line;
                for (const auto& h : header) line.push_back(scalar_to_string(row.at(h)));
                table.push_back(line);
            }
            print_table(table);
        }
        return;
    }
    if (format == "csv") {
        std::string keys, values;
        for (auto& [k, v] : payload.items()) {
            if (!v.is_primitive()) continue;
            keys += (keys.empty() ? "" : ",") + k;
            values += (values.empty() ? "" : ",") + scalar_to_string(v);
        }
        std::cout << keys << "\n" << values << "\n";
    } else {
        std::vector<std::vector<std::string>> table;
        for (auto& [k, v] : payload.items()) table.push_back({k, v.dump()});
        print_table(table);
    }
}

Json flatten_staden(const std::vector<StadenRow>& rows) {
    Json arr = Json::array();
    for (const auto& row : rows) {
        std::string argmin;
        for (const auto& s : row.argmins) argmin += (argmin.empty() ? "" : "|") + s.to_literal();
        arr.push_back(Json{{"n", row.n},
                           {"m", row.m},
                           {"min", row.min_count},
                           {"argmin", argmin},
                           {"matches_theorem", row.matches_theorem}});
    }
    return arr;
}

BigRat parse_rational(const std::string& text) {
    if (auto slash = text.find('/'); slash != std::string::npos)
        return BigRat(BigCount(text.substr(0, slash)), BigCount(text.substr(slash + 1)));
    if (auto dot = text.find('.'); dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        BigCount denom = pow_big(10, static_cast<unsigned long>(text.size() - dot - 1));
        return BigRat(BigCount(digits), denom);
    }
    return BigRat(BigCount(text));
}

// ---- count cache file ------------------------------------------------------

struct FileCache {
    fs::path path;

    std::optional<BigCount> lookup(const IntegerSet& a, int r) const {
        std::ifstream in(path);
        if (!in) return std::nullopt;
        std::string key = a.to_literal();
        std::string line;
        std::optional<BigCount> found;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            try {
                Json rec = Json::parse(line);
                if (rec.at("set") == key && rec.at("n") == a.ambient() && rec.at("r") == r)
                    found = big_from_string(rec.at("g").get<std::string>());
            } catch (const std::exception&) {
                std::cerr << "warning: skipping corrupt cache line\n";
            }
        }
        return found;
    }

    void append(const IntegerSet& a, int r, const BigCount& g, const std::string& method) const {
        if (path.has_parent_path()) fs::create_directories(path.parent_path());
        std::ofstream out(path, std::ios::app);
        Json rec{{"set", a.to_literal()},
                 {"n", a.ambient()},
                 {"r", r},
                 {"g", big_to_string(g)},
                 {"method", method}};
        out << rec.dump() << "\n";
    }

    std::pair<long long, long long> stats() const {  // entries, corrupt lines
        std::ifstream in(path);
        long long entries = 0, skipped = 0;
        std::string line;
        while (in && std::getline(in, line)) {
            if (line.empty()) continue;
            try {
                Json rec = Json::parse(line);
                rec.at("set");
                rec.at("g");
                ++entries;
            } catch (const std::exception&) {
                ++skipped;
            }
        }
        return {entries, skipped};
    }
};

// ---- subcommand argument bags ----------------------------------------------

struct CountArgs {
    std::string set_literal, family, method = "partition";
    int n = 0, r = -1;
    bool profile = false;
};

struct BoundsArgs {
    std::string set_literal, excluded, mu;
    int n = 0, r = -1, t = 0;
    int probe = 0;
    int crossover = 0;
};

struct SearchArgs {
    int n = -1, r = -1, min_size = 0;
    std::string mode = "exhaustive";
};

struct StructureArgs {
    int n = -1;
    std::string set_literal;
};

struct TemplateArgs {
    std::string file, file2, set_literal, pair;
    double delta = -1;
};

struct HypergraphArgs {
    std::string n_text, tau;
    int n = -1, r = -1;
};

Json repro_block(const GlobalOpts& g, const Config& cfg, const std::string& mode,
                 size_t cache_hits) {
    return Json{{"jobs", g.jobs},
                {"mode", mode},
                {"cache_hits", static_cast<long long>(cache_hits)},
                {"thresholds",
                 Json{{"search_exhaustive_max_n", cfg.search_exhaustive_max_n},
                      {"search_pruned_max_n", cfg.search_pruned_max_n},
                      {"staden_max_n", cfg.staden_max_n},
                      {"sumfree_enum_max_n", cfg.sumfree_enum_max_n},
                      {"extremal_max_n", cfg.extremal_max_n}}}};
}

int run_count(const GlobalOpts& g, const CountArgs& args) {
    if (args.r < 0) throw std::domain_error("--r is required");
    if (!args.family.empty()) {
        BigCount v = closed_form(closed_form_family_from_string(args.family), args.n, args.r);
        emit(Json{{"schema_version", kSchemaVersion},
                  {"family", args.family},
                  {"n", args.n},
                  {"r", args.r},
                  {"g", big_to_string(v)},
                  {"method", "closed-form"}},
             g.format);
        return 0;
    }
    if (args.set_literal.empty()) throw std::domain_error("--set or --family is required");
    IntegerSet a = parse_set(args.set_literal, args.n);

    FileCache cache{g.cache_file()};
    bool hit = false;
    BigCount value;
    Json payload{{"schema_version", kSchemaVersion},
                 {"set", a.to_literal()},
                 {"n", a.ambient()},
                 {"r", args.r},
                 {"method", args.method}};
    if (args.method == "both") {
        BigCount naive = count_naive(a, args.r);
        auto part = count_partition(a, args.r);
        if (naive != part.g) throw std::logic_error("engine disagreement");
        value = naive;
        payload["methods_agree"] = true;
    } else if (auto cached = cache.lookup(a, args.r)) {
        value = *cached;
        hit = true;
    } else if (args.method == "naive") {
        value = count_naive(a, args.r);
    } else if (args.method == "partition") {
        value = count_partition(a, args.r).g;
    } else {
        throw std::domain_error("unknown method '" + args.method + "'");
    }
    if (!hit && args.method != "both") cache.append(a, args.r, value, args.method);
    payload["g"] = big_to_string(value);
    if (args.profile)
        payload["profile"] = partition_profile_to_json(count_partition(a, args.r).profile);
    payload["repro"] = Json{{"cache_hit", hit}, {"cache_file", cache.path.string()}};
    emit(payload, g.format);
    return 0;
}

int run_bounds(const GlobalOpts& g, const BoundsArgs& args) {
    if (args.r < 0) throw std::domain_error("--r is required");

    if (args.probe > 0) {  // seeded soundness probe over random subsets
        if (args.n <= 0) throw std::domain_error("--probe requires --n");
        std::mt19937_64 rng(g.seed);
        long long violations = 0, checked = 0;
        CountCache memo;
        for (int i = 0; i < args.probe; ++i) {
            IntegerSet a(args.n);
            for (int m = 1; m <= args.n; ++m)
                if (rng() & 1u) a.insert(m);
            if (a.empty()) continue;
            BigCount exact = count_partition_cached(a, args.r, memo);
            ++checked;
            if (args.r >= 3 && matching_bound(a, args.r).value < exact) ++violations;
            if (args.r >= 4 && !many_schur_dominates(many_schur_bound(a, args.r), args.r, exact))
                ++violations;
            for (int t : a.members())
                if (2 * matching_number(t, a) < triples_through_count(t, a)) ++violations;
        }
        emit(Json{{"schema_version", kSchemaVersion},
                  {"n", args.n},
                  {"r", args.r},
                  {"samples", args.probe},
                  {"checked", checked},
                  {"violations", violations},
                  {"repro", Json{{"seed", g.seed}}}},
             g.format);
        return 0;
    }

    if (args.crossover > 0) {
        auto rep = dense_crossover(args.r, args.crossover);
        Json rows = Json::array();
        for (const auto& row : rep.rows)
            rows.push_back(Json{{"n", row.n},
                                {"g_full", big_to_string(row.g_full)},
                                {"bound", real_to_string(row.bound)},
                                {"dominates", row.dominates}});
        emit(Json{{"schema_version", kSchemaVersion},
                  {"r", rep.r},
                  {"max_n", rep.max_n},
                  {"onset", rep.onset},
                  {"informational", true},
                  {"rows", rows}},
             g.format, "rows");
        return 0;
    }

    if (args.set_literal.empty()) throw std::domain_error("--set is required");
    IntegerSet a = parse_set(args.set_literal, args.n);
    int n = a.ambient();

    Json entries = Json::array();
    if (args.r >= 3 && !a.empty())
        entries.push_back(matching_bound_to_json(matching_bound(a, args.r)));
    std::optional<BigRat> mu;
    if (!args.mu.empty()) mu = parse_rational(args.mu);
    entries.push_back(many_schur_to_json(many_schur_bound(a, args.r, mu)));
    if (args.r >= 3 && n >= 2)
        entries.push_back(Json{{"name", "dense_bound"},
                               {"parameters", Json{{"n", n}, {"a", a.size()}}},
                               {"value", real_to_string(dense_bound(n, args.r, a.size()))},
                               {"exact", false},
                               {"applicable", true},
                               {"informational", true}});
    entries.push_back(prop51_to_json(prop51_check(a, args.r)));
    entries.push_back(non_triple_pairs_to_json(non_triple_pairs(a)));

    Json payload{{"schema_version", kSchemaVersion},
                 {"set", a.to_literal()},
                 {"n", n},
                 {"r", args.r},
                 {"bounds", entries}};

    if (args.t > 0) {
        LinkGraph lg = link_graph(args.t, a);
        Json edges = Json::array();
        for (auto [x, y] : lg.edges) edges.push_back(Json::array({x, y}));
        IntegerSet excluded =
            args.excluded.empty() ? IntegerSet(n) : parse_set(args.excluded, n);
        Json pairs = Json::array();
        for (auto [x, y] : disjoint_pair_cover(args.t, a, excluded))
            pairs.push_back(Json::array({x, y}));
        payload["link_graph"] = Json{{"t", args.t},
                                     {"edges", edges},
                                     {"s_t", static_cast<long long>(lg.edges.size())},
                                     {"k", max_matching(lg)},
                                     {"disjoint_pair_cover", pairs}};
    }
    emit(payload, g.format);
    return 0;
}

int run_search(const GlobalOpts& g, const SearchArgs& args) {
    Config cfg = g.config();
    CountCache memo;
    SearchResult res = extremal_search(args.n, args.r, args.min_size,
                                       search_mode_from_string(args.mode), cfg, g.jobs, &memo);
    emit(Json{{"schema_version", kSchemaVersion},
              {"result", search_result_to_json(res)},
              {"repro", repro_block(g, cfg, args.mode, memo.hits())}},
         g.format);
    return 0;
}

int run_conjecture(const GlobalOpts& g, const SearchArgs& args) {
    Config cfg = g.config();
    CountCache memo;
    ConjectureReport rep = conjecture_report(args.n, args.r, cfg, g.jobs, &memo);
    emit(Json{{"schema_version", kSchemaVersion},
              {"report", conjecture_report_to_json(rep)},
              {"repro", repro_block(g, cfg, to_string(rep.search.mode), memo.hits())}},
         g.format);
    return 0;
}

int run_staden(const GlobalOpts& g, const StructureArgs& args) {
    Config cfg = g.config();
    auto rows = staden_verify(args.n, cfg, g.jobs);
    Json detailed = Json::array();
    for (const auto& row : rows) detailed.push_back(staden_row_to_json(row));
    emit(Json{{"schema_version", kSchemaVersion},
              {"n", args.n},
              {"rows", flatten_staden(rows)},
              {"detail", detailed}},
         g.format, "rows");
    return 0;
}

int run_sumfree(const GlobalOpts& g, const StructureArgs& args) {
    Config cfg = g.config();
    long long count = 0, case_i = 0, case_ii = 0, case_iii = 0, boundary = 0;
    int max_size = 0;
    bool trichotomy = true;
    enumerate_sumfree(
        args.n,
        [&](const IntegerSet& s) {
            ++count;
            max_size = std::max(max_size, s.size());
            auto f = df_trichotomy_check(s);
            case_i += f.case_i;
            case_ii += f.case_ii;
            case_iii += f.case_iii;
            boundary += f.only_case_i_at_boundary;
            trichotomy = trichotomy && (f.case_i || f.case_ii || f.case_iii);
        },
        cfg);
    emit(Json{{"schema_version", kSchemaVersion},
              {"n", args.n},
              {"count", count},
              {"max_size", max_size},
              {"trichotomy_all_pass", trichotomy},
              {"case_counts",
               Json{{"case_i", case_i},
                    {"case_ii", case_ii},
                    {"case_iii", case_iii},
                    {"only_case_i_at_boundary", boundary}}}},
         g.format);
    return 0;
}

int run_trichotomy(const GlobalOpts& g, const StructureArgs& args) {
    IntegerSet s = parse_set(args.set_literal, args.n > 0 ? args.n : 0);
    Json payload = trichotomy_to_json(s, df_trichotomy_check(s));
    payload["schema_version"] = kSchemaVersion;
    emit(payload, g.format);
    return 0;
}

int run_extremal(const GlobalOpts& g, const StructureArgs& args) {
    Json payload = extremal_report_to_json(restricted_sumfree_extremal(args.n, g.config()));
    payload["schema_version"] = kSchemaVersion;
    emit(payload, g.format);
    return 0;
}

Template load_template(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw std::domain_error("cannot open template file: " + file);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::domain_error("template file is not valid JSON: " + std::string(e.what()));
    }
    return template_from_json(j);
}

int run_templates(const GlobalOpts& g, const std::string& op, const TemplateArgs& args) {
    Template p = load_template(args.file);
    Json payload{{"schema_version", kSchemaVersion}, {"file", args.file}};
    if (op == "rs") {
        payload["rs"] = big_to_string(rs_count(p));
    } else if (op == "good") {
        IntegerSet a = parse_set(args.set_literal, p.order());
        auto rep = is_good(p, a);
        payload["set"] = a.to_literal();
        payload["good"] = rep.good;
        payload["nonempty_palettes"] = rep.nonempty_palettes;
        payload["rs_within_budget"] = rep.rs_within_budget;
        payload["rs"] = big_to_string(rep.rs);
        payload["budget"] = real_to_string(rep.budget);
        payload["slack"] = real_to_string(rep.slack);
    } else if (op == "profile") {
        IntegerSet domain = args.set_literal.empty()
                                ? IntegerSet::full(p.order())
                                : parse_set(args.set_literal, p.order());
        auto prof = palette_profile(p, domain);
        payload["domain"] = domain.to_literal();
        payload["x1"] = prof.x1;
        payload["x2"] = prof.x2;
        payload["x3"] = prof.x3;
        payload["empty"] = prof.empty;
        if (!args.pair.empty()) {
            auto comma = args.pair.find(',');
            if (comma == std::string::npos)
                throw std::domain_error("--pair expects two colors, e.g. 1,2");
            int i = std::stoi(args.pair.substr(0, comma));
            int j = std::stoi(args.pair.substr(comma + 1));
            long long y = palette_pair_count(p, domain, i, j);
            Json pair_json{{"i", i}, {"j", j}, {"count", y}};
            if (args.delta >= 0) {  // threshold is opt-in, never defaulted
                double threshold = (1 - 2 * args.delta) * p.order();
                pair_json["delta"] = args.delta;
                pair_json["threshold"] = threshold;
                pair_json["meets_threshold"] = static_cast<double>(y) >= threshold;
            }
            payload["palette_pair"] = pair_json;
        }
    } else if (op == "subtemplate") {
        Template q = load_template(args.file2);
        payload["file2"] = args.file2;
        payload["is_subtemplate"] = is_subtemplate(p, q);
    }
    emit(payload, g.format);
    return 0;
}

int run_hypergraph(const GlobalOpts& g, const std::string& op, const HypergraphArgs& args) {
    Json payload{{"schema_version", kSchemaVersion}};
    if (op == "stats") {
        auto st = hypergraph_stats(args.n, args.r);
        payload["stats"] = hypergraph_stats_to_json(st);
        if (!args.tau.empty()) {
            BigRat tau = parse_rational(args.tau);
            payload["codegree_at_tau"] =
                Json{{"tau", rat_to_string(tau)},
                     {"value", rat_to_string(codegree_function(st, tau))}};
        }
    } else if (op == "check") {
        BigCount n;
        try {
            n = BigCount(args.n_text);
        } catch (const std::exception&) {
            throw std::domain_error("--n is not a decimal integer: " + args.n_text);
        }
        payload["n"] = args.n_text;
        payload["r"] = args.r;
        payload["hypothesis"] = hypothesis_report_to_json(hypothesis_check(n, args.r));
    } else {  // feasible
        auto feas = min_feasible_n(args.r);
        payload["r"] = args.r;
        payload["min_feasible_n"] = big_to_string(feas.min_n);
        payload["tau_condition_bracket"] = big_to_string(feas.tau_bracket);
    }
    emit(payload, g.format);
    return 0;
}

int run_cache(const GlobalOpts& g, const std::string& op) {
    FileCache cache{g.cache_file()};
    if (op == "clear") {
        std::error_code ec;
        fs::remove(cache.path, ec);
    }
    auto [entries, skipped] = cache.stats();
    Json payload{{"schema_version", kSchemaVersion},
                 {"file", cache.path.string()},
                 {"entries", entries},
                 {"corrupt_lines_skipped", skipped}};
    if (op == "clear") payload["cleared"] = true;
    emit(payload, g.format);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rainbow sum-free coloring toolkit"};
    app.require_subcommand(1);

    GlobalOpts global;
    app.add_option("--format", global.format, "json|csv|table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    app.add_option("--cache-dir", global.cache_dir, "count cache directory");
    app.add_option("--config", global.config_path, "key=value threshold config file");
    app.add_option("--jobs", global.jobs, "worker threads (1 = fully serial)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", global.seed, "seed for randomized probe commands");

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "exact rainbow sum-free coloring counts");
    count->add_option("--set", count_args.set_literal, "set literal");
    count->add_option("--family", count_args.family, "closed form: I1|I2|I3|eq1-lower-bound");
    count->add_option("--n", count_args.n, "ambient n (overrides literal ambient)");
    count->add_option("--r", count_args.r, "color count")->required();
    count->add_option("--method", count_args.method, "partition|naive|both");
    count->add_flag("--profile", count_args.profile, "emit the partition profile");

    BoundsArgs bounds_args;
    auto* bounds = app.add_subcommand("bounds", "bound evaluations and auxiliary counts");
    bounds->add_option("--set", bounds_args.set_literal, "set literal");
    bounds->add_option("--n", bounds_args.n, "ambient n");
    bounds->add_option("--r", bounds_args.r, "color count")->required();
    bounds->add_option("--t", bounds_args.t, "emit link-graph detail for this element");
    bounds->add_option("--excluded", bounds_args.excluded, "excluded set for pair covers");
    bounds->add_option("--mu", bounds_args.mu, "override mu for the many-triples bound");
    bounds->add_option("--probe", bounds_args.probe, "run a seeded soundness probe of K sets");
    bounds->add_option("--crossover", bounds_args.crossover,
                       "scan n = 2..N for where the dense bound dominates g([n], r)");

    SearchArgs search_args;
    auto* search = app.add_subcommand("search", "extremal search for g(n, r)");
    search->add_option("--n", search_args.n, "ambient n")->required();
    search->add_option("--r", search_args.r, "color count")->required();
    search->add_option("--min-size", search_args.min_size, "restrict to |A| >= min-size");
    search->add_option("--mode", search_args.mode, "exhaustive|pruned")
        ->check(CLI::IsMember({"exhaustive", "pruned"}));

    SearchArgs conj_args;
    auto* conjecture = app.add_subcommand("conjecture", "conjectured extremal set comparison");
    conjecture->add_option("--n", conj_args.n, "ambient n")->required();
    conjecture->add_option("--r", conj_args.r, "color count")->required();

    auto* structure = app.add_subcommand("structure", "structural verification");
    structure->require_subcommand(1);
    StructureArgs staden_args, sumfree_args, trich_args, extremal_args;
    auto* staden = structure->add_subcommand("staden", "minimum Schur-triple counts per size");
    staden->add_option("--n", staden_args.n, "ambient n")->required();
    auto* sumfree = structure->add_subcommand("sumfree", "sum-free enumeration summary");
    sumfree->add_option("--n", sumfree_args.n, "ambient n")->required();
    auto* trichotomy = structure->add_subcommand("trichotomy", "trichotomy flags for one set");
    trichotomy->add_option("--set", trich_args.set_literal, "set literal")->required();
    trichotomy->add_option("--n", trich_args.n, "ambient n");
    auto* extremal =
        structure->add_subcommand("extremal", "maximum restricted sum-free sets");
    extremal->add_option("--n", extremal_args.n, "ambient n")->required();

    auto* templates = app.add_subcommand("templates", "palette template operations");
    templates->require_subcommand(1);
    TemplateArgs tmpl_args;
    auto* t_rs = templates->add_subcommand("rs", "rainbow subtemplate count RS(P)");
    t_rs->add_option("--file", tmpl_args.file, "template JSON file")->required();
    auto* t_good = templates->add_subcommand("good", "goodness of P for a set A");
    t_good->add_option("--file", tmpl_args.file, "template JSON file")->required();
    t_good->add_option("--set", tmpl_args.set_literal, "set literal")->required();
    auto* t_prof = templates->add_subcommand("profile", "palette size profile");
    t_prof->add_option("--file", tmpl_args.file, "template JSON file")->required();
    t_prof->add_option("--set", tmpl_args.set_literal, "domain literal (default full)");
    t_prof->add_option("--pair", tmpl_args.pair, "count elements with palette exactly {i,j}");
    t_prof->add_option("--delta", tmpl_args.delta,
                       "report the (1-2*delta)*n threshold for the pair count");
    auto* t_sub = templates->add_subcommand("subtemplate", "pointwise inclusion P1 <= P2");
    t_sub->add_option("--file", tmpl_args.file, "template JSON file P1")->required();
    t_sub->add_option("--file2", tmpl_args.file2, "template JSON file P2")->required();

    auto* hyper = app.add_subcommand("hypergraph", "constraint hypergraph diagnostics");
    hyper->require_subcommand(1);
    HypergraphArgs hyper_args;
    auto* h_stats = hyper->add_subcommand("stats", "degree statistics");
    h_stats->add_option("--n", hyper_args.n, "ambient n")->required();
    h_stats->add_option("--r", hyper_args.r, "color count")->required();
    h_stats->add_option("--tau", hyper_args.tau, "evaluate the co-degree function at tau (p/q)");
    auto* h_check = hyper->add_subcommand("check", "container hypotheses at (n, r)");
    h_check->add_option("--n", hyper_args.n_text, "ambient n (decimal; may be huge)")
        ->required();
    h_check->add_option("--r", hyper_args.r, "color count")->required();
    auto* h_feas = hyper->add_subcommand("feasible", "smallest n where the hypotheses hold");
    h_feas->add_option("--r", hyper_args.r, "color count")->required();

    auto* cache = app.add_subcommand("cache", "count cache management");
    cache->require_subcommand(1);
    auto* c_stats = cache->add_subcommand("stats", "cache statistics");
    auto* c_clear = cache->add_subcommand("clear", "truncate the cache");

    // global flags remain usable after a subcommand name
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
        for (CLI::App* sub : cmd->get_subcommands([](CLI::App*) { return true; })) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (count->parsed()) return run_count(global, count_args);
        if (bounds->parsed()) return run_bounds(global, bounds_args);
        if (search->parsed()) return run_search(global, search_args);
        if (conjecture->parsed()) return run_conjecture(global, conj_args);
        if (structure->parsed()) {
            if (staden->parsed()) return run_staden(global, staden_args);
            if (sumfree->parsed()) return run_sumfree(global, sumfree_args);
            if (trichotomy->parsed()) return run_trichotomy(global, trich_args);
            if (extremal->parsed()) return run_extremal(global, extremal_args);
        }
        if (templates->parsed()) {
            if (t_rs->parsed()) return run_templates(global, "rs", tmpl_args);
            if (t_good->parsed()) return run_templates(global, "good", tmpl_args);
            if (t_prof->parsed()) return run_templates(global, "profile", tmpl_args);
            if (t_sub->parsed()) return run_templates(global, "subtemplate", tmpl_args);
        }
        if (hyper->parsed()) {
            if (h_stats->parsed()) return run_hypergraph(global, "stats", hyper_args);
            if (h_check->parsed()) return run_hypergraph(global, "check", hyper_args);
            if (h_feas->parsed()) return run_hypergraph(global, "feasible", hyper_args);
        }
        if (cache->parsed()) {
            if (c_stats->parsed()) return run_cache(global, "stats");
            if (c_clear->parsed()) return run_cache(global, "clear");
        }
        throw std::domain_error("no subcommand dispatched");
    } catch (const ThresholdRefusal& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 3;
    } catch (const SetParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
