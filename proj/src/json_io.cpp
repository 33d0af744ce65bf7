#include "rainbow/json_io.hpp"

namespace rainbow {

namespace {

Json sets_to_json(const std::vector<IntegerSet>& sets) {
    Json arr = Json::array();
    for (const IntegerSet& s : sets) arr.push_back(s.to_literal());
    return arr;
}

std::vector<IntegerSet> sets_from_json(const Json& arr, int ambient) {
    std::vector<IntegerSet> out;
    for (const auto& lit : arr) out.push_back(parse_set(lit.get<std::string>(), ambient));
    return out;
}

std::string rat_str(const BigRat& q) { return rat_to_string(q); }

BigRat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return BigRat(BigCount(s));
    return BigRat(BigCount(s.substr(0, slash)), BigCount(s.substr(slash + 1)));
}

}  // namespace

Json search_result_to_json(const SearchResult& r) {
    return Json{{"n", r.n},
                {"r", r.r},
                {"min_size", r.min_size},
                {"mode", to_string(r.mode)},
                {"g_max", big_to_string(r.g_max)},
                {"argmax", sets_to_json(r.argmax)},
                {"stats", Json{{"explored", r.explored}, {"pruned", r.pruned}}}};
}

SearchResult search_result_from_json(const Json& j) {
    SearchResult r;
    r.n = j.at("n").get<int>();
    r.r = j.at("r").get<int>();
    r.min_size = j.at("min_size").get<int>();
    r.mode = search_mode_from_string(j.at("mode").get<std::string>());
    r.g_max = big_from_string(j.at("g_max").get<std::string>());
    r.argmax = sets_from_json(j.at("argmax"), r.n);
    r.explored = j.at("stats").at("explored").get<long long>();
    r.pruned = j.at("stats").at("pruned").get<long long>();
    return r;
}

Json staden_row_to_json(const StadenRow& row) {
    return Json{{"n", row.n},
                {"m", row.m},
                {"min", row.min_count},
                {"formula", row.formula},
                {"argmin", sets_to_json(row.argmins)},
                {"value_matches", row.value_matches},
                {"unique_matches", row.unique_matches},
                {"matches_theorem", row.matches_theorem}};
}

StadenRow staden_row_from_json(const Json& j) {
    StadenRow row;
    row.n = j.at("n").get<int>();
    row.m = j.at("m").get<int>();
    row.min_count = j.at("min").get<long long>();
    row.formula = j.at("formula").get<long long>();
    row.argmins = sets_from_json(j.at("argmin"), row.n);
    row.value_matches = j.at("value_matches").get<bool>();
    row.unique_matches = j.at("unique_matches").get<bool>();
    row.matches_theorem = j.at("matches_theorem").get<bool>();
    return row;
}

Json hypothesis_report_to_json(const HypothesisReport& rep) {
    return Json{{"epsilon_in_range", rep.epsilon_in_range},
                {"tau_condition", rep.tau_condition},
                {"codegree_condition", rep.codegree_condition},
                {"all_hold", rep.all_hold},
                {"tau", real_roundtrip_string(rep.tau)},
                {"epsilon", real_roundtrip_string(rep.epsilon)},
                {"codegree_value", real_roundtrip_string(rep.codegree_value)},
                {"tau_margin", real_roundtrip_string(rep.tau_margin)},
                {"codegree_margin", real_roundtrip_string(rep.codegree_margin)}};
}

HypothesisReport hypothesis_report_from_json(const Json& j) {
    HypothesisReport rep;
    rep.epsilon_in_range = j.at("epsilon_in_range").get<bool>();
    rep.tau_condition = j.at("tau_condition").get<bool>();
    rep.codegree_condition = j.at("codegree_condition").get<bool>();
    rep.all_hold = j.at("all_hold").get<bool>();
    rep.tau = Real(j.at("tau").get<std::string>());
    rep.epsilon = Real(j.at("epsilon").get<std::string>());
    rep.codegree_value = Real(j.at("codegree_value").get<std::string>());
    rep.tau_margin = Real(j.at("tau_margin").get<std::string>());
    rep.codegree_margin = Real(j.at("codegree_margin").get<std::string>());
    return rep;
}

Json hypergraph_stats_to_json(const HypergraphStats& st) {
    return Json{{"n", st.n},
                {"r", st.r},
                {"vertex_count", big_to_string(st.vertex_count)},
                {"edge_count", big_to_string(st.edge_count)},
                {"average_degree", rat_str(st.average_degree)},
                {"delta2", big_to_string(st.delta2)},
                {"delta2_scanned", st.delta2_scanned},
                {"delta2_formula", big_to_string(st.delta2_formula)},
                {"delta3", st.delta3},
                {"hypothesis", hypothesis_report_to_json(st.hypothesis)}};
}

HypergraphStats hypergraph_stats_from_json(const Json& j) {
    HypergraphStats st;
    st.n = j.at("n").get<long long>();
    st.r = j.at("r").get<int>();
    st.vertex_count = big_from_string(j.at("vertex_count").get<std::string>());
    st.edge_count = big_from_string(j.at("edge_count").get<std::string>());
    st.average_degree = rat_from_string(j.at("average_degree").get<std::string>());
    st.delta2 = big_from_string(j.at("delta2").get<std::string>());
    st.delta2_scanned = j.at("delta2_scanned").get<bool>();
    st.delta2_formula = big_from_string(j.at("delta2_formula").get<std::string>());
    st.delta3 = j.at("delta3").get<int>();
    st.hypothesis = hypothesis_report_from_json(j.at("hypothesis"));
    return st;
}

Json template_to_json(const Template& t) {
    Json palettes = Json::object();
    for (int x = 1; x <= t.order(); ++x) {
        uint32_t mask = t.palette(x);
        if (mask == 0) continue;
        Json colors = Json::array();
        for (int c = 1; c <= t.colors(); ++c)
            if (mask & (uint32_t{1} << (c - 1))) colors.push_back(c);
        palettes[std::to_string(x)] = colors;
    }
    return Json{{"n", t.order()}, {"r", t.colors()}, {"palettes", palettes}};
}

Template template_from_json(const Json& j) {
    Template t(j.at("n").get<int>(), j.at("r").get<int>());
    if (j.contains("palettes"))
        for (auto& [key, colors] : j.at("palettes").items()) {
            int x = std::stoi(key);
            for (const auto& c : colors) t.add_color(x, c.get<int>());
        }
    return t;
}

Json trichotomy_to_json(const IntegerSet& s, const TrichotomyFlags& f) {
    return Json{{"set", s.to_literal()},
                {"n", s.ambient()},
                {"size", s.size()},
                {"case_i", f.case_i},
                {"case_ii", f.case_ii},
                {"case_iii", f.case_iii},
                {"only_case_i_at_boundary", f.only_case_i_at_boundary}};
}

Json extremal_report_to_json(const RestrictedExtremalReport& rep) {
    return Json{{"n", rep.n},
                {"max_size", rep.max_size},
                {"extremal_sets", sets_to_json(rep.extremal_sets)},
                {"claim_applies", rep.claim_applies},
                {"size_matches_claim", rep.size_matches_claim}};
}

Json conjecture_report_to_json(const ConjectureReport& rep) {
    Json j{{"n", rep.n},
           {"r", rep.r},
           {"case", rep.case_name},
           {"in_range", rep.in_range},
           {"search", search_result_to_json(rep.search)},
           {"value_match", rep.value_match},
           {"unique_extremal_match", rep.unique_extremal_match},
           {"verdict", rep.verdict}};
    j["predicted_set"] =
        rep.predicted_set ? Json(rep.predicted_set->to_literal()) : Json(nullptr);
    j["predicted_value"] =
        rep.predicted_value ? Json(big_to_string(*rep.predicted_value)) : Json(nullptr);
    j["predicted_formula"] =
        rep.predicted_formula ? Json(big_to_string(*rep.predicted_formula)) : Json(nullptr);
    j["formula_extrapolated"] = rep.formula_extrapolated;
    return j;
}

Json partition_profile_to_json(const PartitionProfile& p) {
    Json arr = Json::array();
    for (const BigCount& v : p.p) arr.push_back(big_to_string(v));
    return arr;
}

Json matching_bound_to_json(const MatchingBoundEntry& e) {
    return Json{{"name", "matching_bound"},
                {"parameters", Json{{"t", e.best_t}, {"k", e.k}}},
                {"value", big_to_string(e.value)},
                {"exact", true},
                {"applicable", true},
                {"informational", false}};
}

Json prop51_to_json(const Prop51Report& rep) {
    auto witnesses = [](const std::vector<Prop51Report::Witness>& ws) {
        Json arr = Json::array();
        for (const auto& w : ws) arr.push_back(Json{{"t", w.t}, {"k", w.k}});
        return arr;
    };
    Json j{{"name", "prop51_large_matching"},
           {"applicable", rep.applicable},
           {"parameters", Json{{"c", rep.c}}},
           {"informational", false}};
    if (!rep.applicable) {
        j["reason"] = rep.reason;
        return j;
    }
    j["case_i_witnesses"] = witnesses(rep.case_i);
    j["case_ii_witnesses"] = witnesses(rep.case_ii);
    j["case_i_applies"] = !rep.case_i.empty();
    j["case_ii_applies"] = !rep.case_ii.empty();
    j["bound_case_i"] = big_to_string(rep.bound_case_i);
    j["bound_case_ii"] = big_to_string(rep.bound_case_ii);
    return j;
}

Json many_schur_to_json(const ManySchurBoundEntry& e) {
    Json j{{"name", "many_schur_bound"},
           {"parameters",
            Json{{"mu", rat_str(e.mu)}, {"mu_is_default", e.mu_is_default}}},
           {"applicable", e.applicable},
           {"exact", e.exact_integer},
           {"informational", false},
           {"exponent", real_roundtrip_string(e.exponent)},
           {"value", e.exact_integer ? big_to_string(e.exact_value)
                                     : real_to_string(e.value)}};
    if (!e.applicable) j["reason"] = e.reason;
    return j;
}

Json non_triple_pairs_to_json(const NonTriplePairs& f) {
    Json pairs = Json::array();
    for (auto [a, b] : f.pairs) pairs.push_back(Json::array({a, b}));
    return Json{{"name", "non_triple_pairs"},
                {"pairs", pairs},
                {"count", static_cast<long long>(f.pairs.size())},
                {"breakdown", Json{{"f1", f.f1}, {"f2", f.f2}, {"f3", f.f3}, {"f4", f.f4}}},
                {"bound", rat_str(f.bound)},
                {"bound_holds", f.bound_holds},
                {"applicable", true},
                {"exact", true},
                {"informational", false}};
}

}  // namespace rainbow
