#pragma once

// JSON views of the report types. Counts serialize as decimal strings (they
// exceed 64-bit range routinely), rationals as "p/q", high-precision reals
// as decimal strings with max_digits10 digits so re-parsing is lossless.

#include <json.hpp>

#include "rainbow/bounds.hpp"
#include "rainbow/containers.hpp"
#include "rainbow/counting.hpp"
#include "rainbow/search.hpp"
#include "rainbow/structure.hpp"
#include "rainbow/templates.hpp"

namespace rainbow {

using Json = nlohmann::ordered_json;  // field order = insertion order in reports

constexpr int kSchemaVersion = 1;

inline std::string big_to_string(const BigCount& v) { return v.str(); }
inline BigCount big_from_string(const std::string& s) { return BigCount(s); }

inline std::string real_roundtrip_string(const Real& x) {
    return real_to_string(x, std::numeric_limits<Real>::max_digits10);
}

Json search_result_to_json(const SearchResult& r);
SearchResult search_result_from_json(const Json& j);

Json staden_row_to_json(const StadenRow& row);
StadenRow staden_row_from_json(const Json& j);

Json hypothesis_report_to_json(const HypothesisReport& rep);
HypothesisReport hypothesis_report_from_json(const Json& j);
Json hypergraph_stats_to_json(const HypergraphStats& st);
HypergraphStats hypergraph_stats_from_json(const Json& j);

// Template literal format: {"n":…, "r":…, "palettes": {"x": [colors], …}};
// omitted elements have empty palettes.
Json template_to_json(const Template& t);
Template template_from_json(const Json& j);

Json trichotomy_to_json(const IntegerSet& s, const TrichotomyFlags& f);
Json extremal_report_to_json(const RestrictedExtremalReport& rep);
Json conjecture_report_to_json(const ConjectureReport& rep);
Json partition_profile_to_json(const PartitionProfile& p);

Json matching_bound_to_json(const MatchingBoundEntry& e);
Json prop51_to_json(const Prop51Report& rep);
Json many_schur_to_json(const ManySchurBoundEntry& e);
Json non_triple_pairs_to_json(const NonTriplePairs& f);

}  // namespace rainbow
