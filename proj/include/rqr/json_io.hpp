#pragma once

// JSON-lines serialization. The JSON schema is the machine contract:
// {"law": str, "inputs": {name: int...}, "sides": [int...],
//  "match": bool, "skipped": str|null}. All numbers are exact integers.

#include "rqr/genus.hpp"
#include "rqr/laws.hpp"
#include "rqr/sweep.hpp"

#include <json.hpp>

namespace rqr {

inline nlohmann::ordered_json to_json(const LawReport& r)
{
    nlohmann::ordered_json j;
    j["law"] = r.law;
    nlohmann::ordered_json in = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.inputs)
        in[k] = v;
    j["inputs"] = in;
    j["sides"] = r.sides;
    j["match"] = r.match;
    j["skipped"] = r.skipped ? nlohmann::ordered_json(*r.skipped) : nlohmann::ordered_json(nullptr);
    return j;
}

inline nlohmann::ordered_json to_json(const DiscSplit& s)
{
    nlohmann::ordered_json j;
    j["d1"] = s.d1;
    j["d2"] = s.d2;
    j["is_c4"] = s.is_c4;
    j["scholz_equal"] = s.scholz_equal ? nlohmann::ordered_json(*s.scholz_equal)
                                       : nlohmann::ordered_json(nullptr);
    return j;
}

inline nlohmann::ordered_json to_json(const GenusReport& r)
{
    nlohmann::ordered_json j;
    j["d"] = r.d;
    nlohmann::ordered_json splits = nlohmann::ordered_json::array();
    for (const auto& s : r.splits)
        splits.push_back(to_json(s));
    j["splits"] = splits;
    j["c4_count"] = r.c4_count;
    j["real_count"] = r.real_count;
    return j;
}

/// One JSON line per report, enumeration order. Byte-identical for any
/// job count by construction.
inline std::string sweep_json_lines(const SweepResult& res)
{
    std::string out;
    for (const auto& r : res.reports) {
        out += to_json(r).dump();
        out += '\n';
    }
    return out;
}

inline nlohmann::ordered_json sweep_summary_json(Law law, const SweepResult& res)
{
    nlohmann::ordered_json j;
    j["law"] = law_name(law);
    j["checked"] = res.checked;
    j["matched"] = res.matched;
    j["skipped"] = res.skipped;
    j["counterexamples"] = res.counterexamples.size();
    return j;
}

} // namespace rqr
