#ifndef HOMALG_REPORT_JSON_HPP
#define HOMALG_REPORT_JSON_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "homalg/report.hpp"

namespace homalg {

inline nlohmann::json to_json(const CheckReport& r) {
    nlohmann::json cex = nlohmann::json::array();
    for (const auto& c : r.counterexamples)
        cex.push_back({{"clause", c.clause}, {"inputs", c.inputs}, {"lhs", c.lhs}, {"rhs", c.rhs}});
    return {{"axiom", r.axiom},
            {"formula", r.formula},
            {"status", r.passed() ? "pass" : "fail"},
            {"bound", r.bound},
            {"tested", r.tested},
            {"failures", r.failures},
            {"counterexamples", std::move(cex)}};
}

/// {"scenario": ..., "status": ..., "reports": [...]}
inline nlohmann::json to_json(const std::string& scenario, const std::vector<CheckReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    bool all = true;
    for (const auto& r : reports) {
        arr.push_back(to_json(r));
        all = all && r.passed();
    }
    return {{"scenario", scenario}, {"status", all ? "pass" : "fail"}, {"reports", std::move(arr)}};
}

}  // namespace homalg

#endif
