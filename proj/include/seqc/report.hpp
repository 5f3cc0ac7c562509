#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace seqc {

/// Outcome of one named claim check.
struct ClaimVerdict {
    std::string claim;
    bool pass = false;
    std::string detail;

    friend bool operator==(const ClaimVerdict&, const ClaimVerdict&) = default;
};

/// Machine-readable record of a CLI run. results carries command-specific
/// records (measure values, probe tables, ...); verdicts is populated by
/// verification runs only.
struct RunReport {
    std::string command;
    std::map<std::string, std::string> params;
    nlohmann::json results = nlohmann::json::array();
    std::vector<ClaimVerdict> verdicts;

    bool all_pass() const {
        for (const auto& v : verdicts)
            if (!v.pass) return false;
        return true;
    }

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

void to_json(nlohmann::json& j, const ClaimVerdict& v);
void from_json(const nlohmann::json& j, ClaimVerdict& v);
void to_json(nlohmann::json& j, const RunReport& r);
void from_json(const nlohmann::json& j, RunReport& r);

}  // namespace seqc
