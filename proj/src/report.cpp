#include "seqc/report.hpp"

namespace seqc {

void to_json(nlohmann::json& j, const ClaimVerdict& v) {
    j = nlohmann::json{{"claim", v.claim}, {"pass", v.pass}, {"detail", v.detail}};
}

void from_json(const nlohmann::json& j, ClaimVerdict& v) {
    j.at("claim").get_to(v.claim);
    j.at("pass").get_to(v.pass);
    j.at("detail").get_to(v.detail);
}

void to_json(nlohmann::json& j, const RunReport& r) {
    j = nlohmann::json{{"command", r.command},
                       {"params", r.params},
                       {"results", r.results},
                       {"verdicts", r.verdicts}};
}

void from_json(const nlohmann::json& j, RunReport& r) {
    j.at("command").get_to(r.command);
    j.at("params").get_to(r.params);
    r.results = j.at("results");
    j.at("verdicts").get_to(r.verdicts);
}

}  // namespace seqc
