#include <stdexcept>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "seqc/report.hpp"
#include "seqc/verify.hpp"

using seqc::ClaimVerdict;
using seqc::RunReport;

TEST_CASE("run report JSON round trip") {
    RunReport r;
    r.command = "verify";
    r.params = {{"nmax", "5000"}, {"kmax", "4"}};
    r.results.push_back({{"N", 25}, {"value", 9}});
    r.verdicts = {{"remark2", true, "24 prefix lengths checked"},
                  {"theorem1", false, "mismatch at N=7"}};

    nlohmann::json j = r;
    CHECK(j.at("command") == "verify");
    CHECK(j.at("params").at("nmax") == "5000");
    CHECK(j.at("results").at(0).at("value") == 9);
    CHECK(j.at("verdicts").at(1).at("pass") == false);
    CHECK(j.at("verdicts").at(0).at("claim") == "remark2");
    CHECK(j.at("verdicts").at(0).at("detail") == "24 prefix lengths checked");

    RunReport back = j.get<RunReport>();
    CHECK(back == r);

    std::string text = j.dump();
    CHECK(nlohmann::json::parse(text).get<RunReport>() == r);
}

TEST_CASE("all_pass") {
    RunReport r;
    CHECK(r.all_pass());  // vacuous
    r.verdicts.push_back({"a", true, ""});
    CHECK(r.all_pass());
    r.verdicts.push_back({"b", false, "boom"});
    CHECK_FALSE(r.all_pass());
}

TEST_CASE("claim registry") {
    auto ids = seqc::all_claims();
    CHECK(ids.size() == 11);
    for (const char* want :
         {"theorem1", "theorem2", "remark1", "remark2", "remark3", "witness-tm",
          "witness-pattern", "shift-tm", "shift-pattern", "inequalities",
          "squares-probe"}) {
        bool found = false;
        for (const auto& id : ids) found = found || id == want;
        CHECK_MESSAGE(found, want);
    }
    CHECK_THROWS_AS(seqc::run_claim("no-such-claim", seqc::VerifyOptions{}),
                    std::invalid_argument);
}

TEST_CASE("small verification claims pass") {
    seqc::VerifyOptions opts;
    opts.nmax = 400;
    opts.kmax = 3;

    ClaimVerdict v = seqc::run_claim("remark2", opts);
    CHECK(v.pass);
    CHECK(v.claim == "remark2");
    CHECK_FALSE(v.detail.empty());

    CHECK(seqc::run_claim("shift-tm", opts).pass);
    CHECK(seqc::run_claim("squares-probe", opts).pass);

    auto report = seqc::run_claims({"remark1", "remark2"}, opts);
    CHECK(report.size() == 2);
    CHECK(report[0].claim == "remark1");
    CHECK(report[1].claim == "remark2");
    CHECK(report[0].pass);
    CHECK(report[1].pass);
}
