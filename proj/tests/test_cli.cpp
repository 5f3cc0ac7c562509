#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "json.hpp"
#include "seqc/report.hpp"

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr interleaved
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string("\"") + SEQC_CLI_PATH + "\" " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path = "cli_tmp_" + std::to_string(counter++) + ".bits";
        std::ofstream f(path, std::ios::binary);
        f << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("generate") {
    CliResult r = run_cli("generate --seq thue-morse -n 16");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "0110100110010110\n");

    CHECK(run_cli("generate --seq pattern -k 2 -n 8").output == "00010010\n");
    CHECK(run_cli("generate --seq rudin-shapiro -n 8").output == "00010010\n");
    CHECK(run_cli("generate --seq thue-morse -n 16 --out-format hex").output == "6996\n");
    CHECK(run_cli("generate --literal 0110").output == "0110\n");
    CHECK(run_cli("generate --literal 69 --format hex").output == "01101001\n");
    // t at the square indices 0, 1, 4, 9, 16, 25, 36, 49
    CHECK(run_cli("generate --seq thue-morse --along-squares -n 8").output ==
          "01101101\n");
}

TEST_CASE("generate usage errors") {
    CHECK(run_cli("generate --seq thue-morse -n 0").exit_code == 2);
    CHECK(run_cli("generate -n 5").exit_code == 2);                   // no source
    CHECK(run_cli("generate --seq thue-morse").exit_code == 2);       // no -n
    CHECK(run_cli("generate --seq thue-morse --literal 01 -n 4").exit_code == 2);
    CHECK(run_cli("generate --seq nonsense -n 4").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("generate runtime errors") {
    // along-squares needs inner index 4 but the literal has only 4 bits
    CHECK(run_cli("generate --literal 0110 --along-squares -n 4").exit_code == 1);
    CHECK(run_cli("generate --file does_not_exist.bits -n 4").exit_code == 1);
}

TEST_CASE("measure") {
    CHECK(run_cli("measure --measure moc --seq pattern -k 2 -n 24").output == "6\n");
    CHECK(run_cli("measure --measure moc --seq pattern -k 2 -n 25").output == "9\n");
    CHECK(run_cli("measure --measure lc --literal 0001").output == "4\n");
    CHECK(run_cli("measure --measure ec --seq thue-morse -n 8").output == "3\n");
    CHECK(run_cli("measure --measure moc --literal 69 --format hex").output == "3\n");

    CliResult w = run_cli("measure --measure moc --literal 0001 --witness");
    CHECK(w.exit_code == 0);
    CHECK(w.output == "3\nwitness: length=2 pos_a=0 pos_b=1\n");

    CliResult wz = run_cli("measure --measure moc --literal 0000 --witness");
    CHECK(wz.output == "0\nwitness: none (constant prefix)\n");

    CliResult taps = run_cli("measure --measure lc --literal 0110 --witness");
    CHECK(taps.output == "2\ntaps: 11\n");

    CliResult ann = run_cli("measure --measure ec --literal 0001 --witness");
    CHECK(ann.output == "2\nannihilator: y^2\n");

    CliResult capped = run_cli("measure --measure ec --seq thue-morse -n 8 --dmax 1 --witness");
    CHECK(capped.exit_code == 0);
    CHECK(capped.output == "exceeds dmax 1\nannihilator: none\n");
}

TEST_CASE("measure with file input") {
    TempFile zeros("000000\n");
    CHECK(run_cli("measure --measure lc --file " + zeros.path).output == "0\n");
    CHECK(run_cli("measure --measure moc --file " + zeros.path + " -n 4").output == "0\n");

    TempFile bad("01x1");
    CHECK(run_cli("measure --measure lc --file " + bad.path).exit_code == 1);

    TempFile hex("69\n");
    CHECK(run_cli("measure --measure moc --file " + hex.path + " --format hex").output ==
          "3\n");
}

TEST_CASE("measure JSON report") {
    CliResult r = run_cli("measure --measure moc --seq thue-morse -n 11 --json");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j.at("command") == "measure");
    CHECK(j.at("params").at("n") == "11");
    CHECK(j.at("results").at(0).at("value") == 5);
    CHECK(j.at("results").at(0).at("measure") == "moc");

    CliResult rw = run_cli("measure --measure ec --literal 0001 --witness --json");
    nlohmann::json jw = nlohmann::json::parse(rw.output);
    CHECK(jw.at("results").at(0).at("annihilator") == "y^2");
}

TEST_CASE("profile") {
    CliResult r = run_cli("profile --measure moc --seq thue-morse --nmax 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "N,value\n1,0\n2,1\n3,1\n");

    CliResult rs = run_cli("profile --measure moc --seq rudin-shapiro --nmax 25");
    CHECK(rs.output.find("24,6\n25,9\n") != std::string::npos);

    CHECK(run_cli("profile --measure lc --literal 1 --nmax 1").output == "N,value\n1,1\n");
    CHECK(run_cli("profile --measure ec --literal 0001").output ==
          "N,value\n1,0\n2,0\n3,0\n4,2\n");

    TempFile out_target("");
    CliResult to_file = run_cli("profile --measure lc --literal 0001 --out " +
                                out_target.path);
    CHECK(to_file.exit_code == 0);
    CHECK(to_file.output.empty());
    std::ifstream in(out_target.path, std::ios::binary);
    std::string contents((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
    CHECK(contents == "N,value\n1,0\n2,0\n3,0\n4,4\n");
}

TEST_CASE("verify") {
    CliResult r = run_cli("verify --claims remark2 --nmax 200");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("PASS remark2") == 0);

    CHECK(run_cli("verify --claims no-such-claim").exit_code == 2);
    CHECK(run_cli("verify --claims remark2 --nmax 0").exit_code == 2);

    CliResult two = run_cli("verify --claims shift-tm,remark1 --nmax 300");
    CHECK(two.exit_code == 0);
    CHECK(two.output.find("PASS shift-tm") != std::string::npos);
    CHECK(two.output.find("PASS remark1") != std::string::npos);
}

TEST_CASE("verify JSON report round trips") {
    CliResult r = run_cli("verify --claims shift-tm --nmax 200 --json");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j.at("command") == "verify");
    seqc::RunReport report = j.get<seqc::RunReport>();
    REQUIRE(report.verdicts.size() == 1);
    CHECK(report.verdicts[0].claim == "shift-tm");
    CHECK(report.verdicts[0].pass);
    CHECK(report.all_pass());
    CHECK(nlohmann::json(report) == j);
}
