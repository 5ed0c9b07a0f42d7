#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args, const std::string& out_file) {
    std::string cmd = std::string(PADE_CLI_PATH) + " " + args;
    if (!out_file.empty()) cmd += " --out " + out_file;
    cmd += " 2>/dev/null >/dev/null";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    if (!out_file.empty()) {
        std::ifstream f(out_file, std::ios::binary);
        std::stringstream ss;
        ss << f.rdbuf();
        r.output = ss.str();
    }
    return r;
}

std::string tmp_path(const std::string& name) { return "/tmp/pade_cli_test_" + name; }

} // namespace

TEST_CASE("construct writes the expected system") {
    auto r = run_cli("construct --lambdas 0 --degrees 1", tmp_path("sys0.json"));
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.output);
    CHECK(doc["schema"] == 1);
    CHECK(doc["source"] == "explicit");
    CHECK(doc["rows"][0]["Q"] == json::array({"2", "-1"}));
    CHECK(doc["rows"][0]["P"][0] == json::array({"2", "1"}));
    CHECK(doc["rows"][1]["Q"] == json::array({"3", "-1"}));
    CHECK(doc["rows"][1]["P"][0] == json::array({"3", "2", "1/2"}));
}

TEST_CASE("construct both sources reports an empty diff") {
    auto r = run_cli("construct --lambdas 0,1/2 --degrees 2,2 --source both", tmp_path("sys_both.json"));
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.output);
    CHECK(doc["diff"].empty());
}

TEST_CASE("invalid configurations exit with code 2") {
    auto r = run_cli("construct --lambdas 0,1 --degrees 1,1", tmp_path("bad.json"));
    CHECK(r.exit_code == 2);
    auto r2 = run_cli("construct --lambdas -2 --degrees 1", tmp_path("bad2.json"));
    CHECK(r2.exit_code == 2);
}

TEST_CASE("byte-identical outputs for identical runs") {
    auto a = run_cli("construct --lambdas 1/2,1/3 --degrees 2,3", tmp_path("det_a.json"));
    auto b = run_cli("construct --lambdas 1/2,1/3 --degrees 2,3", tmp_path("det_b.json"));
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);

    auto s1 = run_cli("stress --lambdas 0,1/2 --alpha 1/2 --trials 60 --seed 5", tmp_path("st_a.json"));
    auto s2 = run_cli("stress --lambdas 0,1/2 --alpha 1/2 --trials 60 --seed 5", tmp_path("st_b.json"));
    REQUIRE(s1.exit_code == 0);
    CHECK(s1.output == s2.output);
    auto s3 = run_cli("stress --lambdas 0,1/2 --alpha 1/2 --trials 60 --seed 6", tmp_path("st_c.json"));
    CHECK(s1.output != s3.output);
}

TEST_CASE("verify accepts built systems and flags tampered ones") {
    auto r = run_cli("construct --lambdas 1/3 --degrees 2", tmp_path("v.json"));
    REQUIRE(r.exit_code == 0);
    auto v = run_cli("verify " + tmp_path("v.json"), tmp_path("v_report.json"));
    CHECK(v.exit_code == 0);
    json rep = json::parse(v.output);
    CHECK(rep["overall"] == "pass");

    json doc = json::parse(r.output);
    doc["rows"][0]["Q"][0] = "7/3"; // corrupt one coefficient
    std::ofstream(tmp_path("v_bad.json")) << doc.dump(2);
    auto vb = run_cli("verify " + tmp_path("v_bad.json"), tmp_path("v_bad_report.json"));
    CHECK(vb.exit_code == 1);
    CHECK(json::parse(vb.output)["overall"] == "fail");
}

TEST_CASE("certify emits a full certificate") {
    run_cli("construct --lambdas 0,1/2 --degrees 1,2", tmp_path("c.json"));
    auto c = run_cli("certify " + tmp_path("c.json") + " --alpha 2/3", tmp_path("c_report.json"));
    CHECK(c.exit_code == 0);
    json rep = json::parse(c.output);
    CHECK(rep["overall"] == "pass");
    CHECK(rep["denominators"]["D1"]["value"].is_string());
    bool saw_remainder = false;
    for (const auto& chk : rep["checks"])
        if (chk["check"] == "remainder-size") saw_remainder = chk["status"] == "pass";
    CHECK(saw_remainder);

    auto ci = run_cli("certify " + tmp_path("c.json") + " --alpha i --field 1", tmp_path("ci_report.json"));
    CHECK(ci.exit_code == 0);
}

TEST_CASE("bound prints the constant table") {
    auto b = run_cli("bound --lambdas 0 --alpha 1", tmp_path("b.json"));
    REQUIRE(b.exit_code == 0);
    json rep = json::parse(b.output);
    CHECK(rep["d"]["d2"][0] == "12");
    CHECK(rep["d"]["d2"][1] == "12");
    CHECK(rep["constants"]["c1"][0] == "2");
    CHECK(rep["admissible"] == "fail");
    CHECK(rep["identity_overlap"] == false);
}

TEST_CASE("evaluate encloses the form value") {
    auto e = run_cli("evaluate --lambdas 0 --alpha 1 --beta -3,1", tmp_path("e.json"));
    REQUIRE(e.exit_code == 0);
    json rep = json::parse(e.output);
    std::string lo = rep["value_re_decimal"][0], hi = rep["value_re_decimal"][1];
    CHECK(lo.substr(0, 7) == "-2.8171");
    CHECK(hi.substr(0, 7) == "-2.8171");
}

TEST_CASE("stress reports zero violations") {
    auto s = run_cli("stress --lambdas 1/2 --alpha 2 --trials 40 --seed 9 --box 50", tmp_path("s.json"));
    REQUIRE(s.exit_code == 0);
    json rep = json::parse(s.output);
    CHECK(rep["violations"] == 0);
    CHECK(rep["trials"] == 40);
}
