#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun run(const std::string& args) {
    std::string cmd = std::string(HOPFGAL_CLI) + " " + args + " 2>/dev/null";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json run_json(const std::string& args, int expect_code = 0) {
    CliRun r = run("--format json " + args);
    EXPECT_EQ(r.code, expect_code) << args;
    return nlohmann::json::parse(r.out);
}

std::filesystem::path tmp(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("hopfgal_cli_" + name);
}

}  // namespace

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("--help").code, 0);
    EXPECT_EQ(run("verify appp:p=4").code, 2);
    EXPECT_EQ(run("verify appp:p=3,zeta=9").code, 2);
    EXPECT_EQ(run("verify nonsense").code, 2);
    EXPECT_EQ(run("--format xml verify h8").code, 2);
    EXPECT_EQ(run("h2 cyclic:").code, 2);
    EXPECT_EQ(run("h3-cyclic 3 1 --variant other").code, 2);
    EXPECT_EQ(run("paper-suite --pq 3:5").code, 2);
}

TEST(Cli, VerifyPasses) {
    CliRun r = run("verify appp:p=3,zeta=1,lambda=1");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("all checks pass"), std::string::npos);
    auto j = run_json("verify h8");
    EXPECT_EQ(j["ok"], true);
    EXPECT_EQ(j["antipode"], "pass");
    EXPECT_EQ(j["dimension"], 8);
    auto capped = run_json("--antipode-cap 4 verify h8");
    EXPECT_EQ(capped["antipode"], "skipped (dimension cap)");
}

TEST(Cli, PerturbedCocycleFileFailsWithWitness) {
    auto good = tmp("good.json"), bad = tmp("bad.json");
    ASSERT_EQ(run("verify appp:p=3,zeta=1,lambda=0 --dump-cocycle " + good.string()).code, 0);
    nlohmann::json j;
    std::ifstream(good) >> j;
    EXPECT_EQ(run("verify appp:p=3,zeta=1,lambda=0 --cocycle-file " + good.string()).code, 0);
    // sigma_x(b, b) shifted by one
    size_t idx = (1 * 9 + 3) * 9 + 3;
    j["sigma"][idx] = (j["sigma"][idx].get<int>() + 1) % 3;
    std::ofstream(bad) << j.dump();
    CliRun r = run("verify appp:p=3,zeta=1,lambda=0 --cocycle-file " + bad.string());
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("FAIL"), std::string::npos);
    EXPECT_NE(r.out.find("s="), std::string::npos);
    std::ofstream(bad) << "{\"modulus\": 3}";
    EXPECT_EQ(run("verify appp:p=3 --cocycle-file " + bad.string()).code, 2);
    std::filesystem::remove(good);
    std::filesystem::remove(bad);
}

TEST(Cli, CountGalois) {
    auto j = run_json("count-galois h8");
    EXPECT_EQ(j["galois_object_count"], 1);
    EXPECT_EQ(j["classes"][0]["members"][1]["witness"], "a");
    EXPECT_FALSE(j.contains("candidates"));
    auto e = run_json("enumerate-ff appp:p=3,zeta=1,lambda=1");
    EXPECT_EQ(e["galois_object_count"], 2);
    EXPECT_FALSE(e["candidates"].empty());
    CliRun csv = run("--format csv count-galois apqq:p=3,q=2,l=0");
    EXPECT_EQ(csv.code, 0);
    EXPECT_EQ(csv.out.rfind("class,subgroup,beta_class_index,members", 0), 0u);
    auto d = run_json("--jobs 2 count-galois bpqq:p=2,q=5 --dual");
    EXPECT_EQ(d["galois_object_count"], 3);
}

TEST(Cli, Cohomology) {
    auto h = run_json("h2 'product:cyclic:3;cyclic:3'");
    EXPECT_EQ(h["order"], 3);
    EXPECT_EQ(h["invariant_factors"], nlohmann::json::array({3}));
    EXPECT_EQ(run_json("h2 cyclic:8")["order"], 1);
    EXPECT_EQ(run_json("h3-cyclic 3 1 --variant tilde")["class"], 2);  // d = 5
    EXPECT_EQ(run_json("h3-cyclic 5 1 --variant tilde")["class"], 0);  // d = 30
    EXPECT_EQ(run_json("h3-cyclic 3 1")["class"], 1);
    EXPECT_EQ(run("--lift 2 h3-cyclic 3 1").code, 1);  // lift multiplier not a multiple of |G|
}

TEST(Cli, KacOmega) {
    auto j = run_json("kac-omega appp:p=3,zeta=2,lambda=1");
    EXPECT_EQ(j["is_cocycle"], true);
    EXPECT_EQ(j["equals_closed_form"], true);
    EXPECT_EQ(run_json("kac-omega h8 --dual")["is_cocycle"], true);
}

TEST(Cli, Morita) {
    auto j = run_json("morita --p 3");
    EXPECT_EQ(j["unseparated_pairs"].size(), 2u);
    CliRun capped = run("morita --targets appp:p=5,zeta=1,lambda=0");
    EXPECT_EQ(capped.code, 0);
    EXPECT_NE(capped.out.find("cap"), std::string::npos);
}

TEST(Cli, SuiteRows) {
    CliRun empty = run("paper-suite");
    EXPECT_EQ(empty.code, 0);
    EXPECT_NE(empty.out.find("no rows"), std::string::npos);
    auto j = run_json("paper-suite --pq 3:2 --h8");
    EXPECT_EQ(j["all_match"], true);
    EXPECT_EQ(j["rows"].size(), 3u);
    auto inf = run_json("--lift 1 paper-suite --p 3", 1);
    bool any_infeasible = false;
    for (auto& r : inf["rows"]) any_infeasible = any_infeasible || r["status"] == "infeasible";
    EXPECT_TRUE(any_infeasible);
    CliRun b = run("--format json paper-suite --pq 2:3");
    auto bj = nlohmann::json::parse(b.out);
    EXPECT_EQ(b.code, bj["all_match"] == true ? 0 : 1);
    for (auto& r : bj["rows"]) {
        if (r["algebra"] == "B_lambda*") {
            EXPECT_EQ(r["status"], "match");
        }
    }
}

TEST(Cli, OutFile) {
    auto path = tmp("out.json");
    std::filesystem::remove(path);
    EXPECT_EQ(run("--format json --out " + path.string() + " count-galois h8").code, 0);
    nlohmann::json j;
    std::ifstream(path) >> j;
    EXPECT_EQ(j["galois_object_count"], 1);
    std::filesystem::remove(path);
}
