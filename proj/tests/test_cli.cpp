#include "qnil/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace qnil;
namespace fs = std::filesystem;

namespace {

struct result {
    int code;
    std::string out, err;
};

result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "qnil");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string last_line(const std::string& s) {
    auto body = s.substr(0, s.size() - 1);
    return body.substr(body.rfind('\n') + 1);
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("qnil_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_F(CliTest, Bound) {
    auto r = run_cli({"bound", "--n", "8", "--d", "25"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1 + 8 t + 39 t^2 + 112 t^3\n");
    auto j = run_cli({"bound", "--n", "2", "--d", "1", "--max-degree", "3", "--format", "json"});
    EXPECT_EQ(ordered_json::parse(j.out)["complete"], false);
    EXPECT_EQ(run_cli({"bound", "--n", "2", "--d", "5"}).code, 1);
}

TEST_F(CliTest, GsMin) {
    auto r = run_cli({"gs-min", "--n", "8", "--k", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "25\n");
}

TEST_F(CliTest, Dnk) {
    auto r = run_cli({"dnk", "--n", "8", "--k", "4", "--witness", "--closed-form", "--brute-force"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "25\n"
              "witness: (3,2,3) costs [24, 25, 24]\n"
              "rounded alpha witness: (3,2,3) cost 25\n"
              "closed form: 25 (agrees)\n"
              "brute force: 25 (agrees)\n");
    auto big = run_cli({"dnk", "--n", "300", "--k", "9", "--brute-force"});
    EXPECT_EQ(big.code, 1);
    EXPECT_NE(big.err.find("guard"), std::string::npos);
}

TEST_F(CliTest, ConstructThenVerify) {
    const auto file = path("p84.json");
    ASSERT_EQ(run_cli({"construct", "--n", "8", "--k", "4", "-o", file}).code, 0);
    auto v = run_cli({"verify", "--file", file, "--k", "4"});
    EXPECT_EQ(v.code, 0) << v.err;
    EXPECT_EQ(last_line(v.out), "R_4 = 0: NILPOTENT");
}

TEST_F(CliTest, ConstructDeterministic) {
    ASSERT_EQ(run_cli({"construct", "--n", "8", "--k", "4", "-o", path("a.json")}).code, 0);
    ASSERT_EQ(run_cli({"construct", "--n", "8", "--k", "4", "-o", path("b.json")}).code, 0);
    EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
    EXPECT_EQ(run_cli({"construct", "--n", "8", "--k", "4"}).out, slurp(path("a.json")));
}

TEST_F(CliTest, FixtureVerifyAndSharpness) {
    const auto file = path("ex8.json");
    ASSERT_EQ(run_cli({"fixture-ex8", "-o", file}).code, 0);
    auto v = run_cli({"verify", "--file", file, "--k", "4"});
    EXPECT_EQ(v.code, 0);
    EXPECT_NE(v.out.find("dim R_3 = 112\n"), std::string::npos);

    auto p = parse(slurp(file));
    p.relations.erase(p.relations.begin() + 7);
    const auto cut = path("ex8_minus_one.json");
    std::ofstream(cut) << serialize(p);
    auto w = run_cli({"verify", "--file", cut, "--k", "4", "--mod", "32003"});
    EXPECT_EQ(w.code, 2);
    EXPECT_NE(last_line(w.out).find("NOT NILPOTENT"), std::string::npos);
}

TEST_F(CliTest, VerifyJson) {
    const auto file = path("ex8.json");
    run_cli({"fixture-ex8", "-o", file});
    auto v = run_cli({"verify", "--file", file, "--k", "4", "--format", "json"});
    ASSERT_EQ(v.code, 0);
    auto j = ordered_json::parse(v.out);
    EXPECT_EQ(j["dims"], ordered_json({1, 8, 39, 112, 0}));
    EXPECT_EQ(j["nilpotent"], true);
}

TEST_F(CliTest, VerifyErrors) {
    EXPECT_EQ(run_cli({"verify", "--file", path("missing.json")}).code, 1);
    const auto bad = path("bad.json");
    std::ofstream(bad) << R"({"generators": ["a"], "field": "rational", "relations": [[{"coeff": "1", "left": "a", "right": "q"}]]})";
    auto r = run_cli({"verify", "--file", bad});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("unknown generator 'q'"), std::string::npos);

    const auto ex8 = path("ex8.json");
    run_cli({"fixture-ex8", "-o", ex8});
    EXPECT_EQ(run_cli({"verify", "--file", ex8, "--k", "4", "--column-cap", "100"}).code, 1);
    EXPECT_EQ(run_cli({"verify", "--file", ex8, "--mod", "12"}).code, 1);
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(run_cli({}).code, 1);
    EXPECT_EQ(run_cli({"dnk", "--n", "5"}).code, 1);
    EXPECT_EQ(run_cli({"dnk", "--n", "5", "--k", "1"}).code, 1);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 1);
    EXPECT_EQ(run_cli({"survey", "--k", "4", "--n-min", "5", "--n-max", "2"}).code, 1);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST_F(CliTest, SurveyFibonacciColumn) {
    auto r = run_cli({"survey", "--k", "4", "--n-min", "1", "--n-max", "100", "--csv"});
    ASSERT_EQ(r.code, 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "n,d_nk,gs_min,equal,flag");
    std::set<int> equal;
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        std::vector<std::string> f;
        std::stringstream ls(line);
        for (std::string c; std::getline(ls, c, ',');) f.push_back(c);
        ASSERT_EQ(f.size(), 5u) << line;
        if (f[3] == "true") equal.insert(std::stoi(f[0]));
        EXPECT_EQ(f[3], f[4]) << line;
    }
    EXPECT_EQ(rows, 100);
    EXPECT_EQ(equal, (std::set<int>{1, 2, 3, 5, 8, 13, 21, 34, 55, 89}));
}

TEST_F(CliTest, SurveyDeterministicText) {
    auto a = run_cli({"survey", "--k", "5", "--n-min", "1", "--n-max", "12"});
    auto b = run_cli({"survey", "--k", "5", "--n-min", "1", "--n-max", "12"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("12"), std::string::npos);
}

TEST_F(CliTest, SurveyK5ShowsFourApart) {
    auto r = run_cli({"survey", "--k", "5", "--n-min", "1", "--n-max", "12", "--csv"});
    ASSERT_EQ(r.code, 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    std::set<int> equal, flagged;
    while (std::getline(in, line)) {
        std::vector<std::string> f;
        std::stringstream ls(line);
        for (std::string c; std::getline(ls, c, ',');) f.push_back(c);
        ASSERT_EQ(f.size(), 5u) << line;
        if (f[3] == "true") equal.insert(std::stoi(f[0]));
        if (f[4] == "true") flagged.insert(std::stoi(f[0]));
    }
    EXPECT_EQ(equal, (std::set<int>{1, 2, 4, 6, 12}));
    EXPECT_EQ(flagged, (std::set<int>{1, 2, 6, 12}));
}
