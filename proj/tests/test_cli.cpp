#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"

using namespace cliquepart;

namespace {

struct Run {
    int code;
    std::string out, err;
    [[nodiscard]] Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("cliquepart_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    std::filesystem::path dir_;
};

}  // namespace

TEST_F(CliTest, BuildThenVerifyInversive) {
    const auto f = path("ip7.design");
    const auto b = run({"build", "inversive", "--q", "7", "--out", f});
    ASSERT_EQ(b.code, 0) << b.err;
    EXPECT_EQ(b.json()["blocks"], 350);
    const auto v = run({"verify", "--file", f, "--mode", "partition"});
    EXPECT_EQ(v.code, 0);
    EXPECT_EQ(v.json()["is_partition"], true);
    EXPECT_EQ(v.json()["report"], "v1");

    const auto ax = run({"verify", "--file", f, "--axioms", "--seed", "11"});
    EXPECT_EQ(ax.code, 0);
    EXPECT_EQ(ax.json()["seed"], 11);
    EXPECT_EQ(ax.json()["axiom3"], true);
}

TEST_F(CliTest, EveryBuildPassesItsOwnVerify) {
    const std::vector<std::pair<std::vector<std::string>, std::string>> builds{
        {{"build", "inversive", "--q", "3"}, "partition"},
        {{"build", "curves", "--q", "4", "--r", "3"}, "packing"},
        {{"build", "conics", "--q", "5", "--r", "4"}, "packing"},
        {{"build", "conics", "--q", "5", "--r", "5"}, "packing"},
        {{"build", "witt", "--which", "s24"}, "partition"},
        {{"build", "witt", "--which", "s23"}, "partition"},
        {{"build", "witt", "--which", "s22"}, "partition"},
        {{"build", "s843"}, "partition"},
    };
    int i = 0;
    for (auto [args, mode] : builds) {
        const auto f = path("b" + std::to_string(i++) + ".design");
        args.insert(args.end(), {"--out", f});
        ASSERT_EQ(run(args).code, 0) << args[1];
        const auto v = run({"verify", "--file", f, "--mode", mode});
        EXPECT_EQ(v.code, 0) << args[1] << " " << v.out;
    }
}

TEST_F(CliTest, DesignToStdoutRoundTrips) {
    const auto r = run({"build", "s843"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(design_from_string(r.out), build_s843());
}

TEST_F(CliTest, LinkAndEqualBlocks) {
    const auto s22 = path("s22.design");
    ASSERT_EQ(run({"build", "witt", "--which", "s22", "--out", s22}).code, 0);
    EXPECT_EQ(run({"z", "equal-blocks", "--file", s22}).code, 0);
    const auto z = run({"z", "lemma7", "--file", s22});
    EXPECT_EQ(z.code, 0);
    EXPECT_EQ(z.json()["km"], 462);
    EXPECT_EQ(z.json()["meets"], true);

    const auto ip = path("ip3.design"), link = path("link.design");
    ASSERT_EQ(run({"build", "inversive", "--q", "3", "--out", ip}).code, 0);
    ASSERT_EQ(run({"link", "--file", ip, "--v", "9", "--out", link}).code, 0);
    const auto v = run({"verify", "--file", link});
    EXPECT_EQ(v.code, 0);
    EXPECT_EQ(v.json()["total_rsets"], 36);
}

TEST_F(CliTest, Bounds) {
    const auto sieve = run({"bounds", "qsieve", "--r", "3", "--qmax", "1000"});
    EXPECT_EQ(sieve.code, 0);
    EXPECT_EQ(sieve.json()["Q"], Json::parse("[1,2,4,10]"));
    EXPECT_EQ(run({"bounds", "phi", "--n", "8", "--r", "3"}).json()["phi_ceiling"], "14");
    EXPECT_EQ(run({"bounds", "link", "--n", "21", "--r", "3", "--L", "21"}).json()["bound"], "77");
    EXPECT_EQ(run({"bounds", "theorem2", "--n", "21", "--r", "3", "--L", "21"}).json()["bound"], "77");
    EXPECT_EQ(run({"bounds", "identity", "--n", "20", "--r", "4"}).json()["holds"], true);
    EXPECT_EQ(run({"bounds", "table"}).code, 0);
    const auto text = run({"--output", "text", "bounds", "phi", "--n", "8", "--r", "3"});
    EXPECT_NE(text.out.find("phi_ceiling: 14"), std::string::npos);
    // global flags may follow the subcommand
    EXPECT_NE(run({"bounds", "phi", "--n", "8", "--r", "3", "--output", "text"}).out.find("phi_ceiling: 14"),
              std::string::npos);
}

TEST_F(CliTest, ZAndSearch) {
    const auto z = run({"z", "brute", "--m", "4", "--n", "4", "--s", "2", "--t", "2"});
    EXPECT_EQ(z.code, 0);
    EXPECT_EQ(z.json()["z"], 9);
    EXPECT_EQ(run({"z", "convexity", "--m", "30", "--n", "10", "--r", "3"}).json()["upper_bound"], 120);

    const auto cert = path("cp.design");
    const auto s = run({"search", "cp", "--n", "5", "--r", "4", "--out", cert});
    EXPECT_EQ(s.code, 0);
    EXPECT_EQ(s.json()["optimum"], 5);
    EXPECT_EQ(s.json()["proven_optimal"], true);
    EXPECT_EQ(run({"verify", "--file", cert}).code, 0);

    const auto seed = path("s843.design");
    ASSERT_EQ(run({"build", "s843", "--out", seed}).code, 0);
    EXPECT_EQ(run({"search", "cp", "--n", "8", "--r", "3", "--seed", seed}).json()["optimum"], 14);

    const auto curves = path("curves.design"), done = path("done.design");
    ASSERT_EQ(run({"build", "curves", "--q", "3", "--r", "3", "--out", curves}).code, 0);
    const auto c = run({"search", "complete", "--file", curves, "--out", done});
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(c.json()["blocks"], 84);
    EXPECT_EQ(run({"verify", "--file", done}).code, 0);
}

TEST_F(CliTest, ExitCodes) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"build", "inversive"}).code, 2);
    EXPECT_EQ(run({"build", "inversive", "--q", "5"}).code, 2);
    EXPECT_EQ(run({"--output", "xml", "build", "s843"}).code, 2);
    EXPECT_EQ(run({"verify", "--file", path("missing.design")}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);

    const auto curves = path("curves.design");
    ASSERT_EQ(run({"build", "curves", "--q", "3", "--r", "3", "--out", curves}).code, 0);
    const auto v = run({"verify", "--file", curves, "--mode", "partition"});
    EXPECT_EQ(v.code, 1);
    EXPECT_EQ(v.json()["is_partition"], false);

    EXPECT_EQ(run({"--budget", "10", "verify", "--file", curves}).code, 3);
    EXPECT_EQ(run({"--time-limit", "0", "search", "cp", "--n", "10", "--r", "3", "--oracle", "none"}).code, 3);
    EXPECT_EQ(run({"search", "cp", "--n", "40", "--r", "4"}).code, 3);
}
