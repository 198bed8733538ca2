#include "support.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

using hla::fixtures::run;

namespace {

const std::string cli = HLA_CLI_PATH;
const std::string data = std::string(HLA_SOURCE_DIR) + "/data/";

std::string cmd(const std::string& args) { return "'" + cli + "' " + args + " 2>/dev/null"; }

std::string temp_path(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / ("hla_cli_test_" + name)).string();
}

} // namespace

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run(cmd("check " + data + "k3.toml")).status, 0);
    EXPECT_EQ(run(cmd("perfect " + data + "k3.toml")).status, 0);
    EXPECT_EQ(run(cmd("perfect " + data + "exe02.toml")).status, 1);
    EXPECT_EQ(run(cmd("uce " + data + "exe02.toml")).status, 1);
    EXPECT_EQ(run(cmd("uce " + data + "k3.toml")).status, 0);
    EXPECT_EQ(run(cmd("builtin k1-window --param q=2 --param N=3")).status, 1);
    EXPECT_EQ(run(cmd("check " + data + "missing.toml")).status, 2);
    EXPECT_EQ(run(cmd("frobnicate")).status, 2);
    EXPECT_EQ(run(cmd("builtin k3 --param mu=1/0")).status, 2);
    EXPECT_EQ(run(cmd("builtin nothing")).status, 2);
    EXPECT_EQ(run("printf 'even = [\"e\"\\n' | " + cmd("check -")).status, 2);
}

TEST(Cli, EveryCommandRuns)
{
    const std::vector<std::pair<std::string, int>> cases = {
        {"check " + data + "exe02_total.toml", 0},
        {"homology " + data + "exe02.toml", 0},
        {"cohomology " + data + "k3.toml", 0},
        {"cohomology " + data + "exe02.toml --coeffs " + data + "odd_line.toml", 0},
        {"extend " + data + "exe02.toml --cocycle " + data + "exe02_cocycle.toml", 0},
        {"crossed " + data + "exe02_extension.toml", 0},
        {"semidirect " + data + "exe02.toml --action " + data + "exe02_action.toml", 0},
        {"universality " + data + "k3.toml --against " + data + "k3_odd_extension.toml", 0},
        {"morphism " + data + "exe02_total.toml " + data + "exe02.toml --map " + data + "exe02_projection.toml", 0},
    };
    for (const auto& [args, expected] : cases) {
        auto r = run(cmd(args));
        EXPECT_EQ(r.status, expected) << args << "\n" << r.out;
        EXPECT_FALSE(r.out.empty()) << args;
    }
}

TEST(Cli, ReportsAreByteIdenticalAcrossRuns)
{
    for (const std::string& args : std::vector<std::string>
         {"--json uce " + data + "k3.toml", "homology " + data + "exe02.toml", "--json perfect " + data + "exe02.toml",
          "universality " + data + "k3.toml --against " + data + "k3_odd_extension.toml",
          std::string("--json builtin k1-window --param q=2 --param N=3")}) {
        auto a = run(cmd(args)), b = run(cmd(args));
        EXPECT_EQ(a.out, b.out) << args;
        EXPECT_FALSE(a.out.empty());
    }
}

TEST(Cli, JsonReportShape)
{
    auto r = run(cmd("--json perfect " + data + "exe02.toml"));
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["format_version"], "1");
    EXPECT_EQ(j["command"], "perfect");
    EXPECT_EQ(j["status"], "fail");
    bool witnessed = false;
    for (const auto& c : j["checks"])
        if (c["status"] == "fail") {
            EXPECT_FALSE(c["witnesses"].empty());
            witnessed = true;
        }
    EXPECT_TRUE(witnessed);
    EXPECT_EQ(j["dimensions"]["dim_[a1,a1]"], 1);
}

TEST(Cli, ExtendWritesDocuments)
{
    const std::string out = temp_path("total.toml"), bundle = temp_path("bundle.toml");
    auto r = run(cmd("extend " + data + "exe02.toml --cocycle " + data + "exe02_cocycle.toml --out " + out +
                     " --bundle " + bundle));
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("eps.a1 = 2 z"), std::string::npos);
    EXPECT_EQ(hla::fixtures::read_file(out), hla::fixtures::read_file(data + "exe02_total.toml"));
    EXPECT_EQ(hla::fixtures::read_file(bundle), hla::fixtures::read_file(data + "exe02_extension.toml"));
    std::remove(out.c_str());
    std::remove(bundle.c_str());
}

TEST(Cli, StdinAndBuiltins)
{
    auto a = run("'" + cli + "' builtin k3 --param mu=2 | " + cmd("check -"));
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(run(cmd("builtin k3 --param mu=2")).out, hla::fixtures::read_file(data + "k3.toml"));
    EXPECT_EQ(run(cmd("builtin exe02-cocycle")).out, hla::fixtures::read_file(data + "exe02_cocycle.toml"));
}

TEST(Cli, NonCocycleFailsWithConditionName)
{
    const std::string bad = temp_path("bad_cocycle.toml");
    {
        std::ofstream o(bad);
        o << "kind = \"cocycle\"\n[coefficients]\neven = [\"w\"]\nodd = [\"z\"]\n[coefficients.alpha]\nw = { w = \"1\" }\n"
             "[coefficients.beta]\nz = { z = \"2\" }\n[omega0]\n\"eps,eps\" = { w = \"1\" }\n";
    }
    auto r = run(cmd("extend " + data + "exe02.toml --cocycle " + bad));
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.out.find("cocycle3"), std::string::npos) << r.out;
    std::remove(bad.c_str());
}
