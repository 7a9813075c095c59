#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <cusp/cli.hpp>

using cusp::json;

namespace
{
struct Outcome {
    int code;
    std::string out, err;
};

Outcome run(std::vector<std::string> args)
{
    args.insert(args.begin(), "cusp");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const int code = cusp::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

json run_json(const std::vector<std::string> &args)
{
    const Outcome o = run(args);
    EXPECT_EQ(o.code, 0) << o.err;
    return json::parse(o.out);
}

std::vector<std::string> lines(const std::string &text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
        out.push_back(l);
    }
    return out;
}
} // namespace

TEST(Cli, ExpandLevelTwo)
{
    const json j = run_json({"expand", "--level", "2", "--order", "5", "--A", "16", "--B", "-128"});
    EXPECT_EQ(j["tool_version"], cusp::cli::tool_version);
    EXPECT_EQ(j["inputs"]["command"], "expand");
    EXPECT_EQ(j["results"]["Bfrak"], "-8");
    EXPECT_EQ(j["results"]["series"]["ring"], "Qi");
    EXPECT_EQ(j["results"]["series"]["coeffs"], json({"0", "16", "-128", "704", "-3072", "11488"}));
}

TEST(Cli, ExpandSymbolic)
{
    const json j = run_json({"expand", "--level", "2", "--order", "4"});
    EXPECT_EQ(j["results"]["series"]["ring"], "QBBbar");
    EXPECT_EQ(j["results"]["series"]["coeffs"][3], "B^2 - 20");
    EXPECT_EQ(j["results"]["series"]["coeffs"][1], "1");
}

TEST(Cli, ExpandAccessoryMatchesLevelTwo)
{
    // Punctures 1 and inf with ratio -1 reproduce lambda.
    const json j = run_json({"expand", "--punctures", "1", "inf", "--ratios", "-1", "--A", "16", "--B", "-128", "--order", "5"});
    EXPECT_EQ(j["results"]["series"]["coeffs"], json({"0", "16", "-128", "704", "-3072", "11488"}));
    EXPECT_EQ(j["results"]["c3_closed_form"], "44");
}

TEST(Cli, Groups)
{
    const json j = run_json({"groups", "--level", "5"});
    EXPECT_EQ(j["results"]["index"], 60);
    EXPECT_EQ(j["results"]["cusps"], 12);
    EXPECT_EQ(j["results"]["genus"], 0);
    const Outcome csv = run({"--format", "csv", "groups", "--level", "7"});
    EXPECT_EQ(csv.out, "level,index,cusps,genus\n7,168,24,3\n");
}

TEST(Cli, E4)
{
    const json j = run_json({"e4", "--order", "3"});
    EXPECT_EQ(j["results"]["series"]["coeffs"], json({"1", "240", "2160", "6720"}));
    EXPECT_EQ(j["results"]["series"]["ring"], "Q");
}

TEST(Cli, Deterministic)
{
    const std::vector<std::string> args{"metric", "--level", "3", "--degree", "3"};
    EXPECT_EQ(run(args).out, run(args).out);
    const std::vector<std::string> t{"transport", "--punctures", "1/2", "2+i", "-1", "--order", "6", "--metric", "2"};
    EXPECT_EQ(run(t).out, run(t).out);
}

TEST(Cli, CsvSeries)
{
    const Outcome o = run({"--format", "csv", "expand", "--level", "2", "--order", "3", "--A", "16", "--B", "-128"});
    EXPECT_EQ(o.code, 0);
    EXPECT_EQ(lines(o.out), (std::vector<std::string>{"m,coefficient", "0,0", "1,16", "2,-128", "3,704"}));
}

TEST(Cli, FormatFromEnvironment)
{
    ::setenv("CUSP_FORMAT", "csv", 1);
    const Outcome o = run({"groups", "--level", "2"});
    const Outcome bad = [] {
        ::setenv("CUSP_FORMAT", "xml", 1);
        return run({"groups", "--level", "2"});
    }();
    const Outcome overridden = [] {
        ::setenv("CUSP_FORMAT", "csv", 1);
        return run({"--format", "json", "groups", "--level", "2"});
    }();
    ::unsetenv("CUSP_FORMAT");
    EXPECT_EQ(o.out.rfind("level,index", 0), 0u);
    EXPECT_EQ(bad.code, 2);
    EXPECT_EQ(json::parse(overridden.out)["results"]["index"], 6);
}

TEST(Cli, MetricCsvWithDensity)
{
    const Outcome o = run({"--format", "csv", "metric", "--level", "2", "--degree", "1", "--eval", "0.001,0"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto ls = lines(o.out);
    ASSERT_EQ(ls.size(), 5u);
    EXPECT_EQ(ls[0], "m,s,t,j,coefficient,density");
    EXPECT_EQ(ls[1].rfind("0,0,0,0,1,", 0), 0u);
    EXPECT_EQ(ls[2].rfind("1,1,0,0,8,", 0), 0u);
    // Degree-0 density is 1 / (|f| |log|F||) with F = f / 16.
    const double rho0 = std::stod(ls[1].substr(ls[1].rfind(',') + 1));
    EXPECT_NEAR(rho0, 1.0 / (0.001 * std::log(16000.0)), 1e-9);
}

TEST(Cli, MetricSymbolicAndInF)
{
    const json sym = run_json({"metric", "--level", "2", "--degree", "1"});
    const json inf = run_json({"metric", "--level", "2", "--degree", "1", "--in-f"});
    auto coeff = [](const json &j, int s, int t, int jj) {
        for (const auto &term : j["results"]["terms"]) {
            if (term["s"] == s && term["t"] == t && term["j"] == jj) {
                return term["coefficient"].get<std::string>();
            }
        }
        return std::string("missing");
    };
    EXPECT_EQ(coeff(sym, 1, 0, 0), "-B");
    EXPECT_EQ(coeff(inf, 1, 0, 0), "1/2");
    EXPECT_EQ(coeff(inf, 0, 1, 1), "-1/4");
}

TEST(Cli, Transport)
{
    const json j = run_json({"transport", "--punctures", "0", "1", "-1", "--order", "4"});
    EXPECT_EQ(j["results"]["A"], "8");
    EXPECT_EQ(j["results"]["Bfrak"], "0");
    EXPECT_EQ(j["results"]["series"]["coeffs"][2], "0");
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"expand", "--order", "5"}).code, 2);
    EXPECT_EQ(run({"expand", "--level", "9", "--order", "5"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"--format", "yaml", "groups", "--level", "2"}).code, 2);
    EXPECT_EQ(run({"--version"}).code, 0);
}

TEST(Cli, ComputationErrors)
{
    for (const auto &args : std::vector<std::vector<std::string>>{
             {"expand", "--level", "2", "--order", "5", "--A", "0", "--B", "1"},
             {"transport", "--punctures", "1", "1", "2", "--order", "4"},
             {"transport", "--punctures", "inf", "0", "1", "--order", "4"},
             {"expand", "--punctures", "0", "--ratios", "1", "--A", "1", "--B", "0", "--order", "4"},
             {"expand", "--level", "2", "--order", "5", "--A", "1/0", "--B", "1"}}) {
        const Outcome o = run(args);
        EXPECT_EQ(o.code, 1) << args[0];
        const json j = json::parse(o.out);
        EXPECT_TRUE(j.contains("error"));
        EXPECT_FALSE(j["error"]["message"].get<std::string>().empty());
        EXPECT_FALSE(j.contains("results"));
    }
}

TEST(Cli, VerifyOracle)
{
    const Outcome o = run({"verify", "--suite", "oracle"});
    EXPECT_EQ(o.code, 0) << o.err;
    const json j = json::parse(o.out);
    ASSERT_EQ(j["results"].size(), 4u);
    for (const auto &r : j["results"]) {
        EXPECT_TRUE(r["pass"].get<bool>());
    }
}

TEST(Cli, OutputFile)
{
    const auto path = std::filesystem::temp_directory_path() / "cusp_cli_output.json";
    std::filesystem::remove(path);
    const Outcome o = run({"-o", path.string(), "groups", "--level", "3"});
    EXPECT_EQ(o.code, 0);
    EXPECT_TRUE(o.out.empty());
    std::ifstream in(path);
    EXPECT_EQ(json::parse(in)["results"]["index"], 12);
    std::filesystem::remove(path);
}
