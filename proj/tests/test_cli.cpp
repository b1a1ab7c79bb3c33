#include "cli.hpp"

#include "affk/expansion_io.hpp"
#include "affk/scan.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <sstream>

using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = affk::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args)
{
    const Outcome o = run(std::move(args));
    EXPECT_EQ(o.code, 0) << o.err;
    return json::parse(o.out);
}

}  // namespace

TEST(Cli, ExpandKKSchur)
{
    const Outcome o = run({"expand", "gk", "--partition", "3,2,1", "--k", "3", "--basis", "h"});
    ASSERT_EQ(o.code, 0) << o.err;
    const affk::Expansion x = affk::expansion_from_json(o.out);
    EXPECT_EQ(x.basis, "h");
    EXPECT_EQ(x.k, 3);
    EXPECT_EQ(x.terms.at(affk::Partition{3, 2, 1}), 1);
    EXPECT_EQ(x.terms.size(), 4u);
}

TEST(Cli, ExpandSingleRowIsH)
{
    const affk::Expansion x = affk::expansion_from_json(run({"expand", "gk", "--partition", "2", "--k", "3", "--basis", "h"}).out);
    EXPECT_EQ(x.terms, (affk::Terms{{affk::Partition{2}, 1}}));
}

TEST(Cli, ExpandEmptyIsOne)
{
    const Outcome o = run({"expand", "Gk", "--partition", "", "--k", "2"});
    ASSERT_EQ(o.code, 0) << o.err;
    const affk::Expansion x = affk::expansion_from_json(o.out);
    EXPECT_EQ(x.terms, (affk::Terms{{affk::Partition{}, 1}}));
    EXPECT_EQ(x.deg_max, 4);
}

TEST(Cli, ExpandOtherFamilies)
{
    for (const char* family : {"G", "g", "ks", "dks", "s"}) {
        const Outcome o = run({"expand", family, "--partition", "2,1", "--k", "2"});
        EXPECT_EQ(o.code, 0) << family << ": " << o.err;
        EXPECT_NO_THROW(affk::expansion_from_json(o.out)) << family;
    }
    const Outcome text = run({"--format", "text", "expand", "s", "--partition", "2,1", "--basis", "m"});
    EXPECT_EQ(text.code, 0);
    EXPECT_NE(text.out.find("m(2,1)"), std::string::npos) << text.out;
}

TEST(Cli, ExpandRejectsBadInput)
{
    EXPECT_EQ(run({"expand", "gk", "--partition", "4", "--k", "3"}).code, 2);
    EXPECT_EQ(run({"expand", "G", "--partition", "2,1", "--deg-max", "2"}).code, 2);
    EXPECT_EQ(run({"expand", "Gk", "--partition", "2,1", "--k", "2", "--basis", "h"}).code, 2);
    EXPECT_EQ(run({"expand", "gk", "--partition", "1,2", "--k", "3"}).code, 2);
    EXPECT_EQ(run({"expand", "nope", "--partition", "1"}).code, 2);
    const Outcome o = run({"expand", "gk", "--partition", "4", "--k", "3"});
    EXPECT_TRUE(o.out.empty());
    EXPECT_FALSE(o.err.empty());
}

TEST(Cli, TableauxCounts)
{
    EXPECT_EQ(run_json({"tableaux", "--shape", "2,1,1", "--weight", "2,1,1,1", "--k", "2", "--count"})["count"], 4);
    EXPECT_EQ(run_json({"tableaux", "--shape", "2,1,1", "--standard-degree", "5", "--k", "2", "--count"})["count"], 10);
    EXPECT_EQ(run_json({"tableaux", "--shape", "1", "--weight", "1", "--k", "1", "--count"})["count"], 1);
    EXPECT_EQ(run_json({"tableaux", "--shape", "3,3,2,1", "--weight", "1,3,1,2,1,1", "--k", "3", "--count"})["count"], 3);
    EXPECT_EQ(run_json({"tableaux", "--shape", "2,1,1", "--weight", "2,0,1,1,1", "--k", "2", "--count"})["count"], 4);
}

TEST(Cli, TableauxList)
{
    const json doc = run_json({"tableaux", "--shape", "2,1,1", "--standard-degree", "5", "--k", "2", "--list"});
    ASSERT_TRUE(doc.contains("tableaux"));
    EXPECT_EQ(doc["tableaux"].size(), 10u);
    const Outcome text = run({"--format", "text", "tableaux", "--shape", "2,1", "--weight", "1,1,1", "--k", "2", "--list"});
    EXPECT_EQ(text.code, 0);
    EXPECT_NE(text.out.find("reading word"), std::string::npos);
}

TEST(Cli, TableauxRejectsBadInput)
{
    EXPECT_EQ(run({"tableaux", "--shape", "3", "--weight", "3", "--k", "2", "--count"}).code, 2);
    EXPECT_EQ(run({"tableaux", "--shape", "2", "--weight", "3", "--k", "2", "--count"}).code, 2);
    EXPECT_EQ(run({"tableaux", "--shape", "2", "--k", "2", "--count"}).code, 2);
}

TEST(Cli, PieriExamples)
{
    const affk::Expansion row = affk::expansion_from_json(run({"pieri", "row", "--partition", "3,2,1", "--r", "2", "--k", "3"}).out);
    EXPECT_EQ(row.basis, "gk");
    EXPECT_EQ(affk::format_terms(row.terms, "gk"),
              "gk(3,2,1) - 2 gk(3,2,2) - gk(3,2,1,1) + gk(3,3,1,1) + gk(3,2,2,1)");
    const affk::Expansion col = affk::expansion_from_json(run({"pieri", "col", "--partition", "3,2,1", "--r", "2", "--k", "3"}).out);
    EXPECT_EQ(col.terms.size(), 5u);
    EXPECT_EQ(col.terms.at(affk::Partition{3, 2, 1, 1, 1}), 1);
    const json trivial = run_json({"pieri", "row", "--partition", "", "--r", "1", "--k", "2", "--strips"});
    EXPECT_EQ(trivial["terms"].size(), 1u);
    EXPECT_EQ(trivial["strips"].size(), 1u);
    EXPECT_EQ(run({"pieri", "row", "--partition", "1", "--r", "3", "--k", "2"}).code, 2);
}

TEST(Cli, VerifyAndExitCodes)
{
    const Outcome omega = run({"verify", "omega", "--k", "3", "--deg-max", "6"});
    EXPECT_EQ(omega.code, 0);
    EXPECT_EQ(json::parse(omega.out)["passed"], true);
    EXPECT_EQ(run({"verify", "duality", "--k", "2", "--deg-max", "6"}).code, 0);
    EXPECT_EQ(run({"verify", "newton", "--deg-max", "6"}).code, 0);
    EXPECT_EQ(run({"verify", "unknown"}).code, 2);
}

TEST(Cli, ScanReportsAreSchemaValid)
{
    for (const std::string& name : affk::scan_names()) {
        const Outcome o = run({"scan", name, "--k", "2", "--deg-max", "6"});
        EXPECT_EQ(o.code, 0) << name;
        EXPECT_TRUE(affk::validate_scan_report_json(o.out).empty()) << name;
    }
    const json empty = run_json({"scan", "kss-cancellation", "--k", "3", "--deg-max", "0"});
    EXPECT_TRUE(empty["sections"].empty());
}

TEST(Cli, Kostka)
{
    EXPECT_EQ(run_json({"kostka", "--k", "2", "--partition", "2,1", "--weight", "1,1,1"})["value"], 1);
    EXPECT_EQ(run_json({"kostka", "--k", "2", "--partition", "2,1,1", "--weight", "2,1,1,1"})["value"], 4);
    const json matrix = run_json({"kostka", "--k", "2", "--deg-max", "3"});
    EXPECT_FALSE(matrix["entries"].empty());
    EXPECT_EQ(run_json({"kostka", "--k", "3", "--partition", "3,3,2,1", "--weight", "1,3,1,2,1,1", "--kind", "ktableau"})["value"], 3);
}

TEST(Cli, CacheDirectory)
{
    const auto dir = std::filesystem::temp_directory_path() / "affk-cli-cache-test";
    std::filesystem::remove_all(dir);
    EXPECT_EQ(run({"--cache-dir", dir.string(), "kostka", "--k", "4", "--deg-max", "5"}).code, 0);
    EXPECT_FALSE(std::filesystem::is_empty(dir));
    std::filesystem::remove_all(dir);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"expand", "gk", "--partition", "1", "--k", "x"}).code, 2);
    EXPECT_EQ(run({"--format", "yaml", "expand", "s", "--partition", "1"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, OutputIsDeterministic)
{
    const std::vector<std::vector<std::string>> commands = {
        {"expand", "Gk", "--partition", "2,1", "--k", "2"},
        {"tableaux", "--shape", "2,1,1", "--standard-degree", "5", "--k", "2", "--list"},
        {"pieri", "col", "--partition", "3,2,1", "--r", "2", "--k", "3", "--strips"},
        {"scan", "gk-in-g-positivity", "--k", "2", "--deg-max", "5"},
    };
    for (const auto& args : commands) {
        const Outcome a = run(args);
        const Outcome b = run(args);
        EXPECT_EQ(a.code, 0);
        EXPECT_EQ(a.out, b.out);
    }
}
