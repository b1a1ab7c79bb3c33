#include "affk/error.hpp"
#include "affk/expansion_io.hpp"
#include "affk/families.hpp"
#include "affk/scan.hpp"
#include "affk/verify.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

using namespace affk;
using nlohmann::json;

TEST(ExpansionIo, JsonRoundTrip)
{
    const Expansion x = to_expansion(k_K_schur(Partition{3, 2, 1}, 3));
    EXPECT_EQ(x.basis, "h");
    const Expansion back = expansion_from_json(to_json(x));
    EXPECT_EQ(back, x);

    Expansion y{"Gk", 3, 7, {{Partition{}, 1}, {Partition{2, 1}, -4}}};
    EXPECT_EQ(expansion_from_json(to_json(y)), y);
}

TEST(ExpansionIo, JsonLayout)
{
    const Expansion x{"gk", 3, std::nullopt, {{Partition{2}, 1}, {Partition{1}, -2}}};
    const json doc = json::parse(to_json(x));
    EXPECT_EQ(doc["basis"], "gk");
    EXPECT_EQ(doc["k"], 3);
    EXPECT_TRUE(doc["deg_max"].is_null());
    ASSERT_EQ(doc["terms"].size(), 2u);
    EXPECT_EQ(doc["terms"][0]["partition"], json::array({1}));
    EXPECT_EQ(doc["terms"][0]["coeff"], -2);
    EXPECT_EQ(doc["terms"][1]["partition"], json::array({2}));
}

TEST(ExpansionIo, BigCoefficientsAsStrings)
{
    const Integer big("123456789012345678901234567890");
    const Expansion x{"m", std::nullopt, std::nullopt, {{Partition{1}, big}, {Partition{2}, -big}}};
    const std::string text = to_json(x);
    const json doc = json::parse(text);
    EXPECT_EQ(doc["terms"][0]["coeff"], "123456789012345678901234567890");
    EXPECT_EQ(doc["terms"][1]["coeff"], "-123456789012345678901234567890");
    EXPECT_EQ(expansion_from_json(text), x);
    const Expansion edge{"m", std::nullopt, std::nullopt, {{Partition{1}, Integer("9223372036854775807")}}};
    EXPECT_TRUE(json::parse(to_json(edge))["terms"][0]["coeff"].is_number_integer());
    EXPECT_EQ(expansion_from_json(to_json(edge)), edge);
}

TEST(ExpansionIo, MalformedDocumentsThrow)
{
    EXPECT_THROW(expansion_from_json("not json"), InvalidInput);
    EXPECT_THROW(expansion_from_json(R"({"terms": []})"), InvalidInput);
    EXPECT_THROW(expansion_from_json(R"({"basis": "q", "terms": []})"), InvalidInput);
    EXPECT_THROW(expansion_from_json(R"({"basis": "h", "terms": [{"partition": [1, 2], "coeff": 1}]})"), InvalidInput);
    EXPECT_THROW(expansion_from_json(R"({"basis": "h", "terms": [{"partition": [1], "coeff": "x"}]})"), InvalidInput);
}

TEST(ExpansionIo, OrderedTerms)
{
    const Terms t{{Partition{1}, 1}, {Partition{2}, 2}, {Partition{1, 1}, 3}, {Partition{}, 4}};
    const auto ordered = ordered_terms(t);
    ASSERT_EQ(ordered.size(), 4u);
    EXPECT_EQ(ordered[0].first, Partition{});
    EXPECT_EQ(ordered[1].first, (Partition{1}));
    EXPECT_EQ(ordered[2].first, (Partition{2}));
    EXPECT_EQ(ordered[3].first, (Partition{1, 1}));
}

TEST(ExpansionIo, FormatTerms)
{
    EXPECT_EQ(format_terms({}, "h"), "0");
    EXPECT_EQ(format_terms({{Partition{3, 2, 1}, 1}, {Partition{3, 2, 2}, -2}}, "gk"), "gk(3,2,1) - 2 gk(3,2,2)");
    EXPECT_EQ(format_terms({{Partition{}, -1}}, "h"), "-h()");
}

TEST(ExpansionIo, Text)
{
    const Expansion x{"h", std::nullopt, std::nullopt, {{Partition{1}, 1}, {Partition{2}, -12}}};
    const std::string text = to_text(x);
    EXPECT_NE(text.find("basis h"), std::string::npos);
    EXPECT_NE(text.find("-12  h(2)"), std::string::npos) << text;
}

TEST(ExpansionIo, KnownBases)
{
    for (const char* b : {"h", "m", "e", "s", "G", "g", "Gk", "gk"}) EXPECT_TRUE(is_known_basis_name(b));
    EXPECT_FALSE(is_known_basis_name("x"));
}

TEST(FillingIo, RoundTrip)
{
    const SetValuedFilling t = SetValuedFilling::from_rows({{{1}, {2}, {3}}, {{3}}, {{4}}});
    const std::string text = to_json(t);
    const json doc = json::parse(text);
    EXPECT_EQ(doc["shape"], json::array({3, 1, 1}));
    EXPECT_EQ(doc["cells"][0]["row"], 0);
    EXPECT_EQ(doc["cells"][0]["letters"], json::array({1}));
    EXPECT_EQ(filling_from_json(text), t);
    EXPECT_THROW(filling_from_json(R"({"shape": [1], "cells": [{"row": 0, "col": 1, "letters": [1]}]})"), InvalidInput);
}

TEST(VerifyReport, AllChecksPassAtSmallDegree)
{
    for (const std::string& check : verify_check_names())
        for (int k = 2; k <= 3; ++k) {
            const VerifyReport r = run_verify(check, k, 4);
            EXPECT_TRUE(r.passed()) << check << " k=" << k << "\n" << to_text(r);
            EXPECT_FALSE(r.results.empty()) << check;
        }
}

TEST(VerifyReport, Residuals)
{
    EXPECT_EQ(newton_residual(0), SymFunc::one(Basis::h));
    for (int l = 1; l <= 6; ++l) EXPECT_TRUE(newton_residual(l).is_zero());
    EXPECT_EQ(k_newton_residual(0), SymFunc::one(Basis::h));
    EXPECT_EQ(k_newton_residual(1), SymFunc::one(Basis::h) * Integer(-1));
    for (int l = 2; l <= 6; ++l) EXPECT_TRUE(k_newton_residual(l).is_zero());
}

TEST(VerifyReport, Json)
{
    const VerifyReport r = run_verify("newton", std::nullopt, 3);
    const json doc = json::parse(to_json(r));
    EXPECT_EQ(doc["check"], "newton");
    EXPECT_EQ(doc["passed"], true);
    EXPECT_EQ(doc["instances"], 4);
    EXPECT_EQ(doc["results"].size(), 4u);
    EXPECT_NE(to_text(r).find("PASS"), std::string::npos);
}

TEST(VerifyReport, BadInput)
{
    EXPECT_THROW(run_verify("nope", 2, 3), InvalidInput);
    EXPECT_THROW(run_verify("duality", std::nullopt, 3), InvalidInput);
}

TEST(ScanReport, EveryScanIsSchemaValid)
{
    for (const std::string& name : scan_names()) {
        const ScanReport r = run_scan(name, 2, 6);
        const std::string text = to_json(r);
        EXPECT_TRUE(validate_scan_report_json(text).empty()) << name;
        const json doc = json::parse(text);
        EXPECT_EQ(doc["summary"]["coefficients"], r.coefficients());
        EXPECT_EQ(doc["summary"]["findings"], r.findings());
        EXPECT_EQ(doc["findings"].size(), r.findings());
        EXPECT_FALSE(to_text(r).empty());
    }
}

TEST(ScanReport, SectionsAndRules)
{
    const ScanReport r = run_scan("G-in-dualks-positivity", 2, 5);
    ASSERT_EQ(r.sections.size(), 3u);
    EXPECT_EQ(r.sections[0].rule, SignRule::alternating);
    for (const ScanSection& s : r.sections) EXPECT_FALSE(s.entries.empty()) << s.name;
    EXPECT_EQ(sign_rule_name(SignRule::vanishing), "vanishing");
    EXPECT_TRUE(run_scan("gk-in-g-positivity", 2, 0).sections.empty());
    EXPECT_THROW(run_scan("nope", 2, 3), InvalidInput);
    EXPECT_THROW(run_scan("gk-in-g-positivity", 0, 3), InvalidInput);
}

TEST(ScanReport, ValidatorRejectsBrokenReports)
{
    const json good = json::parse(to_json(run_scan("s-in-Gk-positivity", 2, 4)));
    ASSERT_TRUE(validate_scan_report_json(good.dump()).empty());

    EXPECT_FALSE(validate_scan_report_json("[").empty());
    EXPECT_FALSE(validate_scan_report_json("[]").empty());

    json missing = good;
    missing.erase("sections");
    EXPECT_FALSE(validate_scan_report_json(missing.dump()).empty());

    json wrong_type = good;
    wrong_type["k"] = "two";
    EXPECT_FALSE(validate_scan_report_json(wrong_type.dump()).empty());

    json bad_rule = good;
    bad_rule["sections"][0]["rule"] = "sometimes";
    EXPECT_FALSE(validate_scan_report_json(bad_rule.dump()).empty());

    json bad_count = good;
    bad_count["summary"]["findings"] = 7;
    EXPECT_FALSE(validate_scan_report_json(bad_count.dump()).empty());

    json bad_entry = good;
    ASSERT_FALSE(bad_entry["sections"][0]["entries"].empty());
    bad_entry["sections"][0]["entries"][0]["mu"] = json::array({1, 2});
    EXPECT_FALSE(validate_scan_report_json(bad_entry.dump()).empty());
}
