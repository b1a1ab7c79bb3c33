#include "affk/scan.hpp"

#include "affk/error.hpp"
#include "affk/expansion_io.hpp"
#include "affk/families.hpp"
#include "affk/symfunc.hpp"
#include "json_integer.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace affk {

using nlohmann::ordered_json;

std::size_t ScanReport::coefficients() const
{
    std::size_t n = 0;
    for (const ScanSection& s : sections) n += s.entries.size();
    return n;
}

std::size_t ScanReport::findings() const
{
    std::size_t n = 0;
    for (const ScanSection& s : sections)
        n += std::count_if(s.entries.begin(), s.entries.end(), [](const ScanEntry& e) { return !e.ok; });
    return n;
}

const std::vector<std::string>& scan_names()
{
    static const std::vector<std::string> names{"G-in-dualks-positivity", "gk-in-g-positivity",
                                                "gk-branching-positivity", "s-in-Gk-positivity",
                                                "kss-cancellation"};
    return names;
}

std::string_view sign_rule_name(SignRule rule)
{
    switch (rule) {
    case SignRule::nonnegative: return "nonnegative";
    case SignRule::alternating: return "alternating";
    case SignRule::vanishing: return "vanishing";
    }
    return "";
}

namespace {

using Expander = std::function<Terms(const Partition&)>;

bool obeys(SignRule rule, const Partition& lambda, const Partition& mu, const Integer& c)
{
    switch (rule) {
    case SignRule::nonnegative: return c >= 0;
    case SignRule::alternating: return sign_power(lambda.size() + mu.size()) * c >= 0;
    case SignRule::vanishing: return c == 0;
    }
    return false;
}

ScanSection make_section(std::string name, std::string description, SignRule rule, int k,
                         const std::vector<Partition>& indices, const Expander& expand)
{
    ScanSection s{std::move(name), std::move(description), rule, k, {}, {}};
    for (const Partition& lambda : indices) {
        bool all_ok = true;
        for (const auto& [mu, c] : ordered_terms(expand(lambda))) {
            const bool ok = obeys(rule, lambda, mu, c);
            all_ok = all_ok && ok;
            s.entries.push_back({lambda, mu, c, ok});
        }
        s.lambdas.emplace_back(lambda, all_ok);
    }
    return s;
}

/// Keeps the k-bounded terms of a quotient element of level k + 1.
SymFunc reduce_level(const SymFunc& f, int k, int n)
{
    SymFunc out(Basis::quotient_m, n, k);
    for (const auto& [mu, c] : f.terms()) out.add(mu, c);
    return out;
}

Terms in_dual_k_schur(const SymFunc& f, int k)
{
    return peel(f.terms(), lowest_degree_lex_max_key,
                [k](const Partition& mu) { return std::make_pair(mu, dual_k_schur(mu, k).terms()); });
}

Terms in_affine_grothendieck(const SymFunc& f, int k, int n)
{
    return peel(f.terms(), lowest_degree_lex_max_key,
                [k, n](const Partition& mu) { return std::make_pair(mu, affine_grothendieck(mu, k, n).terms()); });
}

Terms in_dual_grothendieck(const SymFunc& f)
{
    return peel(f.terms(), highest_degree_lex_min_key,
                [](const Partition& mu) { return std::make_pair(mu, dual_grothendieck(mu).terms()); });
}

Terms in_k_K_schur(const SymFunc& f, int k)
{
    return peel(f.terms(), highest_degree_lex_min_key,
                [k](const Partition& mu) { return std::make_pair(mu, k_K_schur(mu, k).terms()); });
}

void scan_G_in_dual(ScanReport& r, int k, int n)
{
    r.sections.push_back(make_section("a^k", "G^(k)_lambda in the dual k-Schur basis", SignRule::alternating, k,
                                      partitions_up_to(n, k), [&](const Partition& lambda) {
                                          return in_dual_k_schur(affine_grothendieck(lambda, k, n), k);
                                      }));
    r.sections.push_back(make_section("f^k", "dual k-Schur lambda in the G^(k) basis", SignRule::nonnegative, k,
                                      partitions_up_to(n, k), [&](const Partition& lambda) {
                                          return in_affine_grothendieck(dual_k_schur(lambda, k), k, n);
                                      }));
    r.sections.push_back(make_section(
        "a^{k+1,k}", "dual (k+1)-Schur lambda modulo I^k in the dual k-Schur basis", SignRule::nonnegative, k,
        partitions_up_to(n, k + 1),
        [&](const Partition& lambda) { return in_dual_k_schur(reduce_level(dual_k_schur(lambda, k + 1), k, n), k); }));
}

void scan_gk_in_g(ScanReport& r, int k, int n)
{
    r.sections.push_back(make_section("b", "g^(k)_lambda in the dual Grothendieck basis", SignRule::alternating, k,
                                      partitions_up_to(n, k), [&](const Partition& lambda) {
                                          return in_dual_grothendieck(k_K_schur(lambda, k));
                                      }));
}

void scan_gk_branching(ScanReport& r, int k, int n)
{
    r.sections.push_back(make_section("b^k", "g^(k)_lambda in the g^(k+1) basis", SignRule::alternating, k,
                                      partitions_up_to(n, k), [&](const Partition& lambda) {
                                          return in_k_K_schur(k_K_schur(lambda, k), k + 1);
                                      }));
}

void scan_s_in_Gk(ScanReport& r, int k, int n)
{
    r.sections.push_back(make_section(
        "d^k", "s_lambda modulo I^k in the G^(k) basis", SignRule::nonnegative, k, partitions_up_to(n, k),
        [&](const Partition& lambda) {
            const SymFunc s = convert(convert(schur(lambda), Basis::m), Basis::quotient_m, k);
            return in_affine_grothendieck(s.truncated(n), k, n);
        }));
    r.sections.push_back(make_section(
        "d^{k+1,k}", "G^(k+1)_lambda modulo I^k in the G^(k) basis", SignRule::alternating, k,
        partitions_up_to(n, k + 1), [&](const Partition& lambda) {
            return in_affine_grothendieck(reduce_level(affine_grothendieck(lambda, k + 1, n), k, n), k, n);
        }));
}

void scan_kss(ScanReport& r, int k, int n)
{
    std::vector<Partition> indices;
    for (const Partition& lambda : partitions_up_to(n, k))
        if (hook(lambda) <= k && lambda.size() > k) indices.push_back(lambda);
    r.sections.push_back(make_section("g^(k) - g", "g^(k)_lambda - g_lambda in the dual Grothendieck basis",
                                      SignRule::vanishing, k, indices, [&](const Partition& lambda) {
                                          return in_dual_grothendieck(k_K_schur(lambda, k) -
                                                                      dual_grothendieck(lambda));
                                      }));
}

ordered_json parts_json(const Partition& lambda) { return ordered_json(lambda.parts()); }

}  // namespace

ScanReport run_scan(std::string_view conjecture, int k, int deg_max)
{
    const auto& names = scan_names();
    if (std::find(names.begin(), names.end(), conjecture) == names.end())
        throw InvalidInput("unknown conjecture '" + std::string(conjecture) + "'");
    if (k < 1) throw InvalidInput("k must be at least 1");
    ScanReport r{std::string(conjecture), k, deg_max, {}};
    if (deg_max < 1) return r;
    if (conjecture == "G-in-dualks-positivity") scan_G_in_dual(r, k, deg_max);
    else if (conjecture == "gk-in-g-positivity") scan_gk_in_g(r, k, deg_max);
    else if (conjecture == "gk-branching-positivity") scan_gk_branching(r, k, deg_max);
    else if (conjecture == "s-in-Gk-positivity") scan_s_in_Gk(r, k, deg_max);
    else scan_kss(r, k, deg_max);
    return r;
}

std::string to_json(const ScanReport& report)
{
    ordered_json doc;
    doc["conjecture"] = report.conjecture;
    doc["k"] = report.k;
    doc["deg_max"] = report.deg_max;
    doc["summary"] = {{"coefficients", report.coefficients()}, {"findings", report.findings()}};
    ordered_json sections = ordered_json::array();
    ordered_json findings = ordered_json::array();
    for (const ScanSection& s : report.sections) {
        ordered_json lambdas = ordered_json::array();
        for (const auto& [lambda, ok] : s.lambdas) lambdas.push_back({{"lambda", parts_json(lambda)}, {"ok", ok}});
        ordered_json entries = ordered_json::array();
        for (const ScanEntry& e : s.entries) {
            entries.push_back({{"lambda", parts_json(e.lambda)},
                               {"mu", parts_json(e.mu)},
                               {"coeff", detail::integer_json(e.coeff)},
                               {"ok", e.ok}});
            if (!e.ok)
                findings.push_back({{"section", s.name},
                                    {"lambda", parts_json(e.lambda)},
                                    {"mu", parts_json(e.mu)},
                                    {"coeff", detail::integer_json(e.coeff)}});
        }
        sections.push_back({{"name", s.name},
                            {"description", s.description},
                            {"rule", sign_rule_name(s.rule)},
                            {"k", s.k},
                            {"lambdas", std::move(lambdas)},
                            {"entries", std::move(entries)}});
    }
    doc["sections"] = std::move(sections);
    doc["findings"] = std::move(findings);
    return doc.dump(2);
}

std::string to_text(const ScanReport& report)
{
    std::ostringstream os;
    os << "scan " << report.conjecture << "  k " << report.k << "  deg_max " << report.deg_max << '\n';
    for (const ScanSection& s : report.sections) {
        os << "\n[" << s.name << "] " << s.description << "  (expected: " << sign_rule_name(s.rule) << ")\n";
        for (const auto& [lambda, ok] : s.lambdas) {
            Terms row;
            for (const ScanEntry& e : s.entries)
                if (e.lambda == lambda) row[e.mu] = e.coeff;
            os << "  (" << format_partition(lambda) << "): " << format_terms(row, "") << (ok ? "" : "   FINDING")
               << '\n';
        }
    }
    os << "\ncoefficients " << report.coefficients() << ", findings " << report.findings() << '\n';
    return os.str();
}

namespace {

struct SchemaChecker {
    std::vector<std::string> problems;

    bool expect(bool cond, const std::string& what)
    {
        if (!cond) problems.push_back(what);
        return cond;
    }

    bool partition(const ordered_json& j, const std::string& where)
    {
        if (!expect(j.is_array(), where + " is not an array")) return false;
        int last = -1;
        for (const auto& p : j) {
            if (!expect(p.is_number_integer() && p.get<int>() > 0, where + " has a non-positive part")) return false;
            if (!expect(last < 0 || p.get<int>() <= last, where + " is not weakly decreasing")) return false;
            last = p.get<int>();
        }
        return true;
    }

    bool coefficient(const ordered_json& j, const std::string& where)
    {
        if (j.is_number_integer()) return true;
        if (j.is_string()) {
            const auto s = j.get<std::string>();
            const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
            return expect(s.size() > start && std::all_of(s.begin() + start, s.end(), ::isdigit),
                          where + " is not an integer string");
        }
        return expect(false, where + " is not an integer");
    }
};

}  // namespace

std::vector<std::string> validate_scan_report_json(std::string_view text)
{
    SchemaChecker c;
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        return {std::string("not JSON: ") + e.what()};
    }
    if (!c.expect(doc.is_object(), "report is not an object")) return c.problems;
    for (const char* key : {"conjecture", "k", "deg_max", "summary", "sections", "findings"})
        c.expect(doc.contains(key), std::string("missing key '") + key + "'");
    if (!c.problems.empty()) return c.problems;

    const auto& names = scan_names();
    c.expect(doc["conjecture"].is_string() &&
                 std::find(names.begin(), names.end(), doc["conjecture"].get<std::string>()) != names.end(),
             "unknown conjecture");
    c.expect(doc["k"].is_number_integer() && doc["k"].get<int>() >= 1, "k is not a positive integer");
    c.expect(doc["deg_max"].is_number_integer(), "deg_max is not an integer");
    c.expect(doc["sections"].is_array(), "sections is not an array");
    c.expect(doc["findings"].is_array(), "findings is not an array");
    const auto& summary = doc["summary"];
    c.expect(summary.is_object() && summary.contains("coefficients") && summary.contains("findings") &&
                 summary["coefficients"].is_number_unsigned() && summary["findings"].is_number_unsigned(),
             "summary needs unsigned 'coefficients' and 'findings'");
    if (!c.problems.empty()) return c.problems;

    std::size_t entries = 0;
    std::size_t bad = 0;
    for (const auto& s : doc["sections"]) {
        if (!c.expect(s.is_object(), "section is not an object")) continue;
        bool keys = true;
        for (const char* key : {"name", "description", "rule", "k", "lambdas", "entries"})
            keys = c.expect(s.contains(key), std::string("section missing '") + key + "'") && keys;
        if (!keys) continue;
        const std::string name = s["name"].is_string() ? s["name"].get<std::string>() : "?";
        c.expect(s["name"].is_string() && s["description"].is_string(), "section name/description not strings");
        const std::string rule = s["rule"].is_string() ? s["rule"].get<std::string>() : "";
        c.expect(rule == "nonnegative" || rule == "alternating" || rule == "vanishing",
                 "section " + name + " has an unknown rule");
        c.expect(s["k"].is_number_integer(), "section " + name + " k is not an integer");
        if (c.expect(s["lambdas"].is_array(), "section " + name + " lambdas is not an array"))
            for (const auto& l : s["lambdas"])
                c.expect(l.is_object() && l.contains("lambda") && l.contains("ok") && l["ok"].is_boolean() &&
                             c.partition(l["lambda"], name + " lambda"),
                         "section " + name + " has a malformed lambda record");
        if (!c.expect(s["entries"].is_array(), "section " + name + " entries is not an array")) continue;
        for (const auto& e : s["entries"]) {
            ++entries;
            if (!c.expect(e.is_object() && e.contains("lambda") && e.contains("mu") && e.contains("coeff") &&
                              e.contains("ok") && e["ok"].is_boolean(),
                          "section " + name + " has a malformed entry"))
                continue;
            c.partition(e["lambda"], name + " entry lambda");
            c.partition(e["mu"], name + " entry mu");
            c.coefficient(e["coeff"], name + " entry coeff");
            if (!e["ok"].get<bool>()) ++bad;
        }
    }
    for (const auto& f : doc["findings"])
        c.expect(f.is_object() && f.contains("section") && f.contains("lambda") && f.contains("mu") &&
                     f.contains("coeff"),
                 "malformed finding");
    if (c.problems.empty()) {
        c.expect(summary["coefficients"].get<std::size_t>() == entries, "summary coefficient count mismatch");
        c.expect(summary["findings"].get<std::size_t>() == bad, "summary finding count mismatch");
        c.expect(doc["findings"].size() == bad, "findings list does not match entries marked not ok");
    }
    return c.problems;
}

}  // namespace affk
