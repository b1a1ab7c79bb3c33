#include "cli.hpp"

#include "affk/core.hpp"
#include "affk/error.hpp"
#include "affk/expansion_io.hpp"
#include "affk/families.hpp"
#include "affk/filling.hpp"
#include "affk/kostka.hpp"
#include "affk/pieri.hpp"
#include "affk/scan.hpp"
#include "affk/tableaux.hpp"
#include "affk/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

namespace affk::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
    std::string format = "json";
    std::string cache_dir;

    std::string family;
    std::string partition;
    std::string shape;
    std::string weight;
    std::string basis;
    std::string direction;
    std::string check;
    std::string conjecture;
    std::string kind = "affine";
    std::optional<int> k;
    std::optional<int> r;
    std::optional<int> deg_max;
    std::optional<int> standard_degree;
    bool count = false;
    bool list = false;
    bool strips = false;
};

bool json_output(const Options& o) { return o.format == "json"; }

ordered_json integer_json(const Integer& c)
{
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(c);
    return c.str();
}

ordered_json parts_json(const std::vector<int>& parts) { return ordered_json(parts); }

int require_k(const Options& o)
{
    if (!o.k) throw InvalidInput("--k is required here");
    if (*o.k < 1) throw InvalidInput("--k must be at least 1");
    return *o.k;
}

Basis target_basis(const std::string& name)
{
    if (name == "h") return Basis::h;
    if (name == "m") return Basis::m;
    if (name == "e") return Basis::e;
    if (name == "s") return Basis::s;
    throw InvalidInput("--basis must be one of h, m, e, s");
}

// expand ---------------------------------------------------------------------

void cmd_expand(const Options& o, std::ostream& out)
{
    static const std::vector<std::string> families{"G", "g", "Gk", "gk", "ks", "dks", "s"};
    if (std::find(families.begin(), families.end(), o.family) == families.end())
        throw InvalidInput("unknown family '" + o.family + "' (expected G, g, Gk, gk, ks, dks or s)");
    const Partition lambda = parse_partition(o.partition);
    const bool affine = o.family == "Gk" || o.family == "gk" || o.family == "ks" || o.family == "dks";
    const bool infinite = o.family == "G" || o.family == "Gk";
    const int k = affine ? require_k(o) : 0;
    if (affine) require_bounded(lambda, k);
    const int deg_max = o.deg_max.value_or(lambda.size() + 4);
    if (infinite && deg_max < lambda.size()) throw InvalidInput("--deg-max must be at least |lambda|");

    SymFunc f(Basis::h);
    if (o.family == "G") f = grothendieck(lambda, deg_max);
    else if (o.family == "g") f = dual_grothendieck(lambda);
    else if (o.family == "Gk") f = affine_grothendieck(lambda, k, deg_max);
    else if (o.family == "gk") f = k_K_schur(lambda, k);
    else if (o.family == "ks") f = k_schur(lambda, k);
    else if (o.family == "dks") f = dual_k_schur(lambda, k);
    else f = schur(lambda);

    if (!o.basis.empty()) {
        const Basis target = target_basis(o.basis);
        if (f.basis() == Basis::quotient_m) {
            if (target != Basis::m)
                throw InvalidInput("family '" + o.family + "' lives modulo m_mu with mu_1 > k; only --basis m applies");
        } else {
            f = convert(f, target);
        }
    }
    Expansion x = to_expansion(f);
    x.k = affine ? std::optional<int>(k) : std::nullopt;
    x.deg_max = infinite ? std::optional<int>(deg_max) : std::nullopt;
    out << (json_output(o) ? to_json(x) + "\n" : to_text(x));
}

// tableaux -------------------------------------------------------------------

ordered_json filling_json(const SetValuedFilling& t) { return ordered_json::parse(to_json(t)); }

ordered_json residues_json(const Partition& shape, int k)
{
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < shape.length(); ++r) {
        std::vector<int> row;
        for (int c = 0; c < shape.row(r); ++c) row.push_back(Residue::of(Cell{r, c}, k + 1).value());
        rows.push_back(row);
    }
    return rows;
}

void cmd_tableaux(const Options& o, std::ostream& out)
{
    const int k = require_k(o);
    const Partition lambda = parse_partition(o.shape);
    require_bounded(lambda, k);
    if (o.weight.empty() == !o.standard_degree)
        throw InvalidInput("give exactly one of --weight and --standard-degree");
    if (o.count && o.list) throw InvalidInput("--count and --list are exclusive");
    Composition alpha;
    if (o.standard_degree) {
        if (*o.standard_degree < 0) throw InvalidInput("--standard-degree must be nonnegative");
        alpha.assign(*o.standard_degree, 1);
    } else {
        alpha = strip_zeros(parse_composition(o.weight));
    }
    const Core core = bounded_to_core(lambda, k);
    const int n = composition_size(alpha);

    if (!o.list) {
        const Integer count = count_kostka(lambda, alpha, k);
        if (json_output(o)) {
            ordered_json doc{{"shape", parts_json(lambda.parts())},
                             {"core", parts_json(core.shape().parts())},
                             {"k", k},
                             {"weight", parts_json(alpha)},
                             {"count", integer_json(count)}};
            out << doc.dump(2) << '\n';
        } else {
            out << count.str() << '\n';
        }
        return;
    }

    const auto tableaux = affine_sv_tableaux(lambda, alpha, k);
    if (json_output(o)) {
        ordered_json list = ordered_json::array();
        for (const SetValuedFilling& t : tableaux)
            list.push_back({{"standard", filling_json(t)},
                            {"tableau", filling_json(destandardize(t, alpha))},
                            {"reading_word", lowest_reading_word(t, 1, n)}});
        ordered_json doc{{"shape", parts_json(lambda.parts())},
                         {"core", parts_json(core.shape().parts())},
                         {"k", k},
                         {"weight", parts_json(alpha)},
                         {"count", tableaux.size()},
                         {"residues", residues_json(core.shape(), k)},
                         {"tableaux", std::move(list)}};
        out << doc.dump(2) << '\n';
        return;
    }
    out << "shape (" << format_partition(lambda) << ")  core (" << format_partition(core.shape()) << ")  k " << k
        << "  weight (" << format_composition(alpha) << ")  count " << tableaux.size() << '\n';
    for (const SetValuedFilling& t : tableaux) {
        std::string word;
        for (int x : lowest_reading_word(t, 1, n)) word += std::to_string(x) + ' ';
        if (!word.empty()) word.pop_back();
        out << '\n' << render_text(destandardize(t, alpha), k, true) << "reading word: " << word << '\n';
    }
}

// pieri ----------------------------------------------------------------------

void cmd_pieri(const Options& o, std::ostream& out)
{
    if (o.direction != "row" && o.direction != "col") throw InvalidInput("direction must be row or col");
    const int k = require_k(o);
    if (!o.r) throw InvalidInput("--r is required");
    const Partition lambda = parse_partition(o.partition);
    const PieriExpansion p = o.direction == "row" ? row_pieri(lambda, *o.r, k) : column_pieri(lambda, *o.r, k);
    const Expansion x{"gk", k, std::nullopt, p.terms};
    if (json_output(o)) {
        ordered_json doc = ordered_json::parse(to_json(x));
        if (o.strips) {
            ordered_json strips = ordered_json::array();
            for (const PieriStrip& s : p.strips)
                strips.push_back({{"mu", parts_json(s.mu.parts())}, {"rho", parts_json(s.rho.parts())}, {"sign", s.sign}});
            doc["strips"] = std::move(strips);
        }
        out << doc.dump(2) << '\n';
        return;
    }
    out << to_text(x);
    if (o.strips) {
        out << "strips " << p.strips.size() << '\n';
        for (const PieriStrip& s : p.strips)
            out << (s.sign > 0 ? "  +  mu (" : "  -  mu (") << format_partition(s.mu) << ")  rho ("
                << format_partition(s.rho) << ")\n";
    }
}

// verify / scan --------------------------------------------------------------

int cmd_verify(const Options& o, std::ostream& out)
{
    const VerifyReport report = run_verify(o.check, o.k, o.deg_max.value_or(6));
    out << (json_output(o) ? to_json(report) + "\n" : to_text(report));
    return report.passed() ? kExitOk : kExitFailure;
}

void cmd_scan(const Options& o, std::ostream& out)
{
    const ScanReport report = run_scan(o.conjecture, require_k(o), o.deg_max.value_or(6));
    out << (json_output(o) ? to_json(report) + "\n" : to_text(report));
}

// kostka ---------------------------------------------------------------------

void cmd_kostka(const Options& o, std::ostream& out)
{
    const int k = require_k(o);
    if (o.kind != "affine" && o.kind != "ktableau") throw InvalidInput("--kind must be affine or ktableau");
    if (!o.weight.empty()) {
        const Partition lambda = parse_partition(o.partition);
        require_bounded(lambda, k);
        const Composition alpha = strip_zeros(parse_composition(o.weight));
        const Integer value = o.kind == "affine" ? count_kostka(lambda, alpha, k) : count_ktab_kostka(lambda, alpha, k);
        if (json_output(o)) {
            ordered_json doc{{"kind", o.kind},
                             {"k", k},
                             {"lambda", parts_json(lambda.parts())},
                             {"weight", parts_json(alpha)},
                             {"value", integer_json(value)}};
            out << doc.dump(2) << '\n';
        } else {
            out << value.str() << '\n';
        }
        return;
    }
    if (!o.deg_max) throw InvalidInput("--deg-max is required for a full matrix");
    if (*o.deg_max < 0) throw InvalidInput("--deg-max must be nonnegative");
    const auto matrix = o.kind == "affine" ? affine_kostka(k, *o.deg_max) : ktableau_kostka(k, *o.deg_max);
    ordered_json entries = ordered_json::array();
    std::ostringstream text;
    for (const Partition& mu : partitions_up_to(*o.deg_max, k)) {
        for (const auto& [lambda, value] : ordered_terms(matrix->column(mu))) {
            entries.push_back(
                {{"lambda", parts_json(lambda.parts())}, {"mu", parts_json(mu.parts())}, {"value", integer_json(value)}});
            text << "K((" << format_partition(lambda) << "), (" << format_partition(mu) << ")) = " << value.str() << '\n';
        }
    }
    if (json_output(o)) {
        ordered_json doc{{"kind", o.kind}, {"k", k}, {"deg_max", *o.deg_max}, {"entries", std::move(entries)}};
        out << doc.dump(2) << '\n';
    } else {
        out << text.str();
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Affine Grassmannian K-theory: cores, affine set-valued tableaux, Pieri rules"};
    app.name("affk");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--cache-dir", o.cache_dir, "Directory for persisted Kostka matrices (env AFFK_CACHE_DIR)");

    auto* expand = app.add_subcommand("expand", "Expand a family member in a basis");
    expand->add_option("family", o.family, "G, g, Gk, gk, ks, dks or s")->required();
    expand->add_option("--partition", o.partition, "Comma-separated partition, empty for the empty one");
    expand->add_option("--k", o.k, "Level k");
    expand->add_option("--deg-max", o.deg_max, "Truncation degree for G and Gk (default |lambda|+4)");
    expand->add_option("--basis", o.basis, "Target basis: h, m, e or s");

    auto* tableaux = app.add_subcommand("tableaux", "Count or list affine set-valued tableaux");
    tableaux->add_option("--shape", o.shape, "k-bounded partition indexing the core shape")->required();
    tableaux->add_option("--weight", o.weight, "Weight composition (zero parts dropped)");
    tableaux->add_option("--standard-degree", o.standard_degree, "Standard tableaux with letters 1..n");
    tableaux->add_option("--k", o.k, "Level k")->required();
    tableaux->add_flag("--count", o.count, "Print the number of tableaux (default)");
    tableaux->add_flag("--list", o.list, "List the tableaux with residues and reading words");

    auto* pieri = app.add_subcommand("pieri", "Pieri rule for g^(k)_r or g^(k)_{1^r} times g^(k)_lambda");
    pieri->add_option("direction", o.direction, "row or col")->required();
    pieri->add_option("--partition", o.partition, "k-bounded partition lambda");
    pieri->add_option("--r", o.r, "Strip size r <= k")->required();
    pieri->add_option("--k", o.k, "Level k")->required();
    pieri->add_flag("--strips", o.strips, "Also print the strips behind the terms");

    auto* verify = app.add_subcommand("verify", "Check an identity on every instance up to a degree");
    verify->add_option("check", o.check, "duality, omega, newton, k-newton, reduction-G, reduction-g, "
                                         "pieri-consistency, kostka-symmetry or bijection")
        ->required();
    verify->add_option("--k", o.k, "Level k (not used by newton and k-newton)");
    verify->add_option("--deg-max", o.deg_max, "Largest degree (default 6)");

    auto* scan = app.add_subcommand("scan", "Report coefficient signs for an open positivity question");
    scan->add_option("conjecture", o.conjecture, "G-in-dualks-positivity, gk-in-g-positivity, "
                                                 "gk-branching-positivity, s-in-Gk-positivity or kss-cancellation")
        ->required();
    scan->add_option("--k", o.k, "Level k")->required();
    scan->add_option("--deg-max", o.deg_max, "Largest degree (default 6)");

    auto* kostka = app.add_subcommand("kostka", "Affine set-valued or k-tableau Kostka numbers");
    kostka->add_option("--k", o.k, "Level k")->required();
    kostka->add_option("--deg-max", o.deg_max, "Largest weight degree for the full matrix");
    kostka->add_option("--partition", o.partition, "Row index lambda for a single entry");
    kostka->add_option("--weight", o.weight, "Weight composition for a single entry");
    kostka->add_option("--kind", o.kind, "affine (default) or ktableau");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "affk: " << e.what() << '\n';
        return kExitInvalidInput;
    }

    try {
        if (!o.cache_dir.empty()) {
            set_kostka_cache_dir(std::filesystem::path(o.cache_dir));
        } else if (const char* env = std::getenv("AFFK_CACHE_DIR"); env && *env) {
            set_kostka_cache_dir(std::filesystem::path(env));
        }
        if (*expand) cmd_expand(o, out);
        else if (*tableaux) cmd_tableaux(o, out);
        else if (*pieri) cmd_pieri(o, out);
        else if (*verify) return cmd_verify(o, out);
        else if (*scan) cmd_scan(o, out);
        else if (*kostka) cmd_kostka(o, out);
        return kExitOk;
    } catch (const InvalidInput& e) {
        err << "affk: invalid input: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const DeadWord& e) {
        err << "affk: invalid input: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        err << "affk: internal error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace affk::cli
