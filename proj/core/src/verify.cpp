#include "affk/verify.hpp"

#include "affk/affine_words.hpp"
#include "affk/core.hpp"
#include "affk/error.hpp"
#include "affk/expansion_io.hpp"
#include "affk/families.hpp"
#include "affk/filling.hpp"
#include "affk/kostka.hpp"
#include "affk/omega.hpp"
#include "affk/pieri.hpp"
#include "affk/tableaux.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace affk {

bool VerifyReport::passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const
{
    return std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.pass; });
}

const std::vector<std::string>& verify_check_names()
{
    static const std::vector<std::string> names{"duality",     "omega",       "newton",
                                                "k-newton",    "reduction-G", "reduction-g",
                                                "pieri-consistency", "kostka-symmetry", "bijection"};
    return names;
}

SymFunc newton_residual(int l)
{
    if (l < 0) throw InvalidInput("newton_residual needs l >= 0");
    SymFunc sum(Basis::h);
    for (int r = 0; r <= l; ++r) {
        const SymFunc h = SymFunc::element(Basis::h, l - r == 0 ? Partition{} : Partition{l - r});
        const SymFunc e = convert(SymFunc::element(Basis::e, r == 0 ? Partition{} : Partition{r}), Basis::h);
        sum += Integer(sign_power(r)) * (h * e);
    }
    return sum;
}

SymFunc k_newton_residual(int l)
{
    if (l < 0) throw InvalidInput("k_newton_residual needs l >= 0");
    SymFunc sum(Basis::h);
    for (int r = 0; r <= l; ++r) {
        const SymFunc row = SymFunc::element(Basis::h, l - r == 0 ? Partition{} : Partition{l - r});
        for (int j = 0; j <= r; ++j) {
            const Integer c = sign_power(j + r) * binomial(r - 2, j);
            if (c == 0) continue;
            sum += c * (row * column_grothendieck_via_e(r - j));
        }
    }
    return sum;
}

namespace {

std::string paren(const Partition& lambda) { return "(" + format_partition(lambda) + ")"; }

struct Collector {
    VerifyReport& report;

    void add(std::string instance, bool pass, std::string detail = {})
    {
        report.results.push_back({std::move(instance), pass, pass ? std::string() : std::move(detail)});
    }
};

void check_duality(Collector& out, int k, int n)
{
    const auto parts = partitions_up_to(n, k);
    std::vector<SymFunc> big;
    for (const Partition& mu : parts) big.push_back(affine_grothendieck(mu, k, n));
    for (const Partition& lambda : parts) {
        const SymFunc g = k_K_schur(lambda, k);
        std::string detail;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const Integer v = hall_inner(g, big[i]);
            const Integer want = parts[i] == lambda ? 1 : 0;
            if (v != want) detail += "<g" + paren(lambda) + ", G" + paren(parts[i]) + "> = " + v.str() + "; ";
        }
        out.add("<g^(k)" + paren(lambda) + ", G^(k)> = delta", detail.empty(), detail);
    }
}

void check_omega(Collector& out, int k, int n)
{
    for (const Partition& lambda : partitions_up_to(n, k)) {
        const SymFunc h = SymFunc::element(Basis::h, lambda);
        const SymFunc twice = omega_big(omega_big(h));
        out.add("Omega^2 h" + paren(lambda) + " = h" + paren(lambda), twice == h, "got " + format_terms(twice.terms(), "h"));
    }
    for (const Partition& lambda : partitions_up_to(n, k)) {
        const Partition conj = k_conjugate(lambda, k);
        const SymFunc image = omega_big(k_K_schur(lambda, k));
        const SymFunc want = k_K_schur(conj, k);
        const Terms in_g = h_to_k_K_schur(image, k);
        const bool pass = image == want && in_g == Terms{{conj, 1}};
        out.add("Omega g^(k)" + paren(lambda) + " = g^(k)" + paren(conj), pass,
                "image in g^(k) basis: " + format_terms(in_g, "gk"));
    }
}

void check_newton(Collector& out, int n, bool k_theoretic)
{
    for (int l = 0; l <= n; ++l) {
        const SymFunc residual = k_theoretic ? k_newton_residual(l) : newton_residual(l);
        Terms want;
        if (l == 0) want[Partition{}] = 1;
        if (l == 1 && k_theoretic) want[Partition{}] = -1;
        out.add(std::string(k_theoretic ? "k-newton" : "newton") + " l=" + std::to_string(l) + " residual " +
                    format_terms(want, "h"),
                residual.terms() == want, "residual " + format_terms(residual.terms(), "h"));
    }
}

void check_reduction_G(Collector& out, int k, int n)
{
    for (const Partition& lambda : partitions_up_to(n, k)) {
        const int d = lambda.size();
        if (hook(lambda) <= k) {
            const SymFunc affine = affine_grothendieck(lambda, k, d + 3);
            const SymFunc classical = convert(grothendieck(lambda, d + 3), Basis::quotient_m, k);
            out.add("G^(k)" + paren(lambda) + " = G" + paren(lambda) + " to degree " + std::to_string(d + 3),
                    affine == classical,
                    "G^(k): " + format_terms(affine.terms(), "m") + "; G: " + format_terms(classical.terms(), "m"));
        }
        const SymFunc bottom = affine_grothendieck(lambda, k, d).homogeneous(d);
        const SymFunc dual = dual_k_schur(lambda, k);
        out.add("lowest component of G^(k)" + paren(lambda) + " = dual k-Schur", bottom.terms() == dual.terms(),
                "lowest: " + format_terms(bottom.terms(), "m") + "; dual k-Schur: " + format_terms(dual.terms(), "m"));
    }
}

void check_reduction_g(Collector& out, int k, int n)
{
    for (const Partition& lambda : partitions_up_to(n, k)) {
        const SymFunc g = k_K_schur(lambda, k);
        if (lambda.size() <= k) {
            const SymFunc classical = dual_grothendieck(lambda);
            out.add("g^(k)" + paren(lambda) + " = g" + paren(lambda), g == classical,
                    "g^(k): " + format_terms(g.terms(), "h") + "; g: " + format_terms(classical.terms(), "h"));
        }
        const SymFunc top = g.homogeneous(lambda.size());
        const SymFunc ks = k_schur(lambda, k);
        out.add("top component of g^(k)" + paren(lambda) + " = k-Schur", top == ks,
                "top: " + format_terms(top.terms(), "h") + "; k-Schur: " + format_terms(ks.terms(), "h"));
    }
}

void check_pieri(Collector& out, int k, int n)
{
    for (const Partition& lambda : partitions_up_to(n, k)) {
        for (int r = 0; r <= k; ++r) {
            const std::string tag = paren(lambda) + " r=" + std::to_string(r);
            const Terms row = row_pieri(lambda, r, k).terms;
            const Terms row_direct = row_product_direct(lambda, r, k);
            out.add("row Pieri " + tag, row == row_direct,
                    "strips: " + format_terms(row, "gk") + "; product: " + format_terms(row_direct, "gk"));
            const Terms col = column_pieri(lambda, r, k).terms;
            const Terms col_direct = column_product_direct(lambda, r, k);
            out.add("column Pieri " + tag, col == col_direct,
                    "strips: " + format_terms(col, "gk") + "; product: " + format_terms(col_direct, "gk"));
        }
    }
}

void check_kostka_symmetry(Collector& out, int k, int n)
{
    const auto matrix = affine_kostka(k, n);
    for (const Partition& mu : partitions_up_to(n, k)) {
        if (mu.size() == 0) continue;
        std::string detail;
        const auto arrangements = rearrangements(mu.parts());
        for (const Partition& lambda : partitions_up_to(mu.size(), k)) {
            const Integer want = matrix->entry(lambda, mu);
            for (const Composition& alpha : arrangements) {
                const Integer got = count_kostka(lambda, alpha, k);
                if (got != want)
                    detail += "K" + paren(lambda) + ",(" + format_composition(alpha) + ") = " + got.str() + " vs " +
                              want.str() + "; ";
            }
        }
        out.add("K^(k)_{lambda, alpha} constant over rearrangements of " + paren(mu), detail.empty(), detail);
    }
}

void check_bijection(Collector& out, int k, int n)
{
    for (int d = 0; d <= n; ++d) {
        for (const Partition& lambda : partitions_up_to(d, k)) {
            const auto fillings = standard_set_valued_fillings(bounded_to_core(lambda, k).shape(), d);
            std::string detail;
            for (const Composition& alpha : compositions_of(d, k)) {
                const std::size_t chains = enumerate_tableaux(lambda, alpha, k).size();
                const std::size_t factorizations = alpha_factorizations(lambda, alpha, k).size();
                const auto filtered = std::count_if(fillings.begin(), fillings.end(), [&](const SetValuedFilling& t) {
                    return is_affine_sv_tableau(t, alpha, k);
                });
                if (chains != factorizations || chains != static_cast<std::size_t>(filtered))
                    detail += "alpha=(" + format_composition(alpha) + "): chains " + std::to_string(chains) +
                              ", factorizations " + std::to_string(factorizations) + ", filter " +
                              std::to_string(filtered) + "; ";
            }
            out.add("tableau counts agree for " + paren(lambda) + " at degree " + std::to_string(d), detail.empty(),
                    detail);
        }
    }
}

}  // namespace

VerifyReport run_verify(std::string_view check, std::optional<int> k, int deg_max)
{
    const auto& names = verify_check_names();
    if (std::find(names.begin(), names.end(), check) == names.end())
        throw InvalidInput("unknown check '" + std::string(check) + "'");
    if (deg_max < 0) throw InvalidInput("deg-max must be nonnegative");
    const bool needs_k = check != "newton" && check != "k-newton";
    if (needs_k && !k) throw InvalidInput("check '" + std::string(check) + "' needs --k");
    if (needs_k && *k < 1) throw InvalidInput("k must be at least 1");

    VerifyReport report{std::string(check), needs_k ? k : std::nullopt, deg_max, {}};
    Collector out{report};
    if (check == "duality") check_duality(out, *k, deg_max);
    else if (check == "omega") check_omega(out, *k, deg_max);
    else if (check == "newton") check_newton(out, deg_max, false);
    else if (check == "k-newton") check_newton(out, deg_max, true);
    else if (check == "reduction-G") check_reduction_G(out, *k, deg_max);
    else if (check == "reduction-g") check_reduction_g(out, *k, deg_max);
    else if (check == "pieri-consistency") check_pieri(out, *k, deg_max);
    else if (check == "kostka-symmetry") check_kostka_symmetry(out, *k, deg_max);
    else check_bijection(out, *k, deg_max);
    return report;
}

std::string to_json(const VerifyReport& report)
{
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["check"] = report.check;
    doc["k"] = report.k ? ordered_json(*report.k) : ordered_json(nullptr);
    doc["deg_max"] = report.deg_max;
    doc["passed"] = report.passed();
    doc["instances"] = report.results.size();
    doc["failures"] = report.failures();
    ordered_json results = ordered_json::array();
    for (const CheckResult& r : report.results) {
        ordered_json item{{"instance", r.instance}, {"pass", r.pass}};
        if (!r.pass) item["detail"] = r.detail;
        results.push_back(std::move(item));
    }
    doc["results"] = std::move(results);
    return doc.dump(2);
}

std::string to_text(const VerifyReport& report)
{
    std::ostringstream os;
    for (const CheckResult& r : report.results) {
        os << (r.pass ? "PASS  " : "FAIL  ") << r.instance;
        if (!r.pass) os << "\n      " << r.detail;
        os << '\n';
    }
    os << report.check << ": " << report.results.size() - report.failures() << " passed, " << report.failures()
       << " failed\n";
    return os.str();
}

}  // namespace affk
