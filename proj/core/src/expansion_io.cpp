#include "affk/expansion_io.hpp"

#include "affk/error.hpp"
#include "json_integer.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace affk {

using nlohmann::json;

bool is_known_basis_name(std::string_view name)
{
    for (std::string_view b : {"h", "m", "e", "s", "G", "g", "Gk", "gk"})
        if (b == name) return true;
    return false;
}

Expansion to_expansion(const SymFunc& f)
{
    return {std::string(basis_name(f.basis())), f.k(), f.deg_max(), f.terms()};
}

std::vector<std::pair<Partition, Integer>> ordered_terms(const Terms& terms)
{
    std::vector<std::pair<Partition, Integer>> out(terms.begin(), terms.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return graded_dominance_less(a.first, b.first); });
    return out;
}

namespace {

Integer coeff_from_json(const json& j)
{
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        const bool ok = !s.empty() && std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(),
                                                  [](char ch) { return ch >= '0' && ch <= '9'; });
        if (!ok || s == "-") throw InvalidInput("coefficient string is not an integer");
        return Integer(s);
    }
    throw InvalidInput("coefficient must be an integer or a decimal string");
}

}  // namespace

std::string to_json(const Expansion& x)
{
    nlohmann::ordered_json doc;
    doc["basis"] = x.basis;
    doc["k"] = x.k ? json(*x.k) : json(nullptr);
    doc["deg_max"] = x.deg_max ? json(*x.deg_max) : json(nullptr);
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [lambda, c] : ordered_terms(x.terms))
        terms.push_back(nlohmann::ordered_json{{"partition", lambda.parts()}, {"coeff", detail::integer_json(c)}});
    doc["terms"] = std::move(terms);
    return doc.dump(2);
}

Expansion expansion_from_json(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    try {
        Expansion x;
        x.basis = doc.at("basis").get<std::string>();
        if (!is_known_basis_name(x.basis)) throw InvalidInput("unknown basis '" + x.basis + "'");
        if (!doc.at("k").is_null()) x.k = doc.at("k").get<int>();
        if (!doc.at("deg_max").is_null()) x.deg_max = doc.at("deg_max").get<int>();
        for (const json& t : doc.at("terms")) {
            const Partition lambda(t.at("partition").get<std::vector<int>>());
            if (x.terms.count(lambda)) throw InvalidInput("repeated partition in terms");
            x.terms.emplace(lambda, coeff_from_json(t.at("coeff")));
        }
        return x;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed expansion: ") + e.what());
    }
}

std::string to_text(const Expansion& x)
{
    std::ostringstream os;
    os << "basis " << x.basis << "  k " << (x.k ? std::to_string(*x.k) : "-") << "  deg_max "
       << (x.deg_max ? std::to_string(*x.deg_max) : "-") << "  terms " << x.terms.size() << '\n';
    const auto terms = ordered_terms(x.terms);
    std::size_t width = 1;
    std::vector<std::string> coeffs;
    for (const auto& [lambda, c] : terms) {
        std::string s = c.str();
        if (c > 0) s = "+" + s;
        width = std::max(width, s.size());
        coeffs.push_back(std::move(s));
    }
    for (std::size_t i = 0; i < terms.size(); ++i) {
        os << std::string(width - coeffs[i].size(), ' ') << coeffs[i] << "  " << x.basis << '('
           << format_partition(terms[i].first) << ")\n";
    }
    return os.str();
}

std::string format_terms(const Terms& terms, std::string_view basis)
{
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [lambda, c] : ordered_terms(terms)) {
        const Integer mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mag != 1) out += mag.str() + " ";
        out += std::string(basis) + "(" + format_partition(lambda) + ")";
    }
    return out;
}

std::string to_json(const SetValuedFilling& t)
{
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const Cell& c : t.shape().cells())
        cells.push_back({{"row", c.row}, {"col", c.col}, {"letters", t.at(c)}});
    nlohmann::ordered_json doc{{"shape", t.shape().parts()}, {"cells", std::move(cells)}};
    return doc.dump(2);
}

SetValuedFilling filling_from_json(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    try {
        SetValuedFilling t(Partition(doc.at("shape").get<std::vector<int>>()));
        for (const json& cell : doc.at("cells")) {
            const Cell c{cell.at("row").get<int>(), cell.at("col").get<int>()};
            if (!t.shape().contains(c)) throw InvalidInput("cell outside the shape");
            for (int x : cell.at("letters").get<std::vector<int>>()) {
                if (x < 1) throw InvalidInput("letters must be positive");
                t.insert(c, x);
            }
        }
        return t;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed filling: ") + e.what());
    }
}

}  // namespace affk
