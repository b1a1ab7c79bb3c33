#pragma once

#include "affk/filling.hpp"
#include "affk/symfunc.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace affk {

/// Serializable expansion: terms in a named basis ("h", "m", "e", "s", "G",
/// "g", "Gk", "gk").
struct Expansion {
    std::string basis;
    std::optional<int> k;
    std::optional<int> deg_max;
    Terms terms;

    bool operator==(const Expansion&) const = default;
};

Expansion to_expansion(const SymFunc& f);

/// Terms ordered by degree, then lexicographically decreasing.
std::vector<std::pair<Partition, Integer>> ordered_terms(const Terms& terms);

/// {"basis":..,"k":..,"deg_max":..,"terms":[{"partition":[..],"coeff":c}]}.
/// Coefficients outside the 64-bit range are written as decimal strings.
std::string to_json(const Expansion& x);
/// Throws InvalidInput on malformed documents.
Expansion expansion_from_json(std::string_view text);

/// One term per line, coefficient right-aligned, after a header line.
std::string to_text(const Expansion& x);

/// Terms on one line in graded order, e.g. "h(2,1) - 2 h(3)"; "0" if empty.
std::string format_terms(const Terms& terms, std::string_view basis);

/// {"shape":[..],"cells":[{"row":r,"col":c,"letters":[..]}]}, cells bottom
/// row first.
std::string to_json(const SetValuedFilling& t);
/// Throws InvalidInput on malformed documents or cells outside the shape.
SetValuedFilling filling_from_json(std::string_view text);

bool is_known_basis_name(std::string_view name);

}  // namespace affk
