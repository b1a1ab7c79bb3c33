#pragma once

#include "affk/integer.hpp"
#include "affk/partition.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace affk {

/// m, h, e, Schur, and monomials modulo the ideal spanned by m_lambda with
/// lambda_1 > k.
enum class Basis { m, h, e, s, quotient_m };

std::string_view basis_name(Basis b);

using Terms = std::map<Partition, Integer>;

/// Finitely supported integer combination of basis elements. deg_max, when
/// set, truncates: terms of larger degree are dropped on insertion. A
/// quotient_m element carries its k and drops keys that are not k-bounded.
class SymFunc {
public:
    explicit SymFunc(Basis basis, std::optional<int> deg_max = std::nullopt, std::optional<int> k = std::nullopt);

    static SymFunc one(Basis basis, std::optional<int> deg_max = std::nullopt, std::optional<int> k = std::nullopt);
    static SymFunc element(Basis basis, const Partition& lambda, std::optional<int> deg_max = std::nullopt,
                           std::optional<int> k = std::nullopt);

    Basis basis() const { return basis_; }
    std::optional<int> deg_max() const { return deg_max_; }
    std::optional<int> k() const { return k_; }
    const Terms& terms() const { return terms_; }

    Integer coeff(const Partition& lambda) const;
    void add(const Partition& lambda, const Integer& c);
    bool is_zero() const { return terms_.empty(); }

    std::optional<int> min_degree() const;
    std::optional<int> max_degree() const;
    SymFunc homogeneous(int d) const;
    SymFunc truncated(int d) const;

    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    SymFunc& operator*=(const Integer& c);

    /// Same basis and same terms; truncation bounds are not compared.
    bool operator==(const SymFunc& o) const { return basis_ == o.basis_ && terms_ == o.terms_; }

private:
    void check_compatible(const SymFunc& o) const;
    bool keeps(const Partition& lambda) const;

    Basis basis_;
    std::optional<int> deg_max_;
    std::optional<int> k_;
    Terms terms_;
};

SymFunc operator+(SymFunc a, const SymFunc& b);
SymFunc operator-(SymFunc a, const SymFunc& b);
SymFunc operator*(SymFunc a, const Integer& c);
SymFunc operator*(const Integer& c, SymFunc a);

/// Product. Both factors in the same basis; h and e multiply by
/// concatenating indices, m and quotient_m by monomial merging, s through m.
SymFunc operator*(const SymFunc& a, const SymFunc& b);

/// Change of basis among m, h, e, s through Schur functions using
/// semistandard Kostka numbers; m converts to quotient_m by dropping terms
/// that are not k-bounded. Throws InvalidInput for conversions out of
/// quotient_m (other than to itself) or to quotient_m without k.
SymFunc convert(const SymFunc& f, Basis target, std::optional<int> k = std::nullopt);

/// Hall pairing <f, g> with f in h and g in m or quotient_m.
Integer hall_inner(const SymFunc& f, const SymFunc& g);

/// Number of semistandard tableaux of shape lambda and content mu, memoized.
const Integer& schur_kostka(const Partition& lambda, const Partition& mu);

/// Expands f in a family {b_nu} by repeatedly removing the extreme term.
/// `select` picks the key to eliminate from the remaining terms, and
/// `element` returns (nu, b_nu) where b_nu has that key with coefficient 1.
/// Stops when nothing is left or after `limit` eliminations (throws
/// InternalError then).
Terms peel(Terms f, const std::function<Partition(const Terms&)>& select,
           const std::function<std::pair<Partition, Terms>(const Partition&)>& element, std::size_t limit = 1000000);

/// Key selectors for peel.
Partition lex_max_key(const Terms& f);
Partition lex_min_key(const Terms& f);
/// Lowest degree first, lexicographically largest inside it.
Partition lowest_degree_lex_max_key(const Terms& f);
/// Highest degree first, lexicographically smallest inside it.
Partition highest_degree_lex_min_key(const Terms& f);

/// a += c * b over Terms.
void axpy(Terms& a, const Integer& c, const Terms& b);

}  // namespace affk
