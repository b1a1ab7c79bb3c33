#pragma once

#include "affk/integer.hpp"
#include "affk/partition.hpp"
#include "affk/symfunc.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace affk {

/// Entries K_{lambda mu} for k-bounded lambda, mu with |mu| <= max_degree,
/// stored by column mu.
class KostkaMatrix {
public:
    KostkaMatrix(int k, int max_degree, std::map<Partition, Terms> columns);

    int k() const { return k_; }
    int max_degree() const { return max_degree_; }

    Integer entry(const Partition& lambda, const Partition& mu) const;
    /// lambda -> K_{lambda mu}. Throws InvalidInput when mu is out of range.
    const Terms& column(const Partition& mu) const;
    /// mu -> K_{lambda mu} over every stored column.
    Terms row(const Partition& lambda) const;

    /// Versioned decimal text, one entry per line.
    std::string serialize() const;
    /// nullopt on any format or version mismatch.
    static std::optional<KostkaMatrix> deserialize(std::string_view text);

    bool operator==(const KostkaMatrix& o) const = default;

private:
    int k_;
    int max_degree_;
    std::map<Partition, Terms> columns_;
};

/// Counts of affine set-valued tableaux, built afresh by a shared strip
/// dynamic program over all weights.
KostkaMatrix build_affine_kostka(int k, int max_degree);
/// Counts of k-tableaux (nonzero only on the degree diagonal), from chains of
/// affine strips.
KostkaMatrix build_ktableau_kostka(int k, int max_degree);

/// Memoized build_affine_kostka; may return a matrix of larger degree. When
/// a cache directory is configured, matrices are read from and written to
/// it (atomic rename).
std::shared_ptr<const KostkaMatrix> affine_kostka(int k, int max_degree);
std::shared_ptr<const KostkaMatrix> ktableau_kostka(int k, int max_degree);

/// Directory for persisted matrices; nullopt (the default) disables it.
void set_kostka_cache_dir(std::optional<std::filesystem::path> dir);
std::optional<std::filesystem::path> kostka_cache_dir();
/// File name used for (k, n) inside the cache directory.
std::string kostka_cache_file_name(int k, int max_degree);

/// Number of set-valued tableaux of shape lambda and weight mu, memoized.
const Integer& set_valued_kostka(const Partition& lambda, const Partition& mu);

}  // namespace affk
