#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace affk {

/// A cell of a Ferrers shape, French convention: row 0 is the bottom row,
/// col 0 the leftmost column.
struct Cell {
    int row = 0;
    int col = 0;

    auto operator<=>(const Cell&) const = default;
};

/// A (k+1)-residue. Always reduced into [0, level) at construction, so two
/// residues built for different levels are never silently mixed up with
/// plain column indices.
class Residue {
public:
    Residue() = default;
    Residue(long raw, int level);

    static Residue of(Cell c, int level) { return Residue(c.col - c.row, level); }

    int value() const { return value_; }
    /// The residue value - 1, cyclically.
    Residue prev(int level) const { return Residue(value_ - 1, level); }
    Residue next(int level) const { return Residue(value_ + 1, level); }

    auto operator<=>(const Residue&) const = default;

private:
    int value_ = 0;
};

/// Weakly decreasing list of positive integers. Immutable value type.
class Partition {
public:
    Partition() = default;
    /// Throws InvalidInput unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts and drops zeros; for building from compositions and multisets.
    static Partition from_unsorted(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }
    bool empty() const { return parts_.empty(); }

    /// Row length, 0 past the last row.
    int row(int i) const { return (i >= 0 && i < length()) ? parts_[i] : 0; }
    /// Column height, 0 past the first row.
    int column(int j) const;
    int first_part() const { return parts_.empty() ? 0 : parts_.front(); }

    bool contains(Cell c) const { return c.row >= 0 && c.col >= 0 && c.col < row(c.row); }
    /// Containment of Ferrers diagrams.
    bool contains(const Partition& other) const;

    bool is_bounded(int k) const { return first_part() <= k; }

    /// All cells, row by row from the bottom, left to right.
    std::vector<Cell> cells() const;

    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Composition: finite sequence of nonnegative integers (zeros allowed).
using Composition = std::vector<int>;

// Ferrers geometry --------------------------------------------------------

Partition conjugate(const Partition& lambda);
bool dominates(const Partition& lambda, const Partition& mu);
int arm_length(const Partition& lambda, Cell c);
int leg_length(const Partition& lambda, Cell c);
/// Throws InvalidInput if c is not a cell of lambda.
int hook_length(const Partition& lambda, Cell c);
/// Hook length of the corner cell (0,0); 0 for the empty partition.
int hook(const Partition& lambda);

std::vector<Cell> addable_cells(const Partition& lambda);
std::vector<Cell> removable_cells(const Partition& lambda);
/// Cells (i,j) of lambda with (i+1,j+1) outside lambda.
std::vector<Cell> extremal_cells(const Partition& lambda);

/// lambda plus the given cells; throws InvalidInput if the result is not a partition.
Partition add_cells(const Partition& lambda, std::span<const Cell> cells);
/// lambda minus the given cells; throws InvalidInput if the result is not a partition.
Partition remove_cells(const Partition& lambda, std::span<const Cell> cells);
/// Cells of outer/inner, in row-major order from the bottom. Requires inner ⊆ outer.
std::vector<Cell> skew_cells(const Partition& outer, const Partition& inner);

// Enumeration ---------------------------------------------------------------

/// Partitions of n in lexicographically decreasing order; parts bounded by
/// max_part when max_part > 0.
std::vector<Partition> partitions_of(int n, int max_part = 0);
/// Partitions of degree 0..n, graded ascending, lex-decreasing inside a degree.
std::vector<Partition> partitions_up_to(int n, int max_part = 0);
/// Compositions of n with positive parts bounded by max_part (0 = unbounded),
/// in lexicographic order.
std::vector<Composition> compositions_of(int n, int max_part = 0);
/// Distinct rearrangements of a composition, lexicographic order.
std::vector<Composition> rearrangements(Composition alpha);

/// Strips zero parts.
Composition strip_zeros(const Composition& alpha);
int composition_size(const Composition& alpha);

/// Graded order used by every triangular solve: degree first, then
/// lexicographically decreasing inside a degree (a linear extension of
/// dominance, largest first).
bool graded_dominance_less(const Partition& a, const Partition& b);

// Text ----------------------------------------------------------------------

/// "3,1,1"; the empty partition is "".
std::string format_partition(const Partition& lambda);
/// Accepts "3,1,1", "" and whitespace around items; throws InvalidInput otherwise.
Partition parse_partition(std::string_view text);
/// Same as parse_partition but for compositions (zeros permitted, order kept).
Composition parse_composition(std::string_view text);
std::string format_composition(const Composition& alpha);

std::ostream& operator<<(std::ostream& os, const Partition& lambda);
std::ostream& operator<<(std::ostream& os, const Cell& c);

}  // namespace affk
