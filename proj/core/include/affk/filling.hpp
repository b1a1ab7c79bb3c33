#pragma once

#include "affk/partition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace affk {

/// Filling of a Ferrers shape by sets of positive integers. Letters inside
/// a cell are kept sorted ascending. Cells may be empty while a filling is
/// being built; complete() says whether every cell got a letter.
class SetValuedFilling {
public:
    SetValuedFilling() = default;
    explicit SetValuedFilling(Partition shape);
    /// rows[r][c] = letters of cell (r, c); must match a partition shape.
    static SetValuedFilling from_rows(const std::vector<std::vector<std::vector<int>>>& rows);

    const Partition& shape() const { return shape_; }
    const std::vector<int>& at(Cell c) const;
    void insert(Cell c, int letter);

    bool complete() const;
    int max_letter() const;
    /// alpha_i = number of cells containing i, for i = 1..max_letter().
    Composition weight() const;
    /// Cells containing letter x, bottom row first.
    std::vector<Cell> cells_with(int x) const;

    /// Drops every letter larger than x and then every empty cell;
    /// nullopt if what remains is not a partition shape.
    std::optional<SetValuedFilling> restrict_to(int x) const;

    const std::vector<std::vector<std::vector<int>>>& rows() const { return rows_; }

    bool operator==(const SetValuedFilling&) const = default;
    auto operator<=>(const SetValuedFilling& o) const { return rows_ <=> o.rows_; }

private:
    Partition shape_;
    std::vector<std::vector<std::vector<int>>> rows_;
};

/// Lowest occurrence of each letter of [lo, hi], read top row first, left to
/// right, letters in one cell in decreasing order.
std::vector<int> lowest_reading_word(const SetValuedFilling& t, int lo, int hi);

/// Rows weakly increase (max X <= min Y), columns strictly increase.
bool is_semistandard_set_valued(const SetValuedFilling& t);
/// Complete and semistandard.
bool is_classical_set_valued(const SetValuedFilling& t);

/// Complete, singleton cells, semistandard, shape a (k+1)-core, and
/// residue_weight summing to the size of the bounded partition of the shape.
bool is_k_tableau(const SetValuedFilling& t, int k);
/// Number of distinct residues carrying letter i, for i = 1..max_letter();
/// the weight of a k-tableau.
Composition residue_weight(const SetValuedFilling& t, int k);

/// Standard affine set-valued tableau: letters are exactly 1..n, every
/// T_{<=x} has core shape, and the cells holding x are all the removable
/// corners of T_{<=x} of one residue.
bool is_standard_affine_sv_tableau(const SetValuedFilling& t, int k);

/// Standard, of degree |alpha|, and for each alphabet block of alpha: lowest
/// reading word increasing, block letters on alpha_x distinct residues, and
/// the cells holding block letters forming a horizontal strip.
bool is_affine_sv_tableau(const SetValuedFilling& t, const Composition& alpha, int k);

/// Every semistandard set-valued filling of shape using each of 1..n at
/// least once: letter x goes into a nonempty set of cells that are addable
/// or removable for the shape filled by 1..x-1. Sorted.
std::vector<SetValuedFilling> standard_set_valued_fillings(const Partition& shape, int n);

/// Replaces letter x by the index of its alphabet block of alpha.
SetValuedFilling destandardize(const SetValuedFilling& t, const Composition& alpha);

/// Rows top first, cells as {a,b} with optional residue subscript "_i".
std::string render_text(const SetValuedFilling& t, int k, bool residues);

}  // namespace affk
