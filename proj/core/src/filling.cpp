#include "affk/filling.hpp"

#include "affk/core.hpp"
#include "affk/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace affk {

SetValuedFilling::SetValuedFilling(Partition shape) : shape_(std::move(shape))
{
    for (int r = 0; r < shape_.length(); ++r) rows_.emplace_back(shape_.row(r));
}

SetValuedFilling SetValuedFilling::from_rows(const std::vector<std::vector<std::vector<int>>>& rows)
{
    std::vector<int> lengths;
    for (const auto& row : rows) lengths.push_back(static_cast<int>(row.size()));
    SetValuedFilling t(Partition(std::move(lengths)));
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        for (int c = 0; c < static_cast<int>(rows[r].size()); ++c)
            for (int x : rows[r][c]) t.insert({r, c}, x);
    return t;
}

const std::vector<int>& SetValuedFilling::at(Cell c) const
{
    if (!shape_.contains(c)) throw InvalidInput("cell outside the filling's shape");
    return rows_[c.row][c.col];
}

void SetValuedFilling::insert(Cell c, int letter)
{
    if (!shape_.contains(c)) throw InvalidInput("cell outside the filling's shape");
    if (letter <= 0) throw InvalidInput("letters must be positive");
    auto& cell = rows_[c.row][c.col];
    auto it = std::lower_bound(cell.begin(), cell.end(), letter);
    if (it == cell.end() || *it != letter) cell.insert(it, letter);
}

bool SetValuedFilling::complete() const
{
    for (const auto& row : rows_)
        for (const auto& cell : row)
            if (cell.empty()) return false;
    return true;
}

int SetValuedFilling::max_letter() const
{
    int m = 0;
    for (const auto& row : rows_)
        for (const auto& cell : row)
            if (!cell.empty()) m = std::max(m, cell.back());
    return m;
}

Composition SetValuedFilling::weight() const
{
    Composition alpha(max_letter(), 0);
    for (const auto& row : rows_)
        for (const auto& cell : row)
            for (int x : cell) ++alpha[x - 1];
    return alpha;
}

std::vector<Cell> SetValuedFilling::cells_with(int x) const
{
    std::vector<Cell> out;
    for (int r = 0; r < shape_.length(); ++r)
        for (int c = 0; c < shape_.row(r); ++c)
            if (std::binary_search(rows_[r][c].begin(), rows_[r][c].end(), x)) out.push_back({r, c});
    return out;
}

std::optional<SetValuedFilling> SetValuedFilling::restrict_to(int x) const
{
    std::vector<std::vector<std::vector<int>>> rows;
    for (const auto& row : rows_) {
        std::vector<std::vector<int>> kept;
        bool gap = false;
        for (const auto& cell : row) {
            std::vector<int> small;
            for (int a : cell)
                if (a <= x) small.push_back(a);
            if (small.empty()) {
                gap = true;
            } else {
                if (gap) return std::nullopt;
                kept.push_back(std::move(small));
            }
        }
        rows.push_back(std::move(kept));
    }
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty()) return std::nullopt;
        if (r > 0 && rows[r].size() > rows[r - 1].size()) return std::nullopt;
    }
    return from_rows(rows);
}

std::vector<int> lowest_reading_word(const SetValuedFilling& t, int lo, int hi)
{
    struct Entry {
        Cell cell;
        int letter;
    };
    std::vector<Entry> entries;
    for (int x = lo; x <= hi; ++x) {
        const auto cells = t.cells_with(x);
        if (cells.empty()) continue;
        // cells_with lists bottom row first, left to right
        entries.push_back({cells.front(), x});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.cell.row != b.cell.row) return a.cell.row > b.cell.row;
        if (a.cell.col != b.cell.col) return a.cell.col < b.cell.col;
        return a.letter > b.letter;
    });
    std::vector<int> out;
    for (const Entry& e : entries) out.push_back(e.letter);
    return out;
}

bool is_semistandard_set_valued(const SetValuedFilling& t)
{
    const Partition& shape = t.shape();
    for (const Cell& c : shape.cells()) {
        const auto& x = t.at(c);
        if (x.empty()) continue;
        const Cell right{c.row, c.col + 1};
        if (shape.contains(right) && !t.at(right).empty() && x.back() > t.at(right).front()) return false;
        const Cell above{c.row + 1, c.col};
        if (shape.contains(above) && !t.at(above).empty() && x.back() >= t.at(above).front()) return false;
    }
    return true;
}

bool is_classical_set_valued(const SetValuedFilling& t) { return t.complete() && is_semistandard_set_valued(t); }

Composition residue_weight(const SetValuedFilling& t, int k)
{
    const int n = t.max_letter();
    Composition alpha(n, 0);
    for (int x = 1; x <= n; ++x) {
        std::set<Residue> res;
        for (const Cell& c : t.cells_with(x)) res.insert(Residue::of(c, k + 1));
        alpha[x - 1] = static_cast<int>(res.size());
    }
    return alpha;
}

bool is_k_tableau(const SetValuedFilling& t, int k)
{
    if (!is_classical_set_valued(t) || !is_core(t.shape(), k)) return false;
    for (const Cell& c : t.shape().cells())
        if (t.at(c).size() != 1) return false;
    return composition_size(residue_weight(t, k)) == core_to_bounded(t.shape(), k).size();
}

bool is_standard_affine_sv_tableau(const SetValuedFilling& t, int k)
{
    if (!t.complete() || !is_semistandard_set_valued(t)) return false;
    const int n = t.max_letter();
    for (int x = 1; x <= n; ++x) {
        const auto sub = t.restrict_to(x);
        if (!sub || !is_core(sub->shape(), k)) return false;
        const auto holding = t.cells_with(x);
        if (holding.empty()) return false;
        const Core gamma(sub->shape(), k);
        const auto corners = removable_corners(gamma, gamma.residue(holding.front()));
        if (std::set<Cell>(corners.begin(), corners.end()) != std::set<Cell>(holding.begin(), holding.end()))
            return false;
    }
    return true;
}

bool is_affine_sv_tableau(const SetValuedFilling& t, const Composition& alpha, int k)
{
    for (int a : alpha)
        if (a < 0) return false;
    if (t.max_letter() != composition_size(alpha)) return false;
    if (!is_standard_affine_sv_tableau(t, k)) return false;
    int lo = 1;
    for (int a : alpha) {
        const int hi = lo + a - 1;
        if (a == 0) continue;
        const auto word = lowest_reading_word(t, lo, hi);
        if (!std::is_sorted(word.begin(), word.end())) return false;
        std::set<Residue> residues;
        std::set<int> columns;
        int cells = 0;
        for (const Cell& c : t.shape().cells()) {
            const auto& letters = t.at(c);
            const bool hit = std::any_of(letters.begin(), letters.end(), [&](int x) { return x >= lo && x <= hi; });
            if (!hit) continue;
            ++cells;
            residues.insert(Residue::of(c, k + 1));
            columns.insert(c.col);
        }
        if (static_cast<int>(residues.size()) != a) return false;
        if (static_cast<int>(columns.size()) != cells) return false;
        lo = hi + 1;
    }
    return true;
}

SetValuedFilling destandardize(const SetValuedFilling& t, const Composition& alpha)
{
    std::vector<int> block_of(1, 0);
    for (std::size_t x = 0; x < alpha.size(); ++x)
        for (int j = 0; j < alpha[x]; ++j) block_of.push_back(static_cast<int>(x) + 1);
    SetValuedFilling out(t.shape());
    for (const Cell& c : t.shape().cells()) {
        for (int a : t.at(c)) {
            if (a >= static_cast<int>(block_of.size())) throw InvalidInput("letter outside the weight's alphabet");
            out.insert(c, block_of[a]);
        }
    }
    return out;
}

std::string render_text(const SetValuedFilling& t, int k, bool residues)
{
    const Partition& shape = t.shape();
    std::vector<std::vector<std::string>> text(shape.length());
    std::vector<std::size_t> width(shape.first_part(), 0);
    for (const Cell& c : shape.cells()) {
        std::string s = "{";
        const auto& letters = t.at(c);
        for (std::size_t i = 0; i < letters.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(letters[i]);
        }
        s += '}';
        if (residues) s += "_" + std::to_string(Residue::of(c, k + 1).value());
        width[c.col] = std::max(width[c.col], s.size());
        text[c.row].push_back(std::move(s));
    }
    std::ostringstream os;
    for (int r = shape.length() - 1; r >= 0; --r) {
        std::string line;
        for (int c = 0; c < shape.row(r); ++c) {
            if (c) line += ' ';
            std::string cell = text[r][c];
            cell.resize(width[c], ' ');
            line += cell;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

namespace {

void grow_fillings(const Partition& target, const Partition& inner, SetValuedFilling& t, int x, int n,
                   std::vector<SetValuedFilling>& out)
{
    if (x > n) {
        if (inner == target) out.push_back(t);
        return;
    }
    std::vector<Cell> options = removable_cells(inner);
    const std::size_t first_new = options.size();
    for (const Cell& c : addable_cells(inner))
        if (c.col < target.row(c.row)) options.push_back(c);
    const std::size_t m = options.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
        std::vector<Cell> fresh;
        for (std::size_t b = first_new; b < m; ++b)
            if (mask >> b & 1) fresh.push_back(options[b]);
        Partition next;
        try {
            next = add_cells(inner, fresh);
        } catch (const InvalidInput&) {
            continue;
        }
        SetValuedFilling grown = t;
        for (std::size_t b = 0; b < m; ++b)
            if (mask >> b & 1) grown.insert(options[b], x);
        if (!is_semistandard_set_valued(grown)) continue;
        grow_fillings(target, next, grown, x + 1, n, out);
    }
}

}  // namespace

std::vector<SetValuedFilling> standard_set_valued_fillings(const Partition& shape, int n)
{
    std::vector<SetValuedFilling> out;
    SetValuedFilling t(shape);
    grow_fillings(shape, Partition{}, t, 1, n, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace affk
