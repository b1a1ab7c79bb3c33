#include "affk/strips.hpp"

#include "affk/affine_words.hpp"
#include "affk/error.hpp"

#include <algorithm>
#include <set>

namespace affk {

bool is_horizontal_strip(const Partition& gamma, const Partition& rho)
{
    if (!gamma.contains(rho)) throw InvalidInput("horizontal strip test requires rho inside gamma");
    for (int r = 1; r < gamma.length(); ++r)
        if (gamma.row(r) > rho.row(r - 1)) return false;
    return true;
}

std::vector<Residue> skew_residues(const Partition& outer, const Partition& inner, int k)
{
    std::vector<Residue> out;
    for (const Cell& c : skew_cells(outer, inner)) out.push_back(Residue::of(c, k + 1));
    return out;
}

namespace {

std::set<Residue> residue_set(const Partition& outer, const Partition& inner, int k)
{
    const auto v = skew_residues(outer, inner, k);
    return {v.begin(), v.end()};
}

}  // namespace

bool is_affine_strip(const Core& gamma, const Core& beta, int r)
{
    if (gamma.k() != beta.k()) throw InvalidInput("affine strip between cores of different levels");
    if (!gamma.shape().contains(beta.shape())) return false;
    if (!is_horizontal_strip(gamma.shape(), beta.shape())) return false;
    if (core_to_bounded(gamma).size() - core_to_bounded(beta).size() != r) return false;
    return static_cast<int>(residue_set(gamma.shape(), beta.shape(), gamma.k()).size()) == r;
}

bool is_blocked(const Partition& gamma, Cell c) { return gamma.contains(Cell{c.row + 1, c.col}); }

bool is_affine_sv_strip(const AffineSVStrip& s)
{
    const int k = s.gamma.k();
    if (s.beta.k() != k) return false;
    if (s.r < 0 || s.r > k) return false;
    const Partition& gamma = s.gamma.shape();
    const Partition& beta = s.beta.shape();
    if (!gamma.contains(beta) || !beta.contains(s.rho)) return false;

    if (!is_horizontal_strip(gamma, s.rho)) return false;

    const auto lost = residue_set(beta, s.rho, k);
    const int m = static_cast<int>(lost.size());
    if (s.r - m < 0 || !is_affine_strip(s.gamma, s.beta, s.r - m)) return false;

    const auto removable = removable_cells(beta);
    const std::set<Cell> removable_set(removable.begin(), removable.end());
    const auto marked = skew_cells(beta, s.rho);
    const std::set<Cell> marked_set(marked.begin(), marked.end());
    for (const Cell& c : marked)
        if (!removable_set.count(c)) return false;
    for (const Cell& c : removable) {
        if (!lost.count(Residue::of(c, k + 1))) continue;
        if (is_blocked(gamma, c)) continue;
        if (!marked_set.count(c)) return false;
    }
    return true;
}

std::vector<StripPair> enumerate_sv_strips(const Core& beta, int r)
{
    const int k = beta.k();
    if (r < 0 || r > k) throw InvalidInput("strip size must lie in [0,k]");
    std::vector<StripPair> out;
    for (const auto& subset : residue_subsets(k, r)) {
        const ResidueWord block = cyclically_decreasing_word({subset.begin(), subset.end()}, k);
        Core cur = beta;
        std::vector<Cell> marked;
        bool alive = true;
        for (auto it = block.letters().rbegin(); it != block.letters().rend(); ++it) {
            auto cells = addable_corners(cur, *it);
            if (!cells.empty()) {
                cur = Core(add_cells(cur.shape(), cells), k);
            } else {
                cells = removable_corners(cur, *it);
                if (cells.empty()) {
                    alive = false;
                    break;
                }
            }
            marked.insert(marked.end(), cells.begin(), cells.end());
        }
        if (!alive) continue;
        Partition rho;
        try {
            rho = remove_cells(cur.shape(), marked);
        } catch (const InvalidInput&) {
            throw InternalError("marked cells of a strip do not leave a partition");
        }
        out.push_back({std::move(cur), std::move(rho)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<StripPair> enumerate_sv_strips_vertical(const Core& beta, int r)
{
    const int k = beta.k();
    if (r < 0 || r > k) throw InvalidInput("strip size must lie in [0,k]");
    const Core flipped(conjugate(beta.shape()), k);
    std::vector<StripPair> out;
    for (const StripPair& p : enumerate_sv_strips(flipped, r))
        out.push_back({Core(conjugate(p.gamma.shape()), k), conjugate(p.rho)});
    std::sort(out.begin(), out.end());
    return out;
}

AffineSVStrip peel(const AffineSVStrip& s)
{
    if (s.r <= 0) throw InvalidInput("cannot peel an empty strip");
    const int k = s.gamma.k();
    const auto cells = skew_cells(s.gamma.shape(), s.rho);
    if (cells.empty()) throw InvalidInput("strip has no cells to peel");
    const Cell rightmost = *std::max_element(cells.begin(), cells.end(),
                                             [](const Cell& a, const Cell& b) { return a.col < b.col; });
    const Residue i = Residue::of(rightmost, k + 1);
    const auto outer = residue_set(s.gamma.shape(), s.beta.shape(), k);
    if (outer.count(i)) {
        const auto corners = removable_corners(s.gamma, i);
        return {Core(remove_cells(s.gamma.shape(), corners), k), s.beta, s.rho, s.r - 1};
    }
    std::vector<Cell> grow;
    for (const Cell& c : addable_cells(s.rho))
        if (Residue::of(c, k + 1) == i) grow.push_back(c);
    return {s.gamma, s.beta, add_cells(s.rho, grow), s.r - 1};
}

}  // namespace affk
