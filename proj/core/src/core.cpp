#include "affk/core.hpp"

#include "affk/affine_words.hpp"
#include "affk/error.hpp"

#include <sstream>

namespace affk {

Core::Core(int k) : k_(k)
{
    if (k < 1) throw InvalidInput("k must be at least 1");
}

Core::Core(Partition shape, int k) : shape_(std::move(shape)), k_(k)
{
    if (k < 1) throw InvalidInput("k must be at least 1");
    if (!is_core(shape_, k)) {
        std::ostringstream os;
        os << shape_ << " is not a " << (k + 1) << "-core";
        throw InvalidInput(os.str());
    }
}

bool is_core(const Partition& lambda, int k)
{
    for (const Cell& c : lambda.cells())
        if (hook_length(lambda, c) == k + 1) return false;
    return true;
}

namespace {

std::vector<Corner> with_residues(const std::vector<Cell>& cells, int level)
{
    std::vector<Corner> out;
    out.reserve(cells.size());
    for (const Cell& c : cells) out.push_back({c, Residue::of(c, level)});
    return out;
}

std::vector<Cell> of_residue(const std::vector<Cell>& cells, Residue i, int level)
{
    std::vector<Cell> out;
    for (const Cell& c : cells)
        if (Residue::of(c, level) == i) out.push_back(c);
    return out;
}

}  // namespace

std::vector<Corner> addable_corners(const Core& gamma)
{
    return with_residues(addable_cells(gamma.shape()), gamma.level());
}

std::vector<Corner> removable_corners(const Core& gamma)
{
    return with_residues(removable_cells(gamma.shape()), gamma.level());
}

std::vector<Corner> extremal_corners(const Core& gamma)
{
    return with_residues(extremal_cells(gamma.shape()), gamma.level());
}

std::vector<Cell> addable_corners(const Core& gamma, Residue i)
{
    return of_residue(addable_cells(gamma.shape()), i, gamma.level());
}

std::vector<Cell> removable_corners(const Core& gamma, Residue i)
{
    return of_residue(removable_cells(gamma.shape()), i, gamma.level());
}

Partition core_to_bounded(const Core& gamma)
{
    const Partition& shape = gamma.shape();
    std::vector<int> rows;
    for (int r = 0; r < shape.length(); ++r) {
        int count = 0;
        for (int c = 0; c < shape.row(r); ++c)
            if (hook_length(shape, {r, c}) <= gamma.k()) ++count;
        rows.push_back(count);
    }
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    return Partition(std::move(rows));
}

Partition core_to_bounded(const Partition& lambda, int k) { return core_to_bounded(Core(lambda, k)); }

Core bounded_to_core(const Partition& lambda, int k)
{
    if (k < 1) throw InvalidInput("k must be at least 1");
    if (!lambda.is_bounded(k)) {
        std::ostringstream os;
        os << lambda << " is not " << k << "-bounded";
        throw InvalidInput(os.str());
    }
    Core gamma = evaluate(word_of_partition(lambda, k));
    if (core_to_bounded(gamma) != lambda) {
        std::ostringstream os;
        os << "core of " << lambda << " at k=" << k << " does not map back";
        throw InternalError(os.str());
    }
    return gamma;
}

Partition k_conjugate(const Partition& lambda, int k)
{
    const Core gamma = bounded_to_core(lambda, k);
    return core_to_bounded(Core(conjugate(gamma.shape()), k));
}

Core add_residue_corners(const Core& gamma, Residue i)
{
    const auto cells = addable_corners(gamma, i);
    if (cells.empty()) return gamma;
    return Core(add_cells(gamma.shape(), cells), gamma.k());
}

std::vector<Core> cores_up_to(int n, int k)
{
    std::vector<Core> out;
    for (const Partition& lambda : partitions_up_to(n, k)) out.push_back(bounded_to_core(lambda, k));
    return out;
}

std::ostream& operator<<(std::ostream& os, const Core& gamma) { return os << gamma.shape(); }

}  // namespace affk
