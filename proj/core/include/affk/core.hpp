#pragma once

#include "affk/partition.hpp"

#include <vector>

namespace affk {

/// A (k+1)-core: a partition with no hook of length k+1.
class Core {
public:
    /// Empty core at level k+1.
    explicit Core(int k);
    /// Throws InvalidInput if k < 1 or shape has a hook of length k+1.
    Core(Partition shape, int k);

    const Partition& shape() const { return shape_; }
    int k() const { return k_; }
    int level() const { return k_ + 1; }
    int size() const { return shape_.size(); }

    Residue residue(Cell c) const { return Residue::of(c, level()); }

    bool operator==(const Core& o) const { return k_ == o.k_ && shape_ == o.shape_; }
    auto operator<=>(const Core& o) const
    {
        if (auto c = k_ <=> o.k_; c != 0) return c;
        return shape_ <=> o.shape_;
    }

private:
    Partition shape_;
    int k_ = 1;
};

struct Corner {
    Cell cell;
    Residue residue;

    bool operator==(const Corner&) const = default;
};

bool is_core(const Partition& lambda, int k);

std::vector<Corner> addable_corners(const Core& gamma);
std::vector<Corner> removable_corners(const Core& gamma);
std::vector<Corner> extremal_corners(const Core& gamma);

/// Addable / removable cells of a given residue.
std::vector<Cell> addable_corners(const Core& gamma, Residue i);
std::vector<Cell> removable_corners(const Core& gamma, Residue i);

/// The k-bounded partition whose row r counts cells of row r with hook <= k.
Partition core_to_bounded(const Core& gamma);
/// Throws InvalidInput if lambda is not a (k+1)-core.
Partition core_to_bounded(const Partition& lambda, int k);

/// Inverse of core_to_bounded. Throws InvalidInput unless lambda_1 <= k.
Core bounded_to_core(const Partition& lambda, int k);

/// core_to_bounded(conjugate(bounded_to_core(lambda))).
Partition k_conjugate(const Partition& lambda, int k);

/// gamma plus all its addable i-corners (gamma itself if there are none).
Core add_residue_corners(const Core& gamma, Residue i);

/// All (k+1)-cores whose bounded partition has degree <= n, graded ascending.
std::vector<Core> cores_up_to(int n, int k);

std::ostream& operator<<(std::ostream& os, const Core& gamma);

}  // namespace affk
