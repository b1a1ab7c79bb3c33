#pragma once

#include "affk/core.hpp"

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace affk {

class SetValuedFilling;

/// A word over residues {0..k}. Letters are stored as written; the
/// rightmost letter acts first.
class ResidueWord {
public:
    explicit ResidueWord(int k) : k_(k) {}
    /// Throws InvalidInput if a letter is outside [0, k].
    ResidueWord(const std::vector<int>& letters, int k);

    int k() const { return k_; }
    int level() const { return k_ + 1; }
    const std::vector<Residue>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    std::vector<int> values() const;

    bool operator==(const ResidueWord&) const = default;

private:
    std::vector<Residue> letters_;
    int k_;
};

/// "1 2 1 0".
std::string format_word(const ResidueWord& w);
/// Space- or comma-separated residues.
ResidueWord parse_word(std::string_view text, int k);

/// Grassmannian element of the affine symmetric group, represented by its core.
class GrassmannianElement {
public:
    explicit GrassmannianElement(Core core) : core_(std::move(core)) {}

    const Core& core() const { return core_; }
    int k() const { return core_.k(); }
    /// Coxeter length, equal to |core_to_bounded(core)|.
    int length() const { return core_to_bounded(core_).size(); }

    bool operator==(const GrassmannianElement&) const = default;

private:
    Core core_;
};

/// Blocks w^1, w^2, ... in the order they act: blocks[0] acts first.
struct Factorization {
    std::vector<ResidueWord> blocks;

    bool operator==(const Factorization&) const = default;
};

/// Residues of lambda read right to left, top row first.
ResidueWord word_of_partition(const Partition& lambda, int k);

/// One letter of the 0-Hecke action on cores: add the addable i-corners;
/// keep gamma if it only has removable i-corners; nullopt (dead) otherwise.
std::optional<Core> act(const Core& gamma, Residue i);

/// Applies the letters right to left starting from start (the empty core by
/// default). Throws DeadWord when a letter has neither an addable nor a
/// removable corner.
Core evaluate(const ResidueWord& w);
Core evaluate(const ResidueWord& w, const Core& start);
std::optional<Core> try_evaluate(const ResidueWord& w, const Core& start);

bool is_cyclically_decreasing(const ResidueWord& w);

/// Canonical cyclically decreasing word on S: maximal cyclic runs of S in
/// increasing order of their smallest element, each written decreasing.
/// Throws InvalidInput if S is all of {0..k} or has out-of-range entries.
ResidueWord cyclically_decreasing_word(const std::set<int>& s, int k);

/// All ways to write w_lambda as a product of cyclically decreasing blocks
/// of lengths alpha_1, alpha_2, ... (alpha_1 acting first). Zero parts give
/// empty blocks.
std::vector<Factorization> alpha_factorizations(const Partition& lambda, const Composition& alpha, int k);

/// Letter x goes into every addable-or-removable corner of residue i_x,
/// letters read right to left. Throws DeadWord for a dead word.
SetValuedFilling standard_tableau_of_word(const ResidueWord& w);

/// Subsets of {0..k} of size r, each as a sorted vector, in lexicographic order.
std::vector<std::vector<int>> residue_subsets(int k, int r);

}  // namespace affk
