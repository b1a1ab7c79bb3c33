#pragma once

#include "affk/filling.hpp"
#include "affk/integer.hpp"
#include "affk/strips.hpp"

#include <vector>

namespace affk {

/// steps[x-1] = (gamma^(x), rho^(x)); gamma^(0) is the empty core.
struct StripChain {
    std::vector<StripPair> steps;

    bool operator==(const StripChain&) const = default;
    auto operator<=>(const StripChain& o) const { return steps <=> o.steps; }
};

/// Chains of affine set-valued strips of sizes alpha_1, alpha_2, ... from
/// the empty core to the core of lambda. Zero parts give empty strips.
/// Sorted.
std::vector<StripChain> enumerate_tableaux(const Partition& lambda, const Composition& alpha, int k);

/// Standard filling of a chain: for each block, going down from its largest
/// letter, the rightmost unlabelled cell of gamma/rho fixes a residue and
/// the letter goes into every unlabelled cell of that residue.
SetValuedFilling chain_to_filling(const StripChain& chain, const Composition& alpha, int k);

/// chain_to_filling over enumerate_tableaux, sorted.
std::vector<SetValuedFilling> affine_sv_tableaux(const Partition& lambda, const Composition& alpha, int k);

/// Number of affine set-valued tableaux of shape core(lambda) and weight alpha.
Integer count_kostka(const Partition& lambda, const Composition& alpha, int k);
/// Number of set-valued tableaux of shape lambda and weight alpha.
Integer count_classical_kostka(const Partition& lambda, const Composition& alpha);
/// Number of semistandard tableaux of shape lambda and weight alpha.
Integer count_ssyt_kostka(const Partition& lambda, const Composition& alpha);
/// Number of k-tableaux of shape core(lambda) and weight alpha, built from
/// chains of affine strips.
Integer count_ktab_kostka(const Partition& lambda, const Composition& alpha, int k);

/// Cores gamma with gamma/beta a horizontal strip and gamma inside bound.
std::vector<Core> horizontal_core_extensions(const Core& beta, const Partition& bound);
/// Cores gamma with gamma/beta an affine r-strip.
std::vector<Core> affine_strip_extensions(const Core& beta, int r);

}  // namespace affk
