#pragma once

#include "affk/core.hpp"

#include <vector>

namespace affk {

/// The data (gamma/beta, rho) of an affine set-valued r-strip.
struct AffineSVStrip {
    Core gamma;
    Core beta;
    Partition rho;
    int r = 0;
};

/// Outcome (gamma, rho) of one strip added to a fixed inner core.
struct StripPair {
    Core gamma;
    Partition rho;

    bool operator==(const StripPair&) const = default;
    auto operator<=>(const StripPair& o) const
    {
        if (auto c = gamma <=> o.gamma; c != 0) return c;
        return rho <=> o.rho;
    }
};

/// Every column of gamma/rho has at most one cell. Throws InvalidInput
/// unless rho is contained in gamma.
bool is_horizontal_strip(const Partition& gamma, const Partition& rho);

/// gamma/beta horizontal, |p(gamma)| - |p(beta)| = r, and gamma/beta on r
/// distinct residues. False when beta is not inside gamma; throws
/// InvalidInput when the levels differ.
bool is_affine_strip(const Core& gamma, const Core& beta, int r);

/// Cells of beta directly below a cell of gamma.
bool is_blocked(const Partition& gamma, Cell c);

/// Literal check of the three strip conditions: gamma/rho horizontal;
/// gamma/beta an affine (r - m)-strip with m the number of residues of
/// beta/rho; beta/rho made of beta-removable corners and containing every
/// unblocked beta-removable corner of each residue it meets.
bool is_affine_sv_strip(const AffineSVStrip& s);

/// All (gamma, rho) forming an affine set-valued r-strip over beta, one per
/// r-subset of residues that survives, sorted. Throws InvalidInput if
/// r < 0 or r > k.
std::vector<StripPair> enumerate_sv_strips(const Core& beta, int r);

/// The vertical analogue: strips over the k-conjugate core, transported
/// back by conjugating both shapes.
std::vector<StripPair> enumerate_sv_strips_vertical(const Core& beta, int r);

/// One peeling step on a strip with r > 0: take the residue i of the
/// rightmost cell of gamma/rho; if i occurs in gamma/beta drop gamma's
/// removable i-corners, otherwise add rho's addable i-corners. The result
/// has size r - 1.
AffineSVStrip peel(const AffineSVStrip& s);

/// Residues of the cells of outer/inner.
std::vector<Residue> skew_residues(const Partition& outer, const Partition& inner, int k);

}  // namespace affk
