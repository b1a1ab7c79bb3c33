#pragma once

#include "affk/symfunc.hpp"

namespace affk {

/// Symmetric Grothendieck polynomial G_lambda in the m basis, truncated at
/// deg_max: signed counts of set-valued tableaux.
SymFunc grothendieck(const Partition& lambda, int deg_max);

/// Dual Grothendieck g_lambda in the h basis, from
/// h_mu = sum_lambda (-1)^{|lambda|+|mu|} K_{lambda mu} g_lambda with
/// set-valued Kostka numbers.
SymFunc dual_grothendieck(const Partition& lambda);

/// Affine stable Grothendieck G^(k)_lambda in the quotient monomial basis,
/// truncated at deg_max.
SymFunc affine_grothendieck(const Partition& lambda, int k, int deg_max);

/// k-K-Schur g^(k)_lambda in the h basis, by graded back-substitution on the
/// affine set-valued Kostka system.
SymFunc k_K_schur(const Partition& lambda, int k);

/// k-Schur s^(k)_lambda in the h basis, inverting the k-tableau Kostka system.
SymFunc k_schur(const Partition& lambda, int k);

/// Dual k-Schur in the quotient monomial basis: weight generating function
/// of k-tableaux.
SymFunc dual_k_schur(const Partition& lambda, int k);

/// Schur function as a single s-basis term.
SymFunc schur(const Partition& lambda);

/// f (h basis, k-bounded keys) written in the g^(k) basis: each h_mu is
/// replaced by sum_lambda (-1)^{|lambda|+|mu|} K^(k)_{lambda mu} g^(k)_lambda.
Terms h_to_k_K_schur(const SymFunc& f, int k);

/// Throws InvalidInput unless lambda is k-bounded (k >= 1).
void require_bounded(const Partition& lambda, int k);

}  // namespace affk
