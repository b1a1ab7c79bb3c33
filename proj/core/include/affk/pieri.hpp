#pragma once

#include "affk/strips.hpp"
#include "affk/symfunc.hpp"

#include <vector>

namespace affk {

/// One strip behind a Pieri term, with its sign (-1)^{|lambda|+r-|mu|}.
struct PieriStrip {
    Partition mu;
    Partition rho;
    int sign = 1;
};

struct PieriExpansion {
    /// mu -> coefficient of g^(k)_mu, multiplicities merged.
    Terms terms;
    /// The underlying strips in enumeration order.
    std::vector<PieriStrip> strips;
};

/// g^(k)_r * g^(k)_lambda = h_r * g^(k)_lambda as a signed sum over affine
/// set-valued r-strips on core(lambda). Throws InvalidInput if r > k or
/// lambda is not k-bounded.
PieriExpansion row_pieri(const Partition& lambda, int r, int k);

/// g^(k)_{1^r} * g^(k)_lambda over vertical strips.
PieriExpansion column_pieri(const Partition& lambda, int r, int k);

/// h_r * g^(k)_lambda computed in the h basis and rewritten in the g^(k)
/// basis through the Kostka system.
Terms row_product_direct(const Partition& lambda, int r, int k);

/// g_{1^r} * g^(k)_lambda with g_{1^r} = sum_j C(r-1, j-1) e_j, computed in
/// the h basis and rewritten in the g^(k) basis.
Terms column_product_direct(const Partition& lambda, int r, int k);

/// sum_{j=1}^{r} C(r-1, j-1) e_j in the h basis (1 when r = 0).
SymFunc column_grothendieck_via_e(int r);

}  // namespace affk
