#include "affk/pieri.hpp"

#include "affk/error.hpp"
#include "affk/families.hpp"

namespace affk {

namespace {

void check_pieri_input(const Partition& lambda, int r, int k)
{
    require_bounded(lambda, k);
    if (r < 0 || r > k) throw InvalidInput("Pieri rule needs 0 <= r <= k");
}

PieriExpansion collect(const Partition& lambda, int r, const std::vector<StripPair>& pairs)
{
    PieriExpansion out;
    for (const StripPair& p : pairs) {
        const Partition mu = core_to_bounded(p.gamma);
        const int sign = sign_power(lambda.size() + r - mu.size());
        out.strips.push_back({mu, p.rho, sign});
        axpy(out.terms, sign, Terms{{mu, 1}});
    }
    return out;
}

}  // namespace

PieriExpansion row_pieri(const Partition& lambda, int r, int k)
{
    check_pieri_input(lambda, r, k);
    return collect(lambda, r, enumerate_sv_strips(bounded_to_core(lambda, k), r));
}

PieriExpansion column_pieri(const Partition& lambda, int r, int k)
{
    check_pieri_input(lambda, r, k);
    return collect(lambda, r, enumerate_sv_strips_vertical(bounded_to_core(lambda, k), r));
}

Terms row_product_direct(const Partition& lambda, int r, int k)
{
    check_pieri_input(lambda, r, k);
    const SymFunc product = SymFunc::element(Basis::h, r == 0 ? Partition{} : Partition{r}) * k_K_schur(lambda, k);
    return h_to_k_K_schur(product, k);
}

SymFunc column_grothendieck_via_e(int r)
{
    if (r < 0) throw InvalidInput("column length must be nonnegative");
    if (r == 0) return SymFunc::one(Basis::h);
    SymFunc e(Basis::e);
    for (int j = 1; j <= r; ++j) e.add(Partition{j}, binomial(r - 1, j - 1));
    return convert(e, Basis::h);
}

Terms column_product_direct(const Partition& lambda, int r, int k)
{
    check_pieri_input(lambda, r, k);
    const SymFunc product = column_grothendieck_via_e(r) * k_K_schur(lambda, k);
    return h_to_k_K_schur(product, k);
}

}  // namespace affk
