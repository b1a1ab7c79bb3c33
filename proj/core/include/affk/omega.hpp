#pragma once

#include "affk/symfunc.hpp"

namespace affk {

/// The classical involution: h_lambda <-> e_lambda, s_lambda -> s_lambda'.
/// h and e inputs return in the opposite basis, s in s, m in m.
SymFunc omega_classical(const SymFunc& f);

/// The algebra map with h_l -> sum_{j=1}^{l} C(l-1, j-1) e_j, applied to an
/// h-basis element and returned in the h basis.
SymFunc omega_big(const SymFunc& f);

}  // namespace affk
