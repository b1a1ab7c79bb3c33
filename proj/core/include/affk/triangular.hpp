#pragma once

#include "affk/integer.hpp"
#include "affk/partition.hpp"
#include "affk/symfunc.hpp"

#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace affk {

/// Off-diagonal coefficients a_{mu lambda} of one equation.
using SparseRow = std::vector<std::pair<Partition, Integer>>;

/// Back-substitution for a unitriangular system
///     rhs(mu) = x_mu + sum_lambda a_{mu lambda} x_lambda
/// processed in `order`. Every lambda referenced by row(mu) must be solved
/// before mu (either earlier in `order` or already in `solved`); otherwise
/// InternalError is thrown. Entries already in `solved` are kept.
void solve_unitriangular(std::map<Partition, Terms>& solved, const std::vector<Partition>& order,
                         const std::function<Terms(const Partition&)>& rhs,
                         const std::function<SparseRow(const Partition&)>& row);

}  // namespace affk
