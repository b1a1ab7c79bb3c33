#include "affk/triangular.hpp"

#include "affk/error.hpp"

#include <sstream>

namespace affk {

void solve_unitriangular(std::map<Partition, Terms>& solved, const std::vector<Partition>& order,
                         const std::function<Terms(const Partition&)>& rhs,
                         const std::function<SparseRow(const Partition&)>& row)
{
    for (const Partition& mu : order) {
        if (solved.count(mu)) continue;
        Terms x = rhs(mu);
        for (const auto& [lambda, a] : row(mu)) {
            if (lambda == mu) throw InternalError("diagonal entry passed as off-diagonal");
            auto it = solved.find(lambda);
            if (it == solved.end()) {
                std::ostringstream os;
                os << "triangular solve reached " << mu << " before " << lambda;
                throw InternalError(os.str());
            }
            axpy(x, -a, it->second);
        }
        solved.emplace(mu, std::move(x));
    }
}

}  // namespace affk
