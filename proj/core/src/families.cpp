#include "affk/families.hpp"

#include "affk/error.hpp"
#include "affk/kostka.hpp"
#include "affk/triangular.hpp"

#include <mutex>
#include <sstream>

namespace affk {

void require_bounded(const Partition& lambda, int k)
{
    if (k < 1) throw InvalidInput("k must be at least 1");
    if (!lambda.is_bounded(k)) {
        std::ostringstream os;
        os << lambda << " is not " << k << "-bounded";
        throw InvalidInput(os.str());
    }
}

namespace {

SymFunc from_terms(Basis basis, const Terms& t, std::optional<int> deg_max = std::nullopt,
                   std::optional<int> k = std::nullopt)
{
    SymFunc f(basis, deg_max, k);
    for (const auto& [lambda, c] : t) f.add(lambda, c);
    return f;
}

struct SolvedFamily {
    std::mutex lock;
    std::map<Partition, Terms> solved;
};

}  // namespace

SymFunc grothendieck(const Partition& lambda, int deg_max)
{
    if (deg_max < lambda.size()) throw InvalidInput("degree bound below the degree of the partition");
    SymFunc f(Basis::m, deg_max);
    for (int d = lambda.size(); d <= deg_max; ++d)
        for (const Partition& mu : partitions_of(d, lambda.first_part() > 0 ? lambda.first_part() : -1))
            f.add(mu, sign_power(lambda.size() + mu.size()) * set_valued_kostka(lambda, mu));
    return f;
}

SymFunc dual_grothendieck(const Partition& lambda)
{
    static SolvedFamily family;
    std::lock_guard guard(family.lock);
    const int n = lambda.size();
    solve_unitriangular(
        family.solved, partitions_up_to(n), [](const Partition& mu) { return Terms{{mu, 1}}; },
        [](const Partition& mu) {
            SparseRow row;
            for (const Partition& nu : partitions_up_to(mu.size())) {
                if (nu == mu) continue;
                const Integer& c = set_valued_kostka(nu, mu);
                if (c != 0) row.emplace_back(nu, sign_power(nu.size() + mu.size()) * c);
            }
            return row;
        });
    return from_terms(Basis::h, family.solved.at(lambda));
}

SymFunc affine_grothendieck(const Partition& lambda, int k, int deg_max)
{
    require_bounded(lambda, k);
    if (deg_max < lambda.size()) throw InvalidInput("degree bound below the degree of the partition");
    const auto kostka = affine_kostka(k, deg_max);
    SymFunc f(Basis::quotient_m, deg_max, k);
    for (const auto& [mu, c] : kostka->row(lambda))
        if (mu.size() <= deg_max) f.add(mu, sign_power(lambda.size() + mu.size()) * c);
    return f;
}

SymFunc k_K_schur(const Partition& lambda, int k)
{
    require_bounded(lambda, k);
    static std::mutex lock;
    static std::map<int, std::map<Partition, Terms>> solved_by_k;
    std::lock_guard guard(lock);
    const int n = lambda.size();
    const auto kostka = affine_kostka(k, n);
    solve_unitriangular(
        solved_by_k[k], partitions_up_to(n, k), [](const Partition& mu) { return Terms{{mu, 1}}; },
        [&kostka](const Partition& mu) {
            SparseRow row;
            for (const auto& [nu, c] : kostka->column(mu))
                if (nu != mu) row.emplace_back(nu, sign_power(nu.size() + mu.size()) * c);
            return row;
        });
    return from_terms(Basis::h, solved_by_k[k].at(lambda));
}

SymFunc k_schur(const Partition& lambda, int k)
{
    require_bounded(lambda, k);
    static std::mutex lock;
    static std::map<int, std::map<Partition, Terms>> solved_by_k;
    std::lock_guard guard(lock);
    const int n = lambda.size();
    const auto kostka = ktableau_kostka(k, n);
    solve_unitriangular(
        solved_by_k[k], partitions_of(n, k), [](const Partition& mu) { return Terms{{mu, 1}}; },
        [&kostka](const Partition& mu) {
            SparseRow row;
            for (const auto& [nu, c] : kostka->column(mu))
                if (nu != mu) row.emplace_back(nu, c);
            return row;
        });
    return from_terms(Basis::h, solved_by_k[k].at(lambda));
}

SymFunc dual_k_schur(const Partition& lambda, int k)
{
    require_bounded(lambda, k);
    const auto kostka = ktableau_kostka(k, lambda.size());
    SymFunc f(Basis::quotient_m, std::nullopt, k);
    for (const auto& [mu, c] : kostka->row(lambda))
        if (mu.size() == lambda.size()) f.add(mu, c);
    return f;
}

SymFunc schur(const Partition& lambda) { return SymFunc::element(Basis::s, lambda); }

Terms h_to_k_K_schur(const SymFunc& f, int k)
{
    if (f.basis() != Basis::h) throw InvalidInput("expected an element in the h basis");
    const int n = f.max_degree().value_or(0);
    const auto kostka = affine_kostka(k, n);
    Terms out;
    for (const auto& [mu, c] : f.terms()) {
        require_bounded(mu, k);
        for (const auto& [lambda, a] : kostka->column(mu))
            axpy(out, c * sign_power(lambda.size() + mu.size()) * a, Terms{{lambda, 1}});
    }
    return out;
}

}  // namespace affk
