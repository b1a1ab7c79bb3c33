#include "affk/omega.hpp"

#include "affk/error.hpp"

#include <mutex>

namespace affk {

SymFunc omega_classical(const SymFunc& f)
{
    switch (f.basis()) {
    case Basis::h:
    case Basis::e: {
        SymFunc out(f.basis() == Basis::h ? Basis::e : Basis::h, f.deg_max());
        for (const auto& [lambda, c] : f.terms()) out.add(lambda, c);
        return out;
    }
    case Basis::s: {
        SymFunc out(Basis::s, f.deg_max());
        for (const auto& [lambda, c] : f.terms()) out.add(conjugate(lambda), c);
        return out;
    }
    case Basis::m:
        return convert(omega_classical(convert(f, Basis::s)), Basis::m);
    case Basis::quotient_m:
        break;
    }
    throw InvalidInput("omega is not defined on the quotient ring");
}

namespace {

/// Omega(h_lambda) in the h basis, memoized.
const Terms& omega_of_h(const Partition& lambda)
{
    static std::mutex lock;
    static std::map<Partition, Terms> memo;
    {
        std::lock_guard guard(lock);
        auto it = memo.find(lambda);
        if (it != memo.end()) return it->second;
    }
    SymFunc product = SymFunc::one(Basis::e);
    for (int l : lambda.parts()) {
        SymFunc factor(Basis::e);
        for (int j = 1; j <= l; ++j) factor.add(Partition{j}, binomial(l - 1, j - 1));
        product = product * factor;
    }
    Terms value = convert(product, Basis::h).terms();
    std::lock_guard guard(lock);
    return memo.emplace(lambda, std::move(value)).first->second;
}

}  // namespace

SymFunc omega_big(const SymFunc& f)
{
    if (f.basis() != Basis::h) throw InvalidInput("Omega expects an element in the h basis");
    SymFunc out(Basis::h, f.deg_max());
    for (const auto& [lambda, c] : f.terms())
        for (const auto& [mu, a] : omega_of_h(lambda)) out.add(mu, c * a);
    return out;
}

}  // namespace affk
