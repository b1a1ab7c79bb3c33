#include "affk/symfunc.hpp"

#include "affk/error.hpp"
#include "affk/tableaux.hpp"

#include <algorithm>
#include <mutex>

namespace affk {

std::string_view basis_name(Basis b)
{
    switch (b) {
    case Basis::m:
        return "m";
    case Basis::h:
        return "h";
    case Basis::e:
        return "e";
    case Basis::s:
        return "s";
    case Basis::quotient_m:
        return "m";
    }
    return "?";
}

SymFunc::SymFunc(Basis basis, std::optional<int> deg_max, std::optional<int> k)
    : basis_(basis), deg_max_(deg_max), k_(k)
{
    if (basis == Basis::quotient_m && !k) throw InvalidInput("quotient monomial basis needs k");
    if (k && *k < 1) throw InvalidInput("k must be at least 1");
    if (deg_max && *deg_max < 0) throw InvalidInput("degree bound must be nonnegative");
}

SymFunc SymFunc::one(Basis basis, std::optional<int> deg_max, std::optional<int> k)
{
    return element(basis, Partition{}, deg_max, k);
}

SymFunc SymFunc::element(Basis basis, const Partition& lambda, std::optional<int> deg_max, std::optional<int> k)
{
    SymFunc f(basis, deg_max, k);
    f.add(lambda, 1);
    return f;
}

Integer SymFunc::coeff(const Partition& lambda) const
{
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Integer(0) : it->second;
}

bool SymFunc::keeps(const Partition& lambda) const
{
    if (deg_max_ && lambda.size() > *deg_max_) return false;
    if (basis_ == Basis::quotient_m && !lambda.is_bounded(*k_)) return false;
    return true;
}

void SymFunc::add(const Partition& lambda, const Integer& c)
{
    if (c == 0 || !keeps(lambda)) return;
    auto [it, fresh] = terms_.try_emplace(lambda, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::optional<int> SymFunc::min_degree() const
{
    std::optional<int> d;
    for (const auto& [lambda, c] : terms_)
        if (!d || lambda.size() < *d) d = lambda.size();
    return d;
}

std::optional<int> SymFunc::max_degree() const
{
    std::optional<int> d;
    for (const auto& [lambda, c] : terms_)
        if (!d || lambda.size() > *d) d = lambda.size();
    return d;
}

SymFunc SymFunc::homogeneous(int d) const
{
    SymFunc out(basis_, deg_max_, k_);
    for (const auto& [lambda, c] : terms_)
        if (lambda.size() == d) out.terms_.emplace(lambda, c);
    return out;
}

SymFunc SymFunc::truncated(int d) const
{
    SymFunc out(basis_, deg_max_ ? std::min(*deg_max_, d) : d, k_);
    for (const auto& [lambda, c] : terms_) out.add(lambda, c);
    return out;
}

void SymFunc::check_compatible(const SymFunc& o) const
{
    if (basis_ != o.basis_) throw InvalidInput("symmetric functions in different bases");
    if (basis_ == Basis::quotient_m && k_ != o.k_) throw InvalidInput("quotient elements at different k");
}

namespace {

std::optional<int> min_bound(std::optional<int> a, std::optional<int> b)
{
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

}  // namespace

SymFunc& SymFunc::operator+=(const SymFunc& o)
{
    check_compatible(o);
    deg_max_ = min_bound(deg_max_, o.deg_max_);
    if (deg_max_) *this = truncated(*deg_max_);
    for (const auto& [lambda, c] : o.terms_) add(lambda, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o)
{
    check_compatible(o);
    deg_max_ = min_bound(deg_max_, o.deg_max_);
    if (deg_max_) *this = truncated(*deg_max_);
    for (const auto& [lambda, c] : o.terms_) add(lambda, -c);
    return *this;
}

SymFunc& SymFunc::operator*=(const Integer& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [lambda, v] : terms_) v *= c;
    return *this;
}

SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
SymFunc operator*(SymFunc a, const Integer& c) { return a *= c; }
SymFunc operator*(const Integer& c, SymFunc a) { return a *= c; }

void axpy(Terms& a, const Integer& c, const Terms& b)
{
    if (c == 0) return;
    for (const auto& [lambda, v] : b) {
        auto [it, fresh] = a.try_emplace(lambda, c * v);
        if (!fresh) {
            it->second += c * v;
            if (it->second == 0) a.erase(it);
        }
    }
}

namespace {

Partition concat(const Partition& a, const Partition& b)
{
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Partition::from_unsorted(std::move(parts));
}

/// Coefficients of m_nu in m_lambda * m_mu.
Terms monomial_product(const Partition& lambda, const Partition& mu, std::optional<int> deg_max)
{
    Terms out;
    if (deg_max && lambda.size() + mu.size() > *deg_max) return out;
    const int len = lambda.length() + mu.length();
    Composition a = lambda.parts();
    a.resize(len, 0);
    Composition b = mu.parts();
    b.resize(len, 0);
    const auto ra = rearrangements(a);
    const auto rb = rearrangements(b);
    for (const auto& x : ra) {
        for (const auto& y : rb) {
            bool decreasing = true;
            for (int i = 1; i < len && decreasing; ++i)
                if (x[i] + y[i] > x[i - 1] + y[i - 1]) decreasing = false;
            if (!decreasing) continue;
            Composition sum(len);
            for (int i = 0; i < len; ++i) sum[i] = x[i] + y[i];
            out[Partition::from_unsorted(sum)] += 1;
        }
    }
    return out;
}

}  // namespace

SymFunc operator*(const SymFunc& a, const SymFunc& b)
{
    if (a.basis() != b.basis()) throw InvalidInput("symmetric functions in different bases");
    if (a.basis() == Basis::quotient_m && a.k() != b.k()) throw InvalidInput("quotient elements at different k");
    const auto bound = min_bound(a.deg_max(), b.deg_max());
    if (a.basis() == Basis::s) {
        const SymFunc p = convert(a, Basis::m) * convert(b, Basis::m);
        return convert(p, Basis::s);
    }
    SymFunc out(a.basis(), bound, a.k());
    for (const auto& [la, ca] : a.terms()) {
        for (const auto& [lb, cb] : b.terms()) {
            if (bound && la.size() + lb.size() > *bound) continue;
            if (a.basis() == Basis::h || a.basis() == Basis::e) {
                out.add(concat(la, lb), ca * cb);
            } else {
                for (const auto& [nu, n] : monomial_product(la, lb, bound)) out.add(nu, ca * cb * n);
            }
        }
    }
    return out;
}

const Integer& schur_kostka(const Partition& lambda, const Partition& mu)
{
    static std::mutex lock;
    static std::map<std::pair<Partition, Partition>, Integer> memo;
    std::lock_guard guard(lock);
    auto key = std::make_pair(lambda, mu);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, count_ssyt_kostka(lambda, mu.parts())).first;
    return it->second;
}

Partition lex_max_key(const Terms& f) { return f.rbegin()->first; }
Partition lex_min_key(const Terms& f) { return f.begin()->first; }

Partition lowest_degree_lex_max_key(const Terms& f)
{
    const Partition* best = nullptr;
    for (const auto& [lambda, c] : f)
        if (!best || lambda.size() < best->size() || (lambda.size() == best->size() && *best < lambda)) best = &lambda;
    return *best;
}

Partition highest_degree_lex_min_key(const Terms& f)
{
    const Partition* best = nullptr;
    for (const auto& [lambda, c] : f)
        if (!best || lambda.size() > best->size() || (lambda.size() == best->size() && lambda < *best)) best = &lambda;
    return *best;
}

Terms peel(Terms f, const std::function<Partition(const Terms&)>& select,
           const std::function<std::pair<Partition, Terms>(const Partition&)>& element, std::size_t limit)
{
    Terms out;
    std::size_t steps = 0;
    while (!f.empty()) {
        if (++steps > limit) throw InternalError("triangular expansion did not terminate");
        const Partition key = select(f);
        const Integer c = f.at(key);
        auto [nu, expansion] = element(key);
        auto lead = expansion.find(key);
        if (lead == expansion.end() || lead->second != 1)
            throw InternalError("basis element does not have a unit leading term");
        out[nu] += c;
        axpy(f, -c, expansion);
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

namespace {

Terms schur_in_m(const Partition& lambda)
{
    Terms out;
    for (const Partition& mu : partitions_of(lambda.size())) {
        const Integer& c = schur_kostka(lambda, mu);
        if (c != 0) out[mu] = c;
    }
    return out;
}

Terms h_in_s(const Partition& mu)
{
    Terms out;
    for (const Partition& lambda : partitions_of(mu.size())) {
        const Integer& c = schur_kostka(lambda, mu);
        if (c != 0) out[lambda] = c;
    }
    return out;
}

Terms e_in_s(const Partition& mu)
{
    Terms out;
    for (const Partition& lambda : partitions_of(mu.size())) {
        const Integer& c = schur_kostka(lambda, mu);
        if (c != 0) out[conjugate(lambda)] = c;
    }
    return out;
}

Terms to_schur(const SymFunc& f)
{
    Terms out;
    switch (f.basis()) {
    case Basis::s:
        return f.terms();
    case Basis::h:
        for (const auto& [mu, c] : f.terms()) axpy(out, c, h_in_s(mu));
        return out;
    case Basis::e:
        for (const auto& [mu, c] : f.terms()) axpy(out, c, e_in_s(mu));
        return out;
    case Basis::m:
        return peel(f.terms(), lex_max_key, [](const Partition& key) { return std::make_pair(key, schur_in_m(key)); });
    case Basis::quotient_m:
        break;
    }
    throw InvalidInput("elements of the quotient ring cannot be converted to that basis");
}

Terms from_schur(const Terms& f, Basis target)
{
    Terms out;
    switch (target) {
    case Basis::s:
        return f;
    case Basis::m:
    case Basis::quotient_m:
        for (const auto& [lambda, c] : f) axpy(out, c, schur_in_m(lambda));
        return out;
    case Basis::h:
        return peel(f, lex_min_key, [](const Partition& key) { return std::make_pair(key, h_in_s(key)); });
    case Basis::e:
        return peel(f, lex_max_key, [](const Partition& key) {
            const Partition mu = conjugate(key);
            return std::make_pair(mu, e_in_s(mu));
        });
    }
    return out;
}

}  // namespace

SymFunc convert(const SymFunc& f, Basis target, std::optional<int> k)
{
    if (f.basis() == Basis::quotient_m) {
        if (target != Basis::quotient_m) throw InvalidInput("elements of the quotient ring cannot be converted to that basis");
        if (k && k != f.k()) throw InvalidInput("cannot change k of a quotient element");
        return f;
    }
    if (target == Basis::quotient_m && !k) throw InvalidInput("conversion to the quotient ring needs k");
    SymFunc out(target, f.deg_max(), target == Basis::quotient_m ? k : f.k());
    if (f.basis() == target) return f;
    Terms t;
    if (target == Basis::quotient_m && f.basis() == Basis::m)
        t = f.terms();
    else
        t = from_schur(to_schur(f), target);
    for (const auto& [lambda, c] : t) out.add(lambda, c);
    return out;
}

Integer hall_inner(const SymFunc& f, const SymFunc& g)
{
    if (f.basis() != Basis::h) throw InvalidInput("left argument of the Hall pairing must be in the h basis");
    if (g.basis() != Basis::m && g.basis() != Basis::quotient_m)
        throw InvalidInput("right argument of the Hall pairing must be in the m basis");
    Integer total = 0;
    for (const auto& [lambda, c] : f.terms()) {
        auto it = g.terms().find(lambda);
        if (it != g.terms().end()) total += c * it->second;
    }
    return total;
}

}  // namespace affk
