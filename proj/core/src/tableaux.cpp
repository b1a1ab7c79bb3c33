#include "affk/tableaux.hpp"

#include "affk/error.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace affk {

namespace {

void check_weight(const Composition& alpha, int k)
{
    for (int a : alpha)
        if (a < 0 || (k > 0 && a > k)) throw InvalidInput("weight must be a k-bounded composition");
}

}  // namespace

std::vector<StripChain> enumerate_tableaux(const Partition& lambda, const Composition& alpha, int k)
{
    check_weight(alpha, k);
    const Core target = bounded_to_core(lambda, k);
    std::vector<StripChain> out;
    if (composition_size(alpha) < lambda.size()) return out;
    StripChain cur;
    std::function<void(std::size_t, const Core&)> rec = [&](std::size_t x, const Core& beta) {
        if (x == alpha.size()) {
            if (beta == target) out.push_back(cur);
            return;
        }
        for (StripPair& p : enumerate_sv_strips(beta, alpha[x])) {
            if (!target.shape().contains(p.gamma.shape())) continue;
            const Core next = p.gamma;
            cur.steps.push_back(std::move(p));
            rec(x + 1, next);
            cur.steps.pop_back();
        }
    };
    rec(0, Core(k));
    std::sort(out.begin(), out.end());
    return out;
}

SetValuedFilling chain_to_filling(const StripChain& chain, const Composition& alpha, int k)
{
    if (chain.steps.size() != alpha.size()) throw InvalidInput("chain length differs from the weight's length");
    if (chain.steps.empty()) return SetValuedFilling(Partition{});
    SetValuedFilling t(chain.steps.back().gamma.shape());
    int hi = 0;
    for (std::size_t x = 0; x < alpha.size(); ++x) {
        hi += alpha[x];
        const StripPair& step = chain.steps[x];
        std::vector<Cell> todo = skew_cells(step.gamma.shape(), step.rho);
        int letter = hi;
        while (!todo.empty()) {
            const auto right = std::max_element(todo.begin(), todo.end(),
                                                [](const Cell& a, const Cell& b) { return a.col < b.col; });
            const Residue i = Residue::of(*right, k + 1);
            std::vector<Cell> rest;
            for (const Cell& c : todo) {
                if (Residue::of(c, k + 1) == i)
                    t.insert(c, letter);
                else
                    rest.push_back(c);
            }
            todo = std::move(rest);
            --letter;
        }
        if (letter != hi - alpha[x]) throw InternalError("strip residues do not match its size");
    }
    return t;
}

std::vector<SetValuedFilling> affine_sv_tableaux(const Partition& lambda, const Composition& alpha, int k)
{
    std::vector<SetValuedFilling> out;
    for (const StripChain& chain : enumerate_tableaux(lambda, alpha, k)) out.push_back(chain_to_filling(chain, alpha, k));
    std::sort(out.begin(), out.end());
    return out;
}

Integer count_kostka(const Partition& lambda, const Composition& alpha, int k)
{
    check_weight(alpha, k);
    const Core target = bounded_to_core(lambda, k);
    if (composition_size(alpha) < lambda.size()) return 0;
    std::map<Core, Integer> layer{{Core(k), 1}};
    for (int a : alpha) {
        if (a == 0) continue;
        std::map<Core, Integer> next;
        for (const auto& [beta, n] : layer)
            for (const StripPair& p : enumerate_sv_strips(beta, a))
                if (target.shape().contains(p.gamma.shape())) next[p.gamma] += n;
        layer = std::move(next);
    }
    auto it = layer.find(target);
    return it == layer.end() ? Integer(0) : it->second;
}

namespace {

/// Partitions nu with nu/mu a horizontal strip and nu inside bound.
std::vector<Partition> horizontal_extensions(const Partition& mu, const Partition& bound)
{
    std::vector<Partition> out;
    const int rows = std::min(bound.length(), mu.length() + 1);
    std::vector<int> nu(rows, 0);
    std::function<void(int)> rec = [&](int r) {
        if (r == rows) {
            std::vector<int> parts(nu.begin(), nu.end());
            while (!parts.empty() && parts.back() == 0) parts.pop_back();
            out.emplace_back(std::move(parts));
            return;
        }
        const int lo = mu.row(r);
        const int hi = std::min(bound.row(r), r == 0 ? bound.row(0) : mu.row(r - 1));
        for (int v = lo; v <= hi; ++v) {
            nu[r] = v;
            rec(r + 1);
        }
    };
    if (!bound.contains(mu)) return out;
    rec(0);
    return out;
}

}  // namespace

Integer count_ssyt_kostka(const Partition& lambda, const Composition& alpha)
{
    check_weight(alpha, 0);
    if (composition_size(alpha) != lambda.size()) return 0;
    std::map<Partition, Integer> layer{{Partition{}, 1}};
    for (int a : alpha) {
        std::map<Partition, Integer> next;
        for (const auto& [mu, n] : layer)
            for (const Partition& nu : horizontal_extensions(mu, lambda))
                if (nu.size() - mu.size() == a) next[nu] += n;
        layer = std::move(next);
    }
    auto it = layer.find(lambda);
    return it == layer.end() ? Integer(0) : it->second;
}

Integer count_classical_kostka(const Partition& lambda, const Composition& alpha)
{
    check_weight(alpha, 0);
    if (composition_size(alpha) < lambda.size()) return 0;
    std::map<Partition, Integer> layer{{Partition{}, 1}};
    for (int a : alpha) {
        std::map<Partition, Integer> next;
        for (const auto& [mu, n] : layer) {
            const auto corners = removable_cells(mu);
            for (const Partition& nu : horizontal_extensions(mu, lambda)) {
                const int added = nu.size() - mu.size();
                if (added > a) continue;
                int free = 0;
                for (const Cell& c : corners)
                    if (!nu.contains(Cell{c.row + 1, c.col})) ++free;
                const Integer ways = binomial(free, a - added);
                if (ways != 0) next[nu] += n * ways;
            }
        }
        layer = std::move(next);
    }
    auto it = layer.find(lambda);
    return it == layer.end() ? Integer(0) : it->second;
}

std::vector<Core> horizontal_core_extensions(const Core& beta, const Partition& bound)
{
    std::vector<Core> out;
    for (const Partition& nu : horizontal_extensions(beta.shape(), bound))
        if (is_core(nu, beta.k())) out.emplace_back(nu, beta.k());
    return out;
}

std::vector<Core> affine_strip_extensions(const Core& beta, int r)
{
    const Partition& b = beta.shape();
    // a row of a horizontal strip on r residues gains at most r cells
    std::vector<int> bound{b.row(0) + r};
    for (int i = 1; i <= b.length(); ++i) bound.push_back(std::min(b.row(i - 1), b.row(i) + r));
    while (!bound.empty() && bound.back() == 0) bound.pop_back();
    std::vector<Core> out;
    for (const Core& gamma : horizontal_core_extensions(beta, Partition(bound)))
        if (is_affine_strip(gamma, beta, r)) out.push_back(gamma);
    std::sort(out.begin(), out.end());
    return out;
}

Integer count_ktab_kostka(const Partition& lambda, const Composition& alpha, int k)
{
    check_weight(alpha, k);
    const Core target = bounded_to_core(lambda, k);
    if (composition_size(alpha) != lambda.size()) return 0;
    std::map<Core, Integer> layer{{Core(k), 1}};
    for (int a : alpha) {
        std::map<Core, Integer> next;
        for (const auto& [beta, n] : layer)
            for (const Core& gamma : affine_strip_extensions(beta, a))
                if (target.shape().contains(gamma.shape())) next[gamma] += n;
        layer = std::move(next);
    }
    auto it = layer.find(target);
    return it == layer.end() ? Integer(0) : it->second;
}

}  // namespace affk
