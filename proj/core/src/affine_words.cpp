#include "affk/affine_words.hpp"

#include "affk/error.hpp"
#include "affk/filling.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace affk {

ResidueWord::ResidueWord(const std::vector<int>& letters, int k) : k_(k)
{
    if (k < 1) throw InvalidInput("k must be at least 1");
    for (int a : letters) {
        if (a < 0 || a > k) throw InvalidInput("residue " + std::to_string(a) + " outside [0," + std::to_string(k) + "]");
        letters_.emplace_back(a, k + 1);
    }
}

std::vector<int> ResidueWord::values() const
{
    std::vector<int> out;
    for (Residue r : letters_) out.push_back(r.value());
    return out;
}

std::string format_word(const ResidueWord& w)
{
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(w.letters()[i].value());
    }
    return out;
}

ResidueWord parse_word(std::string_view text, int k)
{
    std::string s(text);
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream is(s);
    std::vector<int> letters;
    std::string tok;
    while (is >> tok) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(tok, &used);
            if (used != tok.size()) throw InvalidInput("bad residue '" + tok + "'");
            letters.push_back(v);
        } catch (const std::logic_error&) {
            throw InvalidInput("bad residue '" + tok + "'");
        }
    }
    return ResidueWord(letters, k);
}

ResidueWord word_of_partition(const Partition& lambda, int k)
{
    if (!lambda.is_bounded(k)) throw InvalidInput("partition is not k-bounded");
    std::vector<int> letters;
    for (int r = lambda.length() - 1; r >= 0; --r)
        for (int c = lambda.row(r) - 1; c >= 0; --c) letters.push_back(Residue::of({r, c}, k + 1).value());
    return ResidueWord(letters, k);
}

std::optional<Core> act(const Core& gamma, Residue i)
{
    const auto add = addable_corners(gamma, i);
    if (!add.empty()) return Core(add_cells(gamma.shape(), add), gamma.k());
    if (!removable_corners(gamma, i).empty()) return gamma;
    return std::nullopt;
}

std::optional<Core> try_evaluate(const ResidueWord& w, const Core& start)
{
    if (w.k() != start.k()) throw InvalidInput("word and core have different k");
    Core cur = start;
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
        auto next = act(cur, *it);
        if (!next) return std::nullopt;
        cur = std::move(*next);
    }
    return cur;
}

Core evaluate(const ResidueWord& w, const Core& start)
{
    auto out = try_evaluate(w, start);
    if (!out) throw DeadWord("word " + format_word(w) + " is dead");
    return *out;
}

Core evaluate(const ResidueWord& w) { return evaluate(w, Core(w.k())); }

bool is_cyclically_decreasing(const ResidueWord& w)
{
    const int n = w.level();
    std::vector<int> pos(n, -1);
    for (std::size_t p = 0; p < w.size(); ++p) {
        const int a = w.letters()[p].value();
        if (pos[a] >= 0) return false;
        pos[a] = static_cast<int>(p);
    }
    for (int j = 0; j < n; ++j) {
        const int below = (j + n - 1) % n;
        if (pos[j] >= 0 && pos[below] >= 0 && pos[j] > pos[below]) return false;
    }
    return true;
}

ResidueWord cyclically_decreasing_word(const std::set<int>& s, int k)
{
    const int n = k + 1;
    for (int a : s)
        if (a < 0 || a > k) throw InvalidInput("residue outside [0,k]");
    if (static_cast<int>(s.size()) == n) throw InvalidInput("a cyclically decreasing word cannot use every residue");
    std::vector<int> letters;
    for (int a : s) {
        // a starts a run when a-1 is missing
        if (s.count((a + n - 1) % n)) continue;
        int len = 0;
        while (s.count((a + len) % n)) ++len;
        for (int d = len - 1; d >= 0; --d) letters.push_back((a + d) % n);
    }
    return ResidueWord(letters, k);
}

std::vector<std::vector<int>> residue_subsets(int k, int r)
{
    std::vector<std::vector<int>> out;
    if (r < 0 || r > k + 1) return out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (int a = next; a <= k; ++a) {
            cur.push_back(a);
            rec(a + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<Factorization> alpha_factorizations(const Partition& lambda, const Composition& alpha, int k)
{
    for (int a : alpha)
        if (a < 0 || a > k) throw InvalidInput("weight is not a k-bounded composition");
    const Core target = bounded_to_core(lambda, k);
    std::vector<Factorization> out;
    Factorization cur;
    std::function<void(std::size_t, const Core&)> rec = [&](std::size_t x, const Core& gamma) {
        if (x == alpha.size()) {
            if (gamma == target) out.push_back(cur);
            return;
        }
        for (const auto& subset : residue_subsets(k, alpha[x])) {
            ResidueWord block = cyclically_decreasing_word({subset.begin(), subset.end()}, k);
            auto next = try_evaluate(block, gamma);
            if (!next || !target.shape().contains(next->shape())) continue;
            cur.blocks.push_back(std::move(block));
            rec(x + 1, *next);
            cur.blocks.pop_back();
        }
    };
    rec(0, Core(k));
    return out;
}

SetValuedFilling standard_tableau_of_word(const ResidueWord& w)
{
    const Core shape = evaluate(w);
    SetValuedFilling t(shape.shape());
    Core cur(w.k());
    int x = 0;
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
        ++x;
        auto cells = addable_corners(cur, *it);
        if (cells.empty()) {
            cells = removable_corners(cur, *it);
        } else {
            cur = Core(add_cells(cur.shape(), cells), cur.k());
        }
        for (const Cell& c : cells) t.insert(c, x);
    }
    return t;
}

}  // namespace affk
