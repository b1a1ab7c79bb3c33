#include "affk/partition.hpp"

#include "affk/error.hpp"
#include "affk/integer.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace affk {

Integer binomial(long n, long j)
{
    if (j < 0) return 0;
    Integer num = 1;
    Integer den = 1;
    for (long i = 0; i < j; ++i) {
        num *= (n - i);
        den *= (i + 1);
    }
    return num / den;
}

Residue::Residue(long raw, int level)
{
    if (level < 1) throw InvalidInput("residue level must be positive");
    long r = raw % level;
    if (r < 0) r += level;
    value_ = static_cast<int>(r);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw InvalidInput("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidInput("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts)
{
    std::erase_if(parts, [](int p) { return p == 0; });
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

int Partition::column(int j) const
{
    if (j < 0) return 0;
    int h = 0;
    while (h < length() && parts_[h] > j) ++h;
    return h;
}

bool Partition::contains(const Partition& other) const
{
    if (other.length() > length()) return false;
    for (int i = 0; i < other.length(); ++i)
        if (other.parts_[i] > parts_[i]) return false;
    return true;
}

std::vector<Cell> Partition::cells() const
{
    std::vector<Cell> out;
    out.reserve(size_);
    for (int r = 0; r < length(); ++r)
        for (int c = 0; c < parts_[r]; ++c) out.push_back({r, c});
    return out;
}

Partition conjugate(const Partition& lambda)
{
    std::vector<int> cols;
    for (int j = 0; j < lambda.first_part(); ++j) cols.push_back(lambda.column(j));
    return Partition(std::move(cols));
}

bool dominates(const Partition& lambda, const Partition& mu)
{
    if (lambda.size() != mu.size()) return false;
    int a = 0;
    int b = 0;
    const int len = std::max(lambda.length(), mu.length());
    for (int i = 0; i < len; ++i) {
        a += lambda.row(i);
        b += mu.row(i);
        if (a < b) return false;
    }
    return true;
}

int arm_length(const Partition& lambda, Cell c) { return lambda.row(c.row) - c.col - 1; }

int leg_length(const Partition& lambda, Cell c) { return lambda.column(c.col) - c.row - 1; }

int hook_length(const Partition& lambda, Cell c)
{
    if (!lambda.contains(c)) {
        std::ostringstream os;
        os << "cell " << c << " is not in " << lambda;
        throw InvalidInput(os.str());
    }
    return arm_length(lambda, c) + leg_length(lambda, c) + 1;
}

int hook(const Partition& lambda)
{
    return lambda.empty() ? 0 : hook_length(lambda, {0, 0});
}

std::vector<Cell> addable_cells(const Partition& lambda)
{
    std::vector<Cell> out;
    for (int r = 0; r <= lambda.length(); ++r) {
        if (r == 0 || lambda.row(r - 1) > lambda.row(r)) out.push_back({r, lambda.row(r)});
    }
    return out;
}

std::vector<Cell> removable_cells(const Partition& lambda)
{
    std::vector<Cell> out;
    for (int r = 0; r < lambda.length(); ++r) {
        if (lambda.row(r + 1) < lambda.row(r)) out.push_back({r, lambda.row(r) - 1});
    }
    return out;
}

std::vector<Cell> extremal_cells(const Partition& lambda)
{
    std::vector<Cell> out;
    for (int r = 0; r < lambda.length(); ++r) {
        const int from = std::max(0, lambda.row(r + 1) - 1);
        for (int c = from; c < lambda.row(r); ++c) out.push_back({r, c});
    }
    return out;
}

namespace {

Partition from_rows(std::vector<int> rows)
{
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i] <= 0) throw InvalidInput("cell operation leaves a gap in a row");
    return Partition(std::move(rows));
}

}  // namespace

Partition add_cells(const Partition& lambda, std::span<const Cell> cells)
{
    std::set<Cell> todo(cells.begin(), cells.end());
    std::vector<int> rows = lambda.parts();
    for (const Cell& c : todo) {
        if (c.row < 0 || c.col < 0 || lambda.contains(c)) throw InvalidInput("cannot add an existing cell");
        if (c.row >= static_cast<int>(rows.size())) rows.resize(c.row + 1, 0);
    }
    std::vector<int> extra(rows.size(), 0);
    for (const Cell& c : todo) ++extra[c.row];
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (int d = 0; d < extra[r]; ++d) {
            if (!todo.count({static_cast<int>(r), rows[r] + d}))
                throw InvalidInput("added cells do not extend a row contiguously");
        }
        rows[r] += extra[r];
    }
    for (std::size_t r = 1; r < rows.size(); ++r)
        if (rows[r] > rows[r - 1]) throw InvalidInput("adding cells does not give a partition");
    return from_rows(std::move(rows));
}

Partition remove_cells(const Partition& lambda, std::span<const Cell> cells)
{
    std::set<Cell> todo(cells.begin(), cells.end());
    std::vector<int> rows = lambda.parts();
    std::vector<int> fewer(rows.size(), 0);
    for (const Cell& c : todo) {
        if (!lambda.contains(c)) throw InvalidInput("cannot remove a cell outside the shape");
        ++fewer[c.row];
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (int d = 1; d <= fewer[r]; ++d) {
            if (!todo.count({static_cast<int>(r), rows[r] - d}))
                throw InvalidInput("removed cells are not at the end of their row");
        }
        rows[r] -= fewer[r];
    }
    for (std::size_t r = 1; r < rows.size(); ++r)
        if (rows[r] > rows[r - 1]) throw InvalidInput("removing cells does not give a partition");
    std::vector<int> kept;
    for (int v : rows) {
        if (v == 0) break;
        kept.push_back(v);
    }
    for (std::size_t r = kept.size(); r < rows.size(); ++r)
        if (rows[r] != 0) throw InvalidInput("removing cells does not give a partition");
    return Partition(std::move(kept));
}

std::vector<Cell> skew_cells(const Partition& outer, const Partition& inner)
{
    if (!outer.contains(inner)) throw InvalidInput("skew shape requires inner ⊆ outer");
    std::vector<Cell> out;
    for (int r = 0; r < outer.length(); ++r)
        for (int c = inner.row(r); c < outer.row(r); ++c) out.push_back({r, c});
    return out;
}

std::vector<Partition> partitions_of(int n, int max_part)
{
    std::vector<Partition> out;
    if (n < 0) return out;
    const int cap = (max_part > 0) ? std::min(max_part, n) : n;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int bound) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, bound); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n == 0 ? 0 : cap);
    return out;
}

std::vector<Partition> partitions_up_to(int n, int max_part)
{
    std::vector<Partition> out;
    for (int d = 0; d <= n; ++d) {
        auto level = partitions_of(d, max_part);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<Composition> compositions_of(int n, int max_part)
{
    std::vector<Composition> out;
    if (n < 0) return out;
    Composition cur;
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        const int cap = (max_part > 0) ? std::min(max_part, left) : left;
        for (int p = 1; p <= cap; ++p) {
            cur.push_back(p);
            rec(left - p);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

std::vector<Composition> rearrangements(Composition alpha)
{
    std::vector<Composition> out;
    std::sort(alpha.begin(), alpha.end());
    do {
        out.push_back(alpha);
    } while (std::next_permutation(alpha.begin(), alpha.end()));
    return out;
}

Composition strip_zeros(const Composition& alpha)
{
    Composition out;
    for (int a : alpha) {
        if (a < 0) throw InvalidInput("composition parts must be nonnegative");
        if (a > 0) out.push_back(a);
    }
    return out;
}

int composition_size(const Composition& alpha) { return std::accumulate(alpha.begin(), alpha.end(), 0); }

bool graded_dominance_less(const Partition& a, const Partition& b)
{
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() > b.parts();
}

std::string format_partition(const Partition& lambda) { return format_composition(lambda.parts()); }

std::string format_composition(const Composition& alpha)
{
    std::string out;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(alpha[i]);
    }
    return out;
}

Composition parse_composition(std::string_view text)
{
    Composition out;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        std::string_view item =
            trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || value < 0)
            throw InvalidInput("cannot parse '" + std::string(text) + "' as a comma-separated list of nonnegative integers");
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

Partition parse_partition(std::string_view text)
{
    Composition parts = parse_composition(text);
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

std::ostream& operator<<(std::ostream& os, const Partition& lambda)
{
    return os << '(' << format_partition(lambda) << ')';
}

std::ostream& operator<<(std::ostream& os, const Cell& c) { return os << '(' << c.row << ',' << c.col << ')'; }

}  // namespace affk
