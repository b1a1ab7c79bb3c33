#include "affk/kostka.hpp"

#include "affk/core.hpp"
#include "affk/error.hpp"
#include "affk/strips.hpp"
#include "affk/tableaux.hpp"

#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <unistd.h>

namespace affk {

namespace {

constexpr std::string_view kMagic = "affk-kostka-matrix";
constexpr int kFormatVersion = 1;

}  // namespace

KostkaMatrix::KostkaMatrix(int k, int max_degree, std::map<Partition, Terms> columns)
    : k_(k), max_degree_(max_degree), columns_(std::move(columns))
{
}

const Terms& KostkaMatrix::column(const Partition& mu) const
{
    auto it = columns_.find(mu);
    if (it == columns_.end()) throw InvalidInput("weight outside the Kostka matrix range");
    return it->second;
}

Integer KostkaMatrix::entry(const Partition& lambda, const Partition& mu) const
{
    const Terms& col = column(mu);
    auto it = col.find(lambda);
    return it == col.end() ? Integer(0) : it->second;
}

Terms KostkaMatrix::row(const Partition& lambda) const
{
    Terms out;
    for (const auto& [mu, col] : columns_) {
        auto it = col.find(lambda);
        if (it != col.end()) out.emplace(mu, it->second);
    }
    return out;
}

std::string KostkaMatrix::serialize() const
{
    std::ostringstream os;
    os << kMagic << ' ' << kFormatVersion << '\n' << "k " << k_ << '\n' << "n " << max_degree_ << '\n';
    for (const auto& [mu, col] : columns_) {
        os << "column " << format_partition(mu) << '\n';
        for (const auto& [lambda, c] : col) os << format_partition(lambda) << ';' << c.str() << '\n';
    }
    os << "end\n";
    return os.str();
}

std::optional<KostkaMatrix> KostkaMatrix::deserialize(std::string_view text)
{
    std::istringstream is{std::string(text)};
    std::string line;
    try {
        if (!std::getline(is, line) || line != std::string(kMagic) + ' ' + std::to_string(kFormatVersion))
            return std::nullopt;
        int k = 0;
        int n = 0;
        if (!std::getline(is, line) || line.rfind("k ", 0) != 0) return std::nullopt;
        k = std::stoi(line.substr(2));
        if (!std::getline(is, line) || line.rfind("n ", 0) != 0) return std::nullopt;
        n = std::stoi(line.substr(2));
        std::map<Partition, Terms> columns;
        Terms* current = nullptr;
        bool ended = false;
        while (std::getline(is, line)) {
            if (line == "end") {
                ended = true;
                break;
            }
            if (line.rfind("column ", 0) == 0) {
                current = &columns[parse_partition(line.substr(7))];
                continue;
            }
            const auto semi = line.find(';');
            if (!current || semi == std::string::npos) return std::nullopt;
            (*current)[parse_partition(line.substr(0, semi))] = Integer(line.substr(semi + 1));
        }
        if (!ended) return std::nullopt;
        return KostkaMatrix(k, n, std::move(columns));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

namespace {

using Step = std::function<std::vector<Core>(const Core&, int)>;

/// Walks k-bounded partitions mu part by part (weakly decreasing parts),
/// pushing the core counts forward one strip at a time; the counts after
/// the last part give column mu.
std::map<Partition, Terms> columns_by_strips(int k, int n, const Step& step)
{
    std::map<Partition, Terms> columns;
    std::vector<int> parts;
    std::function<void(const std::map<Core, Integer>&, int, int)> rec = [&](const std::map<Core, Integer>& layer,
                                                                            int left, int bound) {
        Terms col;
        for (const auto& [gamma, count] : layer) col.emplace(core_to_bounded(gamma), count);
        columns.emplace(Partition(parts), std::move(col));
        for (int a = std::min(left, bound); a >= 1; --a) {
            std::map<Core, Integer> next;
            for (const auto& [beta, count] : layer)
                for (const Core& gamma : step(beta, a)) next[gamma] += count;
            parts.push_back(a);
            rec(next, left - a, a);
            parts.pop_back();
        }
    };
    rec({{Core(k), 1}}, n, k);
    return columns;
}

}  // namespace

KostkaMatrix build_affine_kostka(int k, int max_degree)
{
    if (k < 1 || max_degree < 0) throw InvalidInput("Kostka matrix needs k >= 1 and a nonnegative degree");
    std::map<std::pair<Core, int>, std::vector<Core>> memo;
    Step step = [&memo](const Core& beta, int r) -> std::vector<Core> {
        auto key = std::make_pair(beta, r);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::vector<Core> out;
        for (const StripPair& p : enumerate_sv_strips(beta, r)) out.push_back(p.gamma);
        return memo.emplace(key, std::move(out)).first->second;
    };
    return KostkaMatrix(k, max_degree, columns_by_strips(k, max_degree, step));
}

KostkaMatrix build_ktableau_kostka(int k, int max_degree)
{
    if (k < 1 || max_degree < 0) throw InvalidInput("Kostka matrix needs k >= 1 and a nonnegative degree");
    std::map<std::pair<Core, int>, std::vector<Core>> memo;
    Step step = [&memo](const Core& beta, int r) -> std::vector<Core> {
        auto key = std::make_pair(beta, r);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        return memo.emplace(key, affine_strip_extensions(beta, r)).first->second;
    };
    return KostkaMatrix(k, max_degree, columns_by_strips(k, max_degree, step));
}

namespace {

std::mutex registry_lock;
std::optional<std::filesystem::path> cache_dir;
std::map<int, std::shared_ptr<const KostkaMatrix>> affine_registry;
std::map<int, std::shared_ptr<const KostkaMatrix>> ktableau_registry;

std::optional<KostkaMatrix> read_cached(int k, int n)
{
    if (!cache_dir) return std::nullopt;
    std::ifstream in(*cache_dir / kostka_cache_file_name(k, n), std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    auto m = KostkaMatrix::deserialize(buf.str());
    if (m && (m->k() != k || m->max_degree() != n)) return std::nullopt;
    return m;
}

void write_cached(const KostkaMatrix& m)
{
    if (!cache_dir) return;
    std::error_code ec;
    std::filesystem::create_directories(*cache_dir, ec);
    if (ec) return;
    const auto final_path = *cache_dir / kostka_cache_file_name(m.k(), m.max_degree());
    auto tmp = final_path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) return;
        out << m.serialize();
        if (!out) return;
    }
    std::filesystem::rename(tmp, final_path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

std::shared_ptr<const KostkaMatrix> lookup(std::map<int, std::shared_ptr<const KostkaMatrix>>& registry, int k,
                                           int n)
{
    auto it = registry.find(k);
    if (it != registry.end() && it->second->max_degree() >= n) return it->second;
    return nullptr;
}

}  // namespace

std::shared_ptr<const KostkaMatrix> affine_kostka(int k, int max_degree)
{
    std::lock_guard guard(registry_lock);
    if (auto m = lookup(affine_registry, k, max_degree)) return m;
    std::shared_ptr<const KostkaMatrix> m;
    if (auto cached = read_cached(k, max_degree)) {
        m = std::make_shared<const KostkaMatrix>(std::move(*cached));
    } else {
        m = std::make_shared<const KostkaMatrix>(build_affine_kostka(k, max_degree));
        write_cached(*m);
    }
    affine_registry[k] = m;
    return m;
}

std::shared_ptr<const KostkaMatrix> ktableau_kostka(int k, int max_degree)
{
    std::lock_guard guard(registry_lock);
    if (auto m = lookup(ktableau_registry, k, max_degree)) return m;
    auto m = std::make_shared<const KostkaMatrix>(build_ktableau_kostka(k, max_degree));
    ktableau_registry[k] = m;
    return m;
}

void set_kostka_cache_dir(std::optional<std::filesystem::path> dir)
{
    std::lock_guard guard(registry_lock);
    cache_dir = std::move(dir);
}

std::optional<std::filesystem::path> kostka_cache_dir()
{
    std::lock_guard guard(registry_lock);
    return cache_dir;
}

std::string kostka_cache_file_name(int k, int max_degree)
{
    return "affk-kostka-v" + std::to_string(kFormatVersion) + "-k" + std::to_string(k) + "-n" +
           std::to_string(max_degree) + ".txt";
}

const Integer& set_valued_kostka(const Partition& lambda, const Partition& mu)
{
    static std::mutex lock;
    static std::map<std::pair<Partition, Partition>, Integer> memo;
    std::lock_guard guard(lock);
    auto key = std::make_pair(lambda, mu);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, count_classical_kostka(lambda, mu.parts())).first;
    return it->second;
}

}  // namespace affk
