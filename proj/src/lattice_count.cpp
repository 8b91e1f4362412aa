#include "fracpoly/lattice_count.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <unordered_map>

#include "fracpoly/error.hpp"

namespace fracpoly {

namespace {

struct KeyHash {
    std::size_t operator()(const std::vector<long>& key) const noexcept {
        std::size_t h = key.size();
        for (long v : key) h ^= std::hash<long>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

// Memoized DFS over a fixed vertex order.
class DfsCounter {
public:
    DfsCounter(const Graph& g, long bound, const Limits& limits) : bound_(bound), limits_(limits) {
        const int d = g.vertex_count();
        order_.resize(d);
        std::iota(order_.begin(), order_.end(), 1);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        std::vector<int> position(d + 1);
        for (int k = 0; k < d; ++k) position[order_[k]] = k;
        // later_neighbors_[k]: positions > k adjacent to order_[k]
        later_neighbors_.resize(d);
        for (int k = 0; k < d; ++k)
            for (Vertex u : g.neighbors(order_[k]))
                if (position[u] > k) later_neighbors_[k].push_back(position[u]);
    }

    int size() const { return static_cast<int>(order_.size()); }

    // ub[k] for k >= depth are the current upper bounds of unassigned positions.
    BigInt count_from(int depth, std::vector<long>& ub) {
        const int d = size();
        if (depth == d - 1) return BigInt(ub[depth] + 1);
        std::vector<long> key(ub.begin() + depth, ub.end());
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        BigInt total = 0;
        std::vector<long> saved(ub.begin() + depth + 1, ub.end());
        for (long value = 0; value <= ub[depth]; ++value) {
            bool empty_domain = false;
            for (int k : later_neighbors_[depth]) {
                ub[k] = std::min(saved[k - depth - 1], bound_ - value);
                if (ub[k] < 0) empty_domain = true;
            }
            // larger values only shrink neighbours further
            if (empty_domain) break;
            total += count_from(depth + 1, ub);
        }
        std::copy(saved.begin(), saved.end(), ub.begin() + depth + 1);

        if (memo_.size() >= limits_.max_dfs_states)
            throw resource_error("count_dfs: memo table exceeded " + std::to_string(limits_.max_dfs_states) +
                                 " states");
        memo_.emplace(std::move(key), total);
        return total;
    }

    // Count with the first position fixed to `value`.
    BigInt count_with_first(long value) {
        std::vector<long> ub(size(), bound_);
        for (int k : later_neighbors_[0]) ub[k] = bound_ - value;
        if (size() == 1) return 1;
        for (int k : later_neighbors_[0])
            if (ub[k] < 0) return 0;
        return count_from(1, ub);
    }

private:
    long bound_;
    const Limits& limits_;
    std::vector<Vertex> order_;
    std::vector<std::vector<int>> later_neighbors_;
    std::unordered_map<std::vector<long>, BigInt, KeyHash> memo_;
};

using Matrix = std::vector<std::vector<BigInt>>;

Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    Matrix c(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

Matrix power(Matrix base, long e) {
    const std::size_t n = base.size();
    Matrix result(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) result[i][i] = 1;
    while (e > 0) {
        if (e & 1) result = multiply(result, base);
        e >>= 1;
        if (e > 0) base = multiply(base, base);
    }
    return result;
}

} // namespace

PolytopeKind parse_kind(std::string_view name) {
    if (name == "frac") return PolytopeKind::frac;
    if (name == "p") return PolytopeKind::p;
    if (name == "q") return PolytopeKind::q;
    throw parse_error("unknown polytope kind '" + std::string(name) + "' (expected frac, p or q)");
}

std::string_view kind_name(PolytopeKind kind) {
    switch (kind) {
    case PolytopeKind::frac: return "frac";
    case PolytopeKind::p: return "p";
    case PolytopeKind::q: return "q";
    }
    return "?";
}

ShiftedSystem shifted_system(PolytopeKind kind, long n) {
    if (n < 0) throw domain_error("dilation must be nonnegative");
    switch (kind) {
    case PolytopeKind::frac: return {0, n};
    case PolytopeKind::p: return {0, 2 * n};
    case PolytopeKind::q: return {-n, 3 * n}; // n - 2(-n)
    }
    return {};
}

BigInt count_dfs(const CountRequest& req, const Limits& limits) {
    if (req.graph == nullptr) throw domain_error("count request without a graph");
    const long bound = shifted_system(req.kind, req.dilation).pair_bound;
    if (limits.threads <= 1 || bound == 0) {
        DfsCounter counter(*req.graph, bound, limits);
        BigInt total = 0;
        for (long v = 0; v <= bound; ++v) total += counter.count_with_first(v);
        return total;
    }
    // Split the first coordinate's values round-robin; each worker keeps its own memo.
    const long workers = std::min<long>(limits.threads, bound + 1);
    std::vector<std::future<BigInt>> parts;
    for (long w = 0; w < workers; ++w) {
        parts.push_back(std::async(std::launch::async, [&, w] {
            DfsCounter counter(*req.graph, bound, limits);
            BigInt sum = 0;
            for (long v = w; v <= bound; v += workers) sum += counter.count_with_first(v);
            return sum;
        }));
    }
    BigInt total = 0;
    for (auto& f : parts) total += f.get();
    return total;
}

std::optional<Chain> chain_shape(const Graph& g) {
    const int d = g.vertex_count();
    std::vector<Edge> path;
    for (int i = 1; i < d; ++i) path.emplace_back(i, i + 1);
    if (g.edges() == path) return Chain::path;
    if (d >= 3) {
        path.emplace_back(1, d);
        std::sort(path.begin(), path.end());
        if (g.edges() == path) return Chain::cycle;
    }
    return std::nullopt;
}

BigInt count_transfer(const CountRequest& req) {
    if (req.graph == nullptr) throw domain_error("count request without a graph");
    const auto shape = chain_shape(*req.graph);
    if (!shape) throw domain_error("count_transfer needs path:d or cycle:d with consecutive labels");
    const long s = shifted_system(req.kind, req.dilation).pair_bound;
    const int d = req.graph->vertex_count();
    const std::size_t states = static_cast<std::size_t>(s) + 1;
    Matrix t(states, std::vector<BigInt>(states, 0));
    for (std::size_t p = 0; p < states; ++p)
        for (std::size_t q = 0; q + p < states; ++q) t[p][q] = 1;

    if (*shape == Chain::path) {
        // row vector 1^T T^{d-1}, then sum
        std::vector<BigInt> row(states, 1);
        for (int step = 1; step < d; ++step) {
            std::vector<BigInt> next(states, 0);
            for (std::size_t p = 0; p < states; ++p)
                for (std::size_t q = 0; q + p < states; ++q) next[q] += row[p];
            row = std::move(next);
        }
        BigInt total = 0;
        for (const auto& v : row) total += v;
        return total;
    }
    Matrix td = power(std::move(t), d);
    BigInt trace = 0;
    for (std::size_t i = 0; i < states; ++i) trace += td[i][i];
    return trace;
}

Engine parse_engine(std::string_view name) {
    if (name == "dfs") return Engine::dfs;
    if (name == "transfer") return Engine::transfer;
    if (name == "both") return Engine::both;
    if (name == "auto") return Engine::automatic;
    throw parse_error("unknown engine '" + std::string(name) + "' (expected dfs, transfer, both or auto)");
}

BigInt count_points(const CountRequest& req, Engine engine, const Limits& limits) {
    switch (engine) {
    case Engine::dfs: return count_dfs(req, limits);
    case Engine::transfer: return count_transfer(req);
    case Engine::both: {
        BigInt a = count_dfs(req, limits);
        BigInt b = count_transfer(req);
        if (a != b)
            throw consistency_error("engine mismatch: dfs = " + a.get_str() + ", transfer = " + b.get_str());
        return a;
    }
    case Engine::automatic:
        if (req.graph && chain_shape(*req.graph)) return count_transfer(req);
        return count_dfs(req, limits);
    }
    return 0;
}

BigInt count_stable_sets(const Graph& g) {
    const int d = g.vertex_count();
    if (d > 30) throw resource_error("count_stable_sets: d too large for subset enumeration");
    BigInt total = 0;
    for (unsigned long mask = 0; mask < (1UL << d); ++mask) {
        bool stable = true;
        for (auto [i, j] : g.edges())
            if ((mask >> (i - 1) & 1) && (mask >> (j - 1) & 1)) { stable = false; break; }
        if (stable) ++total;
    }
    return total;
}

} // namespace fracpoly
