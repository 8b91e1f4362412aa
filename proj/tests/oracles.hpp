#pragma once

// Brute-force oracles used only by tests. None of these call into the
// library routines they are used to check.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "fracpoly/graph.hpp"
#include "fracpoly/polynomial.hpp"

namespace oracle {

using fracpoly::BigInt;
using fracpoly::Graph;

// Every labelled graph on d vertices with no isolated vertex.
inline std::vector<Graph> graphs_without_isolated_vertices(int d) {
    std::vector<fracpoly::Edge> all;
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) all.emplace_back(i, j);
    std::vector<Graph> out;
    for (unsigned long mask = 1; mask < (1UL << all.size()); ++mask) {
        std::vector<fracpoly::Edge> edges;
        std::vector<bool> covered(d + 1, false);
        for (std::size_t k = 0; k < all.size(); ++k)
            if (mask >> k & 1) {
                edges.push_back(all[k]);
                covered[all[k].first] = covered[all[k].second] = true;
            }
        if (std::count(covered.begin() + 1, covered.end(), true) == d) out.emplace_back(d, edges);
    }
    return out;
}

// |{x in Z^d : x_i >= lo, x_i + x_j <= s}| by plain box enumeration.
inline long box_count(const Graph& g, long lo, long s) {
    const int d = g.vertex_count();
    const long hi = s - lo;
    if (hi < lo) return 0;
    std::vector<long> x(d, lo);
    long count = 0;
    while (true) {
        bool ok = true;
        for (auto [i, j] : g.edges())
            if (x[i - 1] + x[j - 1] > s) { ok = false; break; }
        if (ok) ++count;
        int k = d - 1;
        while (k >= 0 && x[k] == hi) x[k--] = lo;
        if (k < 0) break;
        ++x[k];
    }
    return count;
}

// Rank of an integer matrix over Q.
inline int rank(std::vector<std::vector<long>> m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            long a = m[r][c], b = m[i][c];
            for (int k = 0; k < cols; ++k) m[i][k] = m[i][k] * a - m[r][k] * b;
            long gcd = 0;
            for (long v : m[i]) gcd = std::gcd(gcd, v);
            if (gcd > 1)
                for (long& v : m[i]) v /= gcd;
        }
        ++r;
    }
    return r;
}

// Vertices of FRAC(G) among {0,1/2,1}^d (doubled coordinates): feasible
// points whose active constraints have full rank d.
inline std::vector<std::vector<long>> frac_vertices_by_rank(const Graph& g) {
    const int d = g.vertex_count();
    std::vector<std::vector<long>> out;
    std::vector<long> x(d, 0);
    while (true) {
        bool feasible = true;
        for (auto [i, j] : g.edges())
            if (x[i - 1] + x[j - 1] > 2) feasible = false;
        if (feasible) {
            std::vector<std::vector<long>> active;
            for (int i = 0; i < d; ++i)
                if (x[i] == 0) {
                    std::vector<long> row(d, 0);
                    row[i] = -1;
                    active.push_back(row);
                }
            for (auto [i, j] : g.edges())
                if (x[i - 1] + x[j - 1] == 2) {
                    std::vector<long> row(d, 0);
                    row[i - 1] = row[j - 1] = 1;
                    active.push_back(row);
                }
            if (rank(active) == d) out.push_back(x);
        }
        int k = d - 1;
        while (k >= 0 && x[k] == 2) x[k--] = 0;
        if (k < 0) break;
        ++x[k];
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Descent counts over Π(G), indexed by descent number, by recursive
// generation of all signed words and a direct reading of the definition.
struct DescentSplit {
    std::vector<long> minus, plus;
};

inline DescentSplit descents_over_pi(const Graph& g) {
    const int d = g.vertex_count();
    DescentSplit out{std::vector<long>(d + 1, 0), std::vector<long>(d + 1, 0)};
    std::vector<int> word;
    std::vector<bool> used(d + 1, false);
    auto index_of = [&](int letter) {
        auto it = std::find(word.begin(), word.end(), letter);
        return it == word.end() ? -1 : static_cast<int>(it - word.begin());
    };
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(word.size()) == d) {
            for (auto [a, b] : g.edges()) {
                for (auto [i, j] : {std::pair{a, b}, std::pair{b, a}}) {
                    int plus_i = index_of(i);
                    if (plus_i < 0) continue;
                    int minus_j = index_of(-j);
                    if (minus_j < 0 || minus_j > plus_i) return;
                }
            }
            int des = 0;
            for (int i = 0; i + 1 < d; ++i) des += word[i] > word[i + 1];
            des += word.back() > 0;
            (word.back() > 0 ? out.plus : out.minus)[des] += 1;
            return;
        }
        for (int v = 1; v <= d; ++v) {
            if (used[v]) continue;
            used[v] = true;
            for (int s : {-1, 1}) {
                word.push_back(s * v);
                self(self);
                word.pop_back();
            }
            used[v] = false;
        }
    };
    rec(rec);
    return out;
}

// Eulerian numbers by counting usual descents over S_k.
inline std::vector<long> eulerian_by_permutations(int k) {
    std::vector<long> out(std::max(k, 1), 0);
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 1);
    do {
        int des = 0;
        for (int i = 0; i + 1 < k; ++i) des += p[i] > p[i + 1];
        ++out[des];
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Σ t^des over all words obtained by permuting letters inside each maximal
// run of same-signed letters.
inline std::vector<long> descents_over_block_class(const std::vector<int>& word) {
    std::vector<std::pair<std::size_t, std::size_t>> runs;
    for (std::size_t s = 0; s < word.size();) {
        std::size_t e = s;
        while (e < word.size() && (word[e] > 0) == (word[s] > 0)) ++e;
        runs.emplace_back(s, e);
        s = e;
    }
    std::vector<long> out(word.size() + 1, 0);
    std::vector<int> w = word;
    for (auto [s, e] : runs) std::sort(w.begin() + s, w.begin() + e);
    auto rec = [&](auto&& self, std::size_t r) -> void {
        if (r == runs.size()) {
            int des = 0;
            for (std::size_t i = 0; i + 1 < w.size(); ++i) des += w[i] > w[i + 1];
            if (!w.empty()) des += w.back() > 0;
            ++out[des];
            return;
        }
        auto [s, e] = runs[r];
        do {
            self(self, r + 1);
        } while (std::next_permutation(w.begin() + s, w.begin() + e));
    };
    rec(rec, 0);
    return out;
}

inline std::vector<BigInt> to_big(const std::vector<long>& v) {
    std::vector<BigInt> out;
    for (long x : v) out.emplace_back(x);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

} // namespace oracle
