#include "fracpoly/normality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "fracpoly/error.hpp"

namespace fracpoly {

namespace {

struct VecHash {
    std::size_t operator()(const IntVector& v) const noexcept {
        std::size_t h = v.size();
        for (long x : v) h = h * 1000003u ^ std::hash<long>{}(x);
        return h;
    }
};

void combinations(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
        cur.push_back(i);
        combinations(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

ConfigurationMatrix config_matrix(const Graph& g) {
    const int d = g.vertex_count();
    ConfigurationMatrix m;
    m.d = d;
    IntVector origin(d + 1, 0);
    origin[d] = 1;
    m.columns.push_back(origin);
    for (const auto& v : q_dual_vertices(g)) {
        IntVector col = v;
        col.push_back(1);
        m.columns.push_back(std::move(col));
    }
    return m;
}

BigInt lattice_index(const std::vector<IntVector>& columns, int rows) {
    // Hermite-style elimination on the generators viewed as rows.
    std::vector<std::vector<BigInt>> gens;
    for (const auto& c : columns) {
        if (static_cast<int>(c.size()) != rows) throw domain_error("column length mismatch");
        gens.emplace_back(c.begin(), c.end());
    }
    BigInt index = 1;
    std::size_t top = 0;
    for (int col = 0; col < rows; ++col) {
        // Euclid on column `col` among gens[top..]
        while (true) {
            std::size_t pivot = gens.size();
            for (std::size_t r = top; r < gens.size(); ++r)
                if (gens[r][col] != 0 && (pivot == gens.size() || abs(gens[r][col]) < abs(gens[pivot][col])))
                    pivot = r;
            if (pivot == gens.size()) return 0;
            std::swap(gens[top], gens[pivot]);
            bool reduced = true;
            for (std::size_t r = top + 1; r < gens.size(); ++r) {
                if (gens[r][col] == 0) continue;
                BigInt q = gens[r][col] / gens[top][col];
                for (int c = col; c < rows; ++c) gens[r][c] -= q * gens[top][c];
                if (gens[r][col] != 0) reduced = false;
            }
            if (reduced) break;
        }
        index *= abs(gens[top][col]);
        ++top;
    }
    return index;
}

Membership semigroup_member(const IntVector& u, const ConfigurationMatrix& m, const Limits& limits) {
    const int d = m.d;
    if (static_cast<int>(u.size()) != d + 1) throw domain_error("vector length must be d+1");
    const long total = u[d];
    if (total < 0) throw domain_error("last coordinate must be nonnegative");
    if (total > limits.max_semigroup_degree)
        throw resource_error("semigroup_member: degree " + std::to_string(total) + " exceeds the limit " +
                             std::to_string(limits.max_semigroup_degree));

    const IntVector target(u.begin(), u.begin() + d);
    // layers[t]: reachable first-d coordinates -> index of the last column added
    std::vector<std::unordered_map<IntVector, int, VecHash>> layers(total + 1);
    layers[0].emplace(IntVector(d, 0), -1);
    for (long t = 0; t < total; ++t) {
        const long remaining = total - t - 1;
        for (const auto& [v, unused] : layers[t]) {
            for (std::size_t c = 0; c < m.columns.size(); ++c) {
                IntVector w = v;
                bool reachable = true;
                for (int i = 0; i < d; ++i) {
                    w[i] += m.columns[c][i];
                    // every column moves each coordinate by at most one
                    if (std::labs(target[i] - w[i]) > remaining) reachable = false;
                }
                if (reachable) layers[t + 1].emplace(std::move(w), static_cast<int>(c));
            }
        }
        if (layers[t + 1].empty()) return {};
    }
    auto it = layers[total].find(target);
    if (it == layers[total].end()) return {};

    Membership result;
    result.member = true;
    result.multiplicities.assign(m.columns.size(), 0);
    IntVector v = target;
    for (long t = total; t > 0; --t) {
        int c = layers[t].at(v);
        ++result.multiplicities[c];
        for (int i = 0; i < d; ++i) v[i] -= m.columns[c][i];
    }
    return result;
}

WitnessVector odd_cycle_witness(const Graph& g, const Limits& limits) {
    const int d = g.vertex_count();
    WitnessVector w;
    w.cycle = shortest_odd_cycle(g);
    if (w.cycle.empty()) throw domain_error("graph is bipartite; no odd cycle witness exists");
    w.k = (static_cast<int>(w.cycle.size()) - 1) / 2;
    w.u.assign(d + 1, 0);
    w.u[d] = w.k + 1;
    for (Vertex v : w.cycle) w.u[v - 1] = 1;

    // 2u = (0,..,0,1) + Σ over cycle edges of (e_i + e_j, 1)
    const auto m = config_matrix(g);
    IntVector sum = m.columns[0];
    const std::size_t len = w.cycle.size();
    for (std::size_t s = 0; s < len; ++s) {
        Vertex a = w.cycle[s], b = w.cycle[(s + 1) % len];
        if (!g.has_edge(a, b)) throw consistency_error("odd cycle uses a non-edge");
        for (int i = 0; i < d; ++i) sum[i] += (i == a - 1 || i == b - 1) ? 1 : 0;
        sum[d] += 1;
    }
    w.rational_combination = true;
    for (int i = 0; i <= d; ++i)
        if (sum[i] != 2 * w.u[i]) w.rational_combination = false;
    if (!w.rational_combination) throw consistency_error("witness is not the stated half-integral combination");

    w.member = semigroup_member(w.u, m, limits).member;
    if (w.member)
        throw consistency_error("odd-cycle witness lies in the integer semigroup; non-normality certificate failed");
    return w;
}

NormalityReport normality_check_up_to(const Graph& g, int max_degree, const Limits& limits) {
    if (max_degree < 1) throw domain_error("max degree must be at least 1");
    const int d = g.vertex_count();
    const auto qv = q_vertices(g, limits);
    const auto m = config_matrix(g);
    NormalityReport report;
    report.checked_up_to = max_degree;
    for (int k = 1; k <= max_degree; ++k) {
        if (std::pow(2.0 * k + 1, d) > static_cast<double>(limits.max_box_points))
            throw resource_error("normality check: (2k+1)^d box too large at degree " + std::to_string(k));
        std::size_t in_dilate = 0;
        IntVector x(d, -k);
        while (true) {
            // x in k Q(G)^∨  <=>  <x, v> <= k for every vertex v of Q(G)
            bool inside = true;
            for (const auto& v : qv) {
                long dot = 0;
                for (int i = 0; i < d; ++i) dot += x[i] * v.doubled[i];
                if (dot > 2L * k) { inside = false; break; }
            }
            if (inside) {
                ++in_dilate;
                IntVector u = x;
                u.push_back(k);
                if (!semigroup_member(u, m, limits).member) report.violations.push_back({k, x});
            }
            int i = d - 1;
            while (i >= 0 && x[i] == k) x[i--] = -k;
            if (i < 0) break;
            ++x[i];
        }
        report.points_per_degree.push_back(in_dilate);
    }
    return report;
}

std::vector<IntVector> incidence_with_negative_identity(const Graph& g) {
    const int d = g.vertex_count();
    const std::size_t e = g.edge_count();
    std::vector<IntVector> out(d, IntVector(e + d, 0));
    for (std::size_t c = 0; c < e; ++c) {
        auto [i, j] = g.edges()[c];
        out[i - 1][c] = 1;
        out[j - 1][c] = 1;
    }
    for (int i = 0; i < d; ++i) out[i][e + i] = -1;
    return out;
}

long integer_determinant(std::vector<IntVector> a) {
    // Bareiss fraction-free elimination
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    long sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

UnimodularityResult is_totally_unimodular(const std::vector<IntVector>& matrix, const Limits& limits) {
    const int rows = static_cast<int>(matrix.size());
    if (rows > limits.max_tu_rows)
        throw resource_error("is_totally_unimodular: " + std::to_string(rows) + " rows exceed the minor budget " +
                             std::to_string(limits.max_tu_rows));
    UnimodularityResult result;
    if (rows == 0) return result;
    const int cols = static_cast<int>(matrix[0].size());
    for (int k = 1; k <= std::min(rows, cols); ++k) {
        std::vector<std::vector<int>> row_sets, col_sets;
        std::vector<int> cur;
        combinations(rows, k, 0, cur, row_sets);
        combinations(cols, k, 0, cur, col_sets);
        for (const auto& rs : row_sets)
            for (const auto& cs : col_sets) {
                std::vector<IntVector> sub(k, IntVector(k));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) sub[i][j] = matrix[rs[i]][cs[j]];
                long det = integer_determinant(std::move(sub));
                if (det < -1 || det > 1) {
                    result.totally_unimodular = false;
                    result.rows = rs;
                    result.cols = cs;
                    result.determinant = det;
                    return result;
                }
            }
    }
    return result;
}

GorensteinFanoReport gorenstein_fano_check(const Graph& g, const Limits& limits) {
    GorensteinFanoReport r;
    const auto qv = q_vertices(g, limits);
    r.q_lattice = is_lattice_polytope(qv);
    const auto interior = interior_lattice_points(q_polytope(g), limits);
    r.fano = interior.size() == 1 &&
             std::all_of(interior[0].begin(), interior[0].end(), [](long c) { return c == 0; });
    // Each facet normal must be an integral point of Q(G)^∨ that is tight
    // (inner product exactly 1) on some vertex of Q(G).
    r.dual_lattice = true;
    for (const auto& a : q_dual_vertices(g)) {
        bool tight = false;
        for (const auto& v : qv) {
            long dot = 0;
            for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * v.doubled[i];
            if (dot > 2) r.dual_lattice = false;
            if (dot == 2) tight = true;
        }
        if (!tight) r.dual_lattice = false;
    }
    return r;
}

} // namespace fracpoly
