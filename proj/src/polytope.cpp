#include "fracpoly/polytope.hpp"

#include <algorithm>
#include <future>
#include <optional>

#include "fracpoly/error.hpp"

namespace fracpoly {

namespace {

HPolytope edge_system(const Graph& g, long lower_rhs, long edge_rhs) {
    const int d = g.vertex_count();
    HPolytope p;
    p.dimension = d;
    for (int i = 0; i < d; ++i) {
        Inequality row{IntVector(d, 0), lower_rhs};
        row.a[i] = -1;
        p.rows.push_back(std::move(row));
    }
    for (auto [i, j] : g.edges()) {
        Inequality row{IntVector(d, 0), edge_rhs};
        row.a[i - 1] = 1;
        row.a[j - 1] = 1;
        p.rows.push_back(std::move(row));
    }
    return p;
}

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

// Labels are doubled values 0, 1, 2.
void enumerate_labelings(const Graph& g, std::vector<long>& label, int next,
                         std::vector<HalfIntPoint>& out) {
    const int d = g.vertex_count();
    if (next == d) {
        std::vector<Vertex> halves;
        for (int i = 0; i < d; ++i)
            if (label[i] == 1) halves.push_back(i + 1);
        if (halves.empty() || every_component_non_bipartite(induced_subgraph(g, halves)))
            out.push_back(HalfIntPoint{label});
        return;
    }
    const Vertex v = next + 1;
    for (long value = 0; value <= 2; ++value) {
        bool feasible = true;
        for (Vertex u : g.neighbors(v)) {
            if (u < v && label[u - 1] + value > 2) {
                feasible = false;
                break;
            }
        }
        if (!feasible) continue;
        label[next] = value;
        enumerate_labelings(g, label, next + 1, out);
    }
    label[next] = 0;
}

} // namespace

HalfIntPoint HalfIntPoint::from_integer(const IntVector& x) {
    HalfIntPoint p;
    p.doubled.reserve(x.size());
    for (long v : x) p.doubled.push_back(2 * v);
    return p;
}

bool HalfIntPoint::is_integral() const {
    return std::all_of(doubled.begin(), doubled.end(), [](long v) { return v % 2 == 0; });
}

std::vector<std::string> HalfIntPoint::to_rational_strings() const {
    std::vector<std::string> out;
    for (long v : doubled)
        out.push_back(v % 2 == 0 ? std::to_string(v / 2) : std::to_string(v) + "/2");
    return out;
}

bool HPolytope::contains(const HalfIntPoint& p) const {
    for (const auto& row : rows) {
        long lhs = 0;
        for (int i = 0; i < dimension; ++i) lhs += row.a[i] * p.doubled[i];
        if (lhs > 2 * row.b) return false;
    }
    return true;
}

bool HPolytope::contains_strictly(const IntVector& x) const {
    for (const auto& row : rows) {
        long lhs = 0;
        for (int i = 0; i < dimension; ++i) lhs += row.a[i] * x[i];
        if (lhs >= row.b) return false;
    }
    return true;
}

HPolytope HPolytope::dilate(long n) const {
    HPolytope out = *this;
    for (auto& row : out.rows) row.b *= n;
    return out;
}

std::vector<std::pair<long, long>> HPolytope::coordinate_bounds() const {
    const int d = dimension;
    std::vector<std::optional<long>> lo(d), hi(d);
    auto tighten_hi = [&](int i, long v) {
        if (!hi[i] || v < *hi[i]) { hi[i] = v; return true; }
        return false;
    };
    auto tighten_lo = [&](int i, long v) {
        if (!lo[i] || v > *lo[i]) { lo[i] = v; return true; }
        return false;
    };
    // Propagate: a_i x_i <= b - sum_{k != i} a_k x_k, bounding the right
    // side with already-known bounds of the other coordinates.
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& row : rows) {
            for (int i = 0; i < d; ++i) {
                if (row.a[i] == 0) continue;
                long rest = row.b;
                bool bounded = true;
                for (int k = 0; k < d && bounded; ++k) {
                    if (k == i || row.a[k] == 0) continue;
                    const auto& bound = row.a[k] > 0 ? lo[k] : hi[k];
                    if (!bound) bounded = false;
                    else rest -= row.a[k] * *bound;
                }
                if (!bounded) continue;
                if (row.a[i] > 0)
                    changed |= tighten_hi(i, floor_div(rest, row.a[i]));
                else
                    changed |= tighten_lo(i, ceil_div(rest, row.a[i]));
            }
        }
    }
    std::vector<std::pair<long, long>> box;
    for (int i = 0; i < d; ++i) {
        if (!lo[i] || !hi[i])
            throw domain_error("cannot bound coordinate " + std::to_string(i + 1) + " from the row system");
        box.emplace_back(*lo[i], *hi[i]);
    }
    return box;
}

HPolytope frac_polytope(const Graph& g) { return edge_system(g, 0, 1); }
HPolytope p_polytope(const Graph& g) { return edge_system(g, 0, 2); }
HPolytope q_polytope(const Graph& g) { return edge_system(g, 1, 1); }

std::vector<HalfIntPoint> frac_vertices(const Graph& g, const Limits& limits) {
    const int d = g.vertex_count();
    if (d > limits.max_vertex_enum_d)
        throw resource_error("frac_vertices: d = " + std::to_string(d) + " exceeds the 3^d enumeration limit " +
                             std::to_string(limits.max_vertex_enum_d));
    std::vector<HalfIntPoint> out;
    if (limits.threads > 1) {
        // shard on the first coordinate's label
        std::vector<std::future<std::vector<HalfIntPoint>>> shards;
        for (long first = 0; first <= 2; ++first) {
            shards.push_back(std::async(std::launch::async, [&g, d, first] {
                std::vector<long> label(d, 0);
                label[0] = first;
                std::vector<HalfIntPoint> part;
                enumerate_labelings(g, label, 1, part);
                return part;
            }));
        }
        for (auto& f : shards) {
            auto part = f.get();
            out.insert(out.end(), part.begin(), part.end());
        }
    } else {
        std::vector<long> label(d, 0);
        enumerate_labelings(g, label, 0, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<HalfIntPoint> q_vertices(const Graph& g, const Limits& limits) {
    auto vs = frac_vertices(g, limits);
    for (auto& v : vs)
        for (long& c : v.doubled) c = 3 * c - 2;
    std::sort(vs.begin(), vs.end());
    return vs;
}

bool is_lattice_polytope(const std::vector<HalfIntPoint>& vertices) {
    return std::all_of(vertices.begin(), vertices.end(), [](const HalfIntPoint& v) { return v.is_integral(); });
}

std::vector<IntVector> q_dual_vertices(const Graph& g) {
    const int d = g.vertex_count();
    std::vector<IntVector> out;
    for (auto [i, j] : g.edges()) {
        IntVector v(d, 0);
        v[i - 1] = 1;
        v[j - 1] = 1;
        out.push_back(std::move(v));
    }
    for (int i = 0; i < d; ++i) {
        IntVector v(d, 0);
        v[i] = -1;
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<IntVector> interior_lattice_points(const HPolytope& p, const Limits& limits) {
    const auto box = p.coordinate_bounds();
    double volume = 1;
    for (auto [lo, hi] : box) volume *= static_cast<double>(std::max(0L, hi - lo + 1));
    if (volume > static_cast<double>(limits.max_box_points))
        throw resource_error("interior_lattice_points: bounding box too large");
    std::vector<IntVector> out;
    if (volume == 0) return out;
    IntVector x(p.dimension);
    for (int i = 0; i < p.dimension; ++i) x[i] = box[i].first;
    while (true) {
        if (p.contains_strictly(x)) out.push_back(x);
        int i = p.dimension - 1;
        while (i >= 0 && x[i] == box[i].second) {
            x[i] = box[i].first;
            --i;
        }
        if (i < 0) break;
        ++x[i];
    }
    return out;
}

} // namespace fracpoly
