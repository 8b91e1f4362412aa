#include "fracpoly/graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <queue>
#include <sstream>

#include "fracpoly/error.hpp"

namespace fracpoly {

namespace {

// Adjacency over an arbitrary labelled vertex list.
struct LocalAdjacency {
    std::vector<Vertex> labels;
    std::vector<std::vector<int>> adj;

    LocalAdjacency(std::vector<Vertex> vs, const std::vector<Edge>& edges)
        : labels(std::move(vs)), adj(labels.size()) {
        std::map<Vertex, int> index;
        for (std::size_t k = 0; k < labels.size(); ++k) index[labels[k]] = static_cast<int>(k);
        for (auto [i, j] : edges) {
            int a = index.at(i), b = index.at(j);
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    }

    std::vector<std::vector<Vertex>> components() const {
        std::vector<int> comp(labels.size(), -1);
        std::vector<std::vector<Vertex>> out;
        // labels are sorted, so the scan order gives least-vertex ordering
        for (std::size_t s = 0; s < labels.size(); ++s) {
            if (comp[s] >= 0) continue;
            std::vector<Vertex> part;
            std::vector<int> stack{static_cast<int>(s)};
            comp[s] = static_cast<int>(out.size());
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                part.push_back(labels[x]);
                for (int y : adj[x]) {
                    if (comp[y] < 0) {
                        comp[y] = comp[s];
                        stack.push_back(y);
                    }
                }
            }
            std::sort(part.begin(), part.end());
            out.push_back(std::move(part));
        }
        return out;
    }

    // Shortest odd cycle in local indices, empty if bipartite.
    std::vector<int> shortest_odd_cycle() const {
        const int n = static_cast<int>(labels.size());
        std::vector<int> best;
        for (int root = 0; root < n; ++root) {
            std::vector<int> dist(n, -1), parent(n, -1);
            std::queue<int> q;
            dist[root] = 0;
            q.push(root);
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                for (int y : adj[x]) {
                    if (dist[y] < 0) {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        q.push(y);
                    }
                }
            }
            for (int u = 0; u < n; ++u) {
                if (dist[u] < 0) continue;
                for (int v : adj[u]) {
                    if (v <= u || dist[v] != dist[u]) continue;
                    int len = 2 * dist[u] + 1;
                    if (!best.empty() && static_cast<int>(best.size()) <= len) continue;
                    std::vector<int> left{u}, right{v};
                    int a = u, b = v;
                    while (parent[a] != parent[b]) {
                        a = parent[a];
                        b = parent[b];
                        left.push_back(a);
                        right.push_back(b);
                    }
                    left.push_back(parent[a]);
                    // left: u .. lca, right: v .. child of lca
                    std::vector<int> cycle(left.rbegin(), left.rend());
                    cycle.insert(cycle.end(), right.begin(), right.end());
                    best = std::move(cycle);
                }
            }
        }
        return best;
    }
};

std::vector<Vertex> all_vertices(int d) {
    std::vector<Vertex> vs(d);
    for (int i = 0; i < d; ++i) vs[i] = i + 1;
    return vs;
}

int parse_int(std::string_view token, std::string_view what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw parse_error("invalid integer '" + std::string(token) + "' in " + std::string(what));
    return value;
}

} // namespace

Graph::Graph(int d, std::vector<Edge> edges) : d_(d) {
    if (d < 1) throw domain_error("graph needs at least one vertex");
    for (auto& [i, j] : edges) {
        if (i < 1 || i > d || j < 1 || j > d)
            throw domain_error("edge {" + std::to_string(i) + "," + std::to_string(j) +
                               "} has an endpoint outside [1," + std::to_string(d) + "]");
        if (i == j) throw domain_error("loop at vertex " + std::to_string(i));
        if (i > j) std::swap(i, j);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adj_.assign(d, {});
    for (auto [i, j] : edges_) {
        adj_[i - 1].push_back(j);
        adj_[j - 1].push_back(i);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    for (int v = 1; v <= d; ++v)
        if (adj_[v - 1].empty()) throw domain_error("vertex " + std::to_string(v) + " is isolated");
}

bool Graph::has_edge(Vertex i, Vertex j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{i, j});
}

Graph from_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        for (std::string tok; ls >> tok;) tokens.push_back(tok);
        if (!tokens.empty()) rows.push_back(std::move(tokens));
    }
    if (rows.empty()) throw parse_error("empty graph file");
    if (rows[0].size() != 2) throw parse_error("header must be 'd m'");
    int d = parse_int(rows[0][0], "header");
    int m = parse_int(rows[0][1], "header");
    if (d < 1 || m < 0) throw parse_error("header values out of range");
    if (static_cast<int>(rows.size()) - 1 != m)
        throw parse_error("header announces " + std::to_string(m) + " edges, found " +
                          std::to_string(rows.size() - 1));
    std::vector<Edge> edges;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() != 2) throw parse_error("edge line " + std::to_string(r) + " must be 'i j'");
        edges.emplace_back(parse_int(rows[r][0], "edge line"), parse_int(rows[r][1], "edge line"));
    }
    return Graph(d, std::move(edges));
}

Graph family(std::string_view name, std::span<const int> params) {
    auto need = [&](std::size_t n) {
        if (params.size() != n)
            throw parse_error("family '" + std::string(name) + "' takes " + std::to_string(n) +
                              " parameter(s)");
    };
    std::vector<Edge> edges;
    if (name == "complete") {
        need(1);
        int d = params[0];
        if (d < 2) throw domain_error("complete:d needs d >= 2");
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j) edges.emplace_back(i, j);
        return Graph(d, std::move(edges));
    }
    if (name == "cycle") {
        need(1);
        int d = params[0];
        if (d < 3) throw domain_error("cycle:d needs d >= 3");
        for (int i = 1; i < d; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(1, d);
        return Graph(d, std::move(edges));
    }
    if (name == "path") {
        need(1);
        int d = params[0];
        if (d < 2) throw domain_error("path:d needs d >= 2");
        for (int i = 1; i < d; ++i) edges.emplace_back(i, i + 1);
        return Graph(d, std::move(edges));
    }
    if (name == "complete_bipartite") {
        need(2);
        int m = params[0], n = params[1];
        if (m < 1 || n < 1) throw domain_error("complete_bipartite:m,n needs m,n >= 1");
        for (int i = 1; i <= m; ++i)
            for (int j = m + 1; j <= m + n; ++j) edges.emplace_back(i, j);
        return Graph(m + n, std::move(edges));
    }
    throw parse_error("unknown graph family '" + std::string(name) + "'");
}

Graph family_from_spec(std::string_view spec) {
    auto colon = spec.find(':');
    if (colon == std::string_view::npos) throw parse_error("family spec must look like name:params");
    std::string_view name = spec.substr(0, colon);
    std::string_view rest = spec.substr(colon + 1);
    std::vector<int> params;
    while (true) {
        auto comma = rest.find(',');
        params.push_back(parse_int(rest.substr(0, comma), "family parameters"));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return family(name, params);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [i, j] : g.edges()) out << i << ' ' << j << '\n';
    return out.str();
}

BipartiteResult is_bipartite(const Graph& g) {
    const int d = g.vertex_count();
    BipartiteResult result;
    std::vector<int> color(d, -1);
    bool ok = true;
    for (int s = 1; s <= d && ok; ++s) {
        if (color[s - 1] >= 0) continue;
        color[s - 1] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty() && ok) {
            Vertex x = q.front();
            q.pop();
            for (Vertex y : g.neighbors(x)) {
                if (color[y - 1] < 0) {
                    color[y - 1] = 1 - color[x - 1];
                    q.push(y);
                } else if (color[y - 1] == color[x - 1]) {
                    ok = false;
                    break;
                }
            }
        }
    }
    result.bipartite = ok;
    if (ok)
        result.coloring = std::move(color);
    else
        result.odd_cycle = shortest_odd_cycle(g);
    return result;
}

std::vector<Vertex> shortest_odd_cycle(const Graph& g) {
    LocalAdjacency local(all_vertices(g.vertex_count()), g.edges());
    std::vector<Vertex> cycle;
    for (int x : local.shortest_odd_cycle()) cycle.push_back(local.labels[x]);
    return cycle;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
    InducedSubgraph h;
    h.vertices.assign(subset.begin(), subset.end());
    std::sort(h.vertices.begin(), h.vertices.end());
    h.vertices.erase(std::unique(h.vertices.begin(), h.vertices.end()), h.vertices.end());
    for (auto [i, j] : g.edges())
        if (std::binary_search(h.vertices.begin(), h.vertices.end(), i) &&
            std::binary_search(h.vertices.begin(), h.vertices.end(), j))
            h.edges.emplace_back(i, j);
    return h;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    return LocalAdjacency(all_vertices(g.vertex_count()), g.edges()).components();
}

std::vector<std::vector<Vertex>> connected_components(const InducedSubgraph& h) {
    return LocalAdjacency(h.vertices, h.edges).components();
}

bool every_component_non_bipartite(const InducedSubgraph& h) {
    for (const auto& part : connected_components(h)) {
        InducedSubgraph sub;
        sub.vertices = part;
        for (auto e : h.edges)
            if (std::binary_search(part.begin(), part.end(), e.first)) sub.edges.push_back(e);
        if (LocalAdjacency(sub.vertices, sub.edges).shortest_odd_cycle().empty()) return false;
    }
    return true;
}

} // namespace fracpoly
