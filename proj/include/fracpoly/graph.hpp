#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fracpoly {

using Vertex = int;          // 1-based
using Edge = std::pair<Vertex, Vertex>; // first < second

/// Simple undirected graph on [d] without isolated vertices.
///
/// Immutable after construction. Edges are stored sorted and deduplicated,
/// each as (i, j) with i < j.
class Graph {
public:
    /// Throws domain_error on loops, out-of-range endpoints, or isolated
    /// vertices. Duplicate edges (in either orientation) are merged.
    Graph(int d, std::vector<Edge> edges);

    int vertex_count() const { return d_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v - 1]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v - 1].size()); }
    bool has_edge(Vertex i, Vertex j) const;

    bool operator==(const Graph& other) const {
        return d_ == other.d_ && edges_ == other.edges_;
    }

private:
    int d_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

// Parses "d m" followed by m lines "i j".
Graph from_edge_list(std::string_view text);

// Named families: complete:d, cycle:d, path:d, complete_bipartite:m,n.
Graph family(std::string_view name, std::span<const int> params);
// "cycle:7", "complete_bipartite:2,3".
Graph family_from_spec(std::string_view spec);

std::string to_edge_list(const Graph& g);

struct BipartiteResult {
    bool bipartite = false;
    std::vector<int> coloring;      // 0/1 per vertex (index v-1), when bipartite
    std::vector<Vertex> odd_cycle;  // closed: last vertex adjacent to first
};

/// Two-coloring by BFS layering. When the graph is not bipartite the
/// witness is a shortest odd cycle of g.
BipartiteResult is_bipartite(const Graph& g);

/// Shortest odd cycle as a vertex sequence, or empty if g is bipartite.
std::vector<Vertex> shortest_odd_cycle(const Graph& g);

/// Graph on an arbitrary vertex subset; isolated vertices allowed.
/// Used only by the vertex criterion of FRAC(G).
struct InducedSubgraph {
    std::vector<Vertex> vertices; // sorted, original labels
    std::vector<Edge> edges;      // original labels
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

// Components ordered by least vertex; each component sorted.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
std::vector<std::vector<Vertex>> connected_components(const InducedSubgraph& h);

// True if every component of h contains an odd cycle.
bool every_component_non_bipartite(const InducedSubgraph& h);

} // namespace fracpoly
