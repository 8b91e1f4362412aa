#pragma once

#include <compare>
#include <string>
#include <vector>

#include "fracpoly/graph.hpp"
#include "fracpoly/limits.hpp"

namespace fracpoly {

using IntVector = std::vector<long>;

/// A point with coordinates in (1/2)Z, stored doubled so that the
/// {0, 1/2, 1} vertices of FRAC(G) are exact.
struct HalfIntPoint {
    IntVector doubled;

    static HalfIntPoint from_integer(const IntVector& x);
    bool is_integral() const;
    // "1/2", "-1", "0", ...
    std::vector<std::string> to_rational_strings() const;
    auto operator<=>(const HalfIntPoint&) const = default;
};

struct Inequality {
    IntVector a; // a . x <= b
    long b = 0;
    bool operator==(const Inequality&) const = default;
};

/// Bounded polytope {x : a . x <= b for every row} with integer data.
struct HPolytope {
    int dimension = 0;
    std::vector<Inequality> rows;

    bool contains(const HalfIntPoint& p) const;
    bool contains_strictly(const IntVector& x) const;
    // Scales right-hand sides: the n-fold dilate.
    HPolytope dilate(long n) const;
    // Per-coordinate integer bounds implied by the rows; throws
    // domain_error if some coordinate cannot be bounded this way.
    std::vector<std::pair<long, long>> coordinate_bounds() const;
};

// {-x_i <= 0} u {x_i + x_j <= 1}
HPolytope frac_polytope(const Graph& g);
// 2 * FRAC(G)
HPolytope p_polytope(const Graph& g);
// 3 * FRAC(G) - (1,...,1) = {-x_i <= 1} u {x_i + x_j <= 1}
HPolytope q_polytope(const Graph& g);

/// Vertices of FRAC(G): feasible {0,1/2,1}-labelings whose half-valued
/// vertices induce a subgraph with an odd cycle in every component.
/// Sorted ascending.
std::vector<HalfIntPoint> frac_vertices(const Graph& g, const Limits& limits = {});

// Image of frac_vertices under v -> 3v - (1,...,1).
std::vector<HalfIntPoint> q_vertices(const Graph& g, const Limits& limits = {});

bool is_lattice_polytope(const std::vector<HalfIntPoint>& vertices);

// {e_i + e_j : ij in E} u {-e_i}; edges in sorted order, then negatives.
std::vector<IntVector> q_dual_vertices(const Graph& g);

std::vector<IntVector> interior_lattice_points(const HPolytope& p, const Limits& limits = {});

} // namespace fracpoly
