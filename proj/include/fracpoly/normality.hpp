#pragma once

#include <optional>
#include <vector>

#include "fracpoly/graph.hpp"
#include "fracpoly/limits.hpp"
#include "fracpoly/polynomial.hpp"
#include "fracpoly/polytope.hpp"

namespace fracpoly {

/// Columns (a, 1) for the lattice points a used to generate the cone over
/// Q(G)^∨: origin, e_i + e_j per edge (sorted), -e_i per vertex.
struct ConfigurationMatrix {
    int d = 0;
    std::vector<IntVector> columns; // each of length d + 1
};

ConfigurationMatrix config_matrix(const Graph& g);

/// Index of the integer column span in Z^{rows}: 1 means the columns span
/// the whole lattice, 0 means they are rank deficient.
BigInt lattice_index(const std::vector<IntVector>& columns, int rows);

struct Membership {
    bool member = false;
    std::vector<int> multiplicities; // per column, when member
};

/// Whether u is a nonnegative integer combination of the columns. Every
/// column has last coordinate 1, so exactly u_{d+1} columns are used; the
/// search grows the set of vectors reachable with t columns layer by layer,
/// discarding vectors that can no longer reach u.
Membership semigroup_member(const IntVector& u, const ConfigurationMatrix& m, const Limits& limits = {});

struct WitnessVector {
    IntVector u;                 // (k+1) e_{d+1} + Σ_{i in cycle} e_i
    std::vector<Vertex> cycle;
    int k = 0;                   // (|cycle| - 1) / 2
    bool rational_combination = false; // 2u = origin + Σ cycle edge columns
    bool member = true;          // in the integer semigroup
};

/// Non-normality certificate from a shortest odd cycle. Throws domain_error
/// on bipartite graphs and consistency_error if the certificate fails.
WitnessVector odd_cycle_witness(const Graph& g, const Limits& limits = {});

struct NormalityViolation {
    int degree = 0;
    IntVector point;
};

struct NormalityReport {
    int checked_up_to = 0;
    std::vector<std::size_t> points_per_degree; // lattice points of k Q(G)^∨
    std::vector<NormalityViolation> violations;

    bool violation_free() const { return violations.empty(); }
};

/// For k = 1..max_degree, tests every lattice point x of k Q(G)^∨ for
/// (x, k) ∈ semigroup. Only normality up to max_degree can be established.
NormalityReport normality_check_up_to(const Graph& g, int max_degree, const Limits& limits = {});

// [A_G | -E_d]: vertex-edge incidence matrix next to minus the identity.
std::vector<IntVector> incidence_with_negative_identity(const Graph& g);

struct UnimodularityResult {
    bool totally_unimodular = true;
    std::vector<int> rows, cols; // 0-based indices of an offending minor
    long determinant = 0;
};

/// Exhaustive check that every square minor lies in {-1, 0, 1}.
UnimodularityResult is_totally_unimodular(const std::vector<IntVector>& matrix, const Limits& limits = {});

long integer_determinant(std::vector<IntVector> a);

struct GorensteinFanoReport {
    bool q_lattice = false;        // Q(G) has integral vertices
    bool fano = false;             // origin is the only interior lattice point of Q(G)
    bool dual_lattice = false;     // facet normals are integral points of Q(G)^∨
    bool gorenstein_fano() const { return q_lattice && fano && dual_lattice; }
};

GorensteinFanoReport gorenstein_fano_check(const Graph& g, const Limits& limits = {});

} // namespace fracpoly
