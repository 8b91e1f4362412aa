#pragma once

#include <optional>
#include <string_view>

#include "fracpoly/graph.hpp"
#include "fracpoly/limits.hpp"
#include "fracpoly/polynomial.hpp"

namespace fracpoly {

enum class PolytopeKind { frac, p, q };

PolytopeKind parse_kind(std::string_view name);
std::string_view kind_name(PolytopeKind kind);

struct CountRequest {
    PolytopeKind kind = PolytopeKind::frac;
    const Graph* graph = nullptr;
    long dilation = 0;
};

/// The dilate n*K shifted to a nonnegative box: coordinates y_i in
/// [0, pair_bound] with y_i + y_j <= pair_bound on every edge.
struct ShiftedSystem {
    long lower = 0;      // per-coordinate lower bound before shifting
    long pair_bound = 0; // s - 2*lower
};

ShiftedSystem shifted_system(PolytopeKind kind, long n);

/// |nK ∩ Z^d| by depth-first assignment in descending-degree order.
/// Each unassigned vertex carries the tightest upper bound implied by its
/// assigned neighbours; the number of completions depends only on those
/// bounds, so subtrees are memoized on them.
BigInt count_dfs(const CountRequest& req, const Limits& limits = {});

enum class Chain { path, cycle };

// path:d or cycle:d up to the fixed labelling 1..d.
std::optional<Chain> chain_shape(const Graph& g);

/// Transfer-matrix count on path/cycle graphs: T[p][q] = [p + q <= s] over
/// states 0..s; paths give 1^T T^{d-1} 1, cycles give trace(T^d).
/// Throws domain_error for other graphs.
BigInt count_transfer(const CountRequest& req);

enum class Engine { dfs, transfer, both, automatic };

Engine parse_engine(std::string_view name);

/// Dispatches to an engine. `both` throws consistency_error on mismatch;
/// `automatic` uses transfer on paths and cycles, dfs otherwise.
BigInt count_points(const CountRequest& req, Engine engine, const Limits& limits = {});

// Stable sets of g by subset enumeration; equals count(frac, g, 1).
BigInt count_stable_sets(const Graph& g);

} // namespace fracpoly
