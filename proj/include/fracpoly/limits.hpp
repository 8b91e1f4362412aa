#pragma once

#include <cstddef>

namespace fracpoly {

// Enumeration budgets. Every exponential routine takes one of these
// rather than a hard-coded constant.
struct Limits {
    int max_vertex_enum_d = 16;           // 3^d labelings in frac_vertices
    int max_signed_perm_d = 8;            // 2^d * d! words in B_d
    std::size_t max_dfs_states = 20'000'000; // memo entries in count_dfs
    int max_semigroup_degree = 12;        // u_{d+1} in semigroup_member
    std::size_t max_box_points = 50'000'000; // integer box enumeration
    int max_tu_rows = 7;                  // exhaustive minors
    unsigned threads = 1;
};

} // namespace fracpoly
