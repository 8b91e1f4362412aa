#include "doctest.h"

#include "fracpoly/error.hpp"
#include "fracpoly/polytope.hpp"
#include "oracles.hpp"

using namespace fracpoly;

namespace {

std::vector<IntVector> doubled(const std::vector<HalfIntPoint>& pts) {
    std::vector<IntVector> out;
    for (const auto& p : pts) out.push_back(p.doubled);
    return out;
}

} // namespace

TEST_CASE("H-representations") {
    Graph k2 = family_from_spec("complete:2");
    auto f = frac_polytope(k2);
    CHECK(f.dimension == 2);
    CHECK(f.rows == std::vector<Inequality>{{{-1, 0}, 0}, {{0, -1}, 0}, {{1, 1}, 1}});
    CHECK(frac_polytope(family_from_spec("cycle:3")).rows.size() == 6);
    CHECK(frac_polytope(family_from_spec("path:3")).rows.size() == 5);

    auto p = p_polytope(k2);
    CHECK(p.contains(HalfIntPoint::from_integer({2, 0})));
    CHECK(p.contains(HalfIntPoint::from_integer({0, 2})));
    CHECK_FALSE(p.contains(HalfIntPoint::from_integer({2, 1})));

    auto q = q_polytope(k2);
    CHECK(q.contains(HalfIntPoint::from_integer({-1, -1})));
    CHECK_FALSE(q.contains(HalfIntPoint::from_integer({1, 1})));
    CHECK(q_polytope(family_from_spec("cycle:3")).contains(HalfIntPoint{{1, 1, 1}}));

    auto box = q_polytope(family_from_spec("cycle:4")).coordinate_bounds();
    for (auto [lo, hi] : box) {
        CHECK(lo == -1);
        CHECK(hi == 2);
    }
}

TEST_CASE("FRAC vertices of small graphs") {
    auto k2 = frac_vertices(family_from_spec("complete:2"));
    CHECK(doubled(k2) == std::vector<IntVector>{{0, 0}, {0, 2}, {2, 0}});

    auto c3 = frac_vertices(family_from_spec("cycle:3"));
    CHECK(doubled(c3) == std::vector<IntVector>{{0, 0, 0}, {0, 0, 2}, {0, 2, 0}, {1, 1, 1}, {2, 0, 0}});

    auto c4 = frac_vertices(family_from_spec("cycle:4"));
    CHECK(c4.size() == 7);
    CHECK(is_lattice_polytope(c4));
    CHECK_FALSE(is_lattice_polytope(c3));
}

TEST_CASE("FRAC vertices agree with the active-rank oracle") {
    for (int d = 2; d <= 6; ++d) {
        std::vector<Graph> graphs;
        if (d <= 5) graphs = oracle::graphs_without_isolated_vertices(d);
        else graphs = {family_from_spec("cycle:6"), family_from_spec("complete:6"),
                       Graph(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}}),
                       Graph(6, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}})};
        for (const auto& g : graphs) {
            auto vs = frac_vertices(g);
            CHECK(doubled(vs) == oracle::frac_vertices_by_rank(g));
            auto fp = frac_polytope(g);
            for (const auto& v : vs) CHECK(fp.contains(v));
            // lattice <=> bipartite, for FRAC and Q
            bool bip = is_bipartite(g).bipartite;
            CHECK(is_lattice_polytope(vs) == bip);
            CHECK(is_lattice_polytope(q_vertices(g)) == bip);
        }
    }
}

TEST_CASE("Q vertices are 3v - 1") {
    auto k2 = q_vertices(family_from_spec("complete:2"));
    CHECK(k2.front().doubled == IntVector{-2, -2});
    auto c3 = q_vertices(family_from_spec("cycle:3"));
    CHECK(std::find(c3.begin(), c3.end(), HalfIntPoint{{1, 1, 1}}) != c3.end());
    CHECK(std::find(c3.begin(), c3.end(), HalfIntPoint{{4, -2, -2}}) != c3.end());
    CHECK_FALSE(is_lattice_polytope(q_vertices(family_from_spec("cycle:5"))));
    CHECK(HalfIntPoint{{1, -2, 4}}.to_rational_strings() == std::vector<std::string>{"1/2", "-1", "2"});
}

TEST_CASE("vertex enumeration resource guard") {
    Limits tight;
    tight.max_vertex_enum_d = 4;
    CHECK_THROWS_AS(frac_vertices(family_from_spec("cycle:5"), tight), resource_error);
    Limits threaded;
    threaded.threads = 3;
    CHECK(frac_vertices(family_from_spec("cycle:7"), threaded) == frac_vertices(family_from_spec("cycle:7")));
}

TEST_CASE("dual vertices of Q(G)") {
    CHECK(q_dual_vertices(family_from_spec("complete:2")) == std::vector<IntVector>{{1, 1}, {-1, 0}, {0, -1}});
    CHECK(q_dual_vertices(family_from_spec("cycle:3")).size() == 6);
    CHECK(q_dual_vertices(family_from_spec("path:3")).size() == 5);
}

TEST_CASE("interior lattice points") {
    CHECK(interior_lattice_points(q_polytope(family_from_spec("cycle:3"))) == std::vector<IntVector>{{0, 0, 0}});
    CHECK(interior_lattice_points(q_polytope(family_from_spec("complete_bipartite:2,2"))) ==
          std::vector<IntVector>{{0, 0, 0, 0}});
    CHECK(interior_lattice_points(p_polytope(family_from_spec("complete:2"))).empty());
    for (int d = 2; d <= 4; ++d)
        for (const auto& g : oracle::graphs_without_isolated_vertices(d))
            CHECK(interior_lattice_points(q_polytope(g)) == std::vector<IntVector>{IntVector(d, 0)});
    // 3 FRAC(G) has (1,...,1) inside
    CHECK(interior_lattice_points(frac_polytope(family_from_spec("cycle:5")).dilate(3)) ==
          std::vector<IntVector>{IntVector(5, 1)});
}
