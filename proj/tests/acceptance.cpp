// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.
// `--descent-d9` additionally enumerates B_9 for C_9 (slow).

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "oracles.hpp"

#include "fracpoly/ehrhart.hpp"
#include "fracpoly/graph.hpp"
#include "fracpoly/lattice_count.hpp"
#include "fracpoly/normality.hpp"
#include "fracpoly/polytope.hpp"
#include "fracpoly/signed_perm.hpp"

using namespace fracpoly;
using nlohmann::json;

namespace {

bool descent_d9 = false;

struct Failure {
    std::string what;
};

void expect(bool cond, const std::string& what) {
    if (!cond) throw Failure{what};
}

std::string label(const Graph& g) {
    std::ostringstream s;
    s << "d=" << g.vertex_count() << " E={";
    for (auto [i, j] : g.edges()) s << i << j << ' ';
    s << '}';
    return s.str();
}

const std::vector<Graph>& sweep() {
    static const std::vector<Graph> graphs = [] {
        std::vector<Graph> all;
        for (int d = 2; d <= 5; ++d)
            for (auto& g : oracle::graphs_without_isolated_vertices(d)) all.push_back(std::move(g));
        return all;
    }();
    return graphs;
}

std::vector<Graph> family_set() {
    std::vector<Graph> gs;
    for (const char* s : {"cycle:3", "cycle:5", "cycle:7", "complete:2", "complete:3", "complete:4", "complete:5",
                          "path:4", "complete_bipartite:2,2", "complete_bipartite:2,3"})
        gs.push_back(family_from_spec(s));
    return gs;
}

IntPolynomial from_json(const json& arr) {
    std::vector<BigInt> c;
    for (const auto& v : arr) c.emplace_back(v.get<std::string>());
    return IntPolynomial(c);
}

json cli_json(std::vector<std::string> args) {
    std::ostringstream out, err;
    args.insert(args.end(), {"--format", "json"});
    int code = cli::run(args, out, err);
    expect(code == 0, "cli exit " + std::to_string(code) + ": " + err.str());
    return json::parse(out.str());
}

// ---------------------------------------------------------------------------

std::string odd_cycle_tables() {
    const std::vector<std::pair<int, IntPolynomial>> expected = {
        {3, {1, 4, 7, 7, 4, 1}},
        {5, {1, 11, 51, 131, 206, 206, 131, 51, 11, 1}},
        {7, {1, 29, 281, 1408, 4320, 8814, 12475, 12475, 8814, 4320, 1408, 281, 29, 1}},
        {9, {1, 76, 1450, 12844, 67000, 230986, 561004, 996310, 1321369, 1321369, 996310, 561004, 230986, 67000,
             12844, 1450, 76, 1}},
    };
    std::ostringstream detail;
    for (const auto& [d, g] : expected) {
        auto t0 = std::chrono::steady_clock::now();
        auto r = cli_json({"series", "--family", "cycle:" + std::to_string(d), "--engine", "transfer"});
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        expect(from_json(r["numerator"]) == g, "direct numerator of C_" + std::to_string(d));
        expect(from_json(r["numerator_interleaved"]) == g, "interleaved numerator of C_" + std::to_string(d));
        expect(secs < (d == 9 ? 10.0 : 1.0), "C_" + std::to_string(d) + " took " + std::to_string(secs) + " s");
        detail << "C_" << d << ' ' << static_cast<int>(secs * 1000) << "ms ";
    }
    if (descent_d9) {
        Limits limits;
        limits.max_signed_perm_d = 9;
        auto c9 = family("cycle", std::vector<int>{9});
        expect(descent_polynomial_pi(c9, limits) == p_delta(c9).polynomial(), "descent path for C_9");
        detail << "(descent d=9 checked)";
    }
    return detail.str();
}

std::string descent_vs_counts() {
    for (const auto& g : sweep()) {
        const int d = g.vertex_count();
        std::vector<BigInt> counts;
        for (long n = 0; n <= d; ++n) counts.push_back(count_points({PolytopeKind::p, &g, n}, Engine::dfs));
        expect(descent_polynomial_pi(g) == delta_from_counts(counts, d).polynomial(), label(g));
    }
    return std::to_string(sweep().size()) + " graphs";
}

std::string numerator_consistency() {
    auto graphs = sweep();
    for (const char* s : {"cycle:7", "complete:5", "complete_bipartite:2,3"}) graphs.push_back(family_from_spec(s));
    for (const auto& g : graphs) {
        const int d = g.vertex_count();
        auto direct = series_numerator_direct(g);
        expect(direct == series_numerator_theorem(p_delta(g)), "interleaving " + label(g));
        expect(direct.degree() == 2 * d - 1 && is_symmetric(direct), "symmetry " + label(g));
        expect(is_unimodal(direct), "unimodality " + label(g));
    }
    return std::to_string(graphs.size()) + " graphs";
}

std::string alternating_and_split() {
    std::size_t checked = 0;
    const Limits limits;
    for (const auto& g : sweep()) {
        const int d = g.vertex_count();
        if (d > limits.max_signed_perm_d) continue;
        expect(is_alternatingly_increasing(p_delta(g)), "alternating " + label(g));
        auto split = split_polynomials(g, limits);
        expect(split.plus.coeff(0) == 0, "t | b-part " + label(g));
        std::vector<BigInt> b(split.plus.coeffs().begin() + 1, split.plus.coeffs().end());
        IntPolynomial bp(b);
        expect(split.minus.degree() == d - 1 && is_symmetric(split.minus), "a(t) " + label(g));
        expect(bp.degree() == d - 2 && is_symmetric(bp), "b(t) " + label(g));
        ++checked;
    }
    return std::to_string(checked) + " graphs";
}

std::string reciprocity() {
    for (const auto& g : family_set())
        for (long k = 0; k <= 3; ++k) {
            auto r = reciprocity_check(g, k);
            expect(r.holds, label(g) + " k=" + std::to_string(k));
        }
    for (int d : {3, 5}) {
        auto c = family("cycle", std::vector<int>{d});
        auto q = quasi_polynomial(c);
        long oracle_count = oracle::box_count(c, 0, 1);
        expect(q.evaluate(1) == oracle_count, "i_odd(C_" + std::to_string(d) + ", 1)");
        expect(oracle_count == (d == 3 ? 4 : 11), "stable sets of C_" + std::to_string(d));
    }
    return "family set, k = 0..3";
}

std::string complete_graphs() {
    for (int d = 2; d <= 6; ++d) {
        auto k = family("complete", std::vector<int>{d});
        auto counts = frac_counts(k, 2 * d + 1, Engine::dfs);
        expect(complete_graph_numerator(d) == series_numerator_from_counts(counts, d), "K_" + std::to_string(d));
    }
    return "K_2..K_6";
}

std::string normality() {
    const Limits limits;
    for (const char* s : {"cycle:3", "cycle:5"}) {
        auto w = odd_cycle_witness(family_from_spec(s), limits);
        expect(!w.member && w.rational_combination, std::string("witness ") + s);
    }
    std::size_t bip4 = 0, bip5 = 0;
    for (const auto& g : sweep()) {
        if (!is_bipartite(g).bipartite) continue;
        if (g.vertex_count() <= 4) {
            expect(normality_check_up_to(g, 3, limits).violation_free(), "normality " + label(g));
            ++bip4;
        }
        expect(is_totally_unimodular(incidence_with_negative_identity(g), limits).totally_unimodular,
               "TU " + label(g));
        ++bip5;
    }
    expect(!is_totally_unimodular(incidence_with_negative_identity(family_from_spec("cycle:3")), limits)
                .totally_unimodular,
           "C_3 not TU");
    return std::to_string(bip4) + " bipartite graphs to D=3, " + std::to_string(bip5) + " TU";
}

std::string lattice_and_fano() {
    const Limits limits;
    for (const auto& g : sweep()) {
        const bool bip = is_bipartite(g).bipartite;
        expect(is_lattice_polytope(frac_vertices(g, limits)) == bip, "FRAC " + label(g));
        expect(is_lattice_polytope(q_vertices(g, limits)) == bip, "Q " + label(g));
        auto interior = interior_lattice_points(q_polytope(g), limits);
        expect(interior == std::vector<IntVector>{IntVector(g.vertex_count(), 0)}, "interior " + label(g));
        auto dual = q_dual_vertices(g);
        expect(dual.size() == g.edge_count() + static_cast<std::size_t>(g.vertex_count()), "dual size " + label(g));
        expect(gorenstein_fano_check(g, limits).dual_lattice, "dual integral " + label(g));
    }
    return std::to_string(sweep().size()) + " graphs";
}

std::string engine_equivalence() {
    std::size_t tuples = 0;
    for (const char* shape : {"path", "cycle"})
        for (int d = std::string(shape) == "path" ? 2 : 3; d <= 9; ++d) {
            auto g = family(shape, std::vector<int>{d});
            for (auto kind : {PolytopeKind::frac, PolytopeKind::p, PolytopeKind::q})
                for (long n = 0; n <= 8; ++n) {
                    CountRequest req{kind, &g, n};
                    expect(count_dfs(req) == count_transfer(req), std::string(shape) + ":" + std::to_string(d) +
                                                                      " " + std::string(kind_name(kind)) +
                                                                      " n=" + std::to_string(n));
                    ++tuples;
                }
        }
    return std::to_string(tuples) + " tuples";
}

} // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--descent-d9") == 0) descent_d9 = true;

    struct Criterion {
        std::string name;
        std::function<std::string()> check;
        double budget_s; // 0: no time bound
    };
    const std::vector<Criterion> criteria = {
        {"1 odd-cycle series tables", odd_cycle_tables, 0},
        {"2 descent polynomial = counted delta", descent_vs_counts, 60},
        {"3 numerator interleaving/symmetry/unimodality", numerator_consistency, 0},
        {"4 alternating increase and split symmetry", alternating_and_split, 0},
        {"5 odd/even reciprocity", reciprocity, 0},
        {"6 complete graph closed form", complete_graphs, 30},
        {"7 witnesses, bounded normality, TU", normality, 60},
        {"8 lattice iff bipartite, Fano, dual vertices", lattice_and_fano, 0},
        {"9 dfs = transfer", engine_equivalence, 0},
    };
    int failures = 0;
    for (const auto& [name, check, budget] : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string status, detail;
        try {
            detail = check();
            status = "PASS";
        } catch (const Failure& f) {
            status = "FAIL";
            detail = f.what;
        } catch (const std::exception& e) {
            status = "FAIL";
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (status == "PASS" && budget > 0 && secs > budget) {
            status = "FAIL";
            detail += ", over the " + std::to_string(static_cast<int>(budget)) + " s budget";
        }
        if (status == "FAIL") ++failures;
        std::cout << status << "  criterion " << name << "  (" << detail << "; " << secs << " s)" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
