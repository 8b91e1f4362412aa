#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fracpoly/ehrhart.hpp"
#include "fracpoly/error.hpp"
#include "fracpoly/graph.hpp"
#include "fracpoly/lattice_count.hpp"
#include "fracpoly/normality.hpp"
#include "fracpoly/polytope.hpp"
#include "fracpoly/signed_perm.hpp"

namespace fracpoly::cli {

namespace {

using nlohmann::json;

struct RunConfig {
    std::string graph_file;
    std::string family_spec;
    std::string format = "text";
    std::string engine = "auto";
    int max_degree = 0; // 0: subcommand default
    unsigned threads = 1;
    int limit_d = 0;    // 0: library default

    std::string kind = "frac";
    long n = 0;
    bool split = false;
    bool list = false;
    std::vector<long> ks{0, 1, 2, 3};

    Limits limits() const {
        Limits l;
        l.threads = threads;
        if (limit_d > 0) l.max_signed_perm_d = limit_d;
        return l;
    }
    bool json_output() const { return format == "json"; }
};

// Big integers go out as decimal strings; `numeric` records whether every
// one of them would also survive as an IEEE double.
class NumberWriter {
public:
    json big(const BigInt& v) {
        static const BigInt limit = BigInt(1) << 53;
        if (abs(v) >= limit) numeric_ = false;
        return v.get_str();
    }
    json list(const std::vector<BigInt>& vs) {
        json arr = json::array();
        for (const auto& v : vs) arr.push_back(big(v));
        return arr;
    }
    json poly(const IntPolynomial& p) { return list(p.coeffs()); }
    static json rational_poly(const RatPolynomial& p) {
        json arr = json::array();
        for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
        return arr;
    }
    bool numeric() const { return numeric_; }

private:
    bool numeric_ = true;
};

std::string coefficient_line(const std::vector<BigInt>& v) {
    std::ostringstream s;
    s << '(';
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << v[i].get_str();
    s << ')';
    return s.str();
}

std::string join_vector(const IntVector& v) {
    std::ostringstream s;
    s << '(';
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << v[i];
    s << ')';
    return s.str();
}

std::string join_strings(const std::vector<std::string>& v) {
    std::ostringstream s;
    s << '(';
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << v[i];
    s << ')';
    return s.str();
}

Graph load_graph(const RunConfig& cfg) {
    if (cfg.graph_file.empty() == cfg.family_spec.empty())
        throw parse_error("exactly one of --graph FILE or --family SPEC is required");
    if (!cfg.family_spec.empty()) return family_from_spec(cfg.family_spec);
    std::ifstream in(cfg.graph_file);
    if (!in) throw parse_error("cannot open graph file '" + cfg.graph_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return from_edge_list(buf.str());
}

json graph_json(const Graph& g, const RunConfig& cfg) {
    json edges = json::array();
    for (auto [i, j] : g.edges()) edges.push_back({i, j});
    return {{"d", g.vertex_count()},
            {"edges", edges},
            {"source", cfg.family_spec.empty() ? cfg.graph_file : cfg.family_spec}};
}

void stringify_numbers(json& j) {
    if (j.is_number_integer()) j = std::to_string(j.get<long long>());
    else if (j.is_structured())
        for (auto& child : j) stringify_numbers(child);
}

void emit(std::ostream& out, json report, NumberWriter& nw) {
    stringify_numbers(report);
    report["numeric"] = nw.numeric();
    out << report.dump(2) << '\n';
}

// ---- count ----------------------------------------------------------------

int cmd_count(const RunConfig& cfg, std::ostream& out) {
    const Graph g = load_graph(cfg);
    const auto kind = parse_kind(cfg.kind);
    const auto engine = parse_engine(cfg.engine);
    const auto limits = cfg.limits();
    const CountRequest req{kind, &g, cfg.n};

    std::optional<BigInt> dfs, transfer;
    if (engine == Engine::dfs || engine == Engine::both) dfs = count_dfs(req, limits);
    if (engine == Engine::transfer || engine == Engine::both) transfer = count_transfer(req);
    if (engine == Engine::automatic) {
        if (chain_shape(g)) transfer = count_transfer(req);
        else dfs = count_dfs(req, limits);
    }
    const bool agree = !(dfs && transfer) || *dfs == *transfer;
    const BigInt value = dfs ? *dfs : *transfer;

    NumberWriter nw;
    if (cfg.json_output()) {
        json r;
        r["graph"] = graph_json(g, cfg);
        r["kind"] = std::string(kind_name(kind));
        r["n"] = std::to_string(cfg.n);
        r["engine"] = cfg.engine;
        r["count"] = nw.big(value);
        r["dfs"] = dfs ? nw.big(*dfs) : json(nullptr);
        r["transfer"] = transfer ? nw.big(*transfer) : json(nullptr);
        r["agree"] = agree;
        emit(out, r, nw);
    } else {
        out << "i(" << kind_name(kind) << ", n=" << cfg.n << ") = " << value.get_str() << '\n';
        if (dfs && transfer)
            out << "dfs = " << dfs->get_str() << ", transfer = " << transfer->get_str()
                << (agree ? " (agree)" : " (MISMATCH)") << '\n';
    }
    return agree ? exit_ok : exit_check_failed;
}

// ---- delta / series --------------------------------------------------------

int cmd_delta_series(const RunConfig& cfg, std::ostream& out, bool series) {
    const Graph g = load_graph(cfg);
    const int d = g.vertex_count();
    const auto counts = frac_counts(g, 2 * d + 1, parse_engine(cfg.engine), cfg.limits());
    const auto delta = p_delta_from_frac_counts(counts, d);
    const auto direct = series_numerator_from_counts(counts, d);
    const auto theorem = series_numerator_theorem(delta);
    const bool sym = is_symmetric(direct), uni = is_unimodal(direct), alt = is_alternatingly_increasing(delta);
    const bool match = direct == theorem;

    NumberWriter nw;
    if (cfg.json_output()) {
        json r;
        r["graph"] = graph_json(g, cfg);
        r["delta"] = nw.list(delta.entries());
        r["numerator"] = nw.poly(direct);
        r["numerator_interleaved"] = nw.poly(theorem);
        r["checks"] = {{"symmetric", sym}, {"unimodal", uni}, {"alt_increasing", alt}, {"interleaving_match", match}};
        emit(out, r, nw);
    } else if (series) {
        out << "g(FRAC(G), t) = " << direct.to_string() << '\n';
        out << "interleaved delta(P(G)) = " << theorem.to_string() << (match ? "  [match]" : "  [MISMATCH]") << '\n';
        out << "symmetric: " << sym << ", unimodal: " << uni << '\n';
    } else {
        out << "delta(P(G)) = " << coefficient_line(delta.entries()) << '\n';
        out << "delta(P(G), t) = " << delta.polynomial().to_string() << '\n';
        out << "alternatingly increasing: " << alt << '\n';
    }
    return match ? exit_ok : exit_check_failed;
}

// ---- quasi -----------------------------------------------------------------

int cmd_quasi(const RunConfig& cfg, std::ostream& out) {
    const Graph g = load_graph(cfg);
    const auto q = quasi_polynomial(g, parse_engine(cfg.engine), cfg.limits());
    const int period = q.even == q.odd ? 1 : 2;
    NumberWriter nw;
    if (cfg.json_output()) {
        json r;
        r["graph"] = graph_json(g, cfg);
        r["even"] = NumberWriter::rational_poly(q.even);
        r["odd"] = NumberWriter::rational_poly(q.odd);
        r["period"] = period;
        emit(out, r, nw);
    } else {
        out << "i_even(n) = " << q.even.to_string() << '\n';
        out << "i_odd(n)  = " << q.odd.to_string() << '\n';
        out << "period: " << period << '\n';
    }
    return exit_ok;
}

// ---- reciprocity -----------------------------------------------------------

int cmd_reciprocity(const RunConfig& cfg, std::ostream& out) {
    const Graph g = load_graph(cfg);
    const int d = g.vertex_count();
    const auto counts = frac_counts(g, 2 * d + 1, parse_engine(cfg.engine), cfg.limits());
    const auto quasi = quasi_polynomial_from_counts(counts, d);
    const auto ppoly = p_ehrhart_polynomial_from_counts(counts, d);
    bool all = true;
    json rows = json::array();
    std::ostringstream text;
    for (long k : cfg.ks) {
        auto r = reciprocity_check(quasi, ppoly, d, k);
        all = all && r.holds;
        rows.push_back({{"k", k},
                        {"odd", r.odd_value.get_str()},
                        {"even_reflected", r.even_reflected.get_str()},
                        {"p_reflected", r.p_reflected.get_str()},
                        {"holds", r.holds}});
        text << "k=" << k << ": i_odd(" << 2 * k + 1 << ") = " << r.odd_value.get_str()
             << ", (-1)^d i_even(" << -2 * k - 4 << ") = " << r.even_reflected.get_str()
             << ", (-1)^d i(P," << -k - 2 << ") = " << r.p_reflected.get_str() << (r.holds ? "  ok" : "  FAIL")
             << '\n';
    }
    NumberWriter nw;
    if (cfg.json_output()) {
        json r;
        r["graph"] = graph_json(g, cfg);
        r["checks"] = rows;
        r["all_hold"] = all;
        emit(out, r, nw);
    } else {
        out << text.str();
    }
    return all ? exit_ok : exit_check_failed;
}

// ---- descent ---------------------------------------------------------------

int cmd_descent(const RunConfig& cfg, std::ostream& out) {
    const Graph g = load_graph(cfg);
    const auto limits = cfg.limits();
    const auto split = split_polynomials(g, limits);
    const auto total = split.minus + split.plus;
    NumberWriter nw;
    if (cfg.json_output()) {
        json r;
        r["graph"] = graph_json(g, cfg);
        r["descent_polynomial"] = nw.poly(total);
        r["split"] = cfg.split ? json{{"minus", nw.poly(split.minus)}, {"plus", nw.poly(split.plus)}} : json(nullptr);
        json members = nullptr;
        if (cfg.list) {
            members = json::array();
            for (const auto& p : list_pi(g, limits))
                members.push_back({{"word", p.to_string()}, {"descents", descent_count(p)}});
        }
        r["members"] = members;
        emit(out, r, nw);
        return exit_ok;
    }
    if (cfg.list)
        for (const auto& p : list_pi(g, limits)) out << p.to_string() << '\t' << descent_count(p) << '\n';
    out << "D(Pi(G), t) = " << total.to_string() << '\n';
    if (cfg.split) {
        out << "ending negative: " << split.minus.to_string() << '\n';
        out << "ending positive: " << split.plus.to_string() << '\n';
    }
    return exit_ok;
}

// ---- vertices --------------------------------------------------------------

int cmd_vertices(const RunConfig& cfg, std::ostream& out) {
    const Graph g = load_graph(cfg);
    const auto limits = cfg.limits();
    const auto fv = frac_vertices(g, limits);
    const auto qv = q_vertices(g, limits);
    const auto dual = q_dual_vertices(g);
    const auto interior = interior_lattice_points(q_polytope(g), limits);
    const bool bip = is_bipartite(g).bipartite;
    NumberWriter nw;
    if (cfg.json_output()) {
        auto halves = [](const std::vector<HalfIntPoint>& pts) {
            json arr = json::array();
            for (const auto& p : pts) arr.push_back(p.to_rational_strings());
            return arr;
        };
        json r;
        r["graph"] = graph_json(g, cfg);
        r["bipartite"] = bip;
        r["frac_vertices"] = halves(fv);
        r["q_vertices"] = halves(qv);
        r["q_dual_vertices"] = dual;
        r["q_interior_lattice_points"] = interior;
        r["lattice"] = {{"frac", is_lattice_polytope(fv)}, {"q", is_lattice_polytope(qv)}};
        emit(out, r, nw);
    } else {
        out << "bipartite: " << bip << '\n';
        out << "FRAC(G) vertices (" << fv.size() << "):\n";
        for (const auto& v : fv) out << "  " << join_strings(v.to_rational_strings()) << '\n';
        out << "Q(G) vertices (" << qv.size() << "):\n";
        for (const auto& v : qv) out << "  " << join_strings(v.to_rational_strings()) << '\n';
        out << "Q(G) dual vertices (" << dual.size() << "):\n";
        for (const auto& v : dual) out << "  " << join_vector(v) << '\n';
        out << "interior lattice points of Q(G):";
        for (const auto& v : interior) out << ' ' << join_vector(v);
        out << '\n';
        out << "lattice: FRAC " << is_lattice_polytope(fv) << ", Q " << is_lattice_polytope(qv) << '\n';
    }
    return exit_ok;
}

// ---- normality -------------------------------------------------------------

int cmd_normality(const RunConfig& cfg, std::ostream& out) {
    const Graph g = load_graph(cfg);
    const auto limits = cfg.limits();
    const int max_degree = cfg.max_degree > 0 ? cfg.max_degree : 2;
    const bool bip = is_bipartite(g).bipartite;
    std::optional<WitnessVector> witness;
    if (!bip) witness = odd_cycle_witness(g, limits);
    const auto report = normality_check_up_to(g, max_degree, limits);
    std::optional<UnimodularityResult> tu;
    if (g.vertex_count() <= limits.max_tu_rows) tu = is_totally_unimodular(incidence_with_negative_identity(g), limits);
    const auto gf = gorenstein_fano_check(g, limits);

    NumberWriter nw;
    if (cfg.json_output()) {
        json r;
        r["graph"] = graph_json(g, cfg);
        r["bipartite"] = bip;
        r["witness"] = witness ? json{{"u", witness->u}, {"cycle", witness->cycle}, {"k", witness->k},
                                      {"rational_combination", witness->rational_combination},
                                      {"member", witness->member}}
                               : json(nullptr);
        r["checked_up_to"] = report.checked_up_to;
        r["points_per_degree"] = report.points_per_degree;
        json violations = json::array();
        for (const auto& v : report.violations) violations.push_back({{"degree", v.degree}, {"point", v.point}});
        r["violations"] = violations;
        r["tu"] = tu ? json(tu->totally_unimodular) : json(nullptr);
        r["gorenstein_fano"] = {{"q_lattice", gf.q_lattice},
                                {"fano", gf.fano},
                                {"dual_lattice", gf.dual_lattice},
                                {"gorenstein_fano", gf.gorenstein_fano()}};
        emit(out, r, nw);
    } else {
        out << "bipartite: " << bip << '\n';
        if (witness)
            out << "odd-cycle witness u = " << join_vector(witness->u) << " in the rational cone, not in the semigroup\n";
        if (report.violation_free())
            out << "no normality violation up to degree " << report.checked_up_to
                << " (normality beyond that degree is not established)\n";
        else
            out << report.violations.size() << " violation(s) up to degree " << report.checked_up_to
                << "; first at degree " << report.violations.front().degree << ": "
                << join_vector(report.violations.front().point) << '\n';
        if (tu) out << "[A_G | -E] totally unimodular: " << tu->totally_unimodular << '\n';
        out << "Q(G) lattice: " << gf.q_lattice << ", Fano: " << gf.fano << ", dual lattice: " << gf.dual_lattice
            << ", Gorenstein Fano: " << gf.gorenstein_fano() << '\n';
    }
    return exit_ok;
}

// ---- verify ----------------------------------------------------------------

struct Check {
    std::string name;
    std::string statement;
    bool passed = false;
    std::string detail;
};

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(cfg);
    const int d = g.vertex_count();
    const auto limits = cfg.limits();
    const bool bip = is_bipartite(g).bipartite;
    std::vector<Check> checks;
    auto add = [&](std::string name, std::string statement, bool passed, std::string detail = {}) {
        checks.push_back({std::move(name), std::move(statement), passed, std::move(detail)});
    };

    const auto counts = frac_counts(g, 2 * d + 1, parse_engine(cfg.engine), limits);
    const auto delta = p_delta_from_frac_counts(counts, d);
    const auto direct = series_numerator_from_counts(counts, d);
    const auto theorem = series_numerator_theorem(delta);

    if (chain_shape(g)) {
        bool agree = true;
        for (long n = 0; n <= 2 * d + 1 && agree; ++n) {
            CountRequest req{PolytopeKind::frac, &g, n};
            agree = count_dfs(req, limits) == count_transfer(req);
        }
        add("engine_agreement", "count_dfs = count_transfer on n*FRAC(G), n = 0..2d+1", agree);
    }
    add("numerator_interleaving", "g(FRAC(G),t) = delta(P(G),t^2) + t^(2d-1) delta(P(G),1/t^2)", direct == theorem,
        direct.to_string());
    add("numerator_degree", "deg g(FRAC(G),t) = 2d-1", direct.degree() == 2 * d - 1);
    add("numerator_symmetric", "g(FRAC(G),t) is palindromic (Gorenstein Ehrhart ring)", is_symmetric(direct));
    add("numerator_unimodal", "g(FRAC(G),t) is unimodal", is_unimodal(direct));
    add("delta_alternatingly_increasing", "delta_0 <= delta_(d-1) <= delta_1 <= delta_(d-2) <= ...",
        is_alternatingly_increasing(delta));

    if (d <= limits.max_signed_perm_d) {
        const auto split = split_polynomials(g, limits);
        const auto total = split.minus + split.plus;
        add("descent_equals_delta", "delta(P(G),t) = D(Pi(G),t)", total == delta.polynomial(), total.to_string());
        IntPolynomial b(std::vector<BigInt>(split.plus.coeffs().begin() + (split.plus.is_zero() ? 0 : 1),
                                            split.plus.coeffs().end()));
        bool shapes = split.minus.degree() == d - 1 && is_symmetric(split.minus) && is_unimodal(split.minus) &&
                      split.plus.coeff(0) == 0 && b.degree() == d - 2 && is_symmetric(b) && is_unimodal(b);
        add("descent_split_shapes", "delta(P(G),t) = a(t) + t b(t), a and b symmetric unimodal of degrees d-1, d-2",
            shapes);
    } else {
        add("descent_equals_delta", "skipped: d exceeds the B_d budget (raise --limit-d)", true, "skipped");
    }

    {
        const auto quasi = quasi_polynomial_from_counts(counts, d);
        const auto ppoly = p_ehrhart_polynomial_from_counts(counts, d);
        bool ok = true;
        for (long k = 0; k <= 3; ++k) ok = ok && reciprocity_check(quasi, ppoly, d, k).holds;
        add("reciprocity", "i_odd(2k+1) = (-1)^d i_even(-2k-4) = (-1)^d i(P(G),-k-2), k = 0..3", ok);
        if (bip) add("single_constituent", "bipartite => i_even = i_odd", quasi.even == quasi.odd);
    }

    if (d <= limits.max_vertex_enum_d) {
        const bool frac_lattice = is_lattice_polytope(frac_vertices(g, limits));
        const bool q_lattice = is_lattice_polytope(q_vertices(g, limits));
        add("lattice_iff_bipartite", "G bipartite <=> FRAC(G) lattice <=> Q(G) lattice",
            frac_lattice == bip && q_lattice == bip);
        const auto gf = gorenstein_fano_check(g, limits);
        add("fano", "origin is the unique interior lattice point of Q(G)", gf.fano);
        const auto dual = q_dual_vertices(g);
        add("dual_vertices", "Q(G)^dual has the |E|+d integral vertices e_i+e_j, -e_i",
            gf.dual_lattice && dual.size() == g.edge_count() + static_cast<std::size_t>(d));
        add("gorenstein_fano", "Q(G) Gorenstein Fano <=> G bipartite", gf.gorenstein_fano() == bip);
    }

    if (bip) {
        const int degree = cfg.max_degree > 0 ? cfg.max_degree : 3;
        const auto report = normality_check_up_to(g, degree, limits);
        add("normality_bounded", "Q(G)^dual normal, checked up to degree " + std::to_string(degree),
            report.violation_free());
        if (d <= limits.max_tu_rows)
            add("totally_unimodular", "[A_G | -E_d] totally unimodular",
                is_totally_unimodular(incidence_with_negative_identity(g), limits).totally_unimodular);
    } else {
        bool ok = false;
        std::string detail;
        try {
            auto w = odd_cycle_witness(g, limits);
            ok = !w.member && w.rational_combination;
            detail = join_vector(w.u);
        } catch (const consistency_error& e) {
            detail = e.what();
        }
        add("odd_cycle_witness", "odd cycle gives u in Q>=0 A'_G with u not in Z>=0 A'_G", ok, detail);
    }

    if (g == family("complete", std::vector<int>{d})) {
        add("complete_graph_closed_form", "b_i = A(d,floor(i/2)) + d A(d-1,floor((i-1)/2))",
            complete_graph_numerator(d) == direct && complete_graph_delta(d) == delta);
    }

    const Check* first_failure = nullptr;
    for (const auto& c : checks)
        if (!c.passed) {
            first_failure = &c;
            break;
        }

    NumberWriter nw;
    if (cfg.json_output()) {
        json r;
        r["graph"] = graph_json(g, cfg);
        r["numerator"] = nw.poly(direct);
        r["delta"] = nw.list(delta.entries());
        json arr = json::array();
        for (const auto& c : checks)
            arr.push_back({{"name", c.name}, {"statement", c.statement}, {"passed", c.passed}, {"detail", c.detail}});
        r["checks"] = arr;
        r["passed"] = first_failure == nullptr;
        emit(out, r, nw);
    } else {
        out << "g(FRAC(G), t) = " << direct.to_string() << '\n';
        out << "delta(P(G)) = " << coefficient_line(delta.entries()) << '\n';
        for (const auto& c : checks)
            out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.statement << '\n';
    }
    if (first_failure) {
        err << "verify: check '" << first_failure->name << "' failed\n";
        return exit_check_failed;
    }
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    if (const char* env = std::getenv("FRACPOLY_THREADS")) {
        try {
            cfg.threads = static_cast<unsigned>(std::max(1, std::stoi(env)));
        } catch (const std::exception&) {
            err << "ignoring invalid FRACPOLY_THREADS='" << env << "'\n";
        }
    }

    out << std::boolalpha;
    CLI::App app{"Ehrhart data of fractional stable set polytopes", "fracpoly"};
    app.require_subcommand(1);

    auto common = [&cfg](CLI::App* sub) {
        auto* file = sub->add_option("--graph", cfg.graph_file, "graph file: 'd m' then m lines 'i j'");
        auto* fam = sub->add_option("--family", cfg.family_spec, "complete:d, cycle:d, path:d, complete_bipartite:m,n");
        file->excludes(fam);
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--engine", cfg.engine, "counting engine")
            ->check(CLI::IsMember({"dfs", "transfer", "both", "auto"}));
        sub->add_option("--max-degree", cfg.max_degree, "degree bound for normality checks")
            ->check(CLI::PositiveNumber);
        sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--limit-d", cfg.limit_d, "largest d for signed-permutation enumeration")
            ->check(CLI::PositiveNumber);
    };

    std::function<int()> action;
    auto subcommand = [&](const std::string& name, const std::string& help, std::function<int()> f) {
        auto* sub = app.add_subcommand(name, help);
        common(sub);
        sub->callback([&action, f] { action = f; });
        return sub;
    };

    auto* count = subcommand("count", "lattice points of a dilate", [&] { return cmd_count(cfg, out); });
    count->add_option("--kind", cfg.kind, "frac, p or q")->check(CLI::IsMember({"frac", "p", "q"}));
    count->add_option("--n", cfg.n, "dilation factor")->required()->check(CLI::NonNegativeNumber);
    subcommand("delta", "delta-vector of P(G)", [&] { return cmd_delta_series(cfg, out, false); });
    subcommand("series", "Ehrhart series numerator of FRAC(G)", [&] { return cmd_delta_series(cfg, out, true); });
    subcommand("quasi", "Ehrhart quasi-polynomial of FRAC(G)", [&] { return cmd_quasi(cfg, out); });
    auto* recip = subcommand("reciprocity", "reciprocity between odd and even constituents",
                             [&] { return cmd_reciprocity(cfg, out); });
    recip->add_option("--k", cfg.ks, "values of k (default 0 1 2 3)");
    auto* descent = subcommand("descent", "descent polynomial of Pi(G)", [&] { return cmd_descent(cfg, out); });
    descent->add_flag("--split", cfg.split, "also report the split by sign of the last letter");
    descent->add_flag("--list", cfg.list, "list members of Pi(G) with their descent counts");
    subcommand("vertices", "vertices of FRAC(G), Q(G) and Q(G)^dual", [&] { return cmd_vertices(cfg, out); });
    subcommand("normality", "normality and Gorenstein Fano checks", [&] { return cmd_normality(cfg, out); });
    subcommand("verify", "run every cross-check for one graph", [&] { return cmd_verify(cfg, out, err); });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        return action ? action() : exit_usage;
    } catch (const resource_error& e) {
        err << "resource limit: " << e.what() << '\n';
        return exit_resource;
    } catch (const consistency_error& e) {
        err << "check failed: " << e.what() << '\n';
        return exit_check_failed;
    } catch (const parse_error& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const domain_error& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace fracpoly::cli
