#include "fracpoly/ehrhart.hpp"

#include <algorithm>
#include <set>

#include "fracpoly/error.hpp"

namespace fracpoly {

DeltaVector::DeltaVector(std::vector<BigInt> entries, int dimension)
    : entries_(std::move(entries)), dimension_(dimension) {
    while (entries_.size() > 1 && entries_.back() == 0) entries_.pop_back();
    if (entries_.empty() || entries_[0] != 1) throw domain_error("delta vector must start with 1");
    for (const auto& e : entries_)
        if (e < 0) throw domain_error("delta vector entries must be nonnegative");
}

DeltaVector delta_from_counts(const std::vector<BigInt>& counts, int dimension) {
    if (dimension < 0) throw domain_error("dimension must be nonnegative");
    if (counts.empty() || counts[0] != 1) throw domain_error("counts must start with i(P,0) = 1");
    std::vector<BigInt> delta(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k) {
        BigInt acc = 0;
        for (std::size_t j = 0; j <= k && j <= static_cast<std::size_t>(dimension) + 1; ++j) {
            BigInt term = binomial(dimension + 1, static_cast<long>(j)) * counts[k - j];
            if (j % 2) acc -= term;
            else acc += term;
        }
        if (acc < 0)
            throw consistency_error("negative delta coefficient at t^" + std::to_string(k) +
                                    "; counts are not an Ehrhart polynomial of this dimension");
        if (static_cast<int>(k) > dimension && acc != 0)
            throw consistency_error("delta coefficient at t^" + std::to_string(k) + " exceeds the dimension");
        delta[k] = std::move(acc);
    }
    return DeltaVector(std::move(delta), dimension);
}

RatPolynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points, int degree) {
    if (degree < 0 || points.size() < static_cast<std::size_t>(degree) + 1)
        throw domain_error("interpolation needs degree+1 points");
    std::set<Rational> seen;
    for (const auto& [x, y] : points)
        if (!seen.insert(x).second) throw domain_error("duplicate interpolation node " + x.get_str());

    const std::size_t m = static_cast<std::size_t>(degree) + 1;
    RatPolynomial result;
    for (std::size_t i = 0; i < m; ++i) {
        RatPolynomial basis(std::vector<Rational>{1});
        Rational denom = 1;
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            basis = basis * RatPolynomial(std::vector<Rational>{-points[j].first, 1});
            denom *= points[i].first - points[j].first;
        }
        Rational scale = points[i].second / denom;
        std::vector<Rational> c = basis.coeffs();
        for (auto& v : c) v *= scale;
        result += RatPolynomial(std::move(c));
    }
    for (std::size_t i = m; i < points.size(); ++i)
        if (result.evaluate(points[i].first) != points[i].second)
            throw consistency_error("point at node " + points[i].first.get_str() +
                                    " does not lie on the interpolating polynomial");
    return result;
}

Rational QuasiPolynomial::evaluate(long n) const {
    return (n % 2 == 0) ? even.evaluate(Rational(n)) : odd.evaluate(Rational(n));
}

std::vector<BigInt> frac_counts(const Graph& g, long max_n, Engine engine, const Limits& limits) {
    std::vector<BigInt> out;
    for (long n = 0; n <= max_n; ++n)
        out.push_back(count_points(CountRequest{PolytopeKind::frac, &g, n}, engine, limits));
    return out;
}

QuasiPolynomial quasi_polynomial_from_counts(const std::vector<BigInt>& counts, int d) {
    if (counts.size() < static_cast<std::size_t>(2 * d + 2))
        throw domain_error("quasi-polynomial needs counts for n = 0..2d+1");
    std::vector<std::pair<Rational, Rational>> even, odd;
    for (std::size_t n = 0; n < counts.size(); ++n)
        (n % 2 == 0 ? even : odd).emplace_back(Rational(static_cast<long>(n)), Rational(counts[n]));
    return QuasiPolynomial{interpolate(even, d), interpolate(odd, d)};
}

QuasiPolynomial quasi_polynomial(const Graph& g, Engine engine, const Limits& limits) {
    const int d = g.vertex_count();
    return quasi_polynomial_from_counts(frac_counts(g, 2 * d + 1, engine, limits), d);
}

IntPolynomial series_numerator_from_counts(const std::vector<BigInt>& counts, int d) {
    const std::size_t top = static_cast<std::size_t>(2 * d + 1);
    if (counts.size() < top + 1) throw domain_error("series numerator needs counts for n = 0..2d+1");
    std::vector<BigInt> g(top + 1);
    for (std::size_t j = 0; j <= top; ++j) {
        BigInt acc = 0;
        for (std::size_t k = 0; 2 * k <= j && k <= static_cast<std::size_t>(d) + 1; ++k) {
            BigInt term = binomial(d + 1, static_cast<long>(k)) * counts[j - 2 * k];
            if (k % 2) acc -= term;
            else acc += term;
        }
        g[j] = std::move(acc);
    }
    for (std::size_t j = 0; j <= top; ++j)
        if (g[j] < 0) throw consistency_error("negative numerator coefficient at t^" + std::to_string(j));
    if (g[top] != 0 || g[top - 1] != 0 || g[top - 2] == 0)
        throw consistency_error("series numerator does not have degree 2d-1");
    g.resize(top - 1);
    return IntPolynomial(std::move(g));
}

IntPolynomial series_numerator_direct(const Graph& g, Engine engine, const Limits& limits) {
    const int d = g.vertex_count();
    return series_numerator_from_counts(frac_counts(g, 2 * d + 1, engine, limits), d);
}

DeltaVector p_delta_from_frac_counts(const std::vector<BigInt>& counts, int d) {
    if (counts.size() < static_cast<std::size_t>(2 * d + 1)) throw domain_error("need counts for n = 0..2d");
    std::vector<BigInt> p_counts;
    for (int n = 0; n <= d; ++n) p_counts.push_back(counts[2 * n]);
    return delta_from_counts(p_counts, d);
}

DeltaVector p_delta(const Graph& g, Engine engine, const Limits& limits) {
    const int d = g.vertex_count();
    std::vector<BigInt> p_counts;
    for (long n = 0; n <= d; ++n)
        p_counts.push_back(count_points(CountRequest{PolytopeKind::p, &g, n}, engine, limits));
    return delta_from_counts(p_counts, d);
}

IntPolynomial series_numerator_theorem(const DeltaVector& delta) {
    const int d = delta.dimension();
    if (d < 2) throw domain_error("series numerator needs d >= 2 (no graph on one vertex lacks isolated vertices)");
    if (delta.size() != static_cast<std::size_t>(d))
        throw domain_error("delta vector of P(G) must have exactly d entries");
    // t^{2i} <- δ_i, t^{2i+1} <- δ_{d-1-i}
    std::vector<BigInt> g(2 * d);
    for (int i = 0; i < d; ++i) {
        g[2 * i] = delta[i];
        g[2 * i + 1] = delta[d - 1 - i];
    }
    return IntPolynomial(std::move(g));
}

IntPolynomial eulerian(int k) {
    if (k < 0) throw domain_error("eulerian: k must be nonnegative");
    std::vector<BigInt> row{1}; // A_0 = A_1 = 1
    for (int n = 2; n <= k; ++n) {
        std::vector<BigInt> next(n, 0);
        for (int i = 0; i < n; ++i) {
            if (i < n - 1) next[i] += (i + 1) * row[i];
            if (i >= 1) next[i] += (n - i) * row[i - 1];
        }
        row = std::move(next);
    }
    return IntPolynomial(std::move(row));
}

BigInt eulerian_number(int k, int i) {
    if (k < 0 || i < 0) return 0;
    if (k == 0) return i == 0 ? 1 : 0;
    if (i > k - 1) return 0;
    return eulerian(k).coeff(i);
}

DeltaVector complete_graph_delta(int d) {
    if (d < 2) throw domain_error("complete graph needs d >= 2");
    std::vector<BigInt> delta(d);
    delta[0] = 1;
    for (int i = 1; i < d; ++i) delta[i] = eulerian_number(d, i) + d * eulerian_number(d - 1, i - 1);
    return DeltaVector(std::move(delta), d);
}

IntPolynomial complete_graph_numerator(int d) {
    if (d < 2) throw domain_error("complete graph needs d >= 2");
    std::vector<BigInt> b(2 * d);
    b[0] = 1;
    for (int i = 1; i < 2 * d; ++i)
        b[i] = eulerian_number(d, i / 2) + d * eulerian_number(d - 1, (i - 1) / 2);
    return IntPolynomial(std::move(b));
}

RatPolynomial p_ehrhart_polynomial_from_counts(const std::vector<BigInt>& counts, int d) {
    if (counts.size() < static_cast<std::size_t>(2 * d + 1)) throw domain_error("need counts for n = 0..2d");
    std::vector<std::pair<Rational, Rational>> pts;
    for (int n = 0; 2 * n < static_cast<int>(counts.size()); ++n) pts.emplace_back(Rational(n), Rational(counts[2 * n]));
    return interpolate(pts, d);
}

ReciprocityResult reciprocity_check(const QuasiPolynomial& quasi, const RatPolynomial& p_poly, int d, long k) {
    if (k < 0) throw domain_error("reciprocity: k must be nonnegative");
    ReciprocityResult r;
    r.k = k;
    const Rational sign = (d % 2 == 0) ? 1 : -1;
    r.odd_value = quasi.odd.evaluate(Rational(2 * k + 1));
    r.even_reflected = sign * quasi.even.evaluate(Rational(-2 * k - 4));
    r.p_reflected = sign * p_poly.evaluate(Rational(-k - 2));
    r.holds = r.odd_value == r.even_reflected && r.odd_value == r.p_reflected && r.odd_value.get_den() == 1;
    return r;
}

ReciprocityResult reciprocity_check(const Graph& g, long k, Engine engine, const Limits& limits) {
    const int d = g.vertex_count();
    auto counts = frac_counts(g, 2 * d + 1, engine, limits);
    return reciprocity_check(quasi_polynomial_from_counts(counts, d), p_ehrhart_polynomial_from_counts(counts, d),
                             d, k);
}

bool is_symmetric(const IntPolynomial& p) {
    const auto& c = p.coeffs();
    return std::equal(c.begin(), c.end(), c.rbegin());
}

bool is_unimodal(const IntPolynomial& p) {
    const auto& c = p.coeffs();
    std::size_t i = 1;
    while (i < c.size() && c[i - 1] <= c[i]) ++i;
    while (i < c.size() && c[i - 1] >= c[i]) ++i;
    return i >= c.size();
}

bool is_alternatingly_increasing(const DeltaVector& delta) {
    // δ_0 <= δ_{d-1} <= δ_1 <= δ_{d-2} <= ...
    const int n = static_cast<int>(delta.size());
    std::vector<int> chain;
    for (int lo = 0, hi = n - 1; lo <= hi; ++lo, --hi) {
        chain.push_back(lo);
        if (hi != lo) chain.push_back(hi);
    }
    for (std::size_t k = 1; k < chain.size(); ++k)
        if (delta[chain[k - 1]] > delta[chain[k]]) return false;
    return true;
}

} // namespace fracpoly
