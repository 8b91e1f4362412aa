#pragma once

#include <utility>
#include <vector>

#include "fracpoly/graph.hpp"
#include "fracpoly/lattice_count.hpp"
#include "fracpoly/limits.hpp"
#include "fracpoly/polynomial.hpp"

namespace fracpoly {

/// δ-vector of a lattice polytope: δ_0 = 1, all entries nonnegative,
/// trailing zeros dropped. `dimension` is the polytope's dimension.
class DeltaVector {
public:
    DeltaVector(std::vector<BigInt> entries, int dimension);

    const std::vector<BigInt>& entries() const { return entries_; }
    int dimension() const { return dimension_; }
    std::size_t size() const { return entries_.size(); }
    const BigInt& operator[](std::size_t k) const { return entries_[k]; }
    IntPolynomial polynomial() const { return IntPolynomial(entries_); }
    bool operator==(const DeltaVector&) const = default;

private:
    std::vector<BigInt> entries_;
    int dimension_;
};

/// Binomial transform δ_k = Σ_j (-1)^j C(d+1, j) counts[k-j] over every
/// supplied count. Entries past index d must vanish; a negative entry or a
/// nonvanishing tail throws consistency_error.
DeltaVector delta_from_counts(const std::vector<BigInt>& counts, int dimension);

/// Lagrange interpolation through (node, value) pairs. The first degree+1
/// points determine the polynomial; any further points must lie on it.
RatPolynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points, int degree);

/// i(FRAC(G), n) split by parity of n.
struct QuasiPolynomial {
    RatPolynomial even;
    RatPolynomial odd;

    Rational evaluate(long n) const;
};

// i(FRAC(G), n) for n = 0..max_n.
std::vector<BigInt> frac_counts(const Graph& g, long max_n, Engine engine = Engine::automatic,
                                const Limits& limits = {});

// Even part through n = 0,2,..,2d; odd part through n = 1,3,..,2d+1.
QuasiPolynomial quasi_polynomial_from_counts(const std::vector<BigInt>& frac_counts, int d);
QuasiPolynomial quasi_polynomial(const Graph& g, Engine engine = Engine::automatic, const Limits& limits = {});

/// g(FRAC(G), t) = (1 - t^2)^{d+1} Σ i(FRAC, n) t^n, truncated at degree
/// 2d - 1. Needs counts for n = 0..2d+1; the coefficients at 2d and 2d+1
/// are checked to vanish.
IntPolynomial series_numerator_from_counts(const std::vector<BigInt>& frac_counts, int d);
IntPolynomial series_numerator_direct(const Graph& g, Engine engine = Engine::automatic,
                                      const Limits& limits = {});

// δ(P(G)) from i(P, n) = i(FRAC, 2n), n = 0..d.
DeltaVector p_delta_from_frac_counts(const std::vector<BigInt>& frac_counts, int d);
DeltaVector p_delta(const Graph& g, Engine engine = Engine::automatic, const Limits& limits = {});

/// δ_0 + δ_{d-1} t + δ_1 t^2 + δ_{d-2} t^3 + ... + δ_0 t^{2d-1}.
IntPolynomial series_numerator_theorem(const DeltaVector& delta);

// A_k(t) with A_0 = 1.
IntPolynomial eulerian(int k);
// A(k, i), zero outside 0 <= i <= k-1 (and A(0,0) = 1).
BigInt eulerian_number(int k, int i);

DeltaVector complete_graph_delta(int d);
IntPolynomial complete_graph_numerator(int d);

// Ehrhart polynomial of P(G), interpolated through n = 0..d.
RatPolynomial p_ehrhart_polynomial_from_counts(const std::vector<BigInt>& frac_counts, int d);

struct ReciprocityResult {
    long k = 0;
    Rational odd_value;       // i^odd(2k+1)
    Rational even_reflected;  // (-1)^d i^even(-2k-4)
    Rational p_reflected;     // (-1)^d i(P, -k-2)
    bool holds = false;       // all three equal and integral
};

ReciprocityResult reciprocity_check(const QuasiPolynomial& quasi, const RatPolynomial& p_poly, int d, long k);
ReciprocityResult reciprocity_check(const Graph& g, long k, Engine engine = Engine::automatic,
                                    const Limits& limits = {});

bool is_symmetric(const IntPolynomial& p);
// Weakly rises to a single peak, then weakly falls.
bool is_unimodal(const IntPolynomial& p);
bool is_alternatingly_increasing(const DeltaVector& delta);

} // namespace fracpoly
