#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fracpoly/graph.hpp"
#include "fracpoly/limits.hpp"
#include "fracpoly/polynomial.hpp"

namespace fracpoly {

/// Word a_1 ... a_d over ±[d] whose absolute values permute [d].
class SignedPermutation {
public:
    explicit SignedPermutation(std::vector<int> word);
    // "-1 2" or "2 -3 -4 1"
    static SignedPermutation parse(std::string_view text);

    int size() const { return static_cast<int>(word_.size()); }
    const std::vector<int>& word() const { return word_; }
    int operator[](std::size_t i) const { return word_[i]; }
    std::string to_string() const;
    bool operator==(const SignedPermutation&) const = default;

private:
    std::vector<int> word_;
};

/// Descents i < d with a_i > a_{i+1}, plus position d when a_d > 0.
int descent_count(const SignedPermutation& pi);

/// For every edge {i,j}, in both orientations: if +i occurs then -j
/// occurs before it.
bool in_pi(const SignedPermutation& pi, const Graph& g);

/// Visits every word of B_d in lexicographic order of (permutation of |a|,
/// sign mask). Throws resource_error past limits.max_signed_perm_d.
void for_each_signed_permutation(int d, const Limits& limits,
                                 const std::function<void(const SignedPermutation&)>& visit);

/// Σ_{π ∈ Π(G)} t^{des π}.
IntPolynomial descent_polynomial_pi(const Graph& g, const Limits& limits = {});

struct SplitPolynomials {
    IntPolynomial minus; // words ending in a negative letter: a(t)
    IntPolynomial plus;  // words ending in a positive letter: t b(t)
};

SplitPolynomials split_polynomials(const Graph& g, const Limits& limits = {});

// Members of Π(G) in enumeration order.
std::vector<SignedPermutation> list_pi(const Graph& g, const Limits& limits = {});

/// Maximal alternating runs m..m p..p m..m p..p ... of negative and positive
/// letters: (alpha_j, beta_j), j = 1..gamma. The final beta is 0 when the
/// word ends negative. A word that starts positive gets alpha_1 = 0.
struct BlockStructure {
    std::vector<int> alphas;
    std::vector<int> betas;

    int gamma() const { return static_cast<int>(alphas.size()); }
    bool ends_negative() const { return !betas.empty() && betas.back() == 0; }
    bool operator==(const BlockStructure&) const = default;
};

BlockStructure block_structure(const SignedPermutation& pi);

/// Descent polynomial of the class obtained by permuting letters within
/// each block: t^gamma Π A_{alpha_j} A_{beta_j} when the word ends
/// positive, t^{gamma-1} A_{alpha_gamma} Π_{j<gamma} A_{alpha_j} A_{beta_j}
/// when it ends negative.
IntPolynomial class_polynomial(const BlockStructure& bs);

} // namespace fracpoly
