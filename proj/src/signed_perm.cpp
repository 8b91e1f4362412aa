#include "fracpoly/signed_perm.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <sstream>

#include "fracpoly/ehrhart.hpp"
#include "fracpoly/error.hpp"

namespace fracpoly {

namespace {

// Counts indexed by descent number, split by the sign of the last letter.
struct DescentTally {
    std::vector<unsigned long long> minus, plus;
    explicit DescentTally(int d) : minus(d + 1, 0), plus(d + 1, 0) {}
    void merge(const DescentTally& o) {
        for (std::size_t k = 0; k < minus.size(); ++k) {
            minus[k] += o.minus[k];
            plus[k] += o.plus[k];
        }
    }
};

// Allocation-free membership test on a raw word; pos[v + d] = position of letter v.
bool member(const std::vector<int>& word, const Graph& g, std::vector<int>& pos) {
    const int d = static_cast<int>(word.size());
    std::fill(pos.begin(), pos.end(), -1);
    for (int k = 0; k < d; ++k) pos[word[k] + d] = k;
    for (auto [i, j] : g.edges()) {
        int pi = pos[i + d], mj = pos[-j + d];
        if (pi >= 0 && (mj < 0 || mj > pi)) return false;
        int pj = pos[j + d], mi = pos[-i + d];
        if (pj >= 0 && (mi < 0 || mi > pj)) return false;
    }
    return true;
}

int descents(const std::vector<int>& w) {
    int count = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) ++count;
    if (!w.empty() && w.back() > 0) ++count;
    return count;
}

// All words whose first absolute value is `first`, in lexicographic order.
template <class Visit>
void enumerate_shard(int d, int first, Visit&& visit) {
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 1);
    std::rotate(perm.begin(), perm.begin() + (first - 1), perm.begin() + first); // first, 1..first-1, first+1..
    std::vector<int> word(d);
    do {
        for (unsigned mask = 0; mask < (1U << d); ++mask) {
            for (int k = 0; k < d; ++k) word[k] = (mask >> (d - 1 - k) & 1) ? perm[k] : -perm[k];
            visit(word);
        }
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
}

void check_budget(int d, const Limits& limits) {
    if (d > limits.max_signed_perm_d)
        throw resource_error("B_d enumeration: d = " + std::to_string(d) + " exceeds the limit " +
                             std::to_string(limits.max_signed_perm_d) + " (raise --limit-d to override)");
}

DescentTally tally_shard(const Graph& g, int first) {
    const int d = g.vertex_count();
    DescentTally t(d);
    std::vector<int> pos(2 * d + 1);
    enumerate_shard(d, first, [&](const std::vector<int>& w) {
        if (!member(w, g, pos)) return;
        (w.back() > 0 ? t.plus : t.minus)[descents(w)] += 1;
    });
    return t;
}

DescentTally tally(const Graph& g, const Limits& limits) {
    const int d = g.vertex_count();
    check_budget(d, limits);
    DescentTally total(d);
    if (limits.threads <= 1) {
        for (int first = 1; first <= d; ++first) total.merge(tally_shard(g, first));
        return total;
    }
    std::vector<std::future<DescentTally>> shards;
    for (int first = 1; first <= d; ++first)
        shards.push_back(std::async(std::launch::async, [&g, first] { return tally_shard(g, first); }));
    for (auto& s : shards) total.merge(s.get());
    return total;
}

IntPolynomial to_polynomial(const std::vector<unsigned long long>& counts) {
    std::vector<BigInt> c;
    for (auto v : counts) c.emplace_back(static_cast<unsigned long>(v));
    return IntPolynomial(std::move(c));
}

} // namespace

SignedPermutation::SignedPermutation(std::vector<int> word) : word_(std::move(word)) {
    const int d = static_cast<int>(word_.size());
    std::vector<bool> seen(d + 1, false);
    for (int a : word_) {
        int v = a < 0 ? -a : a;
        if (v < 1 || v > d || seen[v])
            throw domain_error("not a signed permutation of [" + std::to_string(d) + "]");
        seen[v] = true;
    }
}

SignedPermutation SignedPermutation::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<int> word;
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw parse_error("");
            word.push_back(v);
        } catch (const std::exception&) {
            throw parse_error("invalid letter '" + tok + "' in signed word");
        }
    }
    return SignedPermutation(std::move(word));
}

std::string SignedPermutation::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < word_.size(); ++i) out << (i ? " " : "") << word_[i];
    return out.str();
}

int descent_count(const SignedPermutation& pi) { return descents(pi.word()); }

bool in_pi(const SignedPermutation& pi, const Graph& g) {
    if (pi.size() != g.vertex_count()) throw domain_error("word length differs from the vertex count");
    std::vector<int> pos(2 * pi.size() + 1);
    return member(pi.word(), g, pos);
}

void for_each_signed_permutation(int d, const Limits& limits,
                                 const std::function<void(const SignedPermutation&)>& visit) {
    check_budget(d, limits);
    for (int first = 1; first <= d; ++first)
        enumerate_shard(d, first, [&](const std::vector<int>& w) { visit(SignedPermutation(w)); });
}

IntPolynomial descent_polynomial_pi(const Graph& g, const Limits& limits) {
    auto s = split_polynomials(g, limits);
    return s.minus + s.plus;
}

SplitPolynomials split_polynomials(const Graph& g, const Limits& limits) {
    auto t = tally(g, limits);
    return {to_polynomial(t.minus), to_polynomial(t.plus)};
}

std::vector<SignedPermutation> list_pi(const Graph& g, const Limits& limits) {
    const int d = g.vertex_count();
    check_budget(d, limits);
    std::vector<SignedPermutation> out;
    std::vector<int> pos(2 * d + 1);
    for (int first = 1; first <= d; ++first)
        enumerate_shard(d, first, [&](const std::vector<int>& w) {
            if (member(w, g, pos)) out.emplace_back(w);
        });
    return out;
}

BlockStructure block_structure(const SignedPermutation& pi) {
    BlockStructure bs;
    const auto& w = pi.word();
    std::size_t k = 0;
    while (k < w.size()) {
        int alpha = 0, beta = 0;
        while (k < w.size() && w[k] < 0) { ++alpha; ++k; }
        while (k < w.size() && w[k] > 0) { ++beta; ++k; }
        bs.alphas.push_back(alpha);
        bs.betas.push_back(beta);
    }
    return bs;
}

IntPolynomial class_polynomial(const BlockStructure& bs) {
    const int gamma = bs.gamma();
    if (gamma == 0) return IntPolynomial{1};
    // boundaries p|m are always descents, m|p never; a final positive letter adds one more
    IntPolynomial out = IntPolynomial::monomial(bs.ends_negative() ? gamma - 1 : gamma);
    for (int j = 0; j < gamma; ++j) out = out * eulerian(bs.alphas[j]) * eulerian(bs.betas[j]);
    return out;
}

} // namespace fracpoly
