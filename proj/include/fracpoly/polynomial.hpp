#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace fracpoly {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial with big-integer coefficients, index = degree.
/// Trailing zeros are always trimmed; the zero polynomial has degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial monomial(int degree, BigInt coeff = 1);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    // Zero outside [0, degree].
    BigInt coeff(int k) const;

    BigInt evaluate(const BigInt& t) const;

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
    friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
    bool operator==(const IntPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

    // "1 + 4*t + 7*t^2"
    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Exact rational polynomial; same conventions as IntPolynomial.
class RatPolynomial {
public:
    RatPolynomial() = default;
    explicit RatPolynomial(std::vector<Rational> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int k) const;
    Rational evaluate(const Rational& x) const;

    RatPolynomial& operator+=(const RatPolynomial& rhs);
    friend RatPolynomial operator*(const RatPolynomial& lhs, const RatPolynomial& rhs);
    bool operator==(const RatPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

    std::string to_string(const std::string& var = "n") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

BigInt binomial(long n, long k);

} // namespace fracpoly
