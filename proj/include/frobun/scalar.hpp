#pragma once

#include <complex>
#include <string>
#include <vector>

#include "frobun/numeric.hpp"

namespace frobun {

// Root of unity zeta_order^exponent, kept symbolic. Normal form: exponent
// reduced mod order, then (order, exponent) divided by their gcd so each
// value has a unique representation; -1 is folded into the rational
// coefficient of the enclosing monomial, so normalized monomials carry
// either the trivial root or one of order >= 3.
struct RootOfUnity {
    long order = 1;
    long exponent = 0;

    static RootOfUnity one() { return {1, 0}; }
    bool is_one() const { return order == 1; }
    RootOfUnity inverse() const;
    std::complex<double> numeric() const;
    bool operator==(const RootOfUnity&) const = default;
};

// Normalize to the primitive-order form; returns the +/-1 sign that must be
// absorbed by the caller (the -1 case).
RootOfUnity normalize_root(RootOfUnity z, int& sign_out);
RootOfUnity root_mul(const RootOfUnity& a, const RootOfUnity& b, int& sign_out);

// q^{halves/2}. Exponents add under multiplication of powers.
struct HalfIntExp {
    long halves = 0;
    bool operator==(const HalfIntExp&) const = default;
};

// Exact scalar: coef * zeta * q^{qexp/2} * prod_j lambda_j^{lam[j]}.
// The lam vector has length 2g; its length is the curve context and must
// agree between operands.
struct ScalarMonomial {
    Rat coef = Rat(1);
    RootOfUnity zeta = RootOfUnity::one();
    HalfIntExp qexp;
    std::vector<long> lam;

    static ScalarMonomial one(std::size_t two_g = 0);
    static ScalarMonomial rational(const Rat& c, std::size_t two_g = 0);
    static ScalarMonomial q_power(long halves, std::size_t two_g = 0);
    static ScalarMonomial lambda(std::size_t j, long e, std::size_t two_g);

    void normalize();
    bool is_one() const;
    bool operator==(const ScalarMonomial&) const = default;
};

ScalarMonomial monomial_mul(const ScalarMonomial& a, const ScalarMonomial& b);
ScalarMonomial monomial_pow(const ScalarMonomial& m, long n);
ScalarMonomial monomial_inverse(const ScalarMonomial& m);

// |m| = coef_abs * q^{halves/2}, exact. For sums the bound is the triangle
// inequality with the largest per-term exponent.
struct MagnitudeBound {
    Rat coef;   // nonnegative
    long halves = 0;

    // exact comparison of coef*q^{halves/2} against 1
    int cmp_one(const PrimePower& q) const;
    int cmp(const MagnitudeBound& o, const PrimePower& q) const;
    std::string str() const; // "C * q^k" canonical
    double numeric(const PrimePower& q) const;
};

MagnitudeBound monomial_magnitude(const ScalarMonomial& m);

// Normalized sum of monomials: terms sorted by key (lam, qexp, zeta),
// no duplicate keys, no zero coefficients. The empty sum is zero.
struct ScalarSum {
    std::vector<ScalarMonomial> terms;

    ScalarSum() = default;
    explicit ScalarSum(ScalarMonomial m);
    static ScalarSum zero() { return {}; }
    static ScalarSum one(std::size_t two_g = 0) { return ScalarSum(ScalarMonomial::one(two_g)); }

    bool is_zero() const { return terms.empty(); }
    ScalarSum negate() const;
    bool operator==(const ScalarSum&) const = default;
};

ScalarSum sum_add(const ScalarSum& a, const ScalarSum& b);
ScalarSum sum_sub(const ScalarSum& a, const ScalarSum& b);
ScalarSum sum_mul(const ScalarSum& a, const ScalarSum& b);
ScalarSum sum_scale(const ScalarSum& a, const ScalarMonomial& m);

MagnitudeBound magnitude_bound(const ScalarSum& s);

std::complex<double> evaluate_numeric(const ScalarMonomial& m, const PrimePower& q,
                                      const std::vector<std::complex<double>>& lambda_values);
std::complex<double> evaluate_numeric(const ScalarSum& s, const PrimePower& q,
                                      const std::vector<std::complex<double>>& lambda_values);

// Exact rational value of a single monomial at concrete q. Fails when the
// monomial has lambda content, a root of unity of order >= 3, or an
// irrational q-power.
bool monomial_is_rational(const ScalarMonomial& m, const PrimePower& q);
Rat monomial_rational_value(const ScalarMonomial& m, const PrimePower& q);

// Canonical text form "c * zeta(m,e) * q^(n/2) * L1^a1*..."; sums join
// normalized terms with " + ", the empty sum prints "0".
std::string monomial_str(const ScalarMonomial& m);
std::string sum_str(const ScalarSum& s);

} // namespace frobun
