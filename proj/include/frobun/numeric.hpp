#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

#include "frobun/error.hpp"

namespace frobun {

using Int = mpz_class;
using Rat = mpq_class;

// Prime power q = p^s, kept factored so half-integer exponent arithmetic
// stays exact (q^{k/2} = p^{s*k/2} is rational iff s*k is even).
struct PrimePower {
    unsigned long p = 0;
    unsigned s = 0;

    Int value() const;
    bool operator==(const PrimePower&) const = default;
};

// Factor q; rejects q < 2 and non-prime-powers.
PrimePower prime_power_from_value(unsigned long q);

// p^e as an exact rational (e may be negative).
Rat int_pow(unsigned long base, long e);

// q^{halves/2} as an exact rational; fails when s*halves is odd.
Rat q_half_pow(const PrimePower& q, long halves);
bool q_half_pow_is_rational(const PrimePower& q, long halves);

// q^{halves/2} as a double (diagnostics only).
double q_half_pow_numeric(const PrimePower& q, long halves);

// Element of Q(sqrt q): ratl + irr*sqrt(q). When s is even sqrt(q) is an
// integer and the irrational part is folded away on normalization. Used for
// exact magnitude/tail arithmetic in convergence reports.
struct SqrtQ {
    Rat ratl;
    Rat irr;
    PrimePower q;

    SqrtQ() = default;
    SqrtQ(Rat r, Rat i, PrimePower qq);
    static SqrtQ zero(const PrimePower& q) { return SqrtQ(Rat(0), Rat(0), q); }
    static SqrtQ one(const PrimePower& q) { return SqrtQ(Rat(1), Rat(0), q); }
    // C * q^{halves/2}
    static SqrtQ q_power(const Rat& coef, long halves, const PrimePower& q);

    SqrtQ operator+(const SqrtQ& o) const;
    SqrtQ operator-(const SqrtQ& o) const;
    SqrtQ operator*(const SqrtQ& o) const;
    SqrtQ inverse() const;
    int sign() const;
    bool is_zero() const { return ratl == 0 && irr == 0; }
    double to_double() const;
    std::string str() const; // "a + b*sqrt(q)" reduced, deterministic
};

// Canonical rational rendering: "n" or "n/d".
std::string rat_str(const Rat& r);

// Canonical q-power rendering for half exponents: q^-1, q^(3/2), ...
std::string q_pow_str(long halves);

std::complex<double> rat_to_complex(const Rat& r);

} // namespace frobun
