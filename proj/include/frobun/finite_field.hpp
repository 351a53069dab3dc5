#pragma once

#include <vector>

#include "frobun/numeric.hpp"

namespace frobun {

// F_{p^k} with elements coded as integers 0..p^k-1 (base-p digits are the
// polynomial coordinates in F_p[x]/(modulus)). The modulus is the first
// monic irreducible of degree k in the deterministic candidate order, so
// field construction is reproducible. Multiplication runs on log/exp tables
// over a generator of the multiplicative group.
class FiniteField {
  public:
    FiniteField(unsigned long p, unsigned k);

    unsigned long p() const { return p_; }
    unsigned k() const { return k_; }
    unsigned long size() const { return n_; }
    PrimePower prime_power() const { return PrimePower{p_, k_}; }
    const std::vector<unsigned long>& modulus() const { return modulus_; }

    unsigned long add(unsigned long a, unsigned long b) const;
    unsigned long sub(unsigned long a, unsigned long b) const;
    unsigned long neg(unsigned long a) const;
    unsigned long mul(unsigned long a, unsigned long b) const;
    unsigned long inv(unsigned long a) const;
    unsigned long pow(unsigned long a, long e) const;
    unsigned long from_int(long c) const; // embed an integer via c mod p
    unsigned long generator() const { return gen_; }

    // quadratic character for odd p: 0, +1 or -1
    int chi(unsigned long a) const;

  private:
    unsigned long polymul_mod(unsigned long a, unsigned long b) const;

    unsigned long p_;
    unsigned k_;
    unsigned long n_;
    std::vector<unsigned long> modulus_; // coeffs c_0..c_k, monic
    unsigned long gen_;
    std::vector<long> log_;
    std::vector<unsigned long> exp_;
};

// Deterministic irreducible search used by FiniteField; exposed for tests.
std::vector<unsigned long> find_irreducible(unsigned long p, unsigned k);

} // namespace frobun
