#pragma once

#include <complex>
#include <string>
#include <vector>

#include "frobun/trace.hpp"

namespace frobun {

// Independent brute-force routes used by `verify` and the test suite. These
// deliberately avoid the production formulas: series coefficients come from
// direct monomial enumeration, traces from explicit eigenvalue products,
// lambda products from numeric roots.

// Betti numbers by enumerating monomials over the generator set (even
// generators with free exponents, b-generators squarefree).
IntSeries poincare_by_enumeration(const GroupData& G, unsigned genus, unsigned max_degree);

// Trace on H^m as the sum of eigenvalue products over the monomial basis.
ScalarSum trace_coefficient_by_enumeration(const DiagonalAction& A, unsigned m);

// Sum over all nonempty subsets of b-generators of prod (-/+ beta), the
// exterior part of the generator-truncated trace.
ScalarSum exterior_subset_sum(const DiagonalAction& A, SignMode mode);

// prod_j (1 - c lambda_j^e) from the numeric roots.
std::complex<double> numeric_lambda_product(const WeilPolynomial& P, long e, const Rat& c);

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

// The cross-module oracle suite behind the CLI `verify` command.
std::vector<VerifyCheck> run_verify_suite();

} // namespace frobun
