#pragma once

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "frobun/numeric.hpp"

namespace frobun {

// y^2 = f(x) with deg f in {3,5,7}, odd characteristic; one point at
// infinity. Coefficients are integers reduced mod p at evaluation time.
struct HyperellipticModel {
    std::vector<long> f; // f[0] + f[1] x + ...
    unsigned genus() const;
};

// Smooth plane projective curve F(x,y,z) = 0 of degree d; genus
// (d-1)(d-2)/2. Monomial exponents (i,j,k) with i+j+k = d.
struct PlaneModel {
    std::map<std::array<unsigned, 3>, long> monomials;
    unsigned degree() const;
    unsigned genus() const;
};

struct CurveModel {
    PrimePower q;
    std::variant<HyperellipticModel, PlaneModel> model;
    unsigned genus() const;
};

// Parse "y2=x3+x" / "y^2=x^3-x" or "plane:x3+y3+z3" over F_q.
CurveModel parse_curve_model(const std::string& text, const PrimePower& q);

// Number of projective points over F_{q^k}. Rejects singular curves (a
// counted point where all partials vanish) and enumeration blowups.
Int count_points(const CurveModel& curve, unsigned k, unsigned threads = 1);

// Numerator P(T) = prod_j (1 - lambda_j T) of the zeta function; integer
// coefficients a_0..a_{2g} with a_0 = 1 and a_{2g-i} = q^{g-i} a_i.
struct WeilPolynomial {
    PrimePower q;
    unsigned g = 0;
    std::vector<Int> coeffs;

    // power sum p_k = sum_j lambda_j^k, exact; p_{-k} = p_k / q^k, p_0 = 2g
    Rat power_sum(long k) const;
    Rat eval(const Rat& t) const;
    bool operator==(const WeilPolynomial&) const = default;
};

WeilPolynomial weil_numerator_from_counts(const PrimePower& q, unsigned g, const std::vector<Int>& counts);
WeilPolynomial weil_from_coeffs(const PrimePower& q, const std::vector<Int>& coeffs);
WeilPolynomial weil_from_model(const CurveModel& curve, unsigned threads = 1);

// N_k = q^k + 1 - p_k recovered from P, exact.
Int point_count_from_weil(const WeilPolynomial& P, unsigned k);

bool functional_equation_check(const WeilPolynomial& P);

// zeta_X(s) = P(q^{-s}) / ((1-q^{-s})(1-q^{1-s})) for integer s >= 2.
Rat zeta_value(const WeilPolynomial& P, long s);

// Numeric inverse roots of P, each checked against |lambda| = sqrt(q)
// (tolerance 1e-9) and ordered so Weil pairs lambda*lambda' = q are
// adjacent. Diagnostics only; the exact path runs through power sums.
std::vector<std::complex<double>> eigenvalues_numeric(const WeilPolynomial& P);

bool lambda_abs_check(const WeilPolynomial& P);

} // namespace frobun
