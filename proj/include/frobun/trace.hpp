#pragma once

#include <optional>

#include "frobun/curve.hpp"
#include "frobun/frobenius.hpp"

namespace frobun {

// Trace of the action on H^m per degree m, as exact symbolic sums.
struct TraceSeries {
    ActionContext context;
    std::vector<ScalarSum> coeff; // 0..M
};

// Coefficient of t^m in prod_{even} 1/(1 - alpha t^deg) * prod_b (1 + beta t^deg).
TraceSeries weighted_series(const DiagonalAction& A, unsigned max_degree);

// p_k = sum_j lambda_j^k via Newton's identities; p_{-k} = p_k / q^k, p_0 = 2g.
Rat lambda_power_sum(const WeilPolynomial& P, long k);

// prod_{j=1}^{2g} (1 - c lambda_j^e), exact through power sums.
Rat lambda_power_product(const WeilPolynomial& P, long e, const Rat& c);

// Exact rational value of a ScalarSum whose lambda-content consists of
// complete symmetric orbits (monomial symmetric functions of the lambda_j),
// reduced through power sums of the binding. Throws a DomainError
// ("symbolic residue") otherwise.
Rat evaluate_sum_exact(const ScalarSum& s, const WeilPolynomial& P);

// S_m = sum_{k<=m} (-1)^k tr_k, exact; the coefficients come from the
// truncated weighted series, not from the closed form.
std::vector<Rat> alternating_partial_sums(const DiagonalAction& A, unsigned max_degree,
                                          const WeilPolynomial& P);

enum class Verdict { Converges, Diverges, Pole };

std::string verdict_name(Verdict v);

struct GeneratorMagnitude {
    GeneratorSpec gen;
    MagnitudeBound magnitude;
};

// Convergence of the full-algebra alternating trace: decided by exact
// half-integer magnitude comparisons, no floating point. Pole means an even
// generator with eigenvalue exactly 1; any even magnitude >= 1 diverges.
struct ConvergenceReport {
    Verdict verdict = Verdict::Converges;
    std::vector<GeneratorMagnitude> magnitudes; // every generator
    std::vector<GeneratorSpec> offenders;       // even gens with magnitude >= 1
    std::optional<MagnitudeBound> rho;          // max even magnitude (ratio bound)
    std::optional<MagnitudeBound> max_b;        // largest b-magnitude (finite exterior factor)
};

ConvergenceReport convergence_report(const DiagonalAction& A);

// One factor of the closed form, for group index i:
// prod_j (1 - beta_ij) / ((1 - alpha_i)(1 - phi_i)).
struct TraceFactor {
    unsigned group_index = 1;
    ScalarSum numerator; // expanded prod_j (1 - beta_ij)
    std::vector<ScalarSum> denominators;
    std::optional<Rat> value; // exact, when all parts are rational
};

struct TraceReport {
    ConvergenceReport convergence;
    std::vector<TraceFactor> factors;
    // exact closed form; absent when diverging/pole or when nontrivial
    // roots of unity leave only the factor expression
    std::optional<Rat> closed_form;
    std::optional<Rat> mass; // q^{(g-1) dim G} * closed form, absolute arithmetic Frobenius only
    std::vector<Rat> partial_sums;
    std::optional<SqrtQ> error_bound_exact;     // exact tail of the magnitude majorant at M
    std::optional<MagnitudeBound> error_bound;  // the same bound in C*q^{k/2} form
};

// Closed form of the convergent full-algebra alternating trace, evaluated
// through the Weil polynomial; divergence is a verdict, not an error.
TraceReport closed_form_trace(const DiagonalAction& A, const WeilPolynomial& P);

// Exact tail sum_{m>M} tau_m of the termwise magnitude majorant; valid
// bound for |S_M - closed_form| and decreasing geometrically in M.
SqrtQ trace_tail_bound(const DiagonalAction& A, unsigned max_degree);

// closed_form_trace plus partial sums and the error bound at max_degree.
TraceReport trace_report(const DiagonalAction& A, const WeilPolynomial& P, unsigned max_degree);

enum class SignMode { Signed, Unsigned };

// Trace over span{a_i} + span{f_i} + the full exterior algebra on the b's:
// sum_i alpha_i + sum_i phi_i + [prod_{i,j}(1 -/+ beta_ij) - 1]. Unsigned
// keeps the plain sum over exterior subsets; signed weights odd subsets
// with alternating signs.
struct TruncatedTraceReport {
    SignMode sign = SignMode::Unsigned;
    std::optional<Rat> a_part;
    std::optional<Rat> f_part;
    std::optional<Rat> exterior_part;
    std::optional<Rat> value;
    ScalarSum a_symbolic;
    ScalarSum f_symbolic;
    SqrtQ exterior_bound; // (1 + sigma_max)^{#b} - 1, exact
};

TruncatedTraceReport generator_truncated_trace(const DiagonalAction& A, const WeilPolynomial& P,
                                               SignMode mode);

// q^{(g-1) dim G} times the convergent alternating trace of the absolute
// arithmetic Frobenius; fails when that trace does not converge.
Rat behrend_mass(const GroupData& G, const WeilPolynomial& P, const PrimePower& q);

} // namespace frobun
