// Acceptance suite: each criterion prints one PASS/FAIL line; the process
// exits with the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "frobun/action_expr.hpp"
#include "frobun/oracle.hpp"

using namespace frobun;

namespace {

const PrimePower q2{2, 1};
const PrimePower q3{3, 1};

int failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<bool()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        ok = false;
        note = std::string(" [exception: ") + e.what() + "]";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0 && secs > budget_seconds) {
        ok = false;
        note += " [over time budget]";
    }
    std::printf("%s  criterion %2d: %s (%.2fs)%s\n", ok ? "PASS" : "FAIL", number, label.c_str(), secs,
                note.c_str());
    if (!ok)
        ++failures;
}

Rat abs_rat(Rat r) {
    if (r < 0)
        r = -r;
    return r;
}

} // namespace

int main() {
    criterion(1, "Steinberg counts equal brute-force matrix enumeration", 10.0, [] {
        struct Case {
            unsigned n;
            unsigned long q;
            long expect;
        };
        for (Case c : {Case{2, 2, 6}, Case{2, 3, 24}, Case{3, 2, 168}}) {
            GroupData G = group_from_type(Series::A, c.n - 1);
            auto f = steinberg_count(G, prime_power_from_value(c.q));
            if (!f.value || *f.value != Rat(Int(c.expect)))
                return false;
            if (brute_force_count_sl(c.n, c.q) != Int(c.expect))
                return false;
        }
        return true;
    });

    criterion(2, "Weil eigenvalues of y2=x3+x over F_3", 0, [] {
        CurveModel c = parse_curve_model("y2=x3+x", q3);
        WeilPolynomial P = weil_numerator_from_counts(q3, 1, {count_points(c, 1)});
        if (P.coeffs != std::vector<Int>{1, 0, 3})
            return false;
        double sq = std::sqrt(3.0);
        for (const auto& root : eigenvalues_numeric(P))
            if (std::abs(std::abs(root) - sq) >= 1e-9)
                return false;
        Int n2_brute = count_points(c, 2);
        return n2_brute == 16 && point_count_from_weil(P, 2) == n2_brute;
    });

    criterion(3, "psi/phi and Frob/Fbar compose to the identity (exact)", 0, [] {
        for (const auto& G : {group_from_type(Series::A, 1), group_from_type(Series::A, 2),
                              group_from_type(Series::G2, 2), group_from_type(Series::Gm, 1)})
            for (unsigned g : {0u, 1u, 2u}) {
                auto psi = base_action(FrobeniusKind::InducedArithmetic, G, g, q3);
                auto phi = base_action(FrobeniusKind::InducedGeometric, G, g, q3);
                auto frob = base_action(FrobeniusKind::AbsoluteArithmetic, G, g, q3);
                auto fbar = base_action(FrobeniusKind::AbsoluteGeometric, G, g, q3);
                if (!compose(psi, phi).is_identity() || !compose(frob, fbar).is_identity())
                    return false;
            }
        return true;
    });

    criterion(4, "the 12 golden eigenvalue formulas (4 kinds x 3 families)", 0, [] {
        GroupData G = group_from_type(Series::A, 2); // degrees 2, 3
        unsigned genus = 1;
        std::size_t tg = 2;
        auto lam = [&](long e) { return ScalarMonomial::lambda(1, e, tg); };
        auto q_h = [&](long h) { return ScalarMonomial::q_power(h, tg); };
        auto mul = monomial_mul;
        unsigned i = 2; // check the d_i = 3 row
        long d = 3;
        GeneratorSpec a{GenKind::a, i, 0, 2 * 3}, f{GenKind::f, i, 0, 2 * 3 - 2},
            b{GenKind::b, i, 1, 2 * 3 - 1};

        auto psi = base_action(FrobeniusKind::InducedArithmetic, G, genus, q3);
        bool ok = psi.eigenvalue(a) == ScalarMonomial::one(tg) && psi.eigenvalue(b) == lam(-1) &&
                  psi.eigenvalue(f) == q_h(-2);

        auto phi = base_action(FrobeniusKind::InducedGeometric, G, genus, q3);
        ok = ok && phi.eigenvalue(a) == ScalarMonomial::one(tg) && phi.eigenvalue(b) == lam(1) &&
             phi.eigenvalue(f) == q_h(2);

        auto frob = base_action(FrobeniusKind::AbsoluteArithmetic, G, genus, q3);
        ok = ok && frob.eigenvalue(a) == q_h(-2 * d) && frob.eigenvalue(b) == mul(lam(1), q_h(-2 * d)) &&
             frob.eigenvalue(f) == q_h(-2 * (d - 1));

        auto fbar = base_action(FrobeniusKind::AbsoluteGeometric, G, genus, q3);
        ok = ok && fbar.eigenvalue(a) == q_h(2 * d) && fbar.eigenvalue(b) == mul(lam(-1), q_h(2 * d)) &&
             fbar.eigenvalue(f) == q_h(2 * (d - 1));
        return ok;
    });

    criterion(5, "Betti numbers: golden series and brute-force enumerator", 5.0, [] {
        if (poincare_series(group_from_type(Series::A, 1), 1, 6).coeff !=
            std::vector<Int>{1, 0, 1, 2, 2, 2, 3})
            return false;
        for (const auto& G : {group_from_type(Series::A, 1), group_from_type(Series::A, 2),
                              group_from_type(Series::G2, 2)})
            for (unsigned g : {0u, 1u, 2u})
                if (poincare_series(G, g, 12).coeff != poincare_by_enumeration(G, g, 12).coeff)
                    return false;
        return true;
    });

    criterion(6, "Frob trace on SL2 over the F_3 elliptic curve: 7/4 with bounds", 2.0, [] {
        GroupData G = group_from_type(Series::A, 1);
        WeilPolynomial P = weil_numerator_from_counts(q3, 1, {Int(4)});
        auto frob = base_action(FrobeniusKind::AbsoluteArithmetic, G, 1, q3);
        TraceReport rep = trace_report(frob, P, 40);
        if (!rep.closed_form || *rep.closed_form != Rat(7, 4))
            return false;
        if (abs_rat(rep.partial_sums[40] - Rat(7, 4)) >= Rat(1, 1000000))
            return false;
        SqrtQ prev = SqrtQ::zero(q3);
        for (unsigned M : {10u, 20u, 40u}) {
            auto sums = alternating_partial_sums(frob, M, P);
            SqrtQ tail = trace_tail_bound(frob, M);
            SqrtQ err(abs_rat(sums[M] - Rat(7, 4)), Rat(0), q3);
            if ((tail - err).sign() < 0)
                return false; // bound must dominate the true error
            if (M > 10 && (prev - tail).sign() <= 0)
                return false; // and decrease geometrically
            prev = tail;
        }
        return true;
    });

    criterion(7, "closed form of Frob = product of zeta values at the degrees", 0, [] {
        for (const auto& P : {weil_numerator_from_counts(q3, 1, {Int(4)}),
                              weil_numerator_from_counts(q2, 1, {Int(5)})})
            for (const auto& G : {group_from_type(Series::A, 1), group_from_type(Series::A, 2),
                                  group_from_type(Series::G2, 2)}) {
                auto frob = base_action(FrobeniusKind::AbsoluteArithmetic, G, 1, P.q);
                TraceReport rep = closed_form_trace(frob, P);
                Rat expect(1);
                for (unsigned d : G.degrees)
                    expect *= zeta_value(P, d);
                if (!rep.closed_form || *rep.closed_form != expect)
                    return false;
            }
        return true;
    });

    criterion(8, "generator-truncated trace of psi^n vs full subset summation", 0, [] {
        WeilPolynomial P1 = weil_numerator_from_counts(q3, 1, {Int(4)});
        WeilPolynomial P2 = weil_from_model(parse_curve_model("y2=x5-x", q3));
        // r*g <= 4 configurations
        std::vector<std::pair<GroupData, WeilPolynomial>> cases = {
            {group_from_type(Series::A, 1), P1},  {group_from_type(Series::A, 1), P2},
            {group_from_type(Series::A, 2), P1},  {group_from_type(Series::A, 2), P2},
            {group_from_type(Series::G2, 2), P2}, {group_from_type(Series::Gm, 1), P2}};
        for (const auto& [G, P] : cases)
            for (long n : {1L, 2L, 3L}) {
                auto psin = iterate(base_action(FrobeniusKind::InducedArithmetic, G, P.g, q3), n);
                for (SignMode mode : {SignMode::Unsigned, SignMode::Signed}) {
                    auto rep = generator_truncated_trace(psin, P, mode);
                    if (!rep.value)
                        return false;
                    if (!rep.a_part || *rep.a_part != Rat(static_cast<long>(G.rank)))
                        return false;
                    Rat fexpect = G.series == Series::Gm
                                      ? Rat(0)
                                      : Rat(static_cast<long>(G.rank)) * int_pow(3, -n);
                    if (!rep.f_part || *rep.f_part != fexpect)
                        return false;
                    Rat subsets = evaluate_sum_exact(exterior_subset_sum(psin, mode), P);
                    if (*rep.exterior_part != subsets)
                        return false;
                }
            }
        return true;
    });

    criterion(9, "verdicts: psi^n poles on every a_i; frob^s o psi^n converges for s >= 1", 0, [] {
        for (const auto& G : {group_from_type(Series::A, 1), group_from_type(Series::A, 2),
                              group_from_type(Series::B, 2), group_from_type(Series::G2, 2)}) {
            for (long n : {1L, 2L, 3L}) {
                auto rep = convergence_report(
                    iterate(base_action(FrobeniusKind::InducedArithmetic, G, 1, q3), n));
                if (rep.verdict != Verdict::Pole || rep.offenders.size() != G.rank)
                    return false;
                for (const auto& off : rep.offenders)
                    if (off.kind != GenKind::a)
                        return false;
                // offending magnitude is exactly 1 = coefficient 1, exponent 0
                for (const auto& m : rep.magnitudes)
                    if (m.gen.kind == GenKind::a && (m.magnitude.coef != 1 || m.magnitude.halves != 0))
                        return false;
            }
            for (long s : {1L, 2L, 3L})
                for (long n : {0L, 1L, 2L, 6L}) {
                    auto A = parse_action_expr(
                        "frob^" + std::to_string(s) + " o psi^" + std::to_string(n), G, 1, q3);
                    auto rep = convergence_report(A);
                    if (rep.verdict != Verdict::Converges)
                        return false;
                    // per-generator exponents are exact integers in half-units
                    for (const auto& m : rep.magnitudes) {
                        long d = G.degrees[m.gen.group_index - 1];
                        long expect = 0;
                        if (m.gen.kind == GenKind::a)
                            expect = -2 * d * s;
                        else if (m.gen.kind == GenKind::f)
                            expect = 2 * (s - n) - 2 * d * s;
                        else
                            expect = (s - n) - 2 * d * s;
                        if (m.magnitude.halves != expect || m.magnitude.coef != 1)
                            return false;
                    }
                }
        }
        return true;
    });

    criterion(10, "Newton-identity products vs numeric roots (three curves, |e| <= 4)", 0, [] {
        // the g = 2 polynomial comes from brute-force counts of y2 = x5 - x / F_3
        CurveModel c = parse_curve_model("y2=x5-x", q3);
        Int n1 = count_points(c, 1), n2 = count_points(c, 2);
        WeilPolynomial Pg2 = weil_numerator_from_counts(q3, 2, {n1, n2});
        std::vector<WeilPolynomial> ps = {weil_numerator_from_counts(q3, 1, {Int(4)}),
                                          weil_numerator_from_counts(q2, 1, {Int(5)}), Pg2};
        for (const auto& P : ps)
            for (long e = -4; e <= 4; ++e) {
                if (e == 0)
                    continue;
                for (const Rat& cc : {Rat(1), Rat(-1), Rat(2, 3), Rat(-1, 2)}) {
                    Rat exact = lambda_power_product(P, e, cc);
                    auto numeric = numeric_lambda_product(P, e, cc);
                    double scale = std::max(1.0, std::abs(numeric));
                    if (std::abs(numeric.imag()) > 1e-9 * scale ||
                        std::abs(exact.get_d() - numeric.real()) > 1e-9 * scale)
                        return false;
                }
            }
        return true;
    });

    if (failures == 0)
        std::printf("acceptance: all 10 criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures;
}
