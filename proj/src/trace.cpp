#include "frobun/trace.hpp"

#include <algorithm>
#include <map>

namespace frobun {

namespace {

void check_binding(const ActionContext& ctx, const WeilPolynomial& P) {
    if (!(ctx.q == P.q))
        fail(ErrorCode::ContextError, "action and Weil polynomial use different q");
    if (!ctx.classifying && ctx.genus != P.g)
        fail(ErrorCode::ContextError, "action genus " + std::to_string(ctx.genus) +
                                          " does not match curve genus " + std::to_string(P.g));
}

// lambda-free part of a monomial (coefficient, root of unity, q-power)
ScalarMonomial lambda_free_part(const ScalarMonomial& m) {
    ScalarMonomial r = m;
    std::fill(r.lam.begin(), r.lam.end(), 0);
    return r;
}

struct BFamily {
    unsigned group_index;
    long lambda_exp;      // common lambda exponent e
    ScalarMonomial coef;  // common lambda-free part c_i
    std::vector<ScalarMonomial> eigenvalues;
};

// Collect the b-eigenvalues of group index i and validate the product form
// beta_ij = c_i * lambda_j^e (the shape every composition of the four base
// kinds has).
std::vector<BFamily> b_families(const DiagonalAction& A) {
    std::vector<BFamily> out;
    unsigned two_g = 2 * A.context.genus;
    if (two_g == 0) {
        for (unsigned i = 1; i <= A.context.group.rank; ++i)
            out.push_back({i, 0, ScalarMonomial::one(0), {}});
        return out;
    }
    for (unsigned i = 1; i <= A.context.group.rank; ++i) {
        BFamily fam;
        fam.group_index = i;
        bool first = true;
        for (unsigned j = 1; j <= two_g; ++j) {
            GeneratorSpec gen{GenKind::b, i, j, 0};
            gen.degree = 2 * A.context.group.degrees[i - 1] - 1;
            const ScalarMonomial& ev = A.eigenvalue(gen);
            for (unsigned t = 0; t < two_g; ++t)
                if (t != j - 1 && ev.lam[t] != 0)
                    fail(ErrorCode::DomainError, "b-eigenvalue of " + gen.name() +
                                                     " involves a foreign lambda; no product form");
            long e = ev.lam[j - 1];
            ScalarMonomial free = lambda_free_part(ev);
            if (first) {
                fam.lambda_exp = e;
                fam.coef = free;
                first = false;
            } else if (e != fam.lambda_exp || !(free == fam.coef)) {
                fail(ErrorCode::DomainError, "b-eigenvalues of family " + std::to_string(i) +
                                                 " are not of uniform product form");
            }
            fam.eigenvalues.push_back(ev);
        }
        out.push_back(std::move(fam));
    }
    return out;
}

} // namespace

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Converges: return "converges";
    case Verdict::Diverges: return "diverges";
    case Verdict::Pole: return "pole";
    }
    return "?";
}

TraceSeries weighted_series(const DiagonalAction& A, unsigned max_degree) {
    std::size_t two_g = 2 * A.context.genus;
    TraceSeries s;
    s.context = A.context;
    s.coeff.assign(max_degree + 1, ScalarSum::zero());
    s.coeff[0] = ScalarSum::one(two_g);
    for (std::size_t gi = 0; gi < A.gens.size(); ++gi) {
        const GeneratorSpec& gen = A.gens[gi];
        const ScalarMonomial& ev = A.eigenvalues[gi];
        unsigned e = gen.degree;
        if (gen.even()) {
            if (e == 0)
                fail(ErrorCode::DomainError, "even generator of degree 0 in weighted series");
            // multiply by 1/(1 - ev t^e): ascending, reusing updated entries
            for (unsigned m = e; m <= max_degree; ++m)
                s.coeff[m] = sum_add(s.coeff[m], sum_scale(s.coeff[m - e], ev));
        } else {
            // multiply by (1 + ev t^e): descending over old entries
            for (unsigned m = max_degree; m >= e; --m) {
                s.coeff[m] = sum_add(s.coeff[m], sum_scale(s.coeff[m - e], ev));
                if (m == e)
                    break;
            }
        }
    }
    return s;
}

Rat lambda_power_sum(const WeilPolynomial& P, long k) { return P.power_sum(k); }

Rat lambda_power_product(const WeilPolynomial& P, long e, const Rat& c) {
    unsigned n = 2 * P.g;
    if (n == 0)
        return Rat(1);
    if (e == 0) {
        Rat base = Rat(1) - c, out(1);
        for (unsigned k = 0; k < n; ++k)
            out *= base;
        return out;
    }
    // Newton from the power sums of {lambda_j^e}: k ehat_k = sum (-1)^{i-1} ehat_{k-i} p_{e i}
    std::vector<Rat> ehat(n + 1);
    ehat[0] = 1;
    for (unsigned k = 1; k <= n; ++k) {
        Rat acc(0);
        int sign = 1;
        for (unsigned i = 1; i <= k; ++i) {
            acc += Rat(sign) * ehat[k - i] * P.power_sum(e * static_cast<long>(i));
            sign = -sign;
        }
        ehat[k] = acc / Rat(static_cast<long>(k));
    }
    // Q_e(c) = sum_k (-1)^k ehat_k c^k
    Rat out(0), cpow(1);
    int sign = 1;
    for (unsigned k = 0; k <= n; ++k) {
        out += Rat(sign) * ehat[k] * cpow;
        cpow *= c;
        sign = -sign;
    }
    return out;
}

namespace {

// Augmented monomial symmetric function on N variables evaluated at the
// lambda_j: sum over injective index tuples of prod lambda^{mu_t}. Computed
// from power sums by peeling one part; memoized on the sorted part multiset.
class SymmetricEvaluator {
  public:
    SymmetricEvaluator(const WeilPolynomial& P) : P_(P), N_(2 * P.g) {}

    Rat p(long k) {
        auto it = pmemo_.find(k);
        if (it != pmemo_.end())
            return it->second;
        Rat v = P_.power_sum(k);
        pmemo_.emplace(k, v);
        return v;
    }

    Rat m_tilde(std::vector<long> mu) {
        std::sort(mu.begin(), mu.end());
        if (mu.empty())
            return Rat(1);
        if (mu.size() > N_)
            return Rat(0);
        auto it = memo_.find(mu);
        if (it != memo_.end())
            return it->second;
        long k = mu.back();
        std::vector<long> rest(mu.begin(), mu.end() - 1);
        Rat v = p(k) * m_tilde(rest);
        for (std::size_t t = 0; t < rest.size(); ++t) {
            std::vector<long> bumped = rest;
            bumped[t] += k;
            if (bumped[t] == 0) {
                bumped.erase(bumped.begin() + static_cast<long>(t));
                long free_slots = static_cast<long>(N_) - static_cast<long>(bumped.size());
                v -= Rat(free_slots) * m_tilde(bumped);
            } else {
                v -= m_tilde(bumped);
            }
        }
        memo_.emplace(std::move(mu), v);
        return v;
    }

    // monomial symmetric function: m_tilde divided by the multiplicities
    Rat m_monomial(const std::vector<long>& mu) {
        Rat v = m_tilde(mu);
        std::map<long, unsigned> mult;
        for (long part : mu)
            ++mult[part];
        for (const auto& [part, c] : mult) {
            (void)part;
            Int f = 1;
            for (unsigned i = 2; i <= c; ++i)
                f *= i;
            v /= Rat(f);
        }
        return v;
    }

    std::size_t variables() const { return N_; }

  private:
    const WeilPolynomial& P_;
    std::size_t N_;
    std::map<std::vector<long>, Rat> memo_;
    std::map<long, Rat> pmemo_;
};

Int orbit_size(std::size_t N, const std::vector<long>& mu) {
    // N! / ((N - l)! * prod mult!)
    Int v = 1;
    for (std::size_t i = 0; i < mu.size(); ++i)
        v *= Int(static_cast<long>(N - i));
    std::map<long, unsigned> mult;
    for (long part : mu)
        ++mult[part];
    for (const auto& [part, c] : mult) {
        (void)part;
        for (unsigned i = 2; i <= c; ++i)
            v /= Int(i);
    }
    return v;
}

} // namespace

Rat evaluate_sum_exact(const ScalarSum& s, const WeilPolynomial& P) {
    if (s.is_zero())
        return Rat(0);
    std::size_t two_g = 2 * P.g;
    if (!s.terms.front().lam.empty() && s.terms.front().lam.size() != two_g)
        fail(ErrorCode::ContextError, "sum context does not match the Weil polynomial");

    struct GroupKey {
        long halves;
        std::vector<long> pattern;
        bool operator<(const GroupKey& o) const {
            if (halves != o.halves)
                return halves < o.halves;
            return pattern < o.pattern;
        }
    };
    struct Orbit {
        Rat coef;
        Int count = 0;
        bool mixed = false;
    };
    std::map<GroupKey, Orbit> orbits;
    for (const auto& t : s.terms) {
        if (!t.zeta.is_one())
            fail(ErrorCode::DomainError, "symbolic residue: root of unity " + monomial_str(t) +
                                             " has no rational value");
        std::vector<long> pattern;
        for (long e : t.lam)
            if (e != 0)
                pattern.push_back(e);
        std::sort(pattern.begin(), pattern.end());
        GroupKey key{t.qexp.halves, std::move(pattern)};
        auto [it, inserted] = orbits.try_emplace(key);
        if (inserted) {
            it->second.coef = t.coef;
        } else if (it->second.coef != t.coef) {
            it->second.mixed = true;
        }
        it->second.count += 1;
    }

    SymmetricEvaluator ev(P);
    Rat total(0);
    for (const auto& [key, orbit] : orbits) {
        if (key.pattern.empty()) {
            // lambda-free terms: single monomials, evaluated directly
            total += orbit.coef * q_half_pow(P.q, key.halves);
            continue;
        }
        if (orbit.mixed || orbit.count != orbit_size(two_g, key.pattern))
            fail(ErrorCode::DomainError,
                 "symbolic residue: lambda terms do not form a complete symmetric orbit");
        Rat mval = ev.m_monomial(key.pattern);
        if (mval == 0)
            continue;
        if (!q_half_pow_is_rational(P.q, key.halves))
            fail(ErrorCode::DomainError, "symbolic residue: irrational q-power survives evaluation");
        total += orbit.coef * q_half_pow(P.q, key.halves) * mval;
    }
    return total;
}

std::vector<Rat> alternating_partial_sums(const DiagonalAction& A, unsigned max_degree,
                                          const WeilPolynomial& P) {
    check_binding(A.context, P);
    TraceSeries ws = weighted_series(A, max_degree);
    std::vector<Rat> sums;
    Rat acc(0);
    int sign = 1;
    for (unsigned m = 0; m <= max_degree; ++m) {
        acc += Rat(sign) * evaluate_sum_exact(ws.coeff[m], P);
        sums.push_back(acc);
        sign = -sign;
    }
    return sums;
}

ConvergenceReport convergence_report(const DiagonalAction& A) {
    ConvergenceReport rep;
    const PrimePower& q = A.context.q;
    std::optional<MagnitudeBound> rho, max_b;
    bool any_exact_one_offender = false, any_other_offender = false;
    for (std::size_t i = 0; i < A.gens.size(); ++i) {
        MagnitudeBound mag = monomial_magnitude(A.eigenvalues[i]);
        rep.magnitudes.push_back({A.gens[i], mag});
        if (A.gens[i].even()) {
            if (mag.cmp_one(q) >= 0) {
                rep.offenders.push_back(A.gens[i]);
                if (A.eigenvalues[i].is_one())
                    any_exact_one_offender = true;
                else
                    any_other_offender = true;
            }
            if (!rho || mag.cmp(*rho, q) > 0)
                rho = mag;
        } else {
            if (!max_b || mag.cmp(*max_b, q) > 0)
                max_b = mag;
        }
    }
    rep.max_b = max_b;
    if (rep.offenders.empty()) {
        rep.verdict = Verdict::Converges;
        rep.rho = rho;
    } else {
        rep.verdict = (any_exact_one_offender && !any_other_offender) ? Verdict::Pole : Verdict::Diverges;
    }
    return rep;
}

TraceReport closed_form_trace(const DiagonalAction& A, const WeilPolynomial& P) {
    check_binding(A.context, P);
    TraceReport rep;
    rep.convergence = convergence_report(A);

    std::size_t two_g = 2 * P.g;
    bool all_rational = true;
    Rat product(1);
    std::vector<BFamily> fams;
    if (!A.context.classifying)
        fams = b_families(A);

    for (unsigned i = 1; i <= A.context.group.rank; ++i) {
        TraceFactor factor;
        factor.group_index = i;
        Rat numer(1);
        bool factor_rational = true;

        if (!A.context.classifying && two_g > 0) {
            const BFamily& fam = fams[i - 1];
            ScalarSum numer_sym = ScalarSum::one(two_g);
            for (const auto& beta : fam.eigenvalues) {
                ScalarSum lin = sum_sub(ScalarSum::one(two_g), ScalarSum(beta));
                numer_sym = sum_mul(numer_sym, lin);
            }
            factor.numerator = numer_sym;
            if (monomial_is_rational(fam.coef, P.q))
                numer = lambda_power_product(P, fam.lambda_exp, monomial_rational_value(fam.coef, P.q));
            else
                factor_rational = false;
        } else {
            factor.numerator = ScalarSum::one(two_g);
        }

        // denominator factors (1 - alpha) per even generator of index i
        for (std::size_t gi = 0; gi < A.gens.size(); ++gi) {
            const GeneratorSpec& gen = A.gens[gi];
            if (!gen.even() || gen.group_index != i)
                continue;
            const ScalarMonomial& alpha = A.eigenvalues[gi];
            factor.denominators.push_back(sum_sub(ScalarSum::one(two_g), ScalarSum(alpha)));
            if (rep.convergence.verdict == Verdict::Converges && factor_rational) {
                if (monomial_is_rational(alpha, P.q))
                    numer /= Rat(1) - monomial_rational_value(alpha, P.q);
                else
                    factor_rational = false;
            }
        }
        if (rep.convergence.verdict == Verdict::Converges && factor_rational) {
            factor.value = numer;
            product *= numer;
        } else {
            all_rational = false;
        }
        rep.factors.push_back(std::move(factor));
    }

    if (rep.convergence.verdict == Verdict::Converges && all_rational) {
        rep.closed_form = product;
        // Behrend mass for the absolute arithmetic Frobenius itself
        if (!A.context.classifying &&
            A == base_action(FrobeniusKind::AbsoluteArithmetic, A.context.group, A.context.genus, A.context.q)) {
            long e = (static_cast<long>(A.context.genus) - 1) * static_cast<long>(A.context.group.dimension);
            rep.mass = int_pow(A.context.q.p, static_cast<long>(A.context.q.s) * e) * product;
        }
    }
    return rep;
}

SqrtQ trace_tail_bound(const DiagonalAction& A, unsigned max_degree) {
    const PrimePower& q = A.context.q;
    // magnitude majorant series tau, truncated, over Q(sqrt q)
    std::vector<SqrtQ> tau(max_degree + 1, SqrtQ::zero(q));
    tau[0] = SqrtQ::one(q);
    SqrtQ total = SqrtQ::one(q);
    for (std::size_t gi = 0; gi < A.gens.size(); ++gi) {
        MagnitudeBound mag = monomial_magnitude(A.eigenvalues[gi]);
        SqrtQ m = SqrtQ::q_power(mag.coef, mag.halves, q);
        unsigned e = A.gens[gi].degree;
        if (A.gens[gi].even()) {
            if (mag.cmp_one(q) >= 0)
                fail(ErrorCode::DomainError, "tail bound requires all even magnitudes < 1");
            for (unsigned d = e; d <= max_degree; ++d)
                tau[d] = tau[d] + tau[d - e] * m;
            total = total * (SqrtQ::one(q) - m).inverse();
        } else {
            for (unsigned d = max_degree; d >= e; --d) {
                tau[d] = tau[d] + tau[d - e] * m;
                if (d == e)
                    break;
            }
            total = total * (SqrtQ::one(q) + m);
        }
    }
    SqrtQ partial = SqrtQ::zero(q);
    for (const auto& c : tau)
        partial = partial + c;
    return total - partial;
}

TraceReport trace_report(const DiagonalAction& A, const WeilPolynomial& P, unsigned max_degree) {
    TraceReport rep = closed_form_trace(A, P);
    try {
        rep.partial_sums = alternating_partial_sums(A, max_degree, P);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::DomainError)
            throw; // symbolic residue leaves partial sums empty; the factors stay
    }
    if (rep.convergence.verdict == Verdict::Converges) {
        SqrtQ tail = trace_tail_bound(A, max_degree);
        rep.error_bound_exact = tail;
        if (tail.irr == 0)
            rep.error_bound = MagnitudeBound{tail.ratl, 0};
        else if (tail.ratl == 0)
            rep.error_bound = MagnitudeBound{tail.irr, 1};
        else
            rep.error_bound = MagnitudeBound{tail.ratl + tail.irr, 1}; // x + y sqrt(q) <= (x+y) sqrt(q)
    }
    return rep;
}

TruncatedTraceReport generator_truncated_trace(const DiagonalAction& A, const WeilPolynomial& P,
                                               SignMode mode) {
    check_binding(A.context, P);
    if (A.context.classifying)
        fail(ErrorCode::InvalidArgument, "generator-truncated trace needs the moduli-stack context");
    TruncatedTraceReport rep;
    rep.sign = mode;
    std::size_t two_g = 2 * P.g;

    ScalarSum a_sym = ScalarSum::zero(), f_sym = ScalarSum::zero();
    bool a_rat = true, f_rat = true;
    Rat a_val(0), f_val(0);
    for (std::size_t gi = 0; gi < A.gens.size(); ++gi) {
        const GeneratorSpec& gen = A.gens[gi];
        const ScalarMonomial& evm = A.eigenvalues[gi];
        if (gen.kind == GenKind::a) {
            a_sym = sum_add(a_sym, ScalarSum(evm));
            if (monomial_is_rational(evm, P.q))
                a_val += monomial_rational_value(evm, P.q);
            else
                a_rat = false;
        } else if (gen.kind == GenKind::f) {
            f_sym = sum_add(f_sym, ScalarSum(evm));
            if (monomial_is_rational(evm, P.q))
                f_val += monomial_rational_value(evm, P.q);
            else
                f_rat = false;
        }
    }
    rep.a_symbolic = a_sym;
    rep.f_symbolic = f_sym;
    if (a_rat)
        rep.a_part = a_val;
    if (f_rat)
        rep.f_part = f_val;

    // exterior part: prod_{i,j} (1 -/+ beta_ij) - 1, factored per family
    bool ext_rat = true;
    Rat ext_prod(1);
    MagnitudeBound sigma{Rat(0), 0};
    bool have_sigma = false;
    if (two_g > 0) {
        for (const BFamily& fam : b_families(A)) {
            if (!monomial_is_rational(fam.coef, P.q)) {
                ext_rat = false;
                continue;
            }
            Rat c = monomial_rational_value(fam.coef, P.q);
            if (mode == SignMode::Unsigned)
                c = -c; // prod (1 + beta) = prod (1 - (-c) lambda^e)
            ext_prod *= lambda_power_product(P, fam.lambda_exp, c);
            for (const auto& beta : fam.eigenvalues) {
                MagnitudeBound m = monomial_magnitude(beta);
                if (!have_sigma || m.cmp(sigma, P.q) > 0) {
                    sigma = m;
                    have_sigma = true;
                }
            }
        }
    }
    if (ext_rat)
        rep.exterior_part = (two_g > 0) ? ext_prod - 1 : Rat(0);
    if (rep.a_part && rep.f_part && rep.exterior_part)
        rep.value = *rep.a_part + *rep.f_part + *rep.exterior_part;

    // (1 + sigma)^{#b} - 1 bounds the exterior part
    SqrtQ bound = SqrtQ::one(P.q);
    if (have_sigma) {
        SqrtQ base = SqrtQ::one(P.q) + SqrtQ::q_power(sigma.coef, sigma.halves, P.q);
        std::size_t nb = two_g * A.context.group.rank;
        for (std::size_t i = 0; i < nb; ++i)
            bound = bound * base;
    }
    rep.exterior_bound = bound - SqrtQ::one(P.q);
    return rep;
}

Rat behrend_mass(const GroupData& G, const WeilPolynomial& P, const PrimePower& q) {
    DiagonalAction frob = base_action(FrobeniusKind::AbsoluteArithmetic, G, P.g, q);
    TraceReport rep = closed_form_trace(frob, P);
    if (!rep.mass)
        fail(ErrorCode::DomainError, "Behrend mass undefined: the Frobenius trace does not converge "
                                     "to a rational value here");
    return *rep.mass;
}

} // namespace frobun
