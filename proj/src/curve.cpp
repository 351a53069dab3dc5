#include "frobun/curve.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <cctype>
#include <thread>

#include "frobun/finite_field.hpp"

namespace frobun {

namespace {

constexpr double kEnumCap = 1e8;
constexpr double kWeilTol = 1e-9;

struct TermParser {
    const std::string& s;
    std::size_t pos = 0;

    explicit TermParser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && (std::isspace(static_cast<unsigned char>(s[pos])) || s[pos] == '*'))
            ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    [[noreturn]] void error(const std::string& msg) {
        fail(ErrorCode::InvalidArgument, "model parse error at position " + std::to_string(pos) + ": " + msg);
    }
    long parse_sign() {
        skip_ws();
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-'))
            return s[pos++] == '-' ? -1 : 1;
        return 1;
    }
    long parse_number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (start == pos)
            error("expected a number");
        return std::stol(s.substr(start, pos - start));
    }
    bool peek_digit() {
        skip_ws();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }
    bool peek_var(const std::string& vars) {
        skip_ws();
        return pos < s.size() && vars.find(s[pos]) != std::string::npos;
    }
    // variable with optional exponent: x, x2, x^2
    std::pair<char, unsigned> parse_var() {
        skip_ws();
        char v = s[pos++];
        if (pos < s.size() && s[pos] == '^')
            ++pos;
        unsigned e = 1;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            e = static_cast<unsigned>(parse_number());
        return {v, e};
    }
};

std::vector<long> parse_univariate(const std::string& text) {
    TermParser tp(text);
    std::vector<long> coeffs;
    auto bump = [&](unsigned e, long c) {
        if (coeffs.size() <= e)
            coeffs.resize(e + 1, 0);
        coeffs[e] += c;
    };
    while (!tp.done()) {
        long sign = tp.parse_sign();
        long coef = 1;
        bool have_coef = false;
        if (tp.peek_digit()) {
            coef = tp.parse_number();
            have_coef = true;
        }
        unsigned exp = 0;
        if (tp.peek_var("x")) {
            auto [v, e] = tp.parse_var();
            (void)v;
            exp = e;
        } else if (!have_coef) {
            tp.error("expected coefficient or 'x'");
        }
        bump(exp, sign * coef);
    }
    while (coeffs.size() > 1 && coeffs.back() == 0)
        coeffs.pop_back();
    return coeffs;
}

PlaneModel parse_plane(const std::string& text) {
    TermParser tp(text);
    PlaneModel m;
    while (!tp.done()) {
        long sign = tp.parse_sign();
        long coef = 1;
        bool have_coef = false;
        if (tp.peek_digit()) {
            coef = tp.parse_number();
            have_coef = true;
        }
        std::array<unsigned, 3> e{0, 0, 0};
        bool have_var = false;
        while (tp.peek_var("xyz")) {
            auto [v, p] = tp.parse_var();
            e[v == 'x' ? 0 : v == 'y' ? 1 : 2] += p;
            have_var = true;
        }
        if (!have_coef && !have_var)
            tp.error("expected a term");
        m.monomials[e] += sign * coef;
    }
    for (auto it = m.monomials.begin(); it != m.monomials.end();)
        it = it->second == 0 ? m.monomials.erase(it) : std::next(it);
    if (m.monomials.empty())
        fail(ErrorCode::InvalidArgument, "plane model is the zero polynomial");
    unsigned d = 0;
    bool first = true;
    for (const auto& [exps, c] : m.monomials) {
        unsigned total = exps[0] + exps[1] + exps[2];
        if (first)
            d = total;
        else if (total != d)
            fail(ErrorCode::InvalidArgument, "plane model is not homogeneous");
        first = false;
    }
    if (d < 1)
        fail(ErrorCode::InvalidArgument, "plane model must have positive degree");
    return m;
}

unsigned long eval_poly(const FiniteField& F, const std::vector<unsigned long>& coeffs, unsigned long x) {
    unsigned long v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;)
        v = F.add(F.mul(v, x), coeffs[i]);
    return v;
}

} // namespace

unsigned HyperellipticModel::genus() const {
    return (static_cast<unsigned>(f.size()) - 2) / 2; // deg f odd: (deg-1)/2
}

unsigned PlaneModel::degree() const {
    const auto& e = monomials.begin()->first;
    return e[0] + e[1] + e[2];
}

unsigned PlaneModel::genus() const {
    unsigned d = degree();
    return (d - 1) * (d - 2) / 2;
}

unsigned CurveModel::genus() const {
    return std::visit([](const auto& m) { return m.genus(); }, model);
}

CurveModel parse_curve_model(const std::string& text, const PrimePower& q) {
    CurveModel c;
    c.q = q;
    if (text.rfind("plane:", 0) == 0) {
        PlaneModel m = parse_plane(text.substr(6));
        if (m.genus() > 4)
            fail(ErrorCode::InvalidArgument, "plane model genus " + std::to_string(m.genus()) +
                                                 " exceeds the supported bound 4");
        c.model = std::move(m);
        return c;
    }
    std::size_t eq = text.find('=');
    std::string lhs = eq == std::string::npos ? "" : text.substr(0, eq);
    lhs.erase(std::remove_if(lhs.begin(), lhs.end(),
                             [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); }),
              lhs.end());
    if (eq == std::string::npos || (lhs != "y2" && lhs != "y^2"))
        fail(ErrorCode::InvalidArgument, "model must be 'y2=<poly in x>' or 'plane:<homogeneous poly>'");
    if (q.p == 2)
        fail(ErrorCode::InvalidArgument, "hyperelliptic models require odd characteristic");
    HyperellipticModel m;
    m.f = parse_univariate(text.substr(eq + 1));
    std::size_t deg = m.f.size() - 1;
    if (deg != 3 && deg != 5 && deg != 7)
        fail(ErrorCode::InvalidArgument, "y2=f(x) needs deg f in {3,5,7}, got " + std::to_string(deg));
    if (m.f.back() % static_cast<long>(q.p) == 0)
        fail(ErrorCode::InvalidArgument, "leading coefficient of f vanishes mod p");
    c.model = std::move(m);
    return c;
}

namespace {

Int count_hyperelliptic(const HyperellipticModel& m, const PrimePower& q, unsigned k, unsigned threads) {
    FiniteField F(q.p, q.s * k);
    unsigned long N = F.size();
    if (static_cast<double>(N) > kEnumCap)
        fail(ErrorCode::DomainError, "enumeration cap exceeded");
    std::vector<unsigned long> f(m.f.size()), fp(m.f.size() > 1 ? m.f.size() - 1 : 1, 0);
    for (std::size_t i = 0; i < m.f.size(); ++i)
        f[i] = F.from_int(m.f[i]);
    for (std::size_t i = 1; i < m.f.size(); ++i)
        fp[i - 1] = F.mul(F.from_int(static_cast<long>(i)), f[i]);

    unsigned nthreads = std::max(1u, threads);
    std::vector<Int> partial(nthreads, Int(0));
    std::atomic<bool> singular{false};
    auto worker = [&](unsigned tid) {
        long local = 0;
        for (unsigned long x = tid; x < N; x += nthreads) {
            unsigned long t = eval_poly(F, f, x);
            if (t == 0) {
                if (eval_poly(F, fp, x) == 0)
                    singular = true;
                local += 1;
            } else {
                local += 1 + F.chi(t);
            }
        }
        partial[tid] = local;
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t)
            pool.emplace_back(worker, t);
        for (auto& th : pool)
            th.join();
    }
    if (singular)
        fail(ErrorCode::DomainError, "singular curve: y = 0 point with f(x) = f'(x) = 0");
    Int total = 1; // the point at infinity of the odd-degree model
    for (const auto& c : partial)
        total += c;
    return total;
}

Int count_plane(const PlaneModel& m, const PrimePower& q, unsigned k, unsigned threads) {
    FiniteField F(q.p, q.s * k);
    unsigned long N = F.size();
    if (static_cast<double>(N) * static_cast<double>(N) > kEnumCap)
        fail(ErrorCode::DomainError, "enumeration cap exceeded");

    struct Term {
        std::array<unsigned, 3> e;
        unsigned long c;
    };
    std::vector<Term> terms, dx, dy, dz;
    for (const auto& [e, c] : m.monomials) {
        unsigned long cc = F.from_int(c);
        if (cc != 0)
            terms.push_back({e, cc});
        auto deriv = [&](unsigned idx, std::vector<Term>& out) {
            if (e[idx] == 0)
                return;
            unsigned long dc = F.mul(F.from_int(static_cast<long>(e[idx])), F.from_int(c));
            if (dc == 0)
                return;
            auto de = e;
            de[idx] -= 1;
            out.push_back({de, dc});
        };
        deriv(0, dx);
        deriv(1, dy);
        deriv(2, dz);
    }
    auto eval = [&](const std::vector<Term>& ts, unsigned long x, unsigned long y, unsigned long z) {
        unsigned long v = 0;
        for (const auto& t : ts) {
            unsigned long mv = t.c;
            if (t.e[0])
                mv = F.mul(mv, F.pow(x, t.e[0]));
            if (t.e[1])
                mv = F.mul(mv, F.pow(y, t.e[1]));
            if (t.e[2])
                mv = F.mul(mv, F.pow(z, t.e[2]));
            v = F.add(v, mv);
        }
        return v;
    };
    std::atomic<bool> singular{false};
    auto probe = [&](unsigned long x, unsigned long y, unsigned long z) -> long {
        if (eval(terms, x, y, z) != 0)
            return 0;
        if (eval(dx, x, y, z) == 0 && eval(dy, x, y, z) == 0 && eval(dz, x, y, z) == 0)
            singular = true;
        return 1;
    };

    unsigned nthreads = std::max(1u, threads);
    std::vector<long> partial(nthreads, 0);
    auto worker = [&](unsigned tid) {
        long local = 0;
        // chart z = 1
        for (unsigned long x = tid; x < N; x += nthreads)
            for (unsigned long y = 0; y < N; ++y)
                local += probe(x, y, 1);
        partial[tid] = local;
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t)
            pool.emplace_back(worker, t);
        for (auto& th : pool)
            th.join();
    }
    Int total = 0;
    for (long c : partial)
        total += c;
    // line at infinity: (x : 1 : 0) and (1 : 0 : 0)
    for (unsigned long x = 0; x < N; ++x)
        total += probe(x, 1, 0);
    total += probe(1, 0, 0);
    if (singular)
        fail(ErrorCode::DomainError, "singular curve: point with all partial derivatives zero");
    return total;
}

} // namespace

Int count_points(const CurveModel& curve, unsigned k, unsigned threads) {
    if (k < 1)
        fail(ErrorCode::InvalidArgument, "extension degree must be >= 1");
    return std::visit(
        [&](const auto& m) -> Int {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, HyperellipticModel>)
                return count_hyperelliptic(m, curve.q, k, threads);
            else
                return count_plane(m, curve.q, k, threads);
        },
        curve.model);
}

Rat WeilPolynomial::power_sum(long k) const {
    if (k == 0)
        return Rat(2 * static_cast<long>(g));
    if (k < 0) {
        // Weil pairing: the multiset {1/lambda_j} equals {lambda_j / q}
        Rat qk = int_pow(q.p, static_cast<long>(q.s) * (-k));
        return power_sum(-k) / qk;
    }
    // Newton: p_k = -k a_k - sum_{i=1}^{k-1} a_{k-i} p_i
    std::vector<Rat> p(static_cast<std::size_t>(k) + 1, Rat(0));
    for (long m = 1; m <= k; ++m) {
        Rat acc(0);
        if (m <= static_cast<long>(2 * g))
            acc = Rat(-m) * Rat(coeffs[static_cast<std::size_t>(m)]);
        for (long i = 1; i < m; ++i) {
            long j = m - i;
            if (j <= static_cast<long>(2 * g))
                acc -= Rat(coeffs[static_cast<std::size_t>(j)]) * p[static_cast<std::size_t>(i)];
        }
        p[static_cast<std::size_t>(m)] = acc;
    }
    return p[static_cast<std::size_t>(k)];
}

Rat WeilPolynomial::eval(const Rat& t) const {
    Rat v(0);
    for (std::size_t i = coeffs.size(); i-- > 0;)
        v = v * t + Rat(coeffs[i]);
    return v;
}

WeilPolynomial weil_numerator_from_counts(const PrimePower& q, unsigned g, const std::vector<Int>& counts) {
    if (counts.size() != g)
        fail(ErrorCode::InvalidArgument, "need exactly g = " + std::to_string(g) + " point counts");
    WeilPolynomial P;
    P.q = q;
    P.g = g;
    P.coeffs.assign(2 * g + 1, Int(0));
    P.coeffs[0] = 1;
    if (g == 0)
        return P;
    Int qv = q.value();
    std::vector<Rat> p(g + 1), e(g + 1);
    e[0] = 1;
    for (unsigned k = 1; k <= g; ++k) {
        Int qk;
        mpz_pow_ui(qk.get_mpz_t(), qv.get_mpz_t(), k);
        p[k] = Rat(qk + 1 - counts[k - 1]);
    }
    // Newton: k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
    for (unsigned k = 1; k <= g; ++k) {
        Rat acc(0);
        int sign = 1;
        for (unsigned i = 1; i <= k; ++i) {
            acc += Rat(sign) * e[k - i] * p[i];
            sign = -sign;
        }
        e[k] = acc / Rat(static_cast<long>(k));
        Rat c = (k % 2 == 0 ? e[k] : -e[k]);
        c.canonicalize();
        if (c.get_den() != 1)
            fail(ErrorCode::DomainError, "inconsistent point counts: coefficient a_" + std::to_string(k) +
                                             " = " + rat_str(c) + " is not an integer");
        P.coeffs[k] = c.get_num();
    }
    // functional equation fills the upper half
    for (unsigned i = 0; i < g; ++i) {
        Int qpow;
        mpz_pow_ui(qpow.get_mpz_t(), qv.get_mpz_t(), g - i);
        P.coeffs[2 * g - i] = qpow * P.coeffs[i];
    }
    return P;
}

WeilPolynomial weil_from_coeffs(const PrimePower& q, const std::vector<Int>& coeffs) {
    if (coeffs.empty() || coeffs.size() % 2 == 0)
        fail(ErrorCode::InvalidArgument, "Weil polynomial needs 2g+1 coefficients");
    if (coeffs[0] != 1)
        fail(ErrorCode::InvalidArgument, "Weil polynomial must have constant term 1");
    WeilPolynomial P;
    P.q = q;
    P.g = static_cast<unsigned>((coeffs.size() - 1) / 2);
    P.coeffs = coeffs;
    if (!functional_equation_check(P))
        fail(ErrorCode::InvalidArgument, "coefficients violate the functional equation a_{2g-i} = q^{g-i} a_i");
    return P;
}

WeilPolynomial weil_from_model(const CurveModel& curve, unsigned threads) {
    unsigned g = curve.genus();
    std::vector<Int> counts;
    for (unsigned k = 1; k <= g; ++k)
        counts.push_back(count_points(curve, k, threads));
    return weil_numerator_from_counts(curve.q, g, counts);
}

Int point_count_from_weil(const WeilPolynomial& P, unsigned k) {
    Rat pk = P.power_sum(static_cast<long>(k));
    pk.canonicalize();
    if (pk.get_den() != 1)
        fail(ErrorCode::Internal, "non-integer power sum");
    Int qk;
    mpz_pow_ui(qk.get_mpz_t(), P.q.value().get_mpz_t(), k);
    return qk + 1 - pk.get_num();
}

bool functional_equation_check(const WeilPolynomial& P) {
    Int qv = P.q.value();
    for (unsigned i = 0; i <= P.g; ++i) {
        Int qpow;
        mpz_pow_ui(qpow.get_mpz_t(), qv.get_mpz_t(), P.g - i);
        if (P.coeffs[2 * P.g - i] != qpow * P.coeffs[i])
            return false;
    }
    return true;
}

Rat zeta_value(const WeilPolynomial& P, long s) {
    if (s < 2)
        fail(ErrorCode::DomainError, "zeta has poles at s in {0,1}; need s >= 2");
    Rat qs = int_pow(P.q.p, -static_cast<long>(P.q.s) * s);      // q^{-s}
    Rat qs1 = int_pow(P.q.p, static_cast<long>(P.q.s) * (1 - s)); // q^{1-s}
    return P.eval(qs) / ((Rat(1) - qs) * (Rat(1) - qs1));
}

std::vector<std::complex<double>> eigenvalues_numeric(const WeilPolynomial& P) {
    unsigned n = 2 * P.g;
    if (n == 0)
        return {};
    // lambda_j are the roots of T^{2g} P(1/T) = sum_i a_i T^{2g-i} (monic)
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (unsigned i = 0; i < n; ++i) {
        // coefficient of T^i in the monic reversed polynomial is a_{2g-i}
        companion(i, n - 1) = -Rat(P.coeffs[n - i]).get_d();
        if (i + 1 < n)
            companion(i + 1, i) = 1.0;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    std::vector<std::complex<double>> roots;
    for (unsigned i = 0; i < n; ++i)
        roots.push_back(solver.eigenvalues()[i]);

    double sq = std::sqrt(P.q.value().get_d());
    for (const auto& r : roots)
        if (std::abs(std::abs(r) - sq) > kWeilTol * std::max(1.0, sq))
            fail(ErrorCode::DomainError, "not a valid Weil polynomial: |root| deviates from sqrt(q)");

    // deterministic order, Weil pairs adjacent
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real())
            return a.real() < b.real();
        return a.imag() < b.imag();
    });
    double qd = P.q.value().get_d();
    std::vector<std::complex<double>> paired;
    std::vector<bool> used(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (used[i])
            continue;
        used[i] = true;
        paired.push_back(roots[i]);
        std::size_t best = roots.size();
        double bestdev = 1e300;
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (used[j])
                continue;
            double dev = std::abs(roots[i] * roots[j] - qd);
            if (dev < bestdev) {
                bestdev = dev;
                best = j;
            }
        }
        if (best == roots.size() || bestdev > 1e-6 * std::max(1.0, qd))
            fail(ErrorCode::DomainError, "not a valid Weil polynomial: no Weil pairing partner");
        used[best] = true;
        paired.push_back(roots[best]);
    }
    return paired;
}

bool lambda_abs_check(const WeilPolynomial& P) {
    try {
        eigenvalues_numeric(P);
        return true;
    } catch (const Error&) {
        return false;
    }
}

} // namespace frobun
