#include "frobun/scalar.hpp"

#include <algorithm>
#include <numeric>

namespace frobun {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

void check_same_context(const ScalarMonomial& a, const ScalarMonomial& b) {
    if (a.lam.size() != b.lam.size())
        fail(ErrorCode::ContextError, "scalar context mismatch: lambda vectors of length " +
                                          std::to_string(a.lam.size()) + " vs " + std::to_string(b.lam.size()));
}

// three-way key comparison per the normalization ordering: (lam, qexp, zeta)
int key_cmp(const ScalarMonomial& a, const ScalarMonomial& b) {
    if (a.lam != b.lam)
        return a.lam < b.lam ? -1 : 1;
    if (a.qexp.halves != b.qexp.halves)
        return a.qexp.halves < b.qexp.halves ? -1 : 1;
    if (a.zeta.order != b.zeta.order)
        return a.zeta.order < b.zeta.order ? -1 : 1;
    if (a.zeta.exponent != b.zeta.exponent)
        return a.zeta.exponent < b.zeta.exponent ? -1 : 1;
    return 0;
}

} // namespace

RootOfUnity RootOfUnity::inverse() const {
    if (order <= 0)
        fail(ErrorCode::InvalidArgument, "root of unity order must be positive");
    long e = exponent % order;
    if (e < 0)
        e += order;
    return {order, (order - e) % order};
}

std::complex<double> RootOfUnity::numeric() const {
    double t = kTau * static_cast<double>(exponent) / static_cast<double>(order);
    return {std::cos(t), std::sin(t)};
}

// Unique representation of sign * root: the returned order is 1, odd >= 3,
// or divisible by 4 with exponent < order/2; -1 and orders 2 mod 4 fold a
// sign into the coefficient. Without this, e.g. zeta(6,1) and -zeta(3,2)
// would be distinct keys for the same value.
RootOfUnity normalize_root(RootOfUnity z, int& sign_out) {
    sign_out = 1;
    if (z.order <= 0)
        fail(ErrorCode::InvalidArgument, "root of unity order must be positive");
    z.exponent %= z.order;
    if (z.exponent < 0)
        z.exponent += z.order;
    if (z.exponent == 0)
        return RootOfUnity::one();
    long g = std::gcd(z.exponent, z.order);
    z.order /= g;
    z.exponent /= g;
    if (z.order == 1)
        return z;
    if (z.order == 2) { // value -1
        sign_out = -1;
        return RootOfUnity::one();
    }
    if (z.order % 4 == 2) {
        // negate: -zeta_n^e = zeta_n^{e + n/2} has odd order n/2
        sign_out = -1;
        z.exponent = (z.exponent + z.order / 2) % z.order;
        g = std::gcd(z.exponent, z.order);
        z.order /= g;
        z.exponent /= g;
        return z;
    }
    if (z.order % 4 == 0 && z.exponent > z.order / 2) {
        sign_out = -1;
        z.exponent -= z.order / 2;
    }
    return z;
}

RootOfUnity root_mul(const RootOfUnity& a, const RootOfUnity& b, int& sign_out) {
    long l = std::lcm(a.order, b.order);
    RootOfUnity z{l, a.exponent * (l / a.order) + b.exponent * (l / b.order)};
    return normalize_root(z, sign_out);
}

ScalarMonomial ScalarMonomial::one(std::size_t two_g) {
    ScalarMonomial m;
    m.lam.assign(two_g, 0);
    return m;
}

ScalarMonomial ScalarMonomial::rational(const Rat& c, std::size_t two_g) {
    ScalarMonomial m = one(two_g);
    m.coef = c;
    m.normalize();
    return m;
}

ScalarMonomial ScalarMonomial::q_power(long halves, std::size_t two_g) {
    ScalarMonomial m = one(two_g);
    m.qexp.halves = halves;
    return m;
}

ScalarMonomial ScalarMonomial::lambda(std::size_t j, long e, std::size_t two_g) {
    if (j < 1 || j > two_g)
        fail(ErrorCode::InvalidArgument, "lambda index out of range");
    ScalarMonomial m = one(two_g);
    m.lam[j - 1] = e;
    return m;
}

void ScalarMonomial::normalize() {
    coef.canonicalize();
    if (coef == 0)
        fail(ErrorCode::InvalidArgument, "monomial coefficient must be nonzero");
    int sign = 1;
    zeta = normalize_root(zeta, sign);
    if (sign < 0)
        coef = -coef;
}

bool ScalarMonomial::is_one() const {
    return coef == 1 && zeta.is_one() && qexp.halves == 0 &&
           std::all_of(lam.begin(), lam.end(), [](long e) { return e == 0; });
}

ScalarMonomial monomial_mul(const ScalarMonomial& a, const ScalarMonomial& b) {
    check_same_context(a, b);
    ScalarMonomial m;
    m.coef = a.coef * b.coef;
    int sign = 1;
    m.zeta = root_mul(a.zeta, b.zeta, sign);
    if (sign < 0)
        m.coef = -m.coef;
    m.qexp.halves = a.qexp.halves + b.qexp.halves;
    m.lam.resize(a.lam.size());
    for (std::size_t i = 0; i < m.lam.size(); ++i)
        m.lam[i] = a.lam[i] + b.lam[i];
    m.normalize();
    return m;
}

ScalarMonomial monomial_inverse(const ScalarMonomial& m) {
    ScalarMonomial r;
    r.coef = 1 / m.coef;
    r.zeta = m.zeta.inverse();
    r.qexp.halves = -m.qexp.halves;
    r.lam.resize(m.lam.size());
    for (std::size_t i = 0; i < m.lam.size(); ++i)
        r.lam[i] = -m.lam[i];
    r.normalize();
    return r;
}

ScalarMonomial monomial_pow(const ScalarMonomial& m, long n) {
    if (n < 0)
        return monomial_pow(monomial_inverse(m), -n);
    ScalarMonomial r = ScalarMonomial::one(m.lam.size());
    ScalarMonomial base = m;
    while (n > 0) {
        if (n & 1)
            r = monomial_mul(r, base);
        n >>= 1;
        if (n)
            base = monomial_mul(base, base);
    }
    return r;
}

int MagnitudeBound::cmp_one(const PrimePower& q) const {
    if (coef == 0)
        return -1;
    // coef^2 * q^halves vs 1, both exact rationals
    Rat lhs = coef * coef * int_pow(q.p, static_cast<long>(q.s) * halves);
    return ::cmp(lhs, Rat(1));
}

int MagnitudeBound::cmp(const MagnitudeBound& o, const PrimePower& q) const {
    if (coef == 0 || o.coef == 0)
        return ::cmp(coef, o.coef);
    Rat lhs = coef * coef * int_pow(q.p, static_cast<long>(q.s) * halves);
    Rat rhs = o.coef * o.coef * int_pow(q.p, static_cast<long>(q.s) * o.halves);
    return ::cmp(lhs, rhs);
}

std::string MagnitudeBound::str() const {
    if (coef == 0)
        return "0";
    if (halves == 0)
        return rat_str(coef);
    if (coef == 1)
        return q_pow_str(halves);
    return rat_str(coef) + " * " + q_pow_str(halves);
}

double MagnitudeBound::numeric(const PrimePower& q) const {
    return coef.get_d() * q_half_pow_numeric(q, halves);
}

MagnitudeBound monomial_magnitude(const ScalarMonomial& m) {
    long h = m.qexp.halves;
    for (long e : m.lam)
        h += e; // |lambda_j| = q^{1/2}
    return {abs(m.coef), h};
}

ScalarSum::ScalarSum(ScalarMonomial m) {
    m.normalize();
    terms.push_back(std::move(m));
}

ScalarSum ScalarSum::negate() const {
    ScalarSum r = *this;
    for (auto& t : r.terms)
        t.coef = -t.coef;
    return r;
}

ScalarSum sum_add(const ScalarSum& a, const ScalarSum& b) {
    if (!a.terms.empty() && !b.terms.empty())
        check_same_context(a.terms.front(), b.terms.front());
    ScalarSum r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        int c;
        if (i == a.terms.size())
            c = 1;
        else if (j == b.terms.size())
            c = -1;
        else
            c = key_cmp(a.terms[i], b.terms[j]);
        if (c < 0) {
            r.terms.push_back(a.terms[i++]);
        } else if (c > 0) {
            r.terms.push_back(b.terms[j++]);
        } else {
            ScalarMonomial t = a.terms[i++];
            t.coef += b.terms[j++].coef;
            t.coef.canonicalize();
            if (t.coef != 0)
                r.terms.push_back(std::move(t));
        }
    }
    return r;
}

ScalarSum sum_sub(const ScalarSum& a, const ScalarSum& b) { return sum_add(a, b.negate()); }

ScalarSum sum_scale(const ScalarSum& a, const ScalarMonomial& m) {
    ScalarSum r;
    r.terms.reserve(a.terms.size());
    for (const auto& t : a.terms)
        r.terms.push_back(monomial_mul(t, m));
    std::sort(r.terms.begin(), r.terms.end(),
              [](const ScalarMonomial& x, const ScalarMonomial& y) { return key_cmp(x, y) < 0; });
    return r;
}

ScalarSum sum_mul(const ScalarSum& a, const ScalarSum& b) {
    ScalarSum r;
    for (const auto& t : b.terms)
        r = sum_add(r, sum_scale(a, t));
    return r;
}

MagnitudeBound magnitude_bound(const ScalarSum& s) {
    if (s.terms.empty())
        return {Rat(0), 0};
    Rat total(0);
    long hmax = 0;
    bool first = true;
    for (const auto& t : s.terms) {
        MagnitudeBound m = monomial_magnitude(t);
        total += m.coef;
        if (first || m.halves > hmax)
            hmax = m.halves;
        first = false;
    }
    return {total, hmax};
}

std::complex<double> evaluate_numeric(const ScalarMonomial& m, const PrimePower& q,
                                      const std::vector<std::complex<double>>& lambda_values) {
    if (lambda_values.size() != m.lam.size())
        fail(ErrorCode::ContextError, "lambda binding has length " + std::to_string(lambda_values.size()) +
                                          ", monomial expects " + std::to_string(m.lam.size()));
    std::complex<double> v(m.coef.get_d(), 0.0);
    v *= m.zeta.numeric();
    v *= q_half_pow_numeric(q, m.qexp.halves);
    for (std::size_t i = 0; i < m.lam.size(); ++i) {
        long e = m.lam[i];
        if (e == 0)
            continue;
        std::complex<double> le = std::pow(lambda_values[i], static_cast<double>(e));
        v *= le;
    }
    return v;
}

std::complex<double> evaluate_numeric(const ScalarSum& s, const PrimePower& q,
                                      const std::vector<std::complex<double>>& lambda_values) {
    std::complex<double> v(0.0, 0.0);
    for (const auto& t : s.terms)
        v += evaluate_numeric(t, q, lambda_values);
    return v;
}

bool monomial_is_rational(const ScalarMonomial& m, const PrimePower& q) {
    if (!m.zeta.is_one())
        return false;
    for (long e : m.lam)
        if (e != 0)
            return false;
    return q_half_pow_is_rational(q, m.qexp.halves);
}

Rat monomial_rational_value(const ScalarMonomial& m, const PrimePower& q) {
    if (!monomial_is_rational(m, q))
        fail(ErrorCode::DomainError, "monomial " + monomial_str(m) + " has no exact rational value");
    return m.coef * q_half_pow(q, m.qexp.halves);
}

std::string monomial_str(const ScalarMonomial& m) {
    std::string s = rat_str(m.coef);
    if (!m.zeta.is_one())
        s += " * zeta(" + std::to_string(m.zeta.order) + "," + std::to_string(m.zeta.exponent) + ")";
    if (m.qexp.halves != 0)
        s += " * " + q_pow_str(m.qexp.halves);
    for (std::size_t i = 0; i < m.lam.size(); ++i) {
        long e = m.lam[i];
        if (e == 0)
            continue;
        s += " * L" + std::to_string(i + 1);
        if (e != 1)
            s += "^" + std::to_string(e);
    }
    return s;
}

std::string sum_str(const ScalarSum& s) {
    if (s.terms.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < s.terms.size(); ++i) {
        if (i)
            out += " + ";
        out += monomial_str(s.terms[i]);
    }
    return out;
}

} // namespace frobun
