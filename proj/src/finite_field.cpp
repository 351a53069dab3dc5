#include "frobun/finite_field.hpp"

#include <algorithm>

namespace frobun {

namespace {

constexpr unsigned long kMaxFieldSize = 1ul << 21;

std::vector<unsigned long> decode(unsigned long code, unsigned long p, unsigned k) {
    std::vector<unsigned long> d(k);
    for (unsigned i = 0; i < k; ++i) {
        d[i] = code % p;
        code /= p;
    }
    return d;
}

// polynomial remainder a mod m over F_p, both coefficient vectors (low first)
std::vector<unsigned long> poly_mod(std::vector<unsigned long> a, const std::vector<unsigned long>& m,
                                    unsigned long p) {
    std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        unsigned long lead = a.back();
        std::size_t shift = a.size() - 1 - dm;
        if (lead != 0) {
            for (std::size_t i = 0; i <= dm; ++i) {
                unsigned long t = (m[i] * lead) % p;
                a[shift + i] = (a[shift + i] + p - t) % p;
            }
        }
        a.pop_back();
    }
    return a;
}

std::vector<unsigned long> poly_mul(const std::vector<unsigned long>& a, const std::vector<unsigned long>& b,
                                    unsigned long p) {
    std::vector<unsigned long> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    return c;
}

bool divides(const std::vector<unsigned long>& d, std::vector<unsigned long> a, unsigned long p) {
    a = poly_mod(std::move(a), d, p);
    return std::all_of(a.begin(), a.end(), [](unsigned long c) { return c == 0; });
}

} // namespace

std::vector<unsigned long> find_irreducible(unsigned long p, unsigned k) {
    if (k == 1)
        return {0, 1}; // x itself; unused (prime field)
    Int total;
    mpz_ui_pow_ui(total.get_mpz_t(), p, k);
    for (unsigned long code = 0; Int(code) < total; ++code) {
        std::vector<unsigned long> f = decode(code, p, k);
        f.push_back(1); // monic
        // trial division by all monic polynomials of degree 1..k/2
        bool irred = true;
        for (unsigned d = 1; irred && 2 * d <= k; ++d) {
            unsigned long dn = 1;
            for (unsigned i = 0; i < d; ++i)
                dn *= p;
            for (unsigned long c = 0; c < dn && irred; ++c) {
                std::vector<unsigned long> g = decode(c, p, d);
                g.push_back(1);
                if (divides(g, f, p))
                    irred = false;
            }
        }
        if (irred)
            return f;
    }
    fail(ErrorCode::Internal, "no irreducible polynomial found");
}

FiniteField::FiniteField(unsigned long p, unsigned k) : p_(p), k_(k) {
    PrimePower pp = prime_power_from_value(p); // validates primality
    if (pp.s != 1)
        fail(ErrorCode::InvalidArgument, "field characteristic must be prime");
    if (k < 1)
        fail(ErrorCode::InvalidArgument, "field degree must be >= 1");
    Int nz;
    mpz_ui_pow_ui(nz.get_mpz_t(), p, k);
    if (nz > kMaxFieldSize)
        fail(ErrorCode::DomainError, "field size " + nz.get_str() + " exceeds enumeration cap");
    n_ = nz.get_ui();
    modulus_ = find_irreducible(p, k);

    // log/exp tables over a generator
    log_.assign(n_, -1);
    exp_.assign(n_ - 1, 0);
    for (unsigned long cand = 1; cand < n_; ++cand) {
        if (k_ == 1 && cand == 0)
            continue;
        // walk powers of cand; it generates iff the walk has length n-1
        log_.assign(n_, -1);
        unsigned long x = 1;
        unsigned long len = 0;
        while (log_[x] < 0) {
            log_[x] = static_cast<long>(len);
            exp_[len] = x;
            ++len;
            x = polymul_mod(x, cand);
            if (len == n_ - 1)
                break;
        }
        if (len == n_ - 1 && x == 1) {
            gen_ = cand;
            return;
        }
    }
    fail(ErrorCode::Internal, "no generator found");
}

unsigned long FiniteField::polymul_mod(unsigned long a, unsigned long b) const {
    if (k_ == 1)
        return (a * b) % p_;
    auto da = decode(a, p_, k_);
    auto db = decode(b, p_, k_);
    auto c = poly_mod(poly_mul(da, db, p_), modulus_, p_);
    unsigned long code = 0, mult = 1;
    for (unsigned i = 0; i < k_; ++i) {
        if (i < c.size())
            code += c[i] * mult;
        mult *= p_;
    }
    return code;
}

unsigned long FiniteField::add(unsigned long a, unsigned long b) const {
    if (k_ == 1)
        return (a + b) % p_;
    unsigned long r = 0, mult = 1;
    for (unsigned i = 0; i < k_; ++i) {
        r += ((a % p_ + b % p_) % p_) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

unsigned long FiniteField::neg(unsigned long a) const {
    if (k_ == 1)
        return (p_ - a) % p_;
    unsigned long r = 0, mult = 1;
    for (unsigned i = 0; i < k_; ++i) {
        r += ((p_ - a % p_) % p_) * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

unsigned long FiniteField::sub(unsigned long a, unsigned long b) const { return add(a, neg(b)); }

unsigned long FiniteField::mul(unsigned long a, unsigned long b) const {
    if (a == 0 || b == 0)
        return 0;
    unsigned long e = static_cast<unsigned long>(log_[a]) + static_cast<unsigned long>(log_[b]);
    if (e >= n_ - 1)
        e -= n_ - 1;
    return exp_[e];
}

unsigned long FiniteField::inv(unsigned long a) const {
    if (a == 0)
        fail(ErrorCode::DomainError, "division by zero in finite field");
    unsigned long e = (n_ - 1 - static_cast<unsigned long>(log_[a])) % (n_ - 1);
    return exp_[e];
}

unsigned long FiniteField::pow(unsigned long a, long e) const {
    if (a == 0) {
        if (e <= 0)
            fail(ErrorCode::DomainError, "0^e undefined for e <= 0");
        return 0;
    }
    long m = static_cast<long>(n_ - 1);
    long le = (static_cast<long>(log_[a]) * (e % m)) % m;
    if (le < 0)
        le += m;
    return exp_[static_cast<unsigned long>(le)];
}

unsigned long FiniteField::from_int(long c) const {
    long r = c % static_cast<long>(p_);
    if (r < 0)
        r += static_cast<long>(p_);
    return static_cast<unsigned long>(r);
}

int FiniteField::chi(unsigned long a) const {
    if (p_ == 2)
        fail(ErrorCode::DomainError, "quadratic character undefined in characteristic 2");
    if (a == 0)
        return 0;
    return log_[a] % 2 == 0 ? 1 : -1;
}

} // namespace frobun
