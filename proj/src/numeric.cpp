#include "frobun/numeric.hpp"

#include <cmath>

namespace frobun {

Int PrimePower::value() const {
    Int v;
    mpz_ui_pow_ui(v.get_mpz_t(), p, s);
    return v;
}

PrimePower prime_power_from_value(unsigned long q) {
    if (q < 2)
        fail(ErrorCode::InvalidArgument, "q must be >= 2");
    Int qz;
    mpz_set_ui(qz.get_mpz_t(), q);
    if (mpz_probab_prime_p(qz.get_mpz_t(), 30) != 0)
        return PrimePower{q, 1};
    for (unsigned s = 2; s < 64; ++s) {
        Int r;
        mpz_root(r.get_mpz_t(), qz.get_mpz_t(), s);
        if (r < 2)
            break;
        Int back;
        mpz_pow_ui(back.get_mpz_t(), r.get_mpz_t(), s);
        if (back == qz && mpz_probab_prime_p(r.get_mpz_t(), 30) != 0)
            return PrimePower{r.get_ui(), s};
    }
    fail(ErrorCode::InvalidArgument, "q = " + std::to_string(q) + " is not a prime power");
}

Rat int_pow(unsigned long base, long e) {
    Int b;
    mpz_ui_pow_ui(b.get_mpz_t(), base, static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0)
        return Rat(b);
    Rat r(1);
    r /= Rat(b);
    return r;
}

bool q_half_pow_is_rational(const PrimePower& q, long halves) {
    return (static_cast<long>(q.s) * halves) % 2 == 0;
}

Rat q_half_pow(const PrimePower& q, long halves) {
    long e = static_cast<long>(q.s) * halves;
    if (e % 2 != 0)
        fail(ErrorCode::DomainError, "q^(" + std::to_string(halves) + "/2) is irrational for q = p^" + std::to_string(q.s));
    return int_pow(q.p, e / 2);
}

double q_half_pow_numeric(const PrimePower& q, long halves) {
    return std::pow(static_cast<double>(q.value().get_d()), static_cast<double>(halves) / 2.0);
}

SqrtQ::SqrtQ(Rat r, Rat i, PrimePower qq) : ratl(std::move(r)), irr(std::move(i)), q(qq) {
    if (q.s % 2 == 0 && irr != 0) {
        // sqrt(q) = p^{s/2} is rational; fold it in
        ratl += irr * int_pow(q.p, static_cast<long>(q.s / 2));
        irr = 0;
    }
}

SqrtQ SqrtQ::q_power(const Rat& coef, long halves, const PrimePower& q) {
    if (q_half_pow_is_rational(q, halves))
        return SqrtQ(coef * q_half_pow(q, halves), Rat(0), q);
    // halves odd (s odd): q^{halves/2} = q^{(halves-1)/2} * sqrt(q)
    return SqrtQ(Rat(0), coef * q_half_pow(q, halves - 1), q);
}

SqrtQ SqrtQ::operator+(const SqrtQ& o) const {
    if (!(q == o.q))
        fail(ErrorCode::ContextError, "SqrtQ: mixed q");
    return SqrtQ(ratl + o.ratl, irr + o.irr, q);
}

SqrtQ SqrtQ::operator-(const SqrtQ& o) const {
    if (!(q == o.q))
        fail(ErrorCode::ContextError, "SqrtQ: mixed q");
    return SqrtQ(ratl - o.ratl, irr - o.irr, q);
}

SqrtQ SqrtQ::operator*(const SqrtQ& o) const {
    if (!(q == o.q))
        fail(ErrorCode::ContextError, "SqrtQ: mixed q");
    Rat qr(q.value());
    return SqrtQ(ratl * o.ratl + irr * o.irr * qr, ratl * o.irr + irr * o.ratl, q);
}

SqrtQ SqrtQ::inverse() const {
    Rat qr(q.value());
    Rat norm = ratl * ratl - irr * irr * qr;
    if (norm == 0)
        fail(ErrorCode::DomainError, "SqrtQ: not invertible");
    return SqrtQ(ratl / norm, -irr / norm, q);
}

int SqrtQ::sign() const {
    int sa = sgn(ratl), sb = sgn(irr);
    if (sb == 0)
        return sa;
    if (sa == 0)
        return sb;
    if (sa == sb)
        return sa;
    // opposite signs: compare |ratl| with |irr|*sqrt(q)
    Rat lhs = ratl * ratl, rhs = irr * irr * Rat(q.value());
    int c = cmp(lhs, rhs);
    if (c == 0)
        return 0;
    return c > 0 ? sa : sb;
}

double SqrtQ::to_double() const {
    return ratl.get_d() + irr.get_d() * std::sqrt(q.value().get_d());
}

std::string SqrtQ::str() const {
    if (irr == 0)
        return rat_str(ratl);
    std::string s = rat_str(irr) + "*sqrt(" + q.value().get_str() + ")";
    if (ratl == 0)
        return s;
    return rat_str(ratl) + " + " + s;
}

std::string rat_str(const Rat& r) {
    Rat c(r);
    c.canonicalize();
    return c.get_str();
}

std::string q_pow_str(long halves) {
    if (halves % 2 == 0)
        return "q^" + std::to_string(halves / 2);
    return "q^(" + std::to_string(halves) + "/2)";
}

std::complex<double> rat_to_complex(const Rat& r) { return {r.get_d(), 0.0}; }

} // namespace frobun
