#include "valvol/rational.hpp"

#include <ostream>

#include "valvol/errors.hpp"

namespace valvol {

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw Error("Rational: zero denominator");
    mpq_init(q_);
    mpz_set(mpq_numref(q_), num.raw());
    mpz_set(mpq_denref(q_), den.raw());
    mpq_canonicalize(q_);
}

Rational Rational::parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (fp.empty()) throw Error("Rational: cannot parse '" + std::string(s) + "'");
        bool neg = !ip.empty() && ip.front() == '-';
        BigInt whole(ip.empty() || ip == "-" ? std::string_view("0") : ip);
        BigInt frac(fp);
        if (frac.sign() < 0) throw Error("Rational: cannot parse '" + std::string(s) + "'");
        BigInt scale = BigInt::pow(10, static_cast<unsigned long>(fp.size()));
        BigInt num = whole.abs() * scale + frac;
        if (neg || whole.sign() < 0) num = -num;
        return Rational(num, scale);
    }
    return Rational(BigInt(s));
}

BigInt Rational::numerator() const {
    BigInt r;
    mpz_set(r.raw(), mpq_numref(q_));
    return r;
}

BigInt Rational::denominator() const {
    BigInt r;
    mpz_set(r.raw(), mpq_denref(q_));
    return r;
}

bool Rational::is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
}

Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
}

Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error("Rational: division by zero");
    Rational r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
}

Rational operator-(const Rational& a) {
    Rational r;
    mpq_neg(r.q_, a.q_);
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    *this = *this / o;
    return *this;
}

Rational Rational::abs() const {
    Rational r;
    mpq_abs(r.q_, q_);
    return r;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw Error("Rational: reciprocal of zero");
    Rational r;
    mpq_inv(r.q_, q_);
    return r;
}

Rational Rational::pow_int(long e) const {
    if (e == 0) return Rational(1);
    const Rational base = e > 0 ? *this : reciprocal();
    unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Rational r;
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), k);
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), k);
    return r;
}

BigInt Rational::floor() const { return BigInt::fdiv_q(numerator(), denominator()); }

BigInt Rational::ceil() const { return BigInt::cdiv_q(numerator(), denominator()); }

std::string Rational::to_string() const {
    if (is_integer()) return numerator().to_string();
    return numerator().to_string() + "/" + denominator().to_string();
}

std::string Rational::to_decimal(std::size_t frac_digits) const {
    BigInt scale = BigInt::pow(10, static_cast<unsigned long>(frac_digits));
    // Truncate toward zero so -22/7 and 22/7 print symmetrically.
    BigInt num = numerator().abs() * scale;
    BigInt shifted = BigInt::fdiv_q(num, denominator());
    std::string digits = shifted.to_string();
    if (digits.size() <= frac_digits) digits.insert(0, frac_digits + 1 - digits.size(), '0');
    std::string out = sign() < 0 ? "-" : "";
    out += digits.substr(0, digits.size() - frac_digits);
    if (frac_digits > 0) {
        out += ".";
        out += digits.substr(digits.size() - frac_digits);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace valvol
