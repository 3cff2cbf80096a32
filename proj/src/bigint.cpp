#include "valvol/bigint.hpp"

#include <cstdlib>
#include <ostream>

#include "valvol/errors.hpp"

namespace valvol {

BigInt::BigInt(std::string_view decimal) {
    std::string s(decimal);
    if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
        mpz_clear(z_);
        mpz_init(z_);
        throw Error("BigInt: cannot parse '" + s + "'");
    }
}

bool BigInt::fits_int64() const {
    static_assert(sizeof(long) == 8, "assumes LP64");
    return mpz_fits_slong_p(z_) != 0;
}

std::int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw Error("BigInt: value does not fit in 64 bits");
    return mpz_get_si(z_);
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_add(r.z_, a.z_, b.z_);
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_sub(r.z_, a.z_, b.z_);
    return r;
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_mul(r.z_, a.z_, b.z_);
    return r;
}

BigInt operator-(const BigInt& a) {
    BigInt r;
    mpz_neg(r.z_, a.z_);
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    mpz_add(z_, z_, o.z_);
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) {
    mpz_sub(z_, z_, o.z_);
    return *this;
}

BigInt& BigInt::operator*=(const BigInt& o) {
    mpz_mul(z_, z_, o.z_);
    return *this;
}

BigInt BigInt::fdiv_q(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw Error("BigInt: division by zero");
    BigInt r;
    mpz_fdiv_q(r.z_, a.z_, b.z_);
    return r;
}

BigInt BigInt::cdiv_q(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw Error("BigInt: division by zero");
    BigInt r;
    mpz_cdiv_q(r.z_, a.z_, b.z_);
    return r;
}

BigInt BigInt::divexact(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw Error("BigInt: division by zero");
    BigInt r;
    mpz_divexact(r.z_, a.z_, b.z_);
    return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.z_, a.z_, b.z_);
    return r;
}

BigInt BigInt::pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.z_, base.z_, exp);
    return r;
}

BigInt BigInt::abs() const {
    BigInt r;
    mpz_abs(r.z_, z_);
    return r;
}

std::string BigInt::to_string() const {
    char* s = mpz_get_str(nullptr, 10, z_);
    std::string out(s);
    std::free(s);
    return out;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace valvol
