#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace valvol {

// Signed arbitrary-precision integer; a value-semantics wrapper over GMP's mpz.
class BigInt {
public:
    BigInt() { mpz_init(z_); }
    BigInt(std::int64_t v) { mpz_init_set_si(z_, v); }
    explicit BigInt(std::string_view decimal);

    BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~BigInt() { mpz_clear(z_); }

    int sign() const { return mpz_sgn(z_); }
    bool is_zero() const { return sign() == 0; }

    bool fits_int64() const;
    std::int64_t to_int64() const;  // throws Error if out of range

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a);
    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);

    // Floor division and the matching remainder (remainder has divisor's sign).
    static BigInt fdiv_q(const BigInt& a, const BigInt& b);
    // Ceiling division.
    static BigInt cdiv_q(const BigInt& a, const BigInt& b);
    // Exact division; quotient must be integral.
    static BigInt divexact(const BigInt& a, const BigInt& b);

    static BigInt gcd(const BigInt& a, const BigInt& b);
    static BigInt pow(const BigInt& base, unsigned long exp);
    BigInt abs() const;

    int compare(const BigInt& o) const { return mpz_cmp(z_, o.z_); }
    friend bool operator==(const BigInt& a, const BigInt& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return a.compare(b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return a.compare(b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return a.compare(b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return a.compare(b) >= 0; }

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

    // Raw handle for the Rational implementation.
    const mpz_t& raw() const { return z_; }
    mpz_t& raw() { return z_; }

private:
    mpz_t z_;
};

}  // namespace valvol
