#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "valvol/bigint.hpp"

namespace valvol {

// Exact rational number, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() { mpq_init(q_); }
    Rational(std::int64_t v) {
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    Rational(std::int64_t num, std::int64_t den);
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(const BigInt& num) : Rational(num, BigInt(1)) {}

    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    // Accepts "p", "p/q" and plain decimals like "1.5"; throws Error otherwise.
    static Rational parse(std::string_view s);

    BigInt numerator() const;
    BigInt denominator() const;

    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);  // throws on zero divisor
    friend Rational operator-(const Rational& a);
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    Rational abs() const;
    Rational reciprocal() const;
    // Integer power; negative exponents invert (value must be nonzero).
    Rational pow_int(long e) const;

    BigInt floor() const;
    BigInt ceil() const;

    int compare(const Rational& o) const { return mpq_cmp(q_, o.q_); }
    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return a.compare(b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.compare(b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.compare(b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.compare(b) >= 0; }

    // "p" when integral, "p/q" otherwise.
    std::string to_string() const;
    // Fixed-point decimal truncated toward zero, e.g. to_decimal(3) of 22/7 is "3.142"... (truncated: "3.142").
    std::string to_decimal(std::size_t frac_digits) const;
    // Nearest double, for display only.
    double to_double() const { return mpq_get_d(q_); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& v);

private:
    mpq_t q_;
};

inline Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

}  // namespace valvol
