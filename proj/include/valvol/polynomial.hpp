#pragma once

#include <map>
#include <span>
#include <string>

#include "valvol/monomial_ideal.hpp"
#include "valvol/rational.hpp"

namespace valvol {

// Polynomial with exact rational coefficients; terms kept in lex order and
// never zero.
class Polynomial {
public:
    explicit Polynomial(int n) : n_(n) {}
    static Polynomial monomial(int n, Exponents e, Rational c = Rational(1));

    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    void add_term(const Exponents& e, const Rational& c);

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& c) const;

    // Minimum total degree over the terms; ZeroPolynomial on 0.
    Exponent order_at_max_ideal() const;

    std::string to_string(std::span<const std::string> vars = {}) const;

private:
    int n_;
    std::map<Exponents, Rational> terms_;
};

Exponent order_at_max_ideal(const Polynomial& f);

}  // namespace valvol
