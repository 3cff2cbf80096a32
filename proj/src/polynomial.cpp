#include "valvol/polynomial.hpp"

#include "valvol/errors.hpp"

namespace valvol {

Polynomial Polynomial::monomial(int n, Exponents e, Rational c) {
    Polynomial f(n);
    f.add_term(e, c);
    return f;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != n_) throw MixedArity("term arity differs from ring arity");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    if (a.n_ != b.n_) throw MixedArity("polynomials in different rings");
    Polynomial r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    if (a.n_ != b.n_) throw MixedArity("polynomials in different rings");
    Polynomial r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.n_ != b.n_) throw MixedArity("polynomials in different rings");
    Polynomial r(a.n_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) r.add_term(exponent_sum(ea, eb), ca * cb);
    }
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(n_);
    if (c.is_zero()) return r;
    for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
    return r;
}

Exponent Polynomial::order_at_max_ideal() const {
    if (terms_.empty()) throw ZeroPolynomial("order of the zero polynomial");
    bool first = true;
    Exponent best = 0;
    for (const auto& [e, c] : terms_) {
        Exponent d = total_degree(e);
        if (first || d < best) best = d;
        first = false;
    }
    return best;
}

Exponent order_at_max_ideal(const Polynomial& f) { return f.order_at_max_ideal(); }

std::string Polynomial::to_string(std::span<const std::string> vars) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string mono = monomial_to_string(e, vars);
        Rational a = c.abs();
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        if (a == Rational(1) && mono != "1")
            out += mono;
        else if (mono == "1")
            out += a.to_string();
        else
            out += a.to_string() + "*" + mono;
    }
    return out;
}

}  // namespace valvol
