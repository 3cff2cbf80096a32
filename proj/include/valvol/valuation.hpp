#pragma once

#include <cstdint>
#include <vector>

#include "valvol/monomial_ideal.hpp"
#include "valvol/polynomial.hpp"
#include "valvol/value.hpp"

namespace valvol {

// Weighted-order valuation: each variable carries a positive weight and the
// value of a polynomial is the least weighted degree of its terms.
class MonomialValuation {
public:
    explicit MonomialValuation(std::vector<Value> weights);

    int nvars() const { return static_cast<int>(weights_.size()); }
    const std::vector<Value>& weights() const { return weights_; }

    Value value_of_monomial(const Exponents& e) const;
    // Min over terms; ZeroPolynomial on 0.
    Value value_of(const Polynomial& f) const;

    // Minimal monomial generators of { f : value >= m }.
    MonomialIdeal valuation_ideal(const Value& m) const;

    Value sum_of_weights() const;

private:
    std::vector<Value> weights_;
};

// Order of vanishing along the arc (t, e^t - 1), computed in truncated power
// series with exact rational coefficients.
class ArcValuation {
public:
    explicit ArcValuation(int truncation_depth);

    int depth() const { return depth_; }

    // t-order of f(t, e^t - 1); DepthExceeded once the order reaches the
    // truncation depth, ZeroPolynomial on 0.
    std::int64_t value_of(const Polynomial& f) const;

    // f in a_m, i.e. order >= m; requires m <= depth. Zero is a member.
    bool ideal_contains(const Polynomial& f, std::int64_t m) const;

    // y - x - x^2/2! - ... - x^(m-1)/(m-1)!, the small-order element of a_m.
    Polynomial witness(std::int64_t m) const;

    // length(R/a_m) = m: residues of 1, x, .., x^(m-1) span the quotient.
    std::int64_t ideal_length(std::int64_t m) const;

    // Coefficients of f(t, e^t - 1) mod t^k.
    std::vector<Rational> substitute(const Polynomial& f, int k) const;

private:
    int depth_;
    std::vector<Rational> series_;  // e^t - 1, index = degree, up to depth_
};

// Plane valuation with value group in Q, built from a key-polynomial
// recurrence: values beta_i on the key polynomials q_i, with c_i the exact
// denominator of beta_i and the betas growing past c_i*beta_i.
class ZariskiValuation {
public:
    // Explicit beta sequence; validates every invariant.
    static ZariskiValuation from_betas(std::vector<Rational> betas);
    // beta_0 = 3/2 and c_i the i-th prime: beta_{i+1} = c_i beta_i + 1/c_{i+1}.
    static ZariskiValuation primes_example(int depth);

    int depth() const { return static_cast<int>(betas_.size()) - 1; }
    const std::vector<Rational>& betas() const { return betas_; }
    const std::vector<std::int64_t>& denominators() const { return cs_; }

    // Number of basis monomials q_{-1}^{a_-1} q_0^{a_0} ... with value < m
    // (a_j <= c_j - 1 for j >= 0); equals length(R/a_m).
    std::int64_t standard_basis_count(const Rational& m) const;

    // alpha_i = (1/beta_0) * prod_{j<=i} (c_j beta_j / beta_{j+1}), i < depth.
    std::vector<Rational> alpha_sequence() const;

private:
    ZariskiValuation() = default;
    std::vector<Rational> betas_;
    std::vector<std::int64_t> cs_;
};

}  // namespace valvol
