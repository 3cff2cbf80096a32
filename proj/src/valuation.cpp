#include "valvol/valuation.hpp"

#include <algorithm>

#include "valvol/errors.hpp"
#include "valvol/lattice_kernels.hpp"

namespace valvol {

MonomialValuation::MonomialValuation(std::vector<Value> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw Error("MonomialValuation: no weights");
    for (const Value& w : weights_) {
        if (w.compare(Value(0)) != Cmp::Greater) throw Error("MonomialValuation: weights must be positive");
    }
}

Value MonomialValuation::value_of_monomial(const Exponents& e) const {
    if (e.size() != weights_.size()) throw MixedArity("monomial arity differs from the valuation");
    Value s(0);
    for (std::size_t i = 0; i < e.size(); ++i) s = s + weights_[i].scaled(BigInt(e[i]));
    return s;
}

Value MonomialValuation::value_of(const Polynomial& f) const {
    if (f.is_zero()) throw ZeroPolynomial("value of the zero polynomial");
    bool first = true;
    Value best(0);
    for (const auto& [e, c] : f.terms()) {
        Value v = value_of_monomial(e);
        if (first || v.compare(best) == Cmp::Less) best = v;
        first = false;
    }
    return best;
}

MonomialIdeal MonomialValuation::valuation_ideal(const Value& m) const {
    return MonomialIdeal::from_generators(nvars(), weighted_min_gens(weights_, m));
}

Value MonomialValuation::sum_of_weights() const {
    Value s(0);
    for (const Value& w : weights_) s = s + w;
    return s;
}

ArcValuation::ArcValuation(int truncation_depth) : depth_(truncation_depth) {
    if (depth_ < 1) throw Error("ArcValuation: depth must be positive");
    series_.assign(static_cast<std::size_t>(depth_) + 1, Rational(0));
    Rational factorial(1);
    for (int i = 1; i <= depth_; ++i) {
        factorial *= Rational(i);
        series_[static_cast<std::size_t>(i)] = factorial.reciprocal();
    }
}

std::vector<Rational> ArcValuation::substitute(const Polynomial& f, int k) const {
    if (k > depth_ + 1) throw DepthExceeded("substitution beyond the series truncation");
    const std::size_t K = static_cast<std::size_t>(k);
    std::vector<Rational> acc(K, Rational(0));
    if (f.is_zero() || k == 0) return acc;
    if (f.nvars() != 2) throw MixedArity("arc valuation lives on two variables");

    // Group terms by the y-exponent and walk the powers of the series once.
    Exponent max_b = 0;
    for (const auto& [e, c] : f.terms()) max_b = std::max(max_b, e[1]);
    std::vector<Rational> s_pow(K, Rational(0));
    s_pow[0] = Rational(1);  // (e^t - 1)^0
    auto mul_series = [&](const std::vector<Rational>& a) {
        std::vector<Rational> out(K, Rational(0));
        for (std::size_t i = 0; i < K; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 1; i + j < K && j <= static_cast<std::size_t>(depth_); ++j) {
                if (!series_[j].is_zero()) out[i + j] += a[i] * series_[j];
            }
        }
        return out;
    };
    for (Exponent b = 0; b <= max_b; ++b) {
        for (const auto& [e, c] : f.terms()) {
            if (e[1] != b) continue;
            std::size_t a = static_cast<std::size_t>(e[0]);
            for (std::size_t j = 0; a + j < K; ++j) {
                if (!s_pow[j].is_zero()) acc[a + j] += c * s_pow[j];
            }
        }
        if (b < max_b) s_pow = mul_series(s_pow);
    }
    return acc;
}

std::int64_t ArcValuation::value_of(const Polynomial& f) const {
    if (f.is_zero()) throw ZeroPolynomial("value of the zero polynomial");
    std::vector<Rational> c = substitute(f, depth_);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c[i].is_zero()) return static_cast<std::int64_t>(i);
    }
    throw DepthExceeded("order reaches the truncation depth");
}

bool ArcValuation::ideal_contains(const Polynomial& f, std::int64_t m) const {
    if (m > depth_) throw DepthExceeded("membership query beyond the truncation depth");
    if (f.is_zero()) return true;
    if (m <= 0) return true;
    std::vector<Rational> c = substitute(f, static_cast<int>(m));
    for (const Rational& x : c) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Polynomial ArcValuation::witness(std::int64_t m) const {
    if (m < 1 || m > depth_) throw DepthExceeded("witness outside the truncation depth");
    Polynomial w(2);
    w.add_term({0, 1}, Rational(1));
    Rational factorial(1);
    for (std::int64_t i = 1; i < m; ++i) {
        factorial *= Rational(i);
        w.add_term({i, 0}, -factorial.reciprocal());
    }
    return w;
}

std::int64_t ArcValuation::ideal_length(std::int64_t m) const {
    if (m < 0) throw Error("ideal_length: negative index");
    if (m > depth_) throw DepthExceeded("length query beyond the truncation depth");
    if (m == 0) return 0;
    // Residues of 1, x, .., x^(m-1) span: x has order one, and any f reduces
    // modulo a_m to the first m coefficients of its substituted series.
    Polynomial xm = Polynomial::monomial(2, {m, 0});
    if (!ideal_contains(xm, m)) throw Error("ideal_length: x^m escaped a_m");
    if (m > 1 && ideal_contains(Polynomial::monomial(2, {m - 1, 0}), m))
        throw Error("ideal_length: x^(m-1) fell into a_m");
    return m;
}

ZariskiValuation ZariskiValuation::from_betas(std::vector<Rational> betas) {
    if (betas.empty()) throw Error("ZariskiValuation: empty beta sequence");
    if (!(betas[0] > Rational(1))) throw Error("ZariskiValuation: beta_0 must exceed 1");
    ZariskiValuation v;
    BigInt c_product(1);
    for (std::size_t i = 0; i < betas.size(); ++i) {
        if (betas[i].sign() <= 0) throw Error("ZariskiValuation: betas must be positive");
        BigInt den = betas[i].denominator();
        if (!den.fits_int64()) throw CapacityExceeded("ZariskiValuation: denominator too large");
        if (i > 0 && !(betas[i] > betas[i - 1] * Rational(v.cs_[i - 1])))
            throw Error("ZariskiValuation: beta_(i+1) must exceed c_i * beta_i");
        if (BigInt::gcd(den, c_product) != BigInt(1))
            throw Error("ZariskiValuation: denominators must be pairwise coprime");
        c_product *= den;
        v.cs_.push_back(den.to_int64());
    }
    v.betas_ = std::move(betas);
    return v;
}

ZariskiValuation ZariskiValuation::primes_example(int depth) {
    if (depth < 0) throw Error("ZariskiValuation: negative depth");
    auto next_prime = [](std::int64_t p) {
        auto is_prime = [](std::int64_t n) {
            for (std::int64_t d = 2; d * d <= n; ++d) {
                if (n % d == 0) return false;
            }
            return n >= 2;
        };
        do {
            ++p;
        } while (!is_prime(p));
        return p;
    };
    std::vector<Rational> betas{Rational(3, 2)};
    std::int64_t c = 2;
    for (int i = 0; i < depth; ++i) {
        std::int64_t c_next = next_prime(c);
        betas.push_back(betas.back() * Rational(c) + Rational(1, c_next));
        c = c_next;
    }
    return from_betas(std::move(betas));
}

std::int64_t ZariskiValuation::standard_basis_count(const Rational& m) const {
    if (m.sign() <= 0) return 0;
    // Only key polynomials of value below m can appear.
    int active = -1;
    for (std::size_t i = 0; i < betas_.size(); ++i) {
        if (betas_[i] < m) active = static_cast<int>(i);
    }
    // Scale by the product of the active denominators so every value is an
    // integer.
    BigInt scale_big(1);
    for (int j = 0; j <= active; ++j) scale_big *= BigInt(cs_[static_cast<std::size_t>(j)]);
    if (scale_big > BigInt(10000000)) throw CapacityExceeded("standard_basis_count: too many key levels below the bound");
    BigInt m_den = m.denominator();
    scale_big = BigInt::divexact(scale_big * m_den, BigInt::gcd(scale_big, m_den));
    BigInt m_scaled_big = m.numerator() * BigInt::divexact(scale_big, m.denominator());
    if (!m_scaled_big.fits_int64() || m_scaled_big > BigInt(std::int64_t{1} << 60))
        throw CapacityExceeded("standard_basis_count: scaled bound exceeds capacity");
    const std::int64_t D = scale_big.to_int64();
    const std::int64_t mD = m_scaled_big.to_int64();

    std::vector<std::int64_t> beta_scaled;
    for (int j = 0; j <= active; ++j) {
        Rational s = betas_[static_cast<std::size_t>(j)] * Rational(D);
        beta_scaled.push_back(s.numerator().to_int64());
    }

    // Combinations with value below the bound, counted by descending level
    // with the free q_{-1} exponent closed off at the bottom.
    std::int64_t count = 0;
    auto descend = [&](auto&& self, int level, std::int64_t used) -> void {
        if (level < 0) {
            std::int64_t room = mD - used;  // a_{-1} * D < room
            count += (room + D - 1) / D;
            return;
        }
        const std::int64_t step = beta_scaled[static_cast<std::size_t>(level)];
        const std::int64_t cap = cs_[static_cast<std::size_t>(level)] - 1;
        for (std::int64_t a = 0; a <= cap && used + a * step < mD; ++a) self(self, level - 1, used + a * step);
    };
    descend(descend, active, 0);
    return count;
}

std::vector<Rational> ZariskiValuation::alpha_sequence() const {
    std::vector<Rational> alphas;
    Rational acc = betas_[0].reciprocal();
    for (std::size_t i = 0; i + 1 < betas_.size(); ++i) {
        acc *= Rational(cs_[i]) * betas_[i] / betas_[i + 1];
        alphas.push_back(acc);
    }
    return alphas;
}

}  // namespace valvol
