#include "valvol/asymptotics.hpp"

#include <algorithm>

#include "valvol/errors.hpp"
#include "valvol/lattice_kernels.hpp"

namespace valvol {

bool VolumeClosedForm::is_rational() const {
    for (const Value& v : numer) {
        if (!v.is_rational()) return false;
    }
    for (const Value& v : denom) {
        if (!v.is_rational()) return false;
    }
    return true;
}

Rational VolumeClosedForm::exact_rational() const {
    Rational r = scalar;
    for (const Value& v : numer) r *= v.rational_part();
    for (const Value& v : denom) r /= v.rational_part();
    return r;
}

QInterval VolumeClosedForm::enclosure(const Rational& max_width) const {
    // Tighten the factor enclosures until the product interval is narrow
    // enough; every factor is positive so interval products stay ordered.
    Rational w = max_width / Rational(4);
    for (int round = 0; round < 40; ++round) {
        QInterval acc{scalar, scalar};
        bool positive = acc.lo.sign() > 0;
        for (const Value& v : numer) {
            QInterval f = v.enclosure(w);
            if (f.lo.sign() <= 0) {
                positive = false;
                break;
            }
            acc = {acc.lo * f.lo, acc.hi * f.hi};
        }
        if (positive) {
            for (const Value& v : denom) {
                QInterval f = v.enclosure(w);
                if (f.lo.sign() <= 0) {
                    positive = false;
                    break;
                }
                acc = {acc.lo / f.hi, acc.hi / f.lo};
            }
        }
        if (positive && acc.width() <= max_width) return acc;
        w = w / Rational(16);
    }
    throw DepthExhausted("closed-form volume enclosure did not tighten");
}

std::string VolumeClosedForm::to_string() const {
    if (is_rational()) return exact_rational().to_string();
    std::string out = scalar.to_string();
    for (const Value& v : numer) out += "*(" + v.to_string() + ")";
    for (const Value& v : denom) out += "/(" + v.to_string() + ")";
    return out;
}

void VolumeClosedForm::normalize() {
    std::vector<Value> n2, d2;
    for (Value& v : numer) {
        if (v.is_rational())
            scalar *= v.rational_part();
        else
            n2.push_back(std::move(v));
    }
    for (Value& v : denom) {
        if (v.is_rational())
            scalar /= v.rational_part();
        else
            d2.push_back(std::move(v));
    }
    numer = std::move(n2);
    denom = std::move(d2);
}

MonomialIdeal closed_form_jm(const MonomialValuation& v, const Value& m) {
    const int n = v.nvars();
    const auto& w = v.weights();
    // { b : sum b_i w_i > m - sum w_i }, strictly.
    Value rem = m - v.sum_of_weights();
    // least k with k*w > rem
    auto least_strict = [&](const Value& weight, const Value& bound) -> Exponent {
        std::int64_t k = count_multiples_below(weight, bound);  // least k with k*weight >= bound
        if (weight.scaled(BigInt(k)).compare(bound) == Cmp::Equal) ++k;
        return k;
    };
    if (rem.compare(Value(0)) == Cmp::Less) return MonomialIdeal::unit(n);
    Exponents box(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) box[static_cast<std::size_t>(i)] = least_strict(w[static_cast<std::size_t>(i)], rem);
    // One candidate per prefix, as in the weighted staircase kernel but with
    // a strict threshold.
    std::vector<Exponents> cands;
    Exponents p(static_cast<std::size_t>(n - 1), 0);
    while (true) {
        Value used(0);
        for (int i = 0; i + 1 < n; ++i)
            used = used + w[static_cast<std::size_t>(i)].scaled(BigInt(p[static_cast<std::size_t>(i)]));
        Exponents cand = p;
        cand.push_back(least_strict(w[static_cast<std::size_t>(n - 1)], rem - used));
        cands.push_back(std::move(cand));
        if (n == 1) break;
        std::size_t i = 0;
        while (i < p.size()) {
            if (++p[i] <= box[i]) break;
            p[i] = 0;
            ++i;
        }
        if (i == p.size()) break;
    }
    return MonomialIdeal::from_generators(n, std::move(cands));
}

std::pair<Exponents, Value> delta_and_e(const MonomialValuation& v) {
    return {Exponents(static_cast<std::size_t>(v.nvars()), 1), v.sum_of_weights()};
}

namespace {

// Stabilization for a weighted-order family. Doubling alone can tie before
// the chain is done: the integer hulls of { <w,a> >= pm } approach the
// halfspace slowly, so two equal steps do not certify maximality. Instead a
// step is final once every candidate exponent is either already in the
// chain, or certifiably outside the limit forever because <w, b+1> <= m.
// Soundness of the exit: when <w, b+1> > m + sum(w)/p, the shifted point
// p(b+1) clears the inner approximation { <w,y> >= pm + sum(w) } of the
// hull, so b eventually enters the chain; no third state exists.
MonomialIdeal stabilize_weighted(const MonomialValuation& v, const Value& m) {
    const int n = v.nvars();
    const auto& w = v.weights();
    auto least_strict = [&](const Value& weight, const Value& bound) -> Exponent {
        std::int64_t k = count_multiples_below(weight, bound);
        if (weight.scaled(BigInt(k)).compare(bound) == Cmp::Equal) ++k;
        return k;
    };
    Exponents box(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        box[static_cast<std::size_t>(i)] = least_strict(w[static_cast<std::size_t>(i)], m);
    std::vector<Exponents> candidates;
    Exponents b(static_cast<std::size_t>(n), 0);
    while (true) {
        candidates.push_back(b);
        std::size_t i = 0;
        while (i < b.size()) {
            if (++b[i] <= box[i]) break;
            b[i] = 0;
            ++i;
        }
        if (i == b.size()) break;
    }

    MonomialIdeal prev = MonomialIdeal::zero(n);
    for (int p = 1; p <= 256; p *= 2) {
        MonomialIdeal cur = howald_multiplier_ideal(v.valuation_ideal(m.scaled(BigInt(p))), Rational(1, p));
        if (p > 1 && !is_subideal(prev, cur))
            throw Error("asymptotic multiplier ideal chain is not increasing");
        bool decided = true;
        for (const Exponents& cand : candidates) {
            if (cur.contains(cand)) continue;
            Exponents shifted = cand;
            for (auto& x : shifted) ++x;
            if (v.value_of_monomial(shifted).compare(m) != Cmp::Greater) continue;
            decided = false;
            break;
        }
        if (decided) return cur;
        prev = std::move(cur);
    }
    throw StabilizationFailed("multiplier ideal chain still undecided at p = 256");
}

}  // namespace

MonomialIdeal asymptotic_multiplier_ideal(const GradedFamily& F, const Value& m) {
    using Kind = GradedFamily::Kind;
    if (F.kind() == Kind::Arc) {
        // Zero-volume family: every multiplier ideal in the chain is trivial.
        return MonomialIdeal::unit(F.nvars());
    }
    if (!F.yields_monomial_ideals())
        throw NonMonomialFamily("asymptotic multiplier ideals need a monomial family");
    if (F.kind() == Kind::Veronese)
        return asymptotic_multiplier_ideal(*F.veronese_base(), value_mul(*F.veronese_step(), m));
    if (F.kind() == Kind::MonomialVal) return stabilize_weighted(*F.as_monomial_valuation(), m);
    MonomialIdeal prev = howald_multiplier_ideal(F.at(m), Rational(1));
    for (int p = 2; p <= 256; p *= 2) {
        MonomialIdeal cur = howald_multiplier_ideal(F.at(m.scaled(BigInt(p))), Rational(1, p));
        if (!is_subideal(prev, cur))
            throw Error("asymptotic multiplier ideal chain is not increasing");
        if (cur == prev) return cur;
        prev = std::move(cur);
    }
    throw StabilizationFailed("no two successive multiplier ideals agreed up to p = 256");
}

std::optional<VolumeClosedForm> closed_form_volume(const GradedFamily& F) {
    using Kind = GradedFamily::Kind;
    switch (F.kind()) {
        case Kind::MonomialVal:
            return exact_monomial_volume(*F.as_monomial_valuation());
        case Kind::Arc:
            return VolumeClosedForm{Rational(0), {}, {}};
        case Kind::Powers:
        case Kind::ClosurePowers: {
            const MonomialIdeal* I = F.base_ideal();
            if (!I->pure_power_bounds() || I->nvars() > 4) return std::nullopt;
            return VolumeClosedForm{Rational(multiplicity(*I)), {}, {}};
        }
        case Kind::Veronese: {
            auto base = closed_form_volume(*F.veronese_base());
            if (!base) return std::nullopt;
            VolumeClosedForm out = *base;
            for (int i = 0; i < F.nvars(); ++i) out.numer.push_back(*F.veronese_step());
            out.normalize();
            return out;
        }
        default:
            return std::nullopt;
    }
}

namespace {

VolumeEstimate estimate_impl(const GradedFamily& F, int p, const Value& m_max, int sample_count,
                             bool fill_exact) {
    if (sample_count < 1) throw Error("volume sampling needs at least one sample");
    if (!m_max.is_rational()) throw Error("volume sampling needs a rational grid limit");
    const Rational top = m_max.rational_part();
    if (top.sign() <= 0) throw Error("volume sampling needs a positive grid limit");
    Rational factorial(1);
    for (int k = 2; k <= p; ++k) factorial *= Rational(k);

    VolumeEstimate est;
    est.p = p;
    for (int k = 1; k <= sample_count; ++k) {
        Rational m = top * Rational(k, sample_count);
        std::int64_t len = F.length_at(Value(m));
        VolumeSample s;
        s.m = m;
        s.length = len;
        s.normalized = factorial * Rational(len) / m.pow_int(p);
        est.samples.push_back(std::move(s));
    }
    std::size_t tail_start = est.samples.size() - (est.samples.size() + 2) / 3;
    est.tail_max = est.samples[tail_start].normalized;
    for (std::size_t i = tail_start; i < est.samples.size(); ++i)
        est.tail_max = max(est.tail_max, est.samples[i].normalized);
    if (fill_exact) est.exact = closed_form_volume(F);
    return est;
}

}  // namespace

VolumeEstimate volume_estimate(const GradedFamily& F, const Value& m_max, int sample_count) {
    return estimate_impl(F, F.nvars(), m_max, sample_count, /*fill_exact=*/true);
}

VolumeEstimate p_volume_estimate(const GradedFamily& F, int p, const Value& m_max, int sample_count) {
    if (p < 1 || p > F.nvars()) throw Error("p-volume needs 1 <= p <= n");
    return estimate_impl(F, p, m_max, sample_count, /*fill_exact=*/p == F.nvars());
}

VolumeClosedForm exact_monomial_volume(const MonomialValuation& v) {
    VolumeClosedForm f;
    f.denom = v.weights();
    f.normalize();
    return f;
}

std::pair<int, int> izumi_constant(const MonomialValuation& v) {
    for (const Value& w : v.weights()) {
        if (w.compare(Value(1)) == Cmp::Less)
            throw Error("izumi_constant: normalize so the least weight is at least 1");
    }
    // j_p is trivial exactly while sum(weights) > p, so take the least
    // integer p >= 2 at or above the weight sum.
    Value s = v.sum_of_weights();
    BigInt c = s.ceil_certified();
    int p = std::max<std::int64_t>(2, c.to_int64());
    return {p, 2 * p - 1};
}

std::vector<MultVolSample> multiplicity_volume_sequence(const GradedFamily& F,
                                                        std::span<const Rational> m_list) {
    const int n = F.nvars();
    std::vector<MultVolSample> out;
    for (const Rational& m : m_list) {
        MultVolSample s;
        s.m = m;
        s.mult = multiplicity(F.at(Value(m)));
        s.ratio = Rational(s.mult) / m.pow_int(n);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<MultVolSample> colon_probe_sequence(const MonomialValuation& v,
                                                std::span<const Rational> m_list) {
    const int n = v.nvars();
    std::vector<MultVolSample> out;
    for (const Rational& m : m_list) {
        MonomialIdeal am = v.valuation_ideal(Value(m));
        MonomialIdeal jm = closed_form_jm(v, Value(m));
        MonomialIdeal dm = colon(am, jm);
        MultVolSample s;
        s.m = m;
        s.mult = multiplicity(dm);
        s.ratio = Rational(s.mult) / m.pow_int(n);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace valvol
