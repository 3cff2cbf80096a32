#include "valvol/refinable.hpp"

#include <mutex>
#include <utility>

#include "valvol/errors.hpp"

namespace valvol {

namespace {

// Alternating-series enclosure of arctan(1/x) for integer x >= 2: partial sums
// of sum_k (-1)^k / ((2k+1) x^(2k+1)) bracket the limit.
QInterval arctan_inv_enclosure(long x, const Rational& max_width) {
    Rational sum(0);
    Rational xr(x);
    Rational power = Rational(1) / xr;  // x^-(2k+1)
    Rational inv_x2 = (Rational(1) / (xr * xr));
    long k = 0;
    while (true) {
        Rational term = power / Rational(2 * k + 1);
        if (k % 2 == 0) {
            // sum is a lower partial; sum + term overshoots.
            if (term <= max_width) return {sum, sum + term};
            sum += term;
        } else {
            if (term <= max_width) return {sum - term, sum};
            sum -= term;
        }
        power *= inv_x2;
        ++k;
    }
}

// Machin: pi = 16 arctan(1/5) - 4 arctan(1/239). Rigorous rational enclosure.
QInterval pi_enclosure(const Rational& max_width) {
    Rational slice = max_width / Rational(40);
    QInterval a5 = arctan_inv_enclosure(5, slice);
    QInterval a239 = arctan_inv_enclosure(239, slice);
    return {Rational(16) * a5.lo - Rational(4) * a239.hi, Rational(16) * a5.hi - Rational(4) * a239.lo};
}

// Continued-fraction terms of every real in [lo, hi], for as long as the
// enclosure pins down the integer part.
std::vector<BigInt> certified_cf_terms(QInterval iv, std::size_t max_terms) {
    std::vector<BigInt> terms;
    while (terms.size() < max_terms) {
        BigInt flo = iv.lo.floor();
        BigInt fhi = iv.hi.floor();
        if (flo != fhi) break;
        terms.push_back(flo);
        Rational a{flo};
        Rational rlo = iv.lo - a;
        Rational rhi = iv.hi - a;
        if (rlo.is_zero() || rhi.is_zero()) break;
        iv = {rhi.reciprocal(), rlo.reciprocal()};
    }
    return terms;
}

// Convergent brackets: consecutive continued-fraction convergents alternate
// around the value, so [c_k, c_{k+1}] sorted is a valid nested enclosure.
std::vector<QInterval> convergent_table(const std::vector<BigInt>& cf, const Rational& stop_width) {
    std::vector<QInterval> table;
    BigInt p_prev(1), q_prev(0);
    Rational prev_conv;
    bool have_prev = false;
    BigInt p(0), q(1);
    for (const BigInt& a : cf) {
        BigInt p_next = a * p_prev + p;
        BigInt q_next = a * q_prev + q;
        p = std::exchange(p_prev, p_next);
        q = std::exchange(q_prev, q_next);
        Rational conv(p_prev, q_prev);
        if (have_prev) {
            QInterval iv = prev_conv <= conv ? QInterval{prev_conv, conv} : QInterval{conv, prev_conv};
            table.push_back(iv);
            if (iv.width() <= stop_width) break;
        }
        prev_conv = conv;
        have_prev = true;
    }
    return table;
}

// Tables stop once the bracket is at least as tight as 10^-52 (past fifty
// decimal digits); deeper requests fail with DepthExhausted.
const Rational& table_stop_width() {
    static const Rational w = Rational(1) / Rational(BigInt::pow(10, 52));
    return w;
}

std::shared_ptr<const RefinableReal> build_pi() {
    QInterval seed = pi_enclosure(Rational(1) / Rational(BigInt::pow(10, 75)));
    auto cf = certified_cf_terms(seed, 200);
    return RefinableReal::from_table("pi", convergent_table(cf, table_stop_width()),
                                     /*independence_certified=*/true);
}

std::shared_ptr<const RefinableReal> build_sqrt2() {
    // CF of sqrt(2) is [1; 2, 2, 2, ...]; convergents alternate around it.
    std::vector<BigInt> cf;
    cf.push_back(1);
    for (int i = 0; i < 140; ++i) cf.push_back(2);
    auto table = convergent_table(cf, table_stop_width());
    for (const QInterval& iv : table) {
        if (!(iv.lo * iv.lo < Rational(2) && Rational(2) < iv.hi * iv.hi))
            throw Error("sqrt2 table failed its self-check");
    }
    return RefinableReal::from_table("sqrt2", std::move(table), /*independence_certified=*/true);
}

}  // namespace

std::shared_ptr<const RefinableReal> RefinableReal::exact(std::string name, Rational v) {
    auto r = std::shared_ptr<RefinableReal>(new RefinableReal());
    r->name_ = std::move(name);
    r->exact_ = std::move(v);
    r->independence_certified_ = true;
    return r;
}

std::shared_ptr<const RefinableReal> RefinableReal::from_table(std::string name, std::vector<QInterval> table,
                                                               bool independence_certified) {
    if (table.empty()) throw Error("RefinableReal: empty table for '" + name + "'");
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i].lo > table[i].hi) throw Error("RefinableReal: inverted interval in '" + name + "'");
        if (i > 0) {
            if (table[i].lo < table[i - 1].lo || table[i].hi > table[i - 1].hi)
                throw Error("RefinableReal: intervals not nested in '" + name + "'");
            if (table[i].width() >= table[i - 1].width())
                throw Error("RefinableReal: widths not strictly decreasing in '" + name + "'");
        }
    }
    auto r = std::shared_ptr<RefinableReal>(new RefinableReal());
    r->name_ = std::move(name);
    r->table_ = std::move(table);
    r->independence_certified_ = independence_certified;
    return r;
}

const std::shared_ptr<const RefinableReal>& RefinableReal::pi() {
    static const std::shared_ptr<const RefinableReal> instance = build_pi();
    return instance;
}

const std::shared_ptr<const RefinableReal>& RefinableReal::sqrt2() {
    static const std::shared_ptr<const RefinableReal> instance = build_sqrt2();
    return instance;
}

std::shared_ptr<const RefinableReal> RefinableReal::builtin(const std::string& name) {
    if (name == "pi") return pi();
    if (name == "sqrt2") return sqrt2();
    return nullptr;
}

QInterval RefinableReal::interval_at(std::size_t d) const {
    if (is_exact()) return {*exact_, *exact_};
    if (d >= table_.size())
        throw DepthExhausted("generator '" + name_ + "' has no interval at depth " + std::to_string(d));
    return table_[d];
}

QInterval RefinableReal::interval_clamped(std::size_t d) const {
    if (is_exact()) return {*exact_, *exact_};
    return table_[d < table_.size() ? d : table_.size() - 1];
}

QInterval RefinableReal::refine(const Rational& max_width) const {
    if (max_width.sign() <= 0) throw Error("refine: max_width must be positive");
    if (is_exact()) return {*exact_, *exact_};
    for (const QInterval& iv : table_) {
        if (iv.width() <= max_width) return iv;
    }
    throw DepthExhausted("generator '" + name_ + "' cannot reach width " + max_width.to_string());
}

}  // namespace valvol
