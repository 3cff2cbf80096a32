#include "valvol/value.hpp"

#include <algorithm>
#include <atomic>

#include "valvol/errors.hpp"

namespace valvol {

namespace {
std::atomic<int> g_depth_cap{64};

QInterval scale_interval(const QInterval& iv, const BigInt& c) {
    Rational cr{c};
    if (c.sign() >= 0) return {iv.lo * cr, iv.hi * cr};
    return {iv.hi * cr, iv.lo * cr};
}
}  // namespace

void Value::set_default_depth_cap(int cap) {
    if (cap < 1) throw Error("depth cap must be positive");
    g_depth_cap.store(cap);
}

int Value::default_depth_cap() { return g_depth_cap.load(); }

Value Value::generator(const RefinablePtr& g) {
    Value v;
    if (g->is_exact()) {
        v.rat_ = g->exact_value();
    } else {
        v.terms_.push_back({g, BigInt(1)});
    }
    return v;
}

bool Value::independence_asserted() const {
    for (const Term& t : terms_) {
        if (!t.gen->independence_certified()) return false;
    }
    return true;
}

void Value::add_term(const RefinablePtr& gen, const BigInt& coeff) {
    if (coeff.is_zero()) return;
    if (gen->is_exact()) {
        rat_ += gen->exact_value() * Rational(coeff);
        return;
    }
    for (Term& t : terms_) {
        if (t.gen->name() == gen->name()) {
            if (t.gen != gen)
                throw Error("distinct generators share the name '" + gen->name() + "'");
            t.coeff += coeff;
            return;
        }
    }
    terms_.push_back({gen, coeff});
}

void Value::normalize() {
    std::erase_if(terms_, [](const Term& t) { return t.coeff.is_zero(); });
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.gen->name() < b.gen->name(); });
}

Value operator+(const Value& a, const Value& b) {
    Value r = a;
    r.rat_ += b.rat_;
    for (const Value::Term& t : b.terms_) r.add_term(t.gen, t.coeff);
    r.normalize();
    return r;
}

Value operator-(const Value& a, const Value& b) {
    Value r = a;
    r.rat_ -= b.rat_;
    for (const Value::Term& t : b.terms_) r.add_term(t.gen, -t.coeff);
    r.normalize();
    return r;
}

Value operator-(const Value& a) {
    Value r;
    r.rat_ = -a.rat_;
    for (const Value::Term& t : a.terms_) r.terms_.push_back({t.gen, -t.coeff});
    return r;
}

Value Value::scaled(const BigInt& k) const {
    Value r;
    r.rat_ = rat_ * Rational(k);
    if (!k.is_zero()) {
        for (const Term& t : terms_) r.terms_.push_back({t.gen, t.coeff * k});
    }
    return r;
}

Value Value::scaled(const Rational& q) const {
    if (q.is_integer()) return scaled(q.numerator());
    Value r;
    r.rat_ = rat_ * q;
    for (const Term& t : terms_) {
        Rational c = Rational(t.coeff) * q;
        if (!c.is_integer())
            throw Error("Value: scaling by " + q.to_string() + " leaves non-integer coefficient on '" +
                        t.gen->name() + "'");
        r.terms_.push_back({t.gen, c.numerator()});
    }
    return r;
}

bool Value::same_representation(const Value& o) const {
    if (rat_ != o.rat_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].gen->name() != o.terms_[i].gen->name() || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    }
    return true;
}

QInterval Value::enclosure_at_depth(std::size_t d) const {
    QInterval acc{rat_, rat_};
    for (const Term& t : terms_) {
        QInterval gi = scale_interval(t.gen->interval_clamped(d), t.coeff);
        acc.lo += gi.lo;
        acc.hi += gi.hi;
    }
    return acc;
}

QInterval Value::enclosure(const Rational& max_width) const {
    if (terms_.empty()) return {rat_, rat_};
    // Split the width budget across the generators, weighted by coefficient.
    Rational slice = max_width / Rational(static_cast<std::int64_t>(terms_.size()));
    QInterval acc{rat_, rat_};
    for (const Term& t : terms_) {
        Rational per_gen = slice / Rational(t.coeff.abs());
        QInterval gi = scale_interval(t.gen->refine(per_gen), t.coeff);
        acc.lo += gi.lo;
        acc.hi += gi.hi;
    }
    return acc;
}

Cmp Value::compare(const Value& o) const {
    Value d = *this - o;
    if (d.terms_.empty()) {
        int s = d.rat_.sign();
        return s < 0 ? Cmp::Less : (s > 0 ? Cmp::Greater : Cmp::Equal);
    }
    const int cap = default_depth_cap();
    std::size_t max_table = 0;
    for (const Term& t : d.terms_) max_table = std::max(max_table, t.gen->depth());
    for (int depth = 0; depth <= cap; ++depth) {
        QInterval iv = d.enclosure_at_depth(static_cast<std::size_t>(depth));
        if (iv.lo.sign() > 0) return Cmp::Greater;
        if (iv.hi.sign() < 0) return Cmp::Less;
        if (static_cast<std::size_t>(depth) + 1 >= max_table) break;  // every table clamped
    }
    if (d.independence_asserted())
        throw ComparisonStalled("nonzero combination did not separate from zero within the depth cap");
    throw ComparisonStalled(
        "distinct coefficient vectors without asserted independence; refusing to decide equality");
}

int Value::sign() const {
    switch (compare(Value(0))) {
        case Cmp::Less:
            return -1;
        case Cmp::Equal:
            return 0;
        case Cmp::Greater:
            return 1;
    }
    return 0;
}

BigInt Value::floor_certified() const {
    if (terms_.empty()) return rat_.floor();
    const int cap = default_depth_cap();
    std::size_t max_table = 0;
    for (const Term& t : terms_) max_table = std::max(max_table, t.gen->depth());
    for (int depth = 0; depth <= cap; ++depth) {
        QInterval iv = enclosure_at_depth(static_cast<std::size_t>(depth));
        BigInt flo = iv.lo.floor();
        if (flo == iv.hi.floor()) return flo;
        if (static_cast<std::size_t>(depth) + 1 >= max_table) break;
    }
    throw ComparisonStalled("floor did not stabilize within the depth cap");
}

BigInt Value::ceil_certified() const {
    if (terms_.empty()) return rat_.ceil();
    return -((-*this).floor_certified());
}

std::string Value::to_string() const {
    if (terms_.empty()) return rat_.to_string();
    std::string out;
    bool first = true;
    if (!rat_.is_zero()) {
        out += rat_.to_string();
        first = false;
    }
    for (const Term& t : terms_) {
        BigInt a = t.coeff.abs();
        if (!first)
            out += t.coeff.sign() < 0 ? "-" : "+";
        else if (t.coeff.sign() < 0)
            out += "-";
        first = false;
        if (a != BigInt(1)) out += a.to_string() + "*";
        out += t.gen->name();
    }
    return out;
}

std::string Value::approx_decimal(std::size_t digits) const {
    Rational width = Rational(1) / Rational(BigInt::pow(10, static_cast<unsigned long>(digits + 2)));
    QInterval iv = enclosure(width);
    return iv.lo.to_decimal(digits);
}

Value value_mul(const Value& a, const Value& b) {
    if (a.is_rational()) return b.scaled(a.rational_part());
    if (b.is_rational()) return a.scaled(b.rational_part());
    throw Error("value_mul: cannot multiply two irrational values");
}

std::int64_t count_multiples_below(const Value& alpha, const Value& bound) {
    if (bound.compare(Value(0)) != Cmp::Greater) return 0;
    // Depth-clamped enclosures seed the bracket; the search itself only
    // trusts certified comparisons, so coarse tables merely widen the start.
    QInterval a = alpha.enclosure_at_depth(8);
    QInterval b = bound.enclosure_at_depth(8);
    if (a.lo.sign() <= 0) a.lo = Rational(1, 1024);  // alpha > 0; keep the estimate finite
    // Bracket the least k with k*alpha >= bound, then binary search with
    // certified comparisons.
    BigInt lo_est = (b.lo / a.hi).floor();
    BigInt hi_est = (b.hi / a.lo).ceil() + BigInt(1);
    std::int64_t lo = std::max<std::int64_t>(0, lo_est.fits_int64() ? lo_est.to_int64() : 0);
    if (!hi_est.fits_int64()) throw Error("count_multiples_below: bound too large");
    std::int64_t hi = hi_est.to_int64();
    // Invariants: lo*alpha < bound or lo == 0; hi*alpha >= bound.
    while (alpha.scaled(BigInt(lo)).compare(bound) != Cmp::Less) {
        if (lo == 0) return 0;
        --lo;
    }
    while (alpha.scaled(BigInt(hi)).compare(bound) == Cmp::Less) ++hi;
    while (hi - lo > 1) {
        std::int64_t mid = lo + (hi - lo) / 2;
        if (alpha.scaled(BigInt(mid)).compare(bound) == Cmp::Less)
            lo = mid;
        else
            hi = mid;
    }
    return hi;
}

}  // namespace valvol
