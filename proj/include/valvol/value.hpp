#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "valvol/refinable.hpp"

namespace valvol {

enum class Cmp { Less, Equal, Greater };

// An element of a rank-one value group: exact rational plus an integer
// combination of irrational generators. Comparison is certified through
// interval refinement; equality of distinct combinations is only decided
// when independence of the generators is asserted.
class Value {
public:
    Value() : rat_(0) {}
    Value(Rational r) : rat_(std::move(r)) {}
    Value(std::int64_t v) : rat_(Rational(v)) {}
    static Value generator(const RefinablePtr& g);

    bool is_rational() const { return terms_.empty(); }
    const Rational& rational_part() const { return rat_; }

    struct Term {
        RefinablePtr gen;
        BigInt coeff;  // nonzero
    };
    const std::vector<Term>& terms() const { return terms_; }

    // True when every irrational generator involved certifies independence.
    bool independence_asserted() const;

    friend Value operator+(const Value& a, const Value& b);
    friend Value operator-(const Value& a, const Value& b);
    friend Value operator-(const Value& a);
    Value scaled(const BigInt& k) const;
    // Rational scaling; combination coefficients must stay integral.
    Value scaled(const Rational& q) const;

    // Certified three-way comparison. Throws ComparisonStalled when the
    // enclosures cannot separate within the depth cap and independence of the
    // generators is not asserted (and, degenerately, when it is but the cap
    // is reached first).
    Cmp compare(const Value& o) const;
    bool lt(const Value& o) const { return compare(o) == Cmp::Less; }
    bool leq(const Value& o) const { return compare(o) != Cmp::Greater; }
    bool gt(const Value& o) const { return compare(o) == Cmp::Greater; }
    bool geq(const Value& o) const { return compare(o) != Cmp::Less; }
    bool eq(const Value& o) const { return compare(o) == Cmp::Equal; }
    int sign() const;
    bool is_zero() const { return terms_.empty() && rat_.is_zero(); }

    // Identical representation (same rational part, generators, coefficients).
    bool same_representation(const Value& o) const;

    // Enclosure of width <= max_width; DepthExhausted if the tables end first.
    QInterval enclosure(const Rational& max_width) const;
    // Enclosure using table entries at refinement step d (clamped per table).
    QInterval enclosure_at_depth(std::size_t d) const;

    BigInt floor_certified() const;
    BigInt ceil_certified() const;

    std::string to_string() const;
    // Decimal approximation from a certified enclosure, truncated.
    std::string approx_decimal(std::size_t digits) const;

    // Depth cap for certified comparison; set once at configuration time.
    static void set_default_depth_cap(int cap);
    static int default_depth_cap();

private:
    void add_term(const RefinablePtr& gen, const BigInt& coeff);
    void normalize();

    Rational rat_;
    std::vector<Term> terms_;  // sorted by generator name
};

// Number of naturals k with k*alpha < bound (alpha > 0). Equivalently the
// least k with k*alpha >= bound.
std::int64_t count_multiples_below(const Value& alpha, const Value& bound);

// Product when at least one side is rational; combinations stay integral.
Value value_mul(const Value& a, const Value& b);

}  // namespace valvol
