#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "valvol/rational.hpp"

namespace valvol {

// Closed interval with rational endpoints.
struct QInterval {
    Rational lo;
    Rational hi;
    Rational width() const { return hi - lo; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
};

// A real number presented through a nested sequence of rational enclosures.
// Exact rationals have the constant enclosure [v, v]; irrational generators
// carry a finite table of strictly shrinking intervals. Instances are
// immutable and shared.
class RefinableReal {
public:
    static std::shared_ptr<const RefinableReal> exact(std::string name, Rational v);
    // Table entries must be nested with strictly decreasing widths.
    static std::shared_ptr<const RefinableReal> from_table(std::string name, std::vector<QInterval> table,
                                                           bool independence_certified);

    // Built-in generators. Tables are fixed at first use: continued-fraction
    // convergent brackets, carried past fifty decimal digits.
    static const std::shared_ptr<const RefinableReal>& pi();
    static const std::shared_ptr<const RefinableReal>& sqrt2();
    // "pi" / "sqrt2", otherwise null.
    static std::shared_ptr<const RefinableReal> builtin(const std::string& name);

    const std::string& name() const { return name_; }
    bool is_exact() const { return exact_.has_value(); }
    const Rational& exact_value() const { return *exact_; }

    // True when Q-linear independence of {1, this, other certified built-ins}
    // is known; equality of integer combinations may then be read off the
    // coefficients.
    bool independence_certified() const { return independence_certified_; }

    std::size_t depth() const { return is_exact() ? 1 : table_.size(); }
    // Throws DepthExhausted past the end of the table.
    QInterval interval_at(std::size_t d) const;
    // Same, but clamped to the deepest entry.
    QInterval interval_clamped(std::size_t d) const;

    // First interval in the sequence with width <= max_width.
    QInterval refine(const Rational& max_width) const;

private:
    RefinableReal() = default;

    std::string name_;
    std::optional<Rational> exact_;
    std::vector<QInterval> table_;
    bool independence_certified_ = false;
};

using RefinablePtr = std::shared_ptr<const RefinableReal>;

inline QInterval refine(const RefinableReal& r, const Rational& max_width) { return r.refine(max_width); }

}  // namespace valvol
