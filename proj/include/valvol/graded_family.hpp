#pragma once

#include <memory>
#include <optional>

#include "valvol/monomial_ideal.hpp"
#include "valvol/valuation.hpp"
#include "valvol/value.hpp"

namespace valvol {

// An indexed family m -> a_m with a_m * a_l contained in a_{m+l} and the
// filtration property. Built from powers, closures of powers, valuation
// ideals, and the Veronese / product / intersection combinators. Families of
// arc or key-polynomial ideals answer length and membership queries but are
// not monomial, so at() refuses them.
class GradedFamily {
public:
    enum class Kind { Powers, ClosurePowers, MonomialVal, Arc, Zariski, Veronese, Product, Intersection };

    static GradedFamily powers(MonomialIdeal I);
    static GradedFamily closure_powers(MonomialIdeal I);
    static GradedFamily monomial_valuation(MonomialValuation v);
    static GradedFamily arc(ArcValuation v);
    static GradedFamily zariski(ZariskiValuation v);
    static GradedFamily veronese(GradedFamily base, Value m0);  // m0 > 0
    static GradedFamily product(GradedFamily a, GradedFamily b);
    static GradedFamily intersection(GradedFamily a, GradedFamily b);

    Kind kind() const;
    int nvars() const;
    bool yields_monomial_ideals() const;

    // The ideal at index m (unit ideal for m <= 0); NonMonomialFamily for
    // arc or key-polynomial families.
    MonomialIdeal at(const Value& m) const;
    // length(R/a_m), available for every kind.
    std::int64_t length_at(const Value& m) const;

    const MonomialValuation* as_monomial_valuation() const;
    const ArcValuation* as_arc() const;
    const ZariskiValuation* as_zariski() const;
    // Veronese accessors (null/zero unless kind() == Veronese).
    const GradedFamily* veronese_base() const;
    const Value* veronese_step() const;
    const GradedFamily* left_child() const;
    const GradedFamily* right_child() const;
    const MonomialIdeal* base_ideal() const;

    std::string describe() const;

private:
    struct Node;
    explicit GradedFamily(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

}  // namespace valvol
