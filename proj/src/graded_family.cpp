#include "valvol/graded_family.hpp"

#include "valvol/errors.hpp"
#include "valvol/lattice_kernels.hpp"
#include "valvol/newton.hpp"

namespace valvol {

struct GradedFamily::Node {
    Kind kind;
    int nvars = 0;
    std::optional<MonomialIdeal> ideal;
    std::optional<MonomialValuation> mval;
    std::optional<ArcValuation> arcval;
    std::optional<ZariskiValuation> zval;
    std::optional<GradedFamily> left;
    std::optional<GradedFamily> right;
    Value step{0};
};

namespace {

// The Powers family is indexed by the naturals; other indices round up, which
// keeps the filtration property.
std::int64_t ceil_index(const Value& m) {
    BigInt c = m.ceil_certified();
    if (c.sign() <= 0) return 0;
    return c.to_int64();
}

Value scale_index(const Value& a, const Value& b) { return value_mul(a, b); }

}  // namespace

GradedFamily GradedFamily::powers(MonomialIdeal I) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Powers;
    n->nvars = I.nvars();
    n->ideal = std::move(I);
    return GradedFamily(std::move(n));
}

GradedFamily GradedFamily::closure_powers(MonomialIdeal I) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::ClosurePowers;
    n->nvars = I.nvars();
    n->ideal = std::move(I);
    return GradedFamily(std::move(n));
}

GradedFamily GradedFamily::monomial_valuation(MonomialValuation v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::MonomialVal;
    n->nvars = v.nvars();
    n->mval = std::move(v);
    return GradedFamily(std::move(n));
}

GradedFamily GradedFamily::arc(ArcValuation v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Arc;
    n->nvars = 2;
    n->arcval = std::move(v);
    return GradedFamily(std::move(n));
}

GradedFamily GradedFamily::zariski(ZariskiValuation v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Zariski;
    n->nvars = 2;
    n->zval = std::move(v);
    return GradedFamily(std::move(n));
}

GradedFamily GradedFamily::veronese(GradedFamily base, Value m0) {
    if (m0.compare(Value(0)) != Cmp::Greater) throw Error("veronese: step must be positive");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Veronese;
    n->nvars = base.nvars();
    n->left = std::move(base);
    n->step = std::move(m0);
    return GradedFamily(std::move(n));
}

GradedFamily GradedFamily::product(GradedFamily a, GradedFamily b) {
    if (a.nvars() != b.nvars()) throw MixedArity("product of families over different rings");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Product;
    n->nvars = a.nvars();
    n->left = std::move(a);
    n->right = std::move(b);
    return GradedFamily(std::move(n));
}

GradedFamily GradedFamily::intersection(GradedFamily a, GradedFamily b) {
    if (a.nvars() != b.nvars()) throw MixedArity("intersection of families over different rings");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Intersection;
    n->nvars = a.nvars();
    n->left = std::move(a);
    n->right = std::move(b);
    return GradedFamily(std::move(n));
}

GradedFamily::Kind GradedFamily::kind() const { return node_->kind; }
int GradedFamily::nvars() const { return node_->nvars; }

bool GradedFamily::yields_monomial_ideals() const {
    switch (node_->kind) {
        case Kind::Arc:
        case Kind::Zariski:
            return false;
        case Kind::Powers:
        case Kind::ClosurePowers:
        case Kind::MonomialVal:
            return true;
        case Kind::Veronese:
            return node_->left->yields_monomial_ideals();
        case Kind::Product:
        case Kind::Intersection:
            return node_->left->yields_monomial_ideals() && node_->right->yields_monomial_ideals();
    }
    return false;
}

MonomialIdeal GradedFamily::at(const Value& m) const {
    switch (node_->kind) {
        case Kind::Powers:
            return power(*node_->ideal, ceil_index(m));
        case Kind::ClosurePowers: {
            MonomialIdeal p = power(*node_->ideal, ceil_index(m));
            return p.is_zero() || p.is_unit() ? p : integral_closure(p);
        }
        case Kind::MonomialVal:
            return node_->mval->valuation_ideal(m);
        case Kind::Veronese:
            return node_->left->at(scale_index(node_->step, m));
        case Kind::Product:
            return valvol::product(node_->left->at(m), node_->right->at(m));
        case Kind::Intersection:
            return intersect(node_->left->at(m), node_->right->at(m));
        case Kind::Arc:
            throw NonMonomialFamily("arc ideals are not monomial; query the arc valuation directly");
        case Kind::Zariski:
            throw NonMonomialFamily("key-polynomial ideals are not monomial; use the length queries");
    }
    throw Error("GradedFamily: unreachable");
}

std::int64_t GradedFamily::length_at(const Value& m) const {
    switch (node_->kind) {
        case Kind::MonomialVal:
            // Standard monomials are the lattice points of weighted degree
            // below m.
            return weighted_count_below(node_->mval->weights(), m);
        case Kind::Arc:
            return node_->arcval->ideal_length(ceil_index(m));
        case Kind::Zariski: {
            if (!m.is_rational()) throw Error("key-polynomial lengths need rational indices");
            return node_->zval->standard_basis_count(m.rational_part());
        }
        case Kind::Veronese:
            return node_->left->length_at(scale_index(node_->step, m));
        default:
            return at(m).length_of_quotient();
    }
}

const MonomialValuation* GradedFamily::as_monomial_valuation() const {
    return node_->mval ? &*node_->mval : nullptr;
}
const ArcValuation* GradedFamily::as_arc() const { return node_->arcval ? &*node_->arcval : nullptr; }
const ZariskiValuation* GradedFamily::as_zariski() const { return node_->zval ? &*node_->zval : nullptr; }
const GradedFamily* GradedFamily::veronese_base() const {
    return node_->kind == Kind::Veronese ? &*node_->left : nullptr;
}
const Value* GradedFamily::veronese_step() const {
    return node_->kind == Kind::Veronese ? &node_->step : nullptr;
}
const GradedFamily* GradedFamily::left_child() const { return node_->left ? &*node_->left : nullptr; }
const GradedFamily* GradedFamily::right_child() const { return node_->right ? &*node_->right : nullptr; }
const MonomialIdeal* GradedFamily::base_ideal() const { return node_->ideal ? &*node_->ideal : nullptr; }

std::string GradedFamily::describe() const {
    switch (node_->kind) {
        case Kind::Powers:
            return "powers(" + node_->ideal->to_string() + ")";
        case Kind::ClosurePowers:
            return "closure-powers(" + node_->ideal->to_string() + ")";
        case Kind::MonomialVal: {
            std::string w;
            for (const Value& x : node_->mval->weights()) {
                if (!w.empty()) w += ",";
                w += x.to_string();
            }
            return "monomial(" + w + ")";
        }
        case Kind::Arc:
            return "arc(depth=" + std::to_string(node_->arcval->depth()) + ")";
        case Kind::Zariski:
            return "zariski(depth=" + std::to_string(node_->zval->depth()) + ")";
        case Kind::Veronese:
            return "veronese(" + node_->left->describe() + ", " + node_->step.to_string() + ")";
        case Kind::Product:
            return "product(" + node_->left->describe() + ", " + node_->right->describe() + ")";
        case Kind::Intersection:
            return "intersection(" + node_->left->describe() + ", " + node_->right->describe() + ")";
    }
    return "?";
}

}  // namespace valvol
