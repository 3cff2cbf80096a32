#pragma once

#include <cstdint>
#include <vector>

#include "valvol/monomial_ideal.hpp"
#include "valvol/rational.hpp"

namespace valvol {

// One supporting inequality <normal, a> >= offset of a Newton polyhedron.
// Normals are primitive nonnegative integer vectors; coordinate faces appear
// with normal e_i and offset 0 when they really are facets.
struct Facet {
    std::vector<std::int64_t> normal;
    std::int64_t offset = 0;
    bool operator==(const Facet&) const = default;
};

// conv(min_gens) + positive orthant, by irredundant facets and vertices.
struct NewtonPolyhedron {
    int n = 0;
    std::vector<Facet> facets;        // sorted by (normal, offset)
    std::vector<Exponents> vertices;  // lex-sorted subset of the generators
};

// Exact facet/vertex description; I nonzero, n <= 4.
NewtonPolyhedron newton_polyhedron(const MonomialIdeal& I);

// Minimal generators of the lattice points of the Newton polyhedron.
MonomialIdeal integral_closure(const MonomialIdeal& I);

// Exact volume of the orthant complement of P; UnboundedComplement when it
// is not finite.
Rational covolume(const NewtonPolyhedron& P);

// Hilbert-Samuel multiplicity, n! times the covolume.
std::int64_t multiplicity(const MonomialIdeal& I);

// Monomial multiplier ideal at coefficient c > 0: exponents b with b + 1
// strictly inside the polyhedron scaled by c.
MonomialIdeal howald_multiplier_ideal(const MonomialIdeal& I, const Rational& c);

struct ReesValuation {
    std::vector<std::int64_t> weights;  // primitive, strictly positive
    std::int64_t min_value = 0;         // least weighted order over the ideal
    bool operator==(const ReesValuation&) const = default;
};

// One weighted-order valuation per non-coordinate facet.
std::vector<ReesValuation> rees_valuations(const MonomialIdeal& I);

// Exact volume of { x : A x <= b } via the signed cone-from-origin recursion
// over facets. The polytope must be bounded. Exposed for the tests.
Rational polytope_volume(std::vector<std::vector<Rational>> A, std::vector<Rational> b);

}  // namespace valvol
