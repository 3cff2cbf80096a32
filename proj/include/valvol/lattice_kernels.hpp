#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "valvol/monomial_ideal.hpp"
#include "valvol/value.hpp"

namespace valvol {

// Lattice-point counting and enumeration kernels. The default entry points
// parallelize their outer loop with OpenMP; the _serial variants are the
// point-by-point reference implementations kept for the tests and the
// benchmark. Results are identical (integer reductions, canonical sorting).

// Number of points p with 0 <= p_i < box_i that are NOT in I.
std::int64_t staircase_box_count(const MonomialIdeal& I, const Exponents& box);
std::int64_t staircase_box_count_serial(const MonomialIdeal& I, const Exponents& box);

// Number of a in N^n with sum a_i*w_i < bound; all weights positive.
std::int64_t weighted_count_below(std::span<const Value> weights, const Value& bound);
std::int64_t weighted_count_below_serial(std::span<const Value> weights, const Value& bound);

// Minimal generators of { a in N^n : sum a_i*w_i >= bound }, lex-sorted.
std::vector<Exponents> weighted_min_gens(std::span<const Value> weights, const Value& bound);
std::vector<Exponents> weighted_min_gens_serial(std::span<const Value> weights, const Value& bound);

}  // namespace valvol
