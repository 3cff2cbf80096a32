#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "valvol/graded_family.hpp"
#include "valvol/newton.hpp"

namespace valvol {

// Closed form of a volume: scalar * prod(numer) / prod(denom) with positive
// Value factors. Rational whenever every factor is; otherwise it still
// yields certified enclosures.
struct VolumeClosedForm {
    Rational scalar{1};
    std::vector<Value> numer;
    std::vector<Value> denom;

    bool is_rational() const;
    Rational exact_rational() const;  // pre: is_rational()
    QInterval enclosure(const Rational& max_width) const;
    std::string to_string() const;
    // Fold rational factors into the scalar.
    void normalize();
};

// Minimal generators of { b : sum (b_i + 1) w_i > m }, the stable multiplier
// ideal of the weighted family in closed form.
MonomialIdeal closed_form_jm(const MonomialValuation& v, const Value& m);

// The distinguished element x_1...x_n and its value e = sum of the weights.
std::pair<Exponents, Value> delta_and_e(const MonomialValuation& v);

// Stable maximal element of { J((1/p) a_{pm}) } by doubling p until two
// successive ideals agree; arc families are unit (zero volume).
MonomialIdeal asymptotic_multiplier_ideal(const GradedFamily& F, const Value& m);

struct VolumeSample {
    Rational m;
    std::int64_t length = 0;
    Rational normalized;  // p! * length / m^p
};

struct VolumeEstimate {
    int p = 0;  // normalization exponent (the dimension for plain volume)
    std::vector<VolumeSample> samples;
    Rational tail_max;  // max normalized over the last third of the samples
    std::optional<VolumeClosedForm> exact;
};

// Closed-form volume when one is known for the family shape.
std::optional<VolumeClosedForm> closed_form_volume(const GradedFamily& F);

VolumeEstimate volume_estimate(const GradedFamily& F, const Value& m_max, int sample_count);
VolumeEstimate p_volume_estimate(const GradedFamily& F, int p, const Value& m_max, int sample_count);

// 1 / prod(weights).
VolumeClosedForm exact_monomial_volume(const MonomialValuation& v);

// (p, C): p >= 2 least with trivial j_p, C = 2p - 1; weights must be >= 1.
std::pair<int, int> izumi_constant(const MonomialValuation& v);

struct MultVolSample {
    Rational m;
    std::int64_t mult = 0;
    Rational ratio;  // e(a_m) / m^n
};

std::vector<MultVolSample> multiplicity_volume_sequence(const GradedFamily& F,
                                                        std::span<const Rational> m_list);

// Experimental probe: e(a_m : j_m) / m^n for a weighted family, reported
// without any assertion about its limit.
std::vector<MultVolSample> colon_probe_sequence(const MonomialValuation& v,
                                                std::span<const Rational> m_list);

}  // namespace valvol
