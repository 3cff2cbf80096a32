#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "valvol/asymptotics.hpp"
#include "valvol/errors.hpp"
#include "valvol/lattice_kernels.hpp"

using namespace valvol;

namespace {

Value pi_value() { return Value::generator(RefinableReal::pi()); }
Value sqrt2_value() { return Value::generator(RefinableReal::sqrt2()); }

MonomialValuation weights_1_pi() { return MonomialValuation({Value(1), pi_value()}); }
MonomialValuation weights(std::int64_t a, std::int64_t b) {
    return MonomialValuation({Value(a), Value(b)});
}

MonomialIdeal ideal(int n, std::vector<Exponents> gens) {
    return MonomialIdeal::from_generators(n, std::move(gens));
}

}  // namespace

TEST_CASE("closed-form stable multiplier ideals") {
    CHECK(closed_form_jm(weights_1_pi(), Value(5)) == ideal(2, {{1, 0}, {0, 1}}));
    CHECK(closed_form_jm(weights_1_pi(), Value(4)).is_unit());
    CHECK(closed_form_jm(weights(1, 1), Value(3)) == ideal(2, {{2, 0}, {1, 1}, {0, 2}}));
}

TEST_CASE("delta and its value") {
    auto [d1, e1] = delta_and_e(weights_1_pi());
    CHECK(d1 == Exponents{1, 1});
    CHECK(e1.compare(Value(1) + pi_value()) == Cmp::Equal);
    CHECK(delta_and_e(weights(1, 1)).second.compare(Value(2)) == Cmp::Equal);
    CHECK(delta_and_e(weights(3, 2)).second.compare(Value(5)) == Cmp::Equal);
}

TEST_CASE("asymptotic multiplier ideals stabilize onto the closed form") {
    GradedFamily F = GradedFamily::monomial_valuation(weights(1, 1));
    CHECK(asymptotic_multiplier_ideal(F, Value(3)) == ideal(2, {{2, 0}, {1, 1}, {0, 2}}));

    GradedFamily G = GradedFamily::monomial_valuation(weights_1_pi());
    CHECK(asymptotic_multiplier_ideal(G, Value(4)).is_unit());

    GradedFamily P = GradedFamily::powers(ideal(2, {{1, 0}, {0, 1}}));
    CHECK(asymptotic_multiplier_ideal(P, Value(3)) == ideal(2, {{2, 0}, {1, 1}, {0, 2}}));
    // fractional index on a power family: the limit coefficient is 5/2
    CHECK(asymptotic_multiplier_ideal(P, Value(Rational(5, 2))) == ideal(2, {{1, 0}, {0, 1}}));
}

TEST_CASE("closed form equals the stabilized chain on rational weights") {
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 20; ++trial) {
        std::int64_t a = 1 + static_cast<std::int64_t>(rng() % 4);
        std::int64_t b = 1 + static_cast<std::int64_t>(rng() % 4);
        std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 10);
        MonomialValuation v = weights(a, b);
        CHECK(asymptotic_multiplier_ideal(GradedFamily::monomial_valuation(v), Value(m)) ==
              closed_form_jm(v, Value(m)));
    }
}

TEST_CASE("volume closed forms") {
    VolumeClosedForm one = exact_monomial_volume(weights(1, 1));
    CHECK(one.is_rational());
    CHECK(one.exact_rational() == Rational(1));

    VolumeClosedForm sixth = exact_monomial_volume(weights(3, 2));
    CHECK(sixth.exact_rational() == Rational(1, 6));

    VolumeClosedForm inv_pi = exact_monomial_volume(weights_1_pi());
    CHECK(!inv_pi.is_rational());
    QInterval iv = inv_pi.enclosure(Rational(1, 1000000));
    Rational ref = Rational::parse("0.318309886183");
    CHECK(iv.lo <= ref);
    CHECK(ref <= iv.hi + Rational(1, 1000000));
}

TEST_CASE("power families take the multiplicity as closed-form volume") {
    MonomialIdeal I = ideal(2, {{2, 0}, {1, 1}, {0, 3}});
    auto p = closed_form_volume(GradedFamily::powers(I));
    REQUIRE(p.has_value());
    CHECK(p->exact_rational() == Rational(5));
    auto cp = closed_form_volume(GradedFamily::closure_powers(I));
    REQUIRE(cp.has_value());
    CHECK(cp->exact_rational() == Rational(5));
    // and the sampled sequence is consistent with it
    VolumeEstimate est = volume_estimate(GradedFamily::powers(I), Value(20), 20);
    for (const VolumeSample& s : est.samples) CHECK(s.normalized >= Rational(5));
}

TEST_CASE("closed form 1/6 matches the lattice count oracle at m = 600") {
    std::vector<Value> w{Value(3), Value(2)};
    std::int64_t count = weighted_count_below(w, Value(600));
    Rational normalized = Rational(2 * count) / Rational(600 * 600);
    Rational deviation = (normalized * Rational(6) - Rational(1)).abs();
    CHECK(deviation <= Rational(1, 100));
}

TEST_CASE("volume estimates carry exact forms and sample sequences") {
    GradedFamily ones = GradedFamily::monomial_valuation(weights(1, 1));
    VolumeEstimate est = volume_estimate(ones, Value(30), 30);
    REQUIRE(est.exact.has_value());
    CHECK(est.exact->exact_rational() == Rational(1));
    for (const VolumeSample& s : est.samples) {
        // lengths m(m+1)/2 give (m+1)/m exactly
        CHECK(s.normalized == (s.m + Rational(1)) / s.m);
    }

    GradedFamily arc = GradedFamily::arc(ArcValuation(40));
    VolumeEstimate arc_est = volume_estimate(arc, Value(30), 30);
    REQUIRE(arc_est.exact.has_value());
    CHECK(arc_est.exact->exact_rational().is_zero());
    for (const VolumeSample& s : arc_est.samples) {
        CHECK(s.normalized == Rational(2) / s.m);
    }
}

TEST_CASE("p-volumes") {
    GradedFamily arc = GradedFamily::arc(ArcValuation(40));
    VolumeEstimate one_vol = p_volume_estimate(arc, 1, Value(30), 30);
    for (const VolumeSample& s : one_vol.samples) CHECK(s.normalized == Rational(1));

    GradedFamily ones = GradedFamily::monomial_valuation(weights(1, 1));
    VolumeEstimate diverging = p_volume_estimate(ones, 1, Value(24), 24);
    for (const VolumeSample& s : diverging.samples) {
        CHECK(s.normalized == (s.m + Rational(1)) / Rational(2));  // (m+1)/2 grows
    }
    CHECK(diverging.tail_max == Rational(25, 2));
    VolumeEstimate full = p_volume_estimate(ones, 2, Value(24), 24);
    REQUIRE(full.exact.has_value());
    CHECK(full.exact->exact_rational() == Rational(1));
    CHECK_THROWS_AS(p_volume_estimate(ones, 3, Value(10), 5), Error);
}

TEST_CASE("izumi constants from the triviality threshold") {
    CHECK(izumi_constant(weights(1, 1)) == std::pair<int, int>(2, 3));
    CHECK(izumi_constant(weights_1_pi()) == std::pair<int, int>(5, 9));
    CHECK(izumi_constant(weights(3, 2)) == std::pair<int, int>(5, 9));
    CHECK(izumi_constant(MonomialValuation({Value(1), sqrt2_value()})) == std::pair<int, int>(3, 5));
    CHECK_THROWS_AS(izumi_constant(MonomialValuation({Value(Rational(1, 2)), Value(1)})), Error);
}

TEST_CASE("multiplicity over index-power ratios") {
    GradedFamily F = GradedFamily::monomial_valuation(weights(3, 2));
    std::vector<Rational> grid{Rational(6)};
    auto seq = multiplicity_volume_sequence(F, grid);
    REQUIRE(seq.size() == 1);
    CHECK(seq[0].mult == 6);
    CHECK(seq[0].ratio == Rational(1, 6));
    CHECK(seq[0].ratio == exact_monomial_volume(weights(3, 2)).exact_rational());
}

TEST_CASE("three-term inclusion chain for weighted families") {
    std::mt19937_64 rng(9);
    std::vector<MonomialValuation> vs{weights(1, 1), weights(3, 2), weights_1_pi()};
    for (const MonomialValuation& v : vs) {
        GradedFamily F = GradedFamily::monomial_valuation(v);
        for (int trial = 0; trial < 10; ++trial) {
            std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 8);
            std::int64_t l = 1 + static_cast<std::int64_t>(rng() % 4);
            MonomialIdeal am = F.at(Value(m));
            MonomialIdeal aml = F.at(Value(m * l));
            MonomialIdeal jm = closed_form_jm(v, Value(m));
            CHECK(is_subideal(power(am, l), aml));
            CHECK(is_subideal(aml, power(jm, l)));
        }
    }
}

TEST_CASE("the delta element multiplies j_m into a_m") {
    std::vector<MonomialValuation> vs{weights(1, 1), weights(3, 2), weights_1_pi()};
    for (const MonomialValuation& v : vs) {
        auto [delta, e] = delta_and_e(v);
        for (std::int64_t m = 1; m <= 12; ++m) {
            MonomialIdeal jm = closed_form_jm(v, Value(m));
            MonomialIdeal am = v.valuation_ideal(Value(m));
            for (const Exponents& b : jm.min_gens()) {
                CHECK(am.contains(exponent_sum(b, delta)));
            }
        }
    }
}

TEST_CASE("veronese volume scaling on closed forms") {
    for (std::int64_t m0 : {2, 3, 5}) {
        GradedFamily base = GradedFamily::monomial_valuation(weights(3, 2));
        GradedFamily ver = GradedFamily::veronese(base, Value(m0));
        auto vol = closed_form_volume(ver);
        REQUIRE(vol.has_value());
        CHECK(vol->exact_rational() == Rational(m0 * m0) * Rational(1, 6));
    }
}

TEST_CASE("the volume never exceeds normalized multiplicities") {
    // rational weights: exact comparison of vol = 1/6 with e(a_m)/m^2
    GradedFamily F = GradedFamily::monomial_valuation(weights(3, 2));
    for (std::int64_t m : {2, 5, 9, 14}) {
        std::int64_t e = multiplicity(F.at(Value(m)));
        CHECK(Rational(1, 6) <= Rational(e) / Rational(m * m));
    }
    // 1/pi vs e/m^2 certified through e*pi >= m^2
    GradedFamily G = GradedFamily::monomial_valuation(weights_1_pi());
    for (std::int64_t m : {5, 11, 20}) {
        std::int64_t e = multiplicity(G.at(Value(m)));
        CHECK(pi_value().scaled(BigInt(e)).compare(Value(m * m)) != Cmp::Less);
    }
}

TEST_CASE("colon probe sequence runs and stays positive") {
    auto seq = colon_probe_sequence(weights(1, 1), std::vector<Rational>{Rational(2), Rational(4)});
    REQUIRE(seq.size() == 2);
    for (const auto& s : seq) CHECK(s.mult >= 1);
}

TEST_CASE("stable multiplier ideals of products and intersections") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 12; ++trial) {
        MonomialValuation f = weights(1 + static_cast<std::int64_t>(rng() % 3),
                                      1 + static_cast<std::int64_t>(rng() % 3));
        MonomialValuation g = weights(1 + static_cast<std::int64_t>(rng() % 3),
                                      1 + static_cast<std::int64_t>(rng() % 3));
        GradedFamily F = GradedFamily::monomial_valuation(f);
        GradedFamily G = GradedFamily::monomial_valuation(g);
        Value m(1 + static_cast<std::int64_t>(rng() % 6));
        MonomialIdeal jf = closed_form_jm(f, m);
        MonomialIdeal jg = closed_form_jm(g, m);
        // multiplicativity and the intersection bound
        CHECK(is_subideal(asymptotic_multiplier_ideal(GradedFamily::product(F, G), m), product(jf, jg)));
        CHECK(is_subideal(asymptotic_multiplier_ideal(GradedFamily::intersection(F, G), m),
                          intersect(jf, jg)));
    }
}

TEST_CASE("stable multiplier ideals through a veronese wrapper") {
    MonomialValuation v = weights(3, 2);
    GradedFamily V = GradedFamily::veronese(GradedFamily::monomial_valuation(v), Value(2));
    for (std::int64_t m : {1, 2, 4}) {
        CHECK(asymptotic_multiplier_ideal(V, Value(m)) == closed_form_jm(v, Value(2 * m)));
    }
}

TEST_CASE("arc families have unit asymptotic multiplier ideals") {
    GradedFamily arc = GradedFamily::arc(ArcValuation(24));
    for (std::int64_t m : {1, 2, 7, 20}) CHECK(asymptotic_multiplier_ideal(arc, Value(m)).is_unit());
    GradedFamily Z = GradedFamily::zariski(ZariskiValuation::primes_example(2));
    CHECK_THROWS_AS(asymptotic_multiplier_ideal(Z, Value(2)), NonMonomialFamily);
}
