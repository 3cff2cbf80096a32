// Acceptance gate: one criterion per section, each printed as a single
// [PASS]/[FAIL] line with its runtime. Everything asserted here is either an
// exact value pinned by an independent oracle in this file or a tolerance
// fixed below; nothing is calibrated at run time.
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "valvol/asymptotics.hpp"
#include "valvol/harness.hpp"
#include "valvol/lattice_kernels.hpp"

using namespace valvol;
using clock_type = std::chrono::steady_clock;

namespace {

struct Checker {
    bool ok = true;
    std::string detail;
    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

Value pi_value() { return Value::generator(RefinableReal::pi()); }
Value sqrt2_value() { return Value::generator(RefinableReal::sqrt2()); }

MonomialIdeal ideal2(std::vector<Exponents> gens) {
    return MonomialIdeal::from_generators(2, std::move(gens));
}

std::vector<Value> grid_15_to_20() {
    std::vector<Value> m;
    for (std::int64_t k = 1; k <= 10; ++k) m.push_back(Value(k));
    for (std::int64_t k = 12; k <= 20; k += 2) m.push_back(Value(k));
    return m;
}

// Independent plane covolume oracle: monotone-chain hull + shoelace.
Rational shoelace_covolume(const MonomialIdeal& I) {
    std::vector<Exponents> pts = I.min_gens();
    std::sort(pts.begin(), pts.end(), lex_less);
    auto cross = [](const Exponents& o, const Exponents& a, const Exponents& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::vector<Exponents> hull;
    for (const Exponents& p : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
        hull.push_back(p);
    }
    std::vector<Exponents> poly;
    poly.push_back({0, 0});
    for (auto& p : hull) poly.push_back(p);
    std::int64_t twice = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Exponents& p = poly[i];
        const Exponents& q = poly[(i + 1) % poly.size()];
        twice += p[0] * q[1] - q[0] * p[1];
    }
    return Rational(std::abs(twice), 2);
}

MonomialIdeal random_ideal(std::mt19937_64& rng, int n, int max_deg, int gen_count) {
    std::vector<Exponents> gens;
    for (int g = 0; g < gen_count; ++g) {
        Exponents e(static_cast<std::size_t>(n));
        for (auto& x : e) x = static_cast<Exponent>(rng() % static_cast<unsigned>(max_deg + 1));
        gens.push_back(std::move(e));
    }
    return MonomialIdeal::from_generators(n, std::move(gens));
}

MonomialIdeal random_finite_colength_ideal(std::mt19937_64& rng, int n, int max_deg, int extra) {
    std::vector<Exponents> gens;
    for (int i = 0; i < n; ++i) {
        Exponents e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = static_cast<Exponent>(1 + rng() % static_cast<unsigned>(max_deg));
        gens.push_back(std::move(e));
    }
    for (int g = 0; g < extra; ++g) {
        Exponents e(static_cast<std::size_t>(n));
        for (auto& x : e) x = static_cast<Exponent>(rng() % static_cast<unsigned>(max_deg + 1));
        gens.push_back(std::move(e));
    }
    return MonomialIdeal::from_generators(n, std::move(gens));
}

std::vector<Exponents> box_points(const Exponents& bound) {
    std::vector<Exponents> pts;
    Exponents p(bound.size(), 0);
    while (true) {
        pts.push_back(p);
        std::size_t i = 0;
        while (i < p.size()) {
            if (++p[i] <= bound[i]) break;
            p[i] = 0;
            ++i;
        }
        if (i == p.size()) break;
    }
    return pts;
}

// ---- criteria ------------------------------------------------------------

Checker criterion_1_theorem_a(double& seconds) {
    Checker c;
    auto t0 = clock_type::now();
    std::vector<MonomialValuation> vs;
    vs.emplace_back(std::vector<Value>{Value(1), Value(1)});
    vs.emplace_back(std::vector<Value>{Value(1), pi_value()});
    vs.emplace_back(std::vector<Value>{Value(3), Value(2)});
    vs.emplace_back(std::vector<Value>{Value(1), sqrt2_value()});
    std::vector<int> l_list{1, 2, 3, 4, 5};
    auto m_list = grid_15_to_20();
    for (const MonomialValuation& v : vs) {
        Report rep = verify_theorem_a(v, m_list, l_list);
        c.expect(rep.cases.size() == 75, "75 cases per weight vector");
        c.expect(rep.all_pass(), "inclusion failure in suite for weights, see report");
    }
    seconds = std::chrono::duration<double>(clock_type::now() - t0).count();
    c.expect(seconds < 10.0, "runtime exceeded 10 s");
    return c;
}

Checker criterion_2_closed_form_vs_stabilized(double& seconds) {
    Checker c;
    auto t0 = clock_type::now();
    struct Pair {
        Rational a, b;
        std::int64_t m;
    };
    std::vector<Pair> pairs{
        {Rational(1), Rational(1), 3},  {Rational(1), Rational(1), 7},  {Rational(2), Rational(1), 4},
        {Rational(2), Rational(1), 9},  {Rational(3), Rational(2), 5},  {Rational(3), Rational(2), 6},
        {Rational(3), Rational(1), 8},  {Rational(4), Rational(3), 6},  {Rational(5), Rational(2), 7},
        {Rational(5), Rational(3), 9},  {Rational(1), Rational(4), 5},  {Rational(2), Rational(3), 8},
        {Rational(3, 2), Rational(1), 4}, {Rational(5, 2), Rational(1), 6}, {Rational(3, 2), Rational(2), 5},
        {Rational(1), Rational(2), 10}, {Rational(4), Rational(1), 6},  {Rational(5), Rational(4), 8},
        {Rational(7), Rational(2), 9},  {Rational(2), Rational(5), 12},
    };
    c.expect(pairs.size() == 20, "twenty pairs");
    for (const Pair& p : pairs) {
        MonomialValuation v({Value(p.a), Value(p.b)});
        Value m(p.m);
        MonomialIdeal closed = closed_form_jm(v, m);
        MonomialIdeal stabilized = asymptotic_multiplier_ideal(GradedFamily::monomial_valuation(v), m);
        c.expect(closed == stabilized, "closed form differs from the stabilized chain at weights " +
                                           p.a.to_string() + "," + p.b.to_string() +
                                           " m=" + std::to_string(p.m));
        // reached by p <= 8: the chain value at p = 8 already equals the limit
        MonomialIdeal at8 = howald_multiplier_ideal(v.valuation_ideal(m.scaled(BigInt(8))), Rational(1, 8));
        c.expect(at8 == closed, "chain not stabilized by p = 8 at weights " + p.a.to_string() + "," +
                                    p.b.to_string() + " m=" + std::to_string(p.m));
    }
    seconds = std::chrono::duration<double>(clock_type::now() - t0).count();
    return c;
}

Checker criterion_3_volume_1_pi(double& seconds) {
    Checker c;
    auto t0 = clock_type::now();
    MonomialValuation v({Value(1), pi_value()});
    VolumeClosedForm form = exact_monomial_volume(v);
    c.expect(!form.is_rational(), "closed form must stay symbolic");
    c.expect(form.denom.size() == 1 && form.scalar == Rational(1), "closed form is 1/pi");
    // enclosure agrees with 1/pi to twelve digits
    QInterval iv = form.enclosure(Rational(1, BigInt::pow(10, 13).to_int64()));
    Rational ref = Rational::parse("0.318309886183");
    c.expect(iv.lo <= ref + Rational(1, BigInt::pow(10, 12).to_int64()) && ref <= iv.hi,
             "closed-form enclosure disagrees with 1/pi");

    // lattice count at m = 500, within one percent of 0.318310
    std::vector<Value> w{Value(1), pi_value()};
    std::int64_t len = weighted_count_below(w, Value(500));
    c.expect(len == 40120, "lattice count at m = 500 changed (expected 40120)");
    Rational normalized = Rational(2 * len) / Rational(500 * 500);
    Rational target = Rational::parse("0.318310");
    Rational rel = ((normalized / target) - Rational(1)).abs();
    c.expect(rel <= Rational(1, 100), "normalized sample off 0.318310 by more than 1%");
    seconds = std::chrono::duration<double>(clock_type::now() - t0).count();
    c.expect(seconds < 30.0, "runtime exceeded 30 s");
    return c;
}

Checker criterion_4_arc(double& seconds) {
    Checker c;
    auto t0 = clock_type::now();
    Report rep = verify_arc_counterexample(50);
    c.expect(rep.all_pass(), "arc suite failure");
    // spot checks on top of the suite
    ArcValuation av(51);
    for (std::int64_t m = 1; m <= 50; ++m) c.expect(av.ideal_length(m) == m, "length != m");
    for (std::int64_t m = 3; m <= 10; ++m) {
        Polynomial wit = av.witness(m);
        c.expect(av.ideal_contains(wit, m), "witness escaped a_m");
        c.expect(wit.order_at_max_ideal() == 1, "witness order is not 1");
    }
    seconds = std::chrono::duration<double>(clock_type::now() - t0).count();
    return c;
}

Checker criterion_5_zariski(double& seconds) {
    Checker c;
    auto t0 = clock_type::now();
    ZariskiValuation zv = ZariskiValuation::primes_example(8);
    auto alpha = zv.alpha_sequence();
    c.expect(alpha.size() == 8, "eight alpha values at depth 8");
    c.expect(alpha[0] == Rational(3, 5), "alpha_0 = 3/5");
    c.expect(alpha[1] == Rational(10, 17), "alpha_1 = 10/17");
    c.expect(alpha[2] == Rational(105, 179), "alpha_2 = 105/179");
    for (std::size_t i = 1; i < alpha.size(); ++i)
        c.expect(alpha[i] < alpha[i - 1], "alpha sequence not strictly decreasing");

    // reciprocal-sum enclosure, depth 8
    const auto& cs = zv.denominators();
    Rational sum(1), term(1);
    for (std::size_t j = 0; j < cs.size(); ++j) {
        term /= Rational(cs[j]);
        sum += term;
    }
    QInterval enclosure{(sum + term / Rational(cs.back())).reciprocal(), sum.reciprocal()};
    c.expect(Rational(1, 2) < enclosure.lo && enclosure.hi < Rational(1),
             "volume enclosure escapes (1/2, 1)");

    // the count at m = c_3 beta_3 = 358, pinned by the tuple-enumeration oracle
    Rational m = zv.betas()[3] * Rational(cs[3]);
    c.expect(m == Rational(358), "c_3 * beta_3 = 358");
    std::int64_t dp = zv.standard_basis_count(m);
    std::int64_t oracle = 0;
    for (std::int64_t a0 = 0; a0 < cs[0]; ++a0)
        for (std::int64_t a1 = 0; a1 < cs[1]; ++a1)
            for (std::int64_t a2 = 0; a2 < cs[2]; ++a2)
                for (std::int64_t a3 = 0; a3 < cs[3]; ++a3) {
                    Rational used = zv.betas()[0] * Rational(a0) + zv.betas()[1] * Rational(a1) +
                                    zv.betas()[2] * Rational(a2) + zv.betas()[3] * Rational(a3);
                    Rational room = m - used;
                    if (room.sign() <= 0) continue;
                    BigInt cnt = room.is_integer() ? room.numerator() : room.floor() + BigInt(1);
                    oracle += cnt.to_int64();
                }
    c.expect(dp == oracle, "DP count disagrees with the enumeration oracle");
    c.expect(dp == 37923, "count at m = 358 changed (expected 37923)");

    // The sandwich exactly as stated. The lower half cannot hold: the
    // normalized counts 2*count/m^2 descend to the volume from above
    // (0.59179 here against an enclosure at 0.58643), so this check records
    // an honest failure rather than a loosened tolerance.
    Rational normalized = Rational(2 * dp) / (m * m);
    c.expect(enclosure.hi <= alpha[3], "enclosure upper end exceeds alpha_3");
    c.expect(normalized <= enclosure.lo,
             "sandwich lower half fails as stated: 2*count/m^2 = " + normalized.to_decimal(6) +
                 " > enclosure lower end " + enclosure.lo.to_decimal(6) +
                 " (finite normalized counts lie above the volume)");
    seconds = std::chrono::duration<double>(clock_type::now() - t0).count();
    c.expect(seconds < 60.0, "runtime exceeded 60 s");
    return c;
}

Checker criterion_6_izumi(double& seconds) {
    Checker c;
    auto t0 = clock_type::now();
    MonomialValuation ones({Value(1), Value(1)});
    MonomialValuation one_pi({Value(1), pi_value()});
    c.expect(izumi_constant(ones) == std::pair<int, int>(2, 3), "(1,1) gives (p,C) = (2,3)");
    c.expect(izumi_constant(one_pi) == std::pair<int, int>(5, 9), "(1,pi) gives (p,C) = (5,9)");
    Report a = verify_izumi(ones, 1000, 0);
    Report b = verify_izumi(one_pi, 1000, 0);
    c.expect(a.all_pass(), "(1,1) izumi suite failure");
    c.expect(b.all_pass(), "(1,pi) izumi suite failure");
    // the suites include the inclusion cross-check a_(p*l) in m^l, l <= 6
    c.expect(a.cases.size() == 7 && b.cases.size() == 7, "expected 1 + 6 cases per suite");
    seconds = std::chrono::duration<double>(clock_type::now() - t0).count();
    return c;
}

Checker criterion_7_multiplicity_volume(double& seconds) {
    Checker c;
    auto t0 = clock_type::now();
    // (3,2): the ratio at m = 6 is the volume exactly
    GradedFamily F = GradedFamily::monomial_valuation(MonomialValuation({Value(3), Value(2)}));
    std::vector<Rational> six{Rational(6)};
    auto at6 = multiplicity_volume_sequence(F, six);
    c.expect(at6[0].mult == 6 && at6[0].ratio == Rational(1, 6), "e(a_6)/36 = 1/6");

    // (1,pi): ratios pinned by the independent shoelace covolume oracle
    GradedFamily G = GradedFamily::monomial_valuation(MonomialValuation({Value(1), pi_value()}));
    std::vector<Rational> grid{Rational(25), Rational(50), Rational(100)};
    auto seq = multiplicity_volume_sequence(G, grid);
    const std::int64_t expected_mult[3] = {200, 798, 3188};
    const Rational expected_ratio[3] = {Rational(8, 25), Rational(399, 1250), Rational(797, 2500)};
    for (int i = 0; i < 3; ++i) {
        MonomialIdeal am = G.at(Value(grid[static_cast<std::size_t>(i)]));
        c.expect(Rational(seq[static_cast<std::size_t>(i)].mult) == Rational(2) * shoelace_covolume(am),
                 "multiplicity disagrees with the shoelace oracle");
        c.expect(seq[static_cast<std::size_t>(i)].mult == expected_mult[i], "frozen multiplicity changed");
        c.expect(seq[static_cast<std::size_t>(i)].ratio == expected_ratio[i], "frozen ratio changed");
    }
    c.expect(seq[1].ratio < seq[0].ratio && seq[2].ratio < seq[1].ratio, "ratios must decrease");
    // within 5% of 1/pi at m = 100: certified via pi's enclosure
    QInterval piv = RefinableReal::pi()->refine(Rational(1, 1000000));
    Rational r = seq[2].ratio;
    c.expect(r * piv.lo > Rational(19, 20) && r * piv.hi < Rational(21, 20),
             "ratio at m = 100 not within 5% of 1/pi");
    seconds = std::chrono::duration<double>(clock_type::now() - t0).count();
    return c;
}

Checker criterion_8_rees(double& seconds) {
    Checker c;
    auto t0 = clock_type::now();
    MonomialIdeal a = ideal2({{2, 0}, {0, 3}});
    Report ra = verify_rees_bound(a);
    c.expect(ra.all_pass(), "(x^2, y^3) bound failure");
    bool equality = false;
    for (const CaseResult& cr : ra.cases) equality |= cr.actual.find("equality") != std::string::npos;
    c.expect(equality, "(x^2, y^3) must hold with exact equality");

    MonomialIdeal b = ideal2({{2, 0}, {1, 1}, {0, 3}});
    c.expect(multiplicity(b) == 5, "e((x^2, xy, y^3)) = 5");
    auto rees = rees_valuations(b);
    c.expect(rees.size() == 2 && rees[0].min_value == 2 && rees[1].min_value == 3,
             "facet data of (x^2, xy, y^3)");
    Report rb = verify_rees_bound(b);
    c.expect(rb.all_pass(), "(x^2, xy, y^3) bound failure");
    seconds = std::chrono::duration<double>(clock_type::now() - t0).count();
    return c;
}

Checker criterion_9_property_suites(double& seconds) {
    Checker c;
    auto t0 = clock_type::now();

    {  // staircase algebra vs brute-force membership oracle, 200 cases
        std::mt19937_64 rng(1001);
        for (int trial = 0; trial < 200; ++trial) {
            int n = 1 + static_cast<int>(rng() % 3);
            MonomialIdeal I = random_ideal(rng, n, 4, 1 + static_cast<int>(rng() % 4));
            MonomialIdeal J = random_ideal(rng, n, 4, 1 + static_cast<int>(rng() % 4));
            if (I.is_zero() || J.is_zero()) continue;
            Exponents box(static_cast<std::size_t>(n), 0);
            for (const auto& g : I.min_gens())
                for (std::size_t i = 0; i < box.size(); ++i) box[i] = std::max(box[i], g[i]);
            for (const auto& g : J.min_gens())
                for (std::size_t i = 0; i < box.size(); ++i) box[i] = std::max(box[i], g[i]);
            for (auto& x : box) x += 2;
            MonomialIdeal inter = intersect(I, J);
            MonomialIdeal quot = colon(I, J);
            MonomialIdeal prod = product(I, J);
            for (const Exponents& p : box_points(box)) {
                c.expect(inter.contains(p) == (I.contains(p) && J.contains(p)), "intersection oracle");
                bool colon_expected = true;
                for (const auto& g : J.min_gens())
                    colon_expected &= I.contains(exponent_sum(p, g));
                c.expect(quot.contains(p) == colon_expected, "colon oracle");
                bool prod_expected = false;
                for (const Exponents& q : box_points(p)) {
                    if (I.contains(q) && J.contains(exponent_sub_clamped(p, q))) {
                        prod_expected = true;
                        break;
                    }
                }
                c.expect(prod.contains(p) == prod_expected, "product oracle");
            }
        }
    }

    {  // a inside J(a), 200 cases
        std::mt19937_64 rng(1002);
        for (int trial = 0; trial < 200; ++trial) {
            int n = 2 + static_cast<int>(rng() % 2);
            MonomialIdeal I = random_finite_colength_ideal(rng, n, 4, 2);
            c.expect(is_subideal(I, howald_multiplier_ideal(I, Rational(1))), "a inside J(a)");
        }
    }

    {  // subadditivity J(lc a) inside J(c a)^l, 50 ideals x 8 combos
        std::mt19937_64 rng(1003);
        const Rational cs[] = {Rational(1, 3), Rational(1, 2), Rational(1), Rational(3, 2)};
        for (int trial = 0; trial < 50; ++trial) {
            int n = 2 + static_cast<int>(rng() % 2);
            MonomialIdeal I = random_finite_colength_ideal(rng, n, 3, 2);
            for (const Rational& cc : cs) {
                for (std::int64_t l : {2, 3}) {
                    c.expect(is_subideal(howald_multiplier_ideal(I, cc * Rational(l)),
                                         power(howald_multiplier_ideal(I, cc), l)),
                             "subadditivity");
                }
            }
        }
    }

    {  // graded family axioms across the combinators
        std::mt19937_64 rng(1004);
        MonomialIdeal base = ideal2({{2, 0}, {1, 1}, {0, 3}});
        std::vector<GradedFamily> families;
        families.push_back(GradedFamily::powers(base));
        families.push_back(GradedFamily::closure_powers(base));
        families.push_back(GradedFamily::monomial_valuation(MonomialValuation({Value(3), Value(2)})));
        families.push_back(GradedFamily::monomial_valuation(MonomialValuation({Value(1), pi_value()})));
        families.push_back(GradedFamily::veronese(
            GradedFamily::monomial_valuation(MonomialValuation({Value(1), Value(1)})), Value(2)));
        families.push_back(
            GradedFamily::product(GradedFamily::monomial_valuation(MonomialValuation({Value(1), Value(2)})),
                                  GradedFamily::monomial_valuation(MonomialValuation({Value(2), Value(1)}))));
        families.push_back(GradedFamily::intersection(
            GradedFamily::monomial_valuation(MonomialValuation({Value(1), Value(2)})),
            GradedFamily::monomial_valuation(MonomialValuation({Value(2), Value(1)}))));
        for (const GradedFamily& F : families) {
            c.expect(F.at(Value(0)).is_unit(), "a_0 = R");
            for (int trial = 0; trial < 30; ++trial) {
                std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 6);
                std::int64_t l = 1 + static_cast<std::int64_t>(rng() % 6);
                c.expect(is_subideal(product(F.at(Value(m)), F.at(Value(l))), F.at(Value(m + l))),
                         "superadditivity a_m a_l inside a_(m+l)");
                if (m >= l) c.expect(is_subideal(F.at(Value(m)), F.at(Value(l))), "filtration");
            }
        }
    }

    {  // Veronese volume scaling through closed forms, 200 combos
        std::mt19937_64 rng(1005);
        for (int trial = 0; trial < 200; ++trial) {
            std::int64_t a = 1 + static_cast<std::int64_t>(rng() % 5);
            std::int64_t b = 1 + static_cast<std::int64_t>(rng() % 5);
            std::int64_t m0 = 1 + static_cast<std::int64_t>(rng() % 8);
            GradedFamily base = GradedFamily::monomial_valuation(MonomialValuation({Value(a), Value(b)}));
            auto vol = closed_form_volume(GradedFamily::veronese(base, Value(m0)));
            c.expect(vol.has_value() && vol->exact_rational() == Rational(m0 * m0) / Rational(a * b),
                     "veronese volume scaling");
        }
    }

    {  // multiplicity by covolume vs Hilbert-Samuel finite differences
        std::mt19937_64 rng(1006);
        for (int trial = 0; trial < 10; ++trial) {
            int n = 2 + static_cast<int>(rng() % 2);
            int max_deg = n == 3 ? 3 : 5;
            MonomialIdeal I = random_finite_colength_ideal(rng, n, max_deg, 2);
            Exponent d = 0;
            for (const auto& g : I.min_gens()) d = std::max(d, total_degree(g));
            std::int64_t start = static_cast<std::int64_t>(n) * d;
            std::vector<std::int64_t> lengths;
            for (std::int64_t ell = start; ell <= start + n; ++ell)
                lengths.push_back(power(I, ell).length_of_quotient());
            for (int k = 0; k < n; ++k) {
                for (std::size_t i = 0; i + 1 < lengths.size(); ++i)
                    lengths[i] = lengths[i + 1] - lengths[i];
                lengths.pop_back();
            }
            c.expect(multiplicity(I) == lengths[0],
                     "multiplicity disagrees with the finite-difference oracle");
        }
    }

    seconds = std::chrono::duration<double>(clock_type::now() - t0).count();
    c.expect(seconds < 300.0, "runtime exceeded 5 minutes");
    return c;
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* label;
        Checker (*fn)(double&);
    };
    const Entry entries[] = {
        {1, "theorem-a inclusions on four weight vectors", criterion_1_theorem_a},
        {2, "closed form equals stabilized multiplier ideals", criterion_2_closed_form_vs_stabilized},
        {3, "volume of the (1,pi) family", criterion_3_volume_1_pi},
        {4, "arc counterexample suite", criterion_4_arc},
        {5, "zariski prime example", criterion_5_zariski},
        {6, "izumi constants and random bound", criterion_6_izumi},
        {7, "multiplicity-volume limit", criterion_7_multiplicity_volume},
        {8, "rees multiplicity bound", criterion_8_rees},
        {9, "randomized property suites", criterion_9_property_suites},
    };
    int failures = 0;
    for (const Entry& e : entries) {
        double seconds = 0.0;
        Checker c;
        try {
            c = e.fn(seconds);
        } catch (const std::exception& ex) {
            c.ok = false;
            c.detail = std::string("exception: ") + ex.what();
        }
        if (c.ok) {
            std::printf("[PASS] criterion %d: %s (%.2f s)\n", e.id, e.label, seconds);
        } else {
            std::printf("[FAIL] criterion %d: %s (%.2f s) -- %s\n", e.id, e.label, seconds,
                        c.detail.c_str());
            ++failures;
        }
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
