#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "valvol/asymptotics.hpp"
#include "valvol/graded_family.hpp"

namespace valvol {

// One checked statement: what went in, what was expected, what came out.
// Failures always carry a witness that replays the violation.
struct CaseResult {
    enum class Status { Pass, Fail, Skipped };
    std::string inputs;
    std::string expected;
    std::string actual;
    Status status = Status::Pass;
    std::optional<std::string> witness;
};

struct Report {
    std::string suite;
    std::vector<std::string> notes;
    std::vector<CaseResult> cases;

    int count(CaseResult::Status s) const;
    bool all_pass() const { return count(CaseResult::Status::Fail) == 0; }

    std::string to_json_string(int indent = 2) const;
    // Human-readable: header notes, one TSV row per case, summary line.
    std::string to_table() const;
};

// Uniform approximation of valuation ideals by powers: a_m^l inside a_{ml}
// inside a_{m-e}^l with e the weight sum; indices below e compare against
// the whole ring.
Report verify_theorem_a(const MonomialValuation& v, std::span<const Value> m_list,
                        std::span<const int> l_list);

// x_1..x_n * j_m lands in a_m for each m.
Report verify_delta_bound(const MonomialValuation& v, std::span<const Value> m_list);

// Linear comparability: value <= C * order for random polynomials, plus the
// inclusion cross-check a_{p l} inside m^l.
Report verify_izumi(const MonomialValuation& v, int trial_count, std::uint64_t seed);

// vol(F cap G)^(1/n) <= vol(FG)^(1/n) <= vol(F)^(1/n) + vol(G)^(1/n), with
// sampled middle terms and exact closed-form outer terms.
Report verify_minkowski(const MonomialValuation& f, const MonomialValuation& g, const Rational& m_max,
                        int sample_count);

// e(I)^(1/n) <= sum e_i vol(nu_i)^(1/n) over the Rees valuations of I.
Report verify_rees_bound(const MonomialIdeal& I);

// The arc family: colength m at level m, order-one witnesses, unit
// asymptotic multiplier ideals, zero volume but 1-volume one.
Report verify_arc_counterexample(int depth);

// Alpha sequence, reciprocal-sum enclosure, and the finite-index sandwich
// checks for a key-polynomial valuation.
Report zariski_volume_report(const ZariskiValuation& v, int count_depth);

// [lo, hi] with lo^k <= q <= hi^k, width <= max_width.
QInterval kth_root_enclosure(const Rational& q, int k, const Rational& max_width);

// Serialization used by the CLI and the reports.
std::string value_to_json_string(const Value& v);
std::string ideal_to_json_string(const MonomialIdeal& I);
std::string polynomial_to_json_string(const Polynomial& f);
std::string polyhedron_to_json_string(const NewtonPolyhedron& P);
std::string volume_estimate_to_json_string(const VolumeEstimate& e);
std::string volume_estimate_to_tsv(const VolumeEstimate& e);

// Strictly validated run configuration (unknown keys are errors).
struct Config {
    std::vector<std::string> variables{"x", "y"};
    std::optional<MonomialValuation> monomial;
    std::optional<ArcValuation> arc;
    std::optional<ZariskiValuation> zariski;
    std::optional<MonomialValuation> monomial_second;  // second family for minkowski
    std::vector<std::string> suites;
    std::vector<Value> m_list;
    std::vector<int> l_list;
    std::optional<Rational> m_max;
    int samples = 40;
    int depth_cap = 64;
    std::uint64_t seed = 0;
    int count_depth = 3;
    int trials = 1000;
    std::optional<MonomialIdeal> ideal;
    std::optional<std::string> out_path;
    std::map<std::string, RefinablePtr> custom_generators;

    static Config from_json_text(const std::string& text);
    static Config from_file(const std::string& path);
};

// "3/2", "pi", "2*sqrt2", "1+pi", "4-1*pi"; names resolve through the
// built-ins and the supplied table.
Value parse_value(const std::string& text,
                  const std::map<std::string, RefinablePtr>& generators = {});

// "x^2*y" with variables assigned by position.
Exponents parse_monomial(const std::string& text, const std::vector<std::string>& variables);

}  // namespace valvol
