#include "valvol/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "valvol/errors.hpp"
#include "valvol/harness.hpp"

namespace valvol {

namespace {

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i <= s.size()) {
        std::size_t j = s.find(',', i);
        if (j == std::string::npos) j = s.size();
        out.push_back(s.substr(i, j - i));
        i = j + 1;
        if (j == s.size()) break;
    }
    return out;
}

struct CommonOpts {
    std::string config_path;
    std::string out_path;
    int depth_cap = 0;  // 0: keep the config/default value
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string m_max;
    int samples = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON configuration file");
        cmd->add_option("--out", out_path, "write the JSON report here");
        cmd->add_option("--depth", depth_cap, "refinement depth cap for certified comparisons");
        cmd->add_option("--seed", seed, "seed for randomized cases")->each([this](const std::string&) {
            seed_set = true;
        });
        cmd->add_option("--m-max", m_max, "sampling grid upper limit");
        cmd->add_option("--samples", samples, "number of grid samples");
    }

    Config load() const {
        Config cfg = config_path.empty() ? Config{} : Config::from_file(config_path);
        if (depth_cap > 0) cfg.depth_cap = depth_cap;
        if (seed_set) cfg.seed = seed;
        if (!m_max.empty()) cfg.m_max = Rational::parse(m_max);
        if (samples > 0) cfg.samples = samples;
        if (!out_path.empty()) cfg.out_path = out_path;
        Value::set_default_depth_cap(cfg.depth_cap);
        return cfg;
    }
};

MonomialValuation weights_or_config(const std::string& weights_csv, const Config& cfg) {
    if (!weights_csv.empty()) {
        std::vector<Value> w;
        for (const std::string& tok : split_commas(weights_csv))
            w.push_back(parse_value(tok, cfg.custom_generators));
        return MonomialValuation(std::move(w));
    }
    if (cfg.monomial) return *cfg.monomial;
    throw ConfigError("no weights given: pass --weights or a config with a monomial valuation");
}

MonomialIdeal gens_or_config(const std::string& gens_csv, const Config& cfg) {
    if (!gens_csv.empty()) {
        std::vector<Exponents> gens;
        for (const std::string& tok : split_commas(gens_csv))
            gens.push_back(parse_monomial(tok, cfg.variables));
        return MonomialIdeal::from_generators(static_cast<int>(cfg.variables.size()), std::move(gens));
    }
    if (cfg.ideal) return *cfg.ideal;
    throw ConfigError("no ideal given: pass --gens or a config with an ideal");
}

void write_out(const Config& cfg, const std::string& json_text) {
    if (!cfg.out_path) return;
    std::ofstream f(*cfg.out_path);
    if (!f) throw ConfigError("cannot write to '" + *cfg.out_path + "'");
    f << json_text << "\n";
}

GradedFamily family_from_config(const Config& cfg) {
    if (cfg.monomial) return GradedFamily::monomial_valuation(*cfg.monomial);
    if (cfg.arc) return GradedFamily::arc(*cfg.arc);
    if (cfg.zariski) return GradedFamily::zariski(*cfg.zariski);
    if (cfg.ideal) return GradedFamily::powers(*cfg.ideal);
    throw ConfigError("config does not define a family (valuation or ideal)");
}

std::vector<Value> default_m_grid() {
    std::vector<Value> m;
    for (std::int64_t k = 1; k <= 10; ++k) m.push_back(Value(k));
    for (std::int64_t k = 12; k <= 20; k += 2) m.push_back(Value(k));
    return m;
}

int emit_report(const Report& rep, const Config& cfg, std::ostream& out) {
    out << rep.to_table();
    write_out(cfg, rep.to_json_string());
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact valuation ideals, multiplier ideals, and volumes"};
    app.name("valvol");
    app.require_subcommand(1);

    // ideal
    auto* c_ideal = app.add_subcommand("ideal", "valuation ideal at an index");
    CommonOpts o_ideal;
    o_ideal.attach(c_ideal);
    std::string ideal_weights, ideal_m{"1"};
    c_ideal->add_option("--weights", ideal_weights, "comma-separated weights, e.g. 1,pi");
    c_ideal->add_option("--m", ideal_m, "index value");

    // multiplier
    auto* c_mult = app.add_subcommand("multiplier", "monomial multiplier ideal");
    CommonOpts o_mult;
    o_mult.attach(c_mult);
    std::string mult_gens, mult_c{"1"};
    c_mult->add_option("--gens", mult_gens, "monomial generators, e.g. x^2,y^3");
    c_mult->add_option("--c", mult_c, "coefficient, e.g. 5/6");

    // asymptotic
    auto* c_asym = app.add_subcommand("asymptotic", "asymptotic multiplier ideal");
    CommonOpts o_asym;
    o_asym.attach(c_asym);
    std::string asym_weights, asym_m{"1"};
    bool asym_probe = false;
    c_asym->add_option("--weights", asym_weights, "comma-separated weights");
    c_asym->add_option("--m", asym_m, "index value");
    c_asym->add_flag("--probe", asym_probe, "also print the colon-ideal probe e(a_m : j_m)/m^n");

    // volume
    auto* c_vol = app.add_subcommand("volume", "volume of a graded family");
    CommonOpts o_vol;
    o_vol.attach(c_vol);
    std::string vol_weights;
    int vol_p = 0;
    c_vol->add_option("--weights", vol_weights, "weights for a monomial-valuation family");
    c_vol->add_option("--p", vol_p, "p-volume normalization exponent");

    // verify
    auto* c_verify = app.add_subcommand("verify", "run a verification suite");
    CommonOpts o_verify;
    o_verify.attach(c_verify);
    std::string suite;
    c_verify->add_option("suite", suite, "theorem-a | delta | izumi | arc | minkowski | rees | zariski | all")
        ->required();
    std::string verify_weights;
    c_verify->add_option("--weights", verify_weights, "weights override for valuation suites");

    // zariski
    auto* c_zar = app.add_subcommand("zariski", "key-polynomial volume experiment");
    CommonOpts o_zar;
    o_zar.attach(c_zar);
    int zar_depth = 8, zar_count_depth = 3;
    c_zar->add_option("--zariski-depth", zar_depth, "key-polynomial depth for the primes rule");
    c_zar->add_option("--count-depth", zar_count_depth, "deepest index for the count sandwich");

    // izumi
    auto* c_izumi = app.add_subcommand("izumi", "linear comparability constants");
    CommonOpts o_izumi;
    o_izumi.attach(c_izumi);
    std::string izumi_weights;
    int izumi_trials = 0;
    c_izumi->add_option("--weights", izumi_weights, "comma-separated weights");
    c_izumi->add_option("--trials", izumi_trials, "random polynomial count");

    // rees
    auto* c_rees = app.add_subcommand("rees", "multiplicity bound from Rees valuations");
    CommonOpts o_rees;
    o_rees.attach(c_rees);
    std::string rees_gens;
    c_rees->add_option("--gens", rees_gens, "monomial generators, e.g. x^2,y^3");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*c_ideal) {
            Config cfg = o_ideal.load();
            MonomialValuation v = weights_or_config(ideal_weights, cfg);
            Value m = parse_value(ideal_m, cfg.custom_generators);
            MonomialIdeal I = v.valuation_ideal(m);
            out << I.to_string(cfg.variables) << "\n";
            write_out(cfg, ideal_to_json_string(I));
            return 0;
        }
        if (*c_mult) {
            Config cfg = o_mult.load();
            MonomialIdeal I = gens_or_config(mult_gens, cfg);
            Rational c = Rational::parse(mult_c);
            MonomialIdeal J = howald_multiplier_ideal(I, c);
            out << J.to_string(cfg.variables) << "\n";
            write_out(cfg, ideal_to_json_string(J));
            return 0;
        }
        if (*c_asym) {
            Config cfg = o_asym.load();
            MonomialValuation v = weights_or_config(asym_weights, cfg);
            Value m = parse_value(asym_m, cfg.custom_generators);
            MonomialIdeal closed = closed_form_jm(v, m);
            MonomialIdeal stabilized =
                asymptotic_multiplier_ideal(GradedFamily::monomial_valuation(v), m);
            out << "closed-form: " << closed.to_string(cfg.variables) << "\n";
            out << "stabilized:  " << stabilized.to_string(cfg.variables) << "\n";
            out << (closed == stabilized ? "agree\n" : "DISAGREE\n");
            if (asym_probe) {
                std::vector<Rational> grid;
                for (int k = 1; k <= 8; ++k) grid.push_back(Rational(4 * k));
                out << "m\te(a_m : j_m)\tratio\n";
                for (const MultVolSample& s : colon_probe_sequence(v, grid)) {
                    out << s.m.to_string() << "\t" << s.mult << "\t" << s.ratio.to_decimal(9) << "\n";
                }
            }
            write_out(cfg, ideal_to_json_string(stabilized));
            return closed == stabilized ? 0 : 1;
        }
        if (*c_vol) {
            Config cfg = o_vol.load();
            GradedFamily F = vol_weights.empty()
                                 ? family_from_config(cfg)
                                 : GradedFamily::monomial_valuation(weights_or_config(vol_weights, cfg));
            Rational m_max = cfg.m_max.value_or(Rational(40));
            VolumeEstimate est = vol_p > 0 ? p_volume_estimate(F, vol_p, Value(m_max), cfg.samples)
                                           : volume_estimate(F, Value(m_max), cfg.samples);
            out << volume_estimate_to_tsv(est);
            write_out(cfg, volume_estimate_to_json_string(est));
            return 0;
        }
        if (*c_zar) {
            Config cfg = o_zar.load();
            ZariskiValuation zv = cfg.zariski ? *cfg.zariski : ZariskiValuation::primes_example(zar_depth);
            Report rep = zariski_volume_report(zv, std::min(zar_count_depth, cfg.count_depth));
            return emit_report(rep, cfg, out);
        }
        if (*c_izumi) {
            Config cfg = o_izumi.load();
            MonomialValuation v = weights_or_config(izumi_weights, cfg);
            Report rep = verify_izumi(v, izumi_trials > 0 ? izumi_trials : cfg.trials, cfg.seed);
            return emit_report(rep, cfg, out);
        }
        if (*c_rees) {
            Config cfg = o_rees.load();
            MonomialIdeal I = gens_or_config(rees_gens, cfg);
            Report rep = verify_rees_bound(I);
            out << rep.to_table();
            out << "newton: " << polyhedron_to_json_string(newton_polyhedron(I)) << "\n";
            write_out(cfg, rep.to_json_string());
            return rep.all_pass() ? 0 : 1;
        }
        if (*c_verify) {
            Config cfg = o_verify.load();
            auto valuation = [&]() { return weights_or_config(verify_weights, cfg); };
            std::vector<Value> m_list = cfg.m_list.empty() ? default_m_grid() : cfg.m_list;
            std::vector<int> l_list = cfg.l_list.empty() ? std::vector<int>{1, 2, 3, 4, 5} : cfg.l_list;
            auto run_one = [&](const std::string& name) -> Report {
                if (name == "theorem-a") return verify_theorem_a(valuation(), m_list, l_list);
                if (name == "delta") return verify_delta_bound(valuation(), m_list);
                if (name == "izumi") return verify_izumi(valuation(), cfg.trials, cfg.seed);
                if (name == "arc") {
                    int depth = cfg.arc ? cfg.arc->depth() - 1 : 50;
                    return verify_arc_counterexample(depth);
                }
                if (name == "minkowski") {
                    MonomialValuation f = valuation();
                    MonomialValuation g = cfg.monomial_second ? *cfg.monomial_second : f;
                    return verify_minkowski(f, g, cfg.m_max.value_or(Rational(40)), cfg.samples);
                }
                if (name == "rees") return verify_rees_bound(gens_or_config("", cfg));
                if (name == "zariski") {
                    ZariskiValuation zv =
                        cfg.zariski ? *cfg.zariski : ZariskiValuation::primes_example(8);
                    return zariski_volume_report(zv, cfg.count_depth);
                }
                throw ConfigError("unknown suite '" + name + "'");
            };
            if (suite == "all") {
                std::vector<std::string> names = cfg.suites;
                if (names.empty()) names = {"theorem-a", "delta", "izumi"};
                int rc = 0;
                std::string combined;
                for (const std::string& name : names) {
                    Report rep = run_one(name);
                    out << rep.to_table() << "\n";
                    combined += rep.to_json_string() + "\n";
                    rc = std::max(rc, rep.all_pass() ? 0 : 1);
                }
                if (cfg.out_path) {
                    std::ofstream f(*cfg.out_path);
                    if (!f) throw ConfigError("cannot write to '" + *cfg.out_path + "'");
                    f << combined;
                }
                return rc;
            }
            return emit_report(run_one(suite), cfg, out);
        }
    } catch (const ConfigError& ex) {
        err << "config error: " << ex.what() << "\n";
        return 2;
    } catch (const Error& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace valvol
