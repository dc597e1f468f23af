#include <aoisched/acceptance.hpp>
#include <aoisched/bounds.hpp>
#include <aoisched/error.hpp>
#include <aoisched/experiment.hpp>
#include <aoisched/generators.hpp>
#include <aoisched/oracle.hpp>
#include <aoisched/rounding.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace aoisched;

namespace {

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Parameters given as key=value words after the family name.
textio::Document parse_params(const std::vector<std::string>& words) {
    std::string text;
    for (const auto& w : words) {
        const auto eq = w.find('=');
        if (eq == std::string::npos) fail(ErrorCode::ConfigError, "expected key=value, got '" + w + "'");
        text += w.substr(0, eq) + " = " + w.substr(eq + 1) + "\n";
    }
    return textio::Document::parse(text);
}

double num(const textio::Document& d, const std::string& key, double fallback) {
    const auto v = d.find(key);
    return v ? textio::parse_double(*v) : fallback;
}

std::int64_t integer(const textio::Document& d, const std::string& key, std::int64_t fallback) {
    const auto v = d.find(key);
    return v ? textio::parse_int(*v) : fallback;
}

int cmd_run(const std::string& path, std::int64_t threads, const std::string& out_dir) {
    auto cfg = ExperimentConfig::from_document(textio::Document::read_file(path));
    if (threads >= 0) cfg.threads = threads;
    if (!out_dir.empty()) cfg.output_dir = out_dir;
    const auto result = run_experiment(cfg);
    write_artifacts(cfg, result);
    std::cout << "wrote " << cfg.output_dir << "/" << to_string(cfg.family) << ".csv ("
              << (result.table_header.empty() ? result.rows.size() : result.table_lines.size())
              << " rows, " << textio::format_double(result.wall_seconds) << " s)\n";
    for (const auto& f : result.failures) std::cerr << "failure: " << f << '\n';
    return result.failures.empty() ? 0 : 1;
}

struct BoundsArgs {
    double c_min = 1.0;
    double c_max = 1.0;
    double lambda = 1.0;
    double delta_a_max = 1.0;
    double t_off = 0.0;
    std::int64_t t_est = 1;
    double delta_e_max = 0.0;
    double e_min = 1.0;
    bool csv = false;
};

int cmd_bounds(const BoundsArgs& a) {
    struct Line {
        const char* name;
        BoundValues v;
    };
    const auto ml = ml_bounds(a.c_min, a.c_max, a.lambda);
    const Line lines[] = {
        {"competitive", cr_bound(a.c_min, a.c_max)},
        {"robustness", ml.robustness},
        {"consistency", ml.consistency},
        {"intermittent", intermittent_bound(a.c_min, a.c_max, a.delta_a_max, a.t_off)},
        {"revised", revised_bound(a.c_min, a.c_max)},
    };
    const double pre = adaptive_preconstant(a.t_est, a.delta_e_max, a.e_min);
    if (a.csv) {
        std::cout << "bound,C_m,C_M,lambda,delta_a_max,t_off,finite,asymptotic\n";
        for (const auto& l : lines)
            std::cout << l.name << ',' << textio::format_double(a.c_min) << ','
                      << textio::format_double(a.c_max) << ',' << textio::format_double(a.lambda)
                      << ',' << textio::format_double(a.delta_a_max) << ','
                      << textio::format_double(a.t_off) << ','
                      << textio::format_double(l.v.finite_ratio) << ','
                      << textio::format_double(l.v.asymptotic_ratio) << '\n';
        std::cout << "adaptive_preconstant,,,,,," << textio::format_double(pre) << ",\n";
        return 0;
    }
    std::cout << "C_m = " << textio::format_double(a.c_min) << ", C_M = " << textio::format_double(a.c_max)
              << ", R = " << textio::format_double(a.c_max / a.c_min)
              << ", lambda = " << textio::format_double(a.lambda) << "\n\n";
    std::printf("%-22s %14s %14s\n", "bound", "finite", "asymptotic");
    for (const auto& l : lines)
        std::printf("%-22s %14.9f %14.9f\n", l.name, l.v.finite_ratio, l.v.asymptotic_ratio);
    std::printf("%-22s %14.9f\n", "adaptive_preconstant", pre);
    return 0;
}

int cmd_oracle(const std::string& path, const std::string& aging_name, bool enumerate) {
    const Instance inst = instance_from_text(read_text(path));
    const AgingModel aging = AgingModel::from_name(aging_name);
    const auto result = enumerate ? opt_enumerate(inst, aging) : opt_dp(inst, aging);
    result.to_document().write(std::cout);
    return 0;
}

int cmd_simulate(const std::string& path, const std::string& engine, const std::string& theta,
                 const std::string& aging_name, std::uint64_t seed, bool trace) {
    const Instance inst = instance_from_text(read_text(path));
    RunConfig rc{{variant_from_name(engine), ThetaPolicy::from_name(theta)},
                 inst,
                 AgingModel::from_name(aging_name),
                 AdviceInput::none(),
                 seed,
                 1,
                 nullptr};
    const auto result = run_online(rc);
    result.record.to_document(true).write(std::cout);
    if (trace) {
        FractionalEngine e(inst.cost_bounds(), rc.engine);
        e.set_trace(&std::cerr);
        for (Slot t = 1; t <= inst.horizon(); ++t) {
            const Age arrivals = inst.delta(t) + (t == 1 ? inst.initial_age() : 0);
            e.step({t, arrivals, inst.cost(t), false, inst.on(t)});
        }
    }
    return 0;
}

int cmd_gen(const std::string& family, const std::vector<std::string>& words) {
    const auto p = parse_params(words);
    if (family == "cost-jump") {
        std::cout << to_text(gen_cost_jump(num(p, "c_min", 1), num(p, "ratio", 2), integer(p, "T", 10)));
    } else if (family == "age-jump" || family == "off-run") {
        const auto c = integer(p, "c_min", 2);
        const auto pair = family == "age-jump" ? gen_age_jump_pair(c) : gen_off_run_pair(c);
        std::cout << to_text(integer(p, "which", 1) == 2 ? pair.second : pair.first);
    } else if (family == "stochastic") {
        GilbertElliottCosts ge;
        ge.tr_p = num(p, "tr_p", 0.2);
        ge.tr_q = num(p, "tr_q", 0.8);
        ge.c_low = num(p, "c_min", 1);
        ge.c_high = ge.c_low * num(p, "ratio", 1);
        const auto env = gen_stochastic_env(ge, num(p, "opportunity_rate", 0.7), integer(p, "T", 100),
                                            AgingModel::from_name(p.get_or("aging", "exogenous")),
                                            static_cast<std::uint64_t>(integer(p, "seed", 1)));
        std::cout << to_text(env.instance);
    } else if (family == "random") {
        RandomInstanceSpec spec;
        spec.min_horizon = integer(p, "min_T", 1);
        spec.max_horizon = integer(p, "T", 15);
        spec.max_delta = integer(p, "max_delta", 3);
        spec.max_initial_age = integer(p, "max_initial_age", 3);
        spec.bounds = {num(p, "c_min", 1), num(p, "c_max", 1)};
        spec.on_probability = num(p, "on_probability", 1);
        spec.max_off_run = integer(p, "max_off_run", -1);
        Rng rng(static_cast<std::uint64_t>(integer(p, "seed", 1)), streams::kInstance);
        std::cout << to_text(gen_random_instance(spec, rng));
    } else if (family == "config") {
        auto cfg = ExperimentConfig::defaults(family_from_name(p.get("family")));
        cfg.to_document().write(std::cout);
    } else {
        fail(ErrorCode::ConfigError, "unknown generator family '" + family +
                                         "' (cost-jump, age-jump, off-run, stochastic, random, config)");
    }
    return 0;
}

int cmd_verify(const std::string& level, const std::vector<int>& only, std::int64_t threads) {
    AcceptanceOptions opt;
    opt.level = level == "full" ? VerifyLevel::Full : VerifyLevel::Quick;
    opt.only = only;
    opt.threads = threads;
    opt.progress = &std::cout;
    const auto report = run_acceptance(opt);
    const bool ok = report.all_pass();
    std::cout << (ok ? "all criteria passed\n" : "some criteria failed\n");
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Online age-of-information update scheduling toolkit"};
    app.set_version_flag("--version", AOISCHED_VERSION);
    app.require_subcommand(1);

    std::string config_path, out_dir;
    std::int64_t threads = -1;
    auto* run = app.add_subcommand("run", "Run an experiment configuration");
    run->add_option("config", config_path, "Configuration file")->required();
    run->add_option("--threads", threads, "Worker threads (0: all cores)");
    run->add_option("--out", out_dir, "Override output_dir");

    BoundsArgs ba;
    auto* bounds = app.add_subcommand("bounds", "Print the guarantee formulas for given inputs");
    bounds->add_option("--c-min", ba.c_min, "C_m");
    bounds->add_option("--c-max", ba.c_max, "C_M");
    bounds->add_option("--lambda", ba.lambda, "Trust parameter");
    bounds->add_option("--delta-a-max", ba.delta_a_max, "Largest arrival batch");
    bounds->add_option("--t-off", ba.t_off, "Longest OFF stretch");
    bounds->add_option("--t-est", ba.t_est, "Cost sampling period");
    bounds->add_option("--delta-e-max", ba.delta_e_max, "Largest cost change between samples");
    bounds->add_option("--e-min", ba.e_min, "Smallest cost");
    bounds->add_flag("--csv", ba.csv, "CSV output");

    std::string instance_path, aging = "exogenous";
    bool enumerate = false;
    auto* oracle = app.add_subcommand("oracle", "Offline optimum of an instance file");
    oracle->add_option("instance", instance_path, "Instance file")->required();
    oracle->add_option("--aging", aging, "exogenous, linear or exp:<rate>");
    oracle->add_flag("--enumerate", enumerate, "Exhaustive search instead of the DP");

    std::string engine = "intermittent", theta = "default";
    std::uint64_t seed = 1;
    bool trace = false;
    auto* simulate = app.add_subcommand("simulate", "One rounded online run on an instance file");
    simulate->add_option("instance", instance_path, "Instance file")->required();
    simulate->add_option("--engine", engine, "basic, ml, intermittent, ml_intermittent");
    simulate->add_option("--theta", theta, "default, revised, ml:<l>, ml_revised:<l>, adaptive:<T>");
    simulate->add_option("--aging", aging, "exogenous, linear or exp:<rate>");
    simulate->add_option("--seed", seed, "Rounding seed");
    simulate->add_flag("--trace", trace, "Per-slot fractional trace on stderr");

    std::string family;
    std::vector<std::string> params;
    auto* gen = app.add_subcommand("gen", "Generate an instance or a default configuration");
    gen->add_option("family", family, "cost-jump, age-jump, off-run, stochastic, random, config")->required();
    gen->add_option("params", params, "key=value parameters");

    std::string level = "quick";
    std::vector<int> only;
    auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
    verify->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--only", only, "Criteria to run")->delimiter(',');
    verify->add_option("--threads", threads, "Worker threads (0: all cores)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) return cmd_run(config_path, threads, out_dir);
        if (*bounds) return cmd_bounds(ba);
        if (*oracle) return cmd_oracle(instance_path, aging, enumerate);
        if (*simulate) return cmd_simulate(instance_path, engine, theta, aging, seed, trace);
        if (*gen) return cmd_gen(family, params);
        if (*verify) return cmd_verify(level, only, threads < 0 ? 0 : threads);
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
