#include <aoisched/experiment.hpp>

#include <aoisched/acceptance.hpp>
#include <aoisched/bounds.hpp>
#include <aoisched/error.hpp>
#include <aoisched/fractional.hpp>
#include <aoisched/oracle.hpp>
#include <aoisched/rounding.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

namespace aoisched {

namespace {

struct FamilyName {
    Family family;
    const char* name;
};

constexpr FamilyName kFamilies[] = {
    {Family::Fig3, "fig3"},
    {Family::Fig4, "fig4"},
    {Family::Fig5, "fig5"},
    {Family::Fig6, "fig6"},
    {Family::Fig7, "fig7"},
    {Family::Fig8, "fig8"},
    {Family::Fig9, "fig9"},
    {Family::Fig10, "fig10"},
    {Family::BoundsCurve, "bounds-curve"},
    {Family::AdversarialAudit, "adversarial-audit"},
    {Family::InvariantSuite, "invariant-suite"},
};

const std::vector<double> kLambdaGrid{1e-5, 0.25, 0.5, 0.75, 1.0};

std::string opt_str(const std::optional<double>& v) {
    return v ? textio::format_double(*v) : std::string();
}

struct MeanStd {
    double mean = 0.0;
    double std = 0.0;
};

MeanStd mean_std(const std::vector<double>& v) {
    MeanStd out;
    if (v.empty()) return out;
    double sum = 0.0;
    for (double x : v) sum += x;
    out.mean = sum / static_cast<double>(v.size());
    if (v.size() > 1) {
        double ss = 0.0;
        for (double x : v) ss += (x - out.mean) * (x - out.mean);
        out.std = std::sqrt(ss / static_cast<double>(v.size() - 1));
    }
    return out;
}

// Runs tasks on a fixed pool; each task owns its output slot.
void parallel_for(std::size_t n, std::int64_t threads, const std::function<void(std::size_t)>& body) {
    std::size_t workers = threads > 0 ? static_cast<std::size_t>(threads)
                                      : std::max(1U, std::thread::hardware_concurrency());
    workers = std::min(workers, std::max<std::size_t>(n, 1));
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (std::size_t i = next++; i < n; i = next++) body(i);
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
}

struct CellOutput {
    std::vector<ResultRow> rows;
    std::vector<std::string> lines;
    std::vector<std::string> failures;
    std::vector<std::uint64_t> seeds;
};

ResultRow base_row(const ExperimentConfig& cfg, double r, double c_min) {
    ResultRow row;
    row.family = to_string(cfg.family);
    row.tr_p = cfg.tr_p;
    row.tr_q = cfg.tr_q;
    row.ratio_r = r;
    row.c_min = c_min;
    row.aging = cfg.aging;
    row.horizon = cfg.horizon;
    row.seeds = cfg.seeds;
    return row;
}

ResultRow finish_row(ResultRow row, std::string algorithm, std::vector<double> samples, double opt) {
    const auto ms = mean_std(samples);
    row.algorithm = std::move(algorithm);
    row.mean_cost = ms.mean;
    row.std_cost = ms.std;
    row.opt = opt;
    row.ratio = ms.mean / opt;
    row.samples = std::move(samples);
    return row;
}

double time_average(double total, std::int64_t horizon) { return total / static_cast<double>(horizon); }

// Mean realized time-average cost over the rounding replications.
double online_cost(const Instance& inst, const AgingModel& aging, const EngineSpec& spec,
                   const AdviceInput& advice, std::uint64_t env_seed, std::int64_t reps) {
    double sum = 0.0;
    for (std::int64_t r = 0; r < reps; ++r) {
        RunConfig rc{spec, inst, aging, advice, derive_seed(env_seed, 1000 + static_cast<std::uint64_t>(r)), 1, nullptr};
        sum += time_average(run_online(rc).trace.cost.total, inst.horizon());
    }
    return sum / static_cast<double>(reps);
}

CellOutput run_no_ml_cell(const ExperimentConfig& cfg, std::size_t cell, double r, double c_min) {
    const AgingModel aging = AgingModel::from_name(cfg.aging);
    const GilbertElliottCosts ge{cfg.tr_p, cfg.tr_q, c_min, c_min * r, std::nullopt};
    std::vector<double> proposed, revised, greedy, opt;
    CellOutput out;
    for (std::int64_t s = 0; s < cfg.seeds; ++s) {
        const std::uint64_t seed = cell_seed(cfg.base_seed, cell, s);
        out.seeds.push_back(seed);
        const auto env = gen_stochastic_env(ge, cfg.opportunity_rate, cfg.horizon, aging, seed);
        const auto& inst = env.instance;
        proposed.push_back(online_cost(inst, aging, {EngineVariant::Intermittent, ThetaPolicy::standard()},
                                       AdviceInput::none(), seed, cfg.replications));
        revised.push_back(online_cost(inst, aging, {EngineVariant::Intermittent, ThetaPolicy::revised()},
                                      AdviceInput::none(), seed, cfg.replications));
        greedy.push_back(time_average(greedy_schedule(inst, aging).cost.total, cfg.horizon));
        opt.push_back(time_average(opt_dp(inst, aging).opt_cost, cfg.horizon));
    }
    const double opt_mean = mean_std(opt).mean;
    const double bound = cr_bound(c_min, c_min * r).finite_ratio;
    const ResultRow base = base_row(cfg, r, c_min);
    out.rows.push_back(finish_row(base, "Proposed", proposed, opt_mean));
    out.rows.push_back(finish_row(base, "Revised", revised, opt_mean));
    out.rows.push_back(finish_row(base, "Greedy", greedy, opt_mean));
    out.rows.push_back(finish_row(base, "OPT", opt, opt_mean));
    std::vector<double> theory;
    for (double o : opt) theory.push_back(bound * o);
    out.rows.push_back(finish_row(base, "Theory", theory, opt_mean));
    for (auto& row : out.rows) row.theory_bound = bound * opt_mean;
    return out;
}

CellOutput run_ml_cell(const ExperimentConfig& cfg, std::size_t cell, double r, double c_min) {
    const AgingModel aging = AgingModel::from_name(cfg.aging);
    const GilbertElliottCosts ge{cfg.tr_p, cfg.tr_q, c_min, c_min * r, std::nullopt};
    const std::size_t ne = cfg.epsilons.size();
    const std::size_t nl = cfg.lambdas.size();
    // samples[e][l] for λ runs; follow[e]; opt.
    std::vector<std::vector<std::vector<double>>> samples(ne, std::vector<std::vector<double>>(nl));
    std::vector<std::vector<double>> follow(ne);
    std::vector<double> opt;
    CellOutput out;
    for (std::int64_t s = 0; s < cfg.seeds; ++s) {
        const std::uint64_t seed = cell_seed(cfg.base_seed, cell, s);
        out.seeds.push_back(seed);
        const auto env = gen_stochastic_env(ge, cfg.opportunity_rate, cfg.horizon, aging, seed);
        const auto& inst = env.instance;
        const auto ideal =
            best_threshold_policy(inst, env.labels, default_grid_max(inst, aging), aging).policy;
        opt.push_back(time_average(opt_dp(inst, aging).opt_cost, cfg.horizon));
        for (std::size_t e = 0; e < ne; ++e) {
            const AdviceSpec spec{ideal, cfg.epsilons[e], derive_seed(seed, 500 + e)};
            const auto thresholds = advice_thresholds(spec, env.labels);
            follow[e].push_back(
                time_average(follow_ml_thresholds(inst, thresholds, aging).cost.total, cfg.horizon));
            for (std::size_t l = 0; l < nl; ++l) {
                const EngineSpec es{EngineVariant::MlIntermittent, ThetaPolicy::ml_revised(cfg.lambdas[l])};
                samples[e][l].push_back(online_cost(inst, aging, es,
                                                    AdviceInput::from_thresholds(thresholds), seed,
                                                    cfg.replications));
            }
        }
    }
    const double opt_mean = mean_std(opt).mean;
    for (std::size_t e = 0; e < ne; ++e) {
        ResultRow base = base_row(cfg, r, c_min);
        base.epsilon = cfg.epsilons[e];
        for (std::size_t l = 0; l < nl; ++l) {
            ResultRow row = base;
            row.lambda = cfg.lambdas[l];
            out.rows.push_back(finish_row(row, "ML", samples[e][l], opt_mean));
        }
        out.rows.push_back(finish_row(base, "FollowML", follow[e], opt_mean));
        out.rows.push_back(finish_row(base, "OPT", opt, opt_mean));
    }
    return out;
}

CellOutput run_bounds_curve(const ExperimentConfig& cfg, double r) {
    CellOutput out;
    for (double c_min : cfg.c_min_grid) {
        const double c_max = c_min * r;
        const auto cr = cr_bound(c_min, c_max);
        const auto rev = revised_bound(c_min, c_max);
        for (double lam : cfg.lambdas) {
            const auto ml = ml_bounds(c_min, c_max, lam);
            std::ostringstream line;
            line << textio::format_double(r) << ',' << textio::format_double(c_min) << ','
                 << textio::format_double(lam) << ',' << textio::format_double(cr.finite_ratio) << ','
                 << textio::format_double(cr.asymptotic_ratio) << ','
                 << textio::format_double(ml.robustness.finite_ratio) << ','
                 << textio::format_double(ml.robustness.asymptotic_ratio) << ','
                 << textio::format_double(ml.consistency.finite_ratio) << ','
                 << textio::format_double(ml.consistency.asymptotic_ratio) << ','
                 << textio::format_double(rev.finite_ratio) << ','
                 << textio::format_double(rev.asymptotic_ratio);
            out.lines.push_back(line.str());
        }
    }
    return out;
}

std::string audit_line(const std::string& name, double c_min, double r, std::int64_t T, double lp,
                       double opt, double bound) {
    std::ostringstream line;
    const bool ok = lp <= bound * opt;
    line << name << ',' << textio::format_double(c_min) << ',' << textio::format_double(r) << ','
         << T << ',' << textio::format_double(lp) << ',' << textio::format_double(opt) << ','
         << textio::format_double(lp / opt) << ',' << textio::format_double(bound) << ','
         << (ok ? 1 : 0);
    return line.str();
}

CellOutput run_adversarial_audit(const ExperimentConfig& cfg, double c_min) {
    CellOutput out;
    const EngineSpec basic{EngineVariant::Basic, ThetaPolicy::standard()};
    const EngineSpec inter{EngineVariant::Intermittent, ThetaPolicy::standard()};
    for (double r : cfg.r_values) {
        for (std::int64_t T = 1; T <= cfg.horizon; ++T) {
            const auto inst = gen_cost_jump(c_min, r, T);
            const double lp = run_engine(inst, basic).lp_objective();
            const double opt = opt_dp(inst).opt_cost;
            const double bound = cr_bound(c_min, c_min * r).finite_ratio;
            out.lines.push_back(audit_line("cost_jump", c_min, r, T, lp, opt, bound));
            if (!(lp <= bound * opt))
                out.failures.push_back("cost_jump C_m=" + textio::format_double(c_min) +
                                       " R=" + textio::format_double(r) + " T=" + std::to_string(T));
        }
    }
    const auto ci = static_cast<std::int64_t>(c_min);
    if (static_cast<double>(ci) == c_min) {
        auto audit = [&](const std::string& name, const Instance& inst) {
            const double lp = run_engine(inst, inter).lp_objective();
            const double opt = opt_dp(inst).opt_cost;
            const auto b = intermittent_bound(c_min, c_min, static_cast<double>(inst.max_arrival()),
                                              static_cast<double>(inst.t_off()));
            out.lines.push_back(audit_line(name, c_min, 1.0, inst.horizon(), lp, opt, b.finite_ratio));
            if (!(lp <= b.finite_ratio * opt)) out.failures.push_back(name + " C_m=" + std::to_string(ci));
        };
        if (ci >= 2) {
            const auto p = gen_age_jump_pair(ci);
            audit("age_jump", p.first);
            audit("age_jump_single_slot", p.second);
        }
        if (ci >= 1) {
            const auto p = gen_off_run_pair(ci);
            audit("off_run", p.first);
        }
    }
    return out;
}

CellOutput run_invariant_suite(const ExperimentConfig& cfg) {
    CellOutput out;
    const std::int64_t per_panel = std::max<std::int64_t>(1, cfg.instances / 3);
    auto report = [&out](const std::string& name, const PanelOutcome& o) {
        std::ostringstream line;
        const auto& inv = o.invariants;
        line << name << ',' << o.cases << ',' << inv.runs << ',' << inv.checks << ','
             << inv.violations.size() << ',' << o.violations;
        out.lines.push_back(line.str());
        if (!inv.violations.empty()) {
            const auto& v = inv.violations.front();
            out.failures.push_back(name + ": " + to_string(v.invariant) + " at slot " +
                                   std::to_string(v.slot) + " (" + v.detail + ")");
        }
        if (o.violations > 0) out.failures.push_back(name + ": bound violated: " + o.first_violation);
    };
    report("basic", check_basic_bound(bound_panel(per_panel, cfg.base_seed)));
    report("ml", check_ml_bounds(bound_panel(per_panel, cfg.base_seed + 1), cfg.base_seed + 2));
    report("intermittent", check_intermittent_bound(intermittent_panel(per_panel, cfg.base_seed + 3)));
    return out;
}

} // namespace

std::string to_string(Family f) {
    for (const auto& e : kFamilies)
        if (e.family == f) return e.name;
    return "?";
}

Family family_from_name(const std::string& name) {
    for (const auto& e : kFamilies)
        if (name == e.name) return e.family;
    fail(ErrorCode::ConfigError, "unknown experiment family '" + name + "'");
}

ExperimentConfig ExperimentConfig::defaults(Family family) {
    ExperimentConfig c;
    c.family = family;
    c.output_dir = "out/" + to_string(family);
    c.c_min_grid = {1, 2, 5, 10, 20};
    c.r_values = {1, 3, 5};
    c.lambdas = kLambdaGrid;
    switch (family) {
    case Family::Fig3: break;
    case Family::Fig4: c.tr_p = 0.8; c.tr_q = 0.2; break;
    case Family::Fig5: c.r_values = {2}; c.epsilons = {0, 0.5, 1, 1.5, 2, 2.5}; break;
    case Family::Fig6:
        c.tr_p = 0.8; c.tr_q = 0.2;
        c.r_values = {2}; c.epsilons = {0, 0.5, 1, 1.5, 2, 2.5};
        break;
    case Family::Fig7: c.aging = "exp:0.3"; c.r_values = {2}; break;
    case Family::Fig8: c.aging = "exp:0.3"; c.tr_p = 0.8; c.tr_q = 0.2; c.r_values = {2}; break;
    case Family::Fig9: c.aging = "exp:0.3"; c.r_values = {2}; c.epsilons = {1, 3, 5, 7, 9, 11}; break;
    case Family::Fig10:
        c.aging = "exp:0.3"; c.tr_p = 0.8; c.tr_q = 0.2;
        c.r_values = {2}; c.epsilons = {1, 2, 3, 4, 5, 6};
        break;
    case Family::BoundsCurve: {
        c.r_values.clear();
        for (int k = 0; k <= 90; ++k) c.r_values.push_back(1.0 + 0.1 * k);
        c.c_min_grid = {1, 10, 100};
        c.lambdas.clear();
        for (int k = 1; k <= 100; ++k) c.lambdas.push_back(0.01 * k);
        break;
    }
    case Family::AdversarialAudit:
        c.c_min_grid = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
        c.r_values = {1, 2, 3};
        c.horizon = 30;
        break;
    case Family::InvariantSuite: c.instances = 1000; break;
    }
    return c;
}

bool ExperimentConfig::is_ml() const {
    return family == Family::Fig5 || family == Family::Fig6 || family == Family::Fig9 ||
           family == Family::Fig10;
}

ExperimentConfig ExperimentConfig::from_document(const textio::Document& doc) {
    ExperimentConfig c = defaults(family_from_name(doc.get("family")));
    for (const auto& [key, value] : doc.entries()) {
        if (key == "family") continue;
        else if (key == "r_values") c.r_values = textio::parse_double_list(value);
        else if (key == "c_min_grid") c.c_min_grid = textio::parse_double_list(value);
        else if (key == "tr_p") c.tr_p = textio::parse_double(value);
        else if (key == "tr_q") c.tr_q = textio::parse_double(value);
        else if (key == "opportunity_rate") c.opportunity_rate = textio::parse_double(value);
        else if (key == "lambdas") c.lambdas = textio::parse_double_list(value);
        else if (key == "epsilons") c.epsilons = textio::parse_double_list(value);
        else if (key == "aging") c.aging = value;
        else if (key == "horizon") c.horizon = textio::parse_int(value);
        else if (key == "seeds") c.seeds = textio::parse_int(value);
        else if (key == "base_seed") c.base_seed = static_cast<std::uint64_t>(textio::parse_int(value));
        else if (key == "replications") c.replications = textio::parse_int(value);
        else if (key == "instances") c.instances = textio::parse_int(value);
        else if (key == "threads") c.threads = textio::parse_int(value);
        else if (key == "output_dir") c.output_dir = value;
        else fail(ErrorCode::ConfigError, "unknown config key '" + key + "'");
    }
    c.validate();
    return c;
}

textio::Document ExperimentConfig::to_document() const {
    textio::Document d;
    d.set("family", to_string(family));
    d.set("r_values", textio::join_doubles(r_values));
    d.set("c_min_grid", textio::join_doubles(c_min_grid));
    d.set("tr_p", textio::format_double(tr_p));
    d.set("tr_q", textio::format_double(tr_q));
    d.set("opportunity_rate", textio::format_double(opportunity_rate));
    d.set("lambdas", textio::join_doubles(lambdas));
    d.set("epsilons", textio::join_doubles(epsilons));
    d.set("aging", aging);
    d.set("horizon", textio::format_int(horizon));
    d.set("seeds", textio::format_int(seeds));
    d.set("base_seed", std::to_string(base_seed));
    d.set("replications", textio::format_int(replications));
    d.set("instances", textio::format_int(instances));
    d.set("threads", textio::format_int(threads));
    d.set("output_dir", output_dir);
    return d;
}

void ExperimentConfig::validate() const {
    auto check = [](bool ok, const std::string& what) {
        if (!ok) fail(ErrorCode::ConfigError, what);
    };
    check(!c_min_grid.empty(), "c_min_grid is empty");
    check(!r_values.empty(), "r_values is empty");
    for (double c : c_min_grid) check(c > 0.0, "C_m values must be positive");
    for (double r : r_values) check(r >= 1.0, "R values must be >= 1");
    check(tr_p >= 0.0 && tr_p <= 1.0 && tr_q >= 0.0 && tr_q <= 1.0, "transition probabilities must lie in [0,1]");
    check(opportunity_rate >= 0.0 && opportunity_rate <= 1.0, "opportunity_rate must lie in [0,1]");
    check(horizon >= 1, "horizon must be positive");
    check(seeds >= 1, "seeds must be positive");
    check(replications >= 1, "replications must be positive");
    check(instances >= 1, "instances must be positive");
    if (is_ml() || family == Family::BoundsCurve) {
        check(!lambdas.empty(), "lambdas is empty");
        for (double l : lambdas) check(l > 0.0 && l <= 1.0, "lambda values must lie in (0,1]");
    }
    if (is_ml()) {
        check(!epsilons.empty(), "epsilons is empty");
        for (double e : epsilons) check(e >= 0.0, "epsilon values must be nonnegative");
    }
    (void)AgingModel::from_name(aging);
}

std::uint64_t cell_seed(std::uint64_t base_seed, std::size_t cell, std::int64_t s) {
    return derive_seed(base_seed, static_cast<std::uint64_t>(cell) * 1'000'003ULL +
                                      static_cast<std::uint64_t>(s));
}

std::string csv_header() {
    return "family,tr_p,tr_q,R,C_m,epsilon,lambda,aging,T,seeds,algorithm,mean_cost,std_cost,opt,"
           "theory_bound,ratio";
}

std::string to_csv_line(const ResultRow& r) {
    std::ostringstream o;
    o << r.family << ',' << textio::format_double(r.tr_p) << ',' << textio::format_double(r.tr_q)
      << ',' << textio::format_double(r.ratio_r) << ',' << textio::format_double(r.c_min) << ','
      << opt_str(r.epsilon) << ',' << opt_str(r.lambda) << ',' << r.aging << ',' << r.horizon
      << ',' << r.seeds << ',' << r.algorithm << ',' << textio::format_double(r.mean_cost) << ','
      << textio::format_double(r.std_cost) << ',' << textio::format_double(r.opt) << ','
      << opt_str(r.theory_bound) << ',' << textio::format_double(r.ratio);
    return o.str();
}

std::string ExperimentResult::csv() const {
    std::ostringstream o;
    if (!table_header.empty()) {
        o << table_header << '\n';
        for (const auto& l : table_lines) o << l << '\n';
        return o.str();
    }
    o << csv_header() << '\n';
    for (const auto& r : rows) o << to_csv_line(r) << '\n';
    return o.str();
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();

    struct Cell {
        double r = 1.0;
        double c_min = 1.0;
    };
    std::vector<Cell> cells;
    ExperimentResult result;
    switch (config.family) {
    case Family::BoundsCurve:
        for (double r : config.r_values) cells.push_back({r, 0.0});
        result.table_header = "R,C_m,lambda,cr_finite,cr_asymptotic,robustness_finite,"
                              "robustness_asymptotic,consistency_finite,consistency_asymptotic,"
                              "revised_finite,revised_asymptotic";
        break;
    case Family::AdversarialAudit:
        for (double c : config.c_min_grid) cells.push_back({0.0, c});
        result.table_header = "instance,C_m,R,T,lp_objective,opt,lp_ratio,bound,within_bound";
        break;
    case Family::InvariantSuite:
        cells.push_back({});
        result.table_header = "panel,instances,runs,checks,invariant_violations,bound_violations";
        break;
    default:
        for (double r : config.r_values)
            for (double c : config.c_min_grid) cells.push_back({r, c});
        break;
    }

    std::vector<CellOutput> outputs(cells.size());
    parallel_for(cells.size(), config.threads, [&](std::size_t i) {
        const Cell& cell = cells[i];
        try {
            switch (config.family) {
            case Family::BoundsCurve: outputs[i] = run_bounds_curve(config, cell.r); break;
            case Family::AdversarialAudit: outputs[i] = run_adversarial_audit(config, cell.c_min); break;
            case Family::InvariantSuite: outputs[i] = run_invariant_suite(config); break;
            default:
                outputs[i] = config.is_ml() ? run_ml_cell(config, i, cell.r, cell.c_min)
                                            : run_no_ml_cell(config, i, cell.r, cell.c_min);
            }
        } catch (const std::exception& e) {
            outputs[i].failures.push_back("cell R=" + textio::format_double(cell.r) + " C_m=" +
                                          textio::format_double(cell.c_min) + ": " + e.what());
        }
    });

    for (auto& o : outputs) {
        for (auto& r : o.rows) result.rows.push_back(std::move(r));
        for (auto& l : o.lines) result.table_lines.push_back(std::move(l));
        for (auto& f : o.failures) result.failures.push_back(std::move(f));
        for (auto s : o.seeds) result.seeds_used.push_back(s);
    }
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

void write_artifacts(const ExperimentConfig& config, const ExperimentResult& result) {
    namespace fs = std::filesystem;
    const fs::path dir(config.output_dir);
    fs::create_directories(dir);
    {
        std::ofstream out(dir / (to_string(config.family) + ".csv"), std::ios::binary);
        out << result.csv();
    }
    {
        std::ofstream out(dir / "manifest.txt", std::ios::binary);
        out << "tool = aoisched\n";
        out << "version = " << AOISCHED_VERSION << '\n';
        config.to_document().write(out);
        out << "rows = " << (result.table_header.empty() ? result.rows.size() : result.table_lines.size()) << '\n';
        std::string list;
        for (std::size_t i = 0; i < result.seeds_used.size(); ++i) {
            if (i) list += ',';
            list += std::to_string(result.seeds_used[i]);
        }
        out << "environment_seeds = " << list << '\n';
        out << "failures = " << result.failures.size() << '\n';
        for (std::size_t i = 0; i < result.failures.size(); ++i)
            out << "failure." << i << " = " << result.failures[i] << '\n';
    }
    {
        std::ofstream out(dir / "timing.txt", std::ios::binary);
        out << "wall_seconds = " << textio::format_double(result.wall_seconds) << '\n';
    }
}

const ResultRow* find_row(const std::vector<ResultRow>& rows, double tr_p, double ratio_r,
                          double c_min, const std::string& algorithm, std::optional<double> epsilon,
                          std::optional<double> lambda) {
    for (const auto& r : rows) {
        if (r.tr_p == tr_p && r.ratio_r == ratio_r && r.c_min == c_min && r.algorithm == algorithm &&
            r.epsilon == epsilon && r.lambda == lambda)
            return &r;
    }
    return nullptr;
}

} // namespace aoisched
