#include <aoisched/acceptance.hpp>

#include <aoisched/baselines.hpp>
#include <aoisched/bounds.hpp>
#include <aoisched/experiment.hpp>
#include <aoisched/generators.hpp>
#include <aoisched/oracle.hpp>
#include <aoisched/rounding.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace aoisched {

namespace {

constexpr std::size_t kMaxStoredViolations = 32;

std::string describe(const Instance& inst) {
    std::ostringstream o;
    o << "T=" << inst.horizon() << " C_m=" << textio::format_double(inst.cost_bounds().min)
      << " C_M=" << textio::format_double(inst.cost_bounds().max);
    return o.str();
}

// Records lp / (factor · reference) and whether it is within the slack.
bool within(PanelOutcome& out, double lp, double factor, double reference) {
    const double limit = factor * reference;
    if (limit > 0.0) out.max_bound_use = std::max(out.max_bound_use, lp / limit);
    return lp <= limit * (1.0 + kBoundSlack);
}

void note_violation(PanelOutcome& out, const std::string& what) {
    if (out.violations++ == 0) out.first_violation = what;
}

std::vector<Instance> make_panel(std::int64_t count, std::uint64_t seed,
                                 const std::function<RandomInstanceSpec(std::int64_t, Rng&)>& spec_for) {
    const auto pairs = bound_cost_pairs();
    std::vector<Instance> panel;
    panel.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)), streams::kInstance);
        RandomInstanceSpec spec = spec_for(i, rng);
        spec.bounds = pairs[static_cast<std::size_t>(i) % pairs.size()];
        panel.push_back(gen_random_instance(spec, rng));
    }
    return panel;
}

std::string fmt(double v) { return textio::format_double(v); }

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string panel_detail(const PanelOutcome& o, bool bound_use = true) {
    std::ostringstream d;
    d << o.cases << " cases, " << o.violations << " violations";
    if (bound_use) d << ", max LP/bound " << std::fixed << std::setprecision(15) << o.max_bound_use;
    if (o.violations > 0) d << " (first: " << o.first_violation << ")";
    return d.str();
}

bool same_ledger(const LpObjectiveLedger& a, const LpObjectiveLedger& b) {
    if (a.clearing != b.clearing || a.holding != b.holding || a.slots.size() != b.slots.size())
        return false;
    for (std::size_t i = 0; i < a.slots.size(); ++i) {
        const auto& x = a.slots[i];
        const auto& y = b.slots[i];
        if (x.t != y.t || x.x != y.x || x.active_members != y.active_members ||
            x.activations != y.activations || x.clearing != y.clearing || x.holding != y.holding)
            return false;
    }
    return true;
}

bool same_trace(const FractionalEngine& a, const FractionalEngine& b) {
    const auto xa = a.x_values();
    const auto xb = b.x_values();
    return std::equal(xa.begin(), xa.end(), xb.begin(), xb.end()) && same_ledger(a.ledger(), b.ledger());
}

struct Scale {
    std::int64_t bound_cases;
    std::int64_t oracle_cases;
    std::int64_t rounding_seeds;
    std::int64_t ml_seeds;
};

Scale scale_for(VerifyLevel level) {
    if (level == VerifyLevel::Full) return {4000, 2000, 10000, 40};
    return {1000, 500, 10000, 20};
}

constexpr std::uint64_t kBoundSeed = 20240101;
constexpr std::uint64_t kMlSeed = 20240202;
constexpr std::uint64_t kIntermittentSeed = 20240303;
constexpr std::uint64_t kOracleSeed = 20240404;
constexpr std::uint64_t kRoundingSeed = 20240505;
constexpr std::uint64_t kDegeneracySeed = 20240606;

class Suite {
public:
    explicit Suite(const AcceptanceOptions& opt) : opt_(opt), scale_(scale_for(opt.level)) {}

    const PanelOutcome& c1() {
        if (!c1_) c1_ = check_basic_bound(bound_panel(scale_.bound_cases, kBoundSeed));
        return *c1_;
    }
    const PanelOutcome& c2() {
        if (!c2_) c2_ = check_ml_bounds(bound_panel(scale_.bound_cases, kMlSeed), kMlSeed + 1);
        return *c2_;
    }
    const PanelOutcome& c3() {
        if (!c3_) c3_ = check_intermittent_bound(intermittent_panel(scale_.bound_cases, kIntermittentSeed));
        return *c3_;
    }

    CriterionResult run(int id) {
        CriterionResult r;
        r.id = id;
        const auto start = std::chrono::steady_clock::now();
        try {
            switch (id) {
            case 1: criterion1(r); break;
            case 2: criterion2(r); break;
            case 3: criterion3(r); break;
            case 4: criterion4(r); break;
            case 5: criterion5(r); break;
            case 6: criterion6(r); break;
            case 7: criterion7(r); break;
            case 8: criterion8(r); break;
            case 9: criterion9(r); break;
            case 10: criterion10(r); break;
            case 11: criterion11(r); break;
            default: r.name = "unknown"; r.detail = "no such criterion"; break;
            }
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = seconds_since(start);
        if (id == 1 && r.pass && r.seconds >= 60.0) {
            r.pass = false;
            r.detail += "; exceeded 60 s";
        }
        if (id == 10 && r.pass && r.seconds >= 600.0) {
            r.pass = false;
            r.detail += "; exceeded 10 min";
        }
        return r;
    }

private:
    void criterion1(CriterionResult& r) {
        r.name = "basic engine LP objective within the competitive bound";
        const auto& o = c1();
        r.pass = o.cases >= 1000 && o.violations == 0;
        r.detail = panel_detail(o);
    }

    void criterion2(CriterionResult& r) {
        r.name = "ML engine robustness and consistency bounds";
        const auto& o = c2();
        r.pass = o.violations == 0;
        r.detail = panel_detail(o);
    }

    void criterion3(CriterionResult& r) {
        r.name = "intermittent engine bound";
        const auto& o = c3();
        r.pass = o.violations == 0;
        r.detail = panel_detail(o);
    }

    void criterion4(CriterionResult& r) {
        r.name = "activation invariants over the bound panels";
        InvariantTally total;
        for (const PanelOutcome* o : {&c1(), &c2(), &c3()}) {
            total.runs += o->invariants.runs;
            total.checks += o->invariants.checks;
            for (const auto& v : o->invariants.violations) total.violations.push_back(v);
        }
        r.pass = total.violations.empty() && total.checks > 0;
        std::ostringstream d;
        d << total.runs << " runs, " << total.checks << " checks, " << total.violations.size()
          << " violations";
        if (!total.violations.empty()) {
            const auto& v = total.violations.front();
            d << " (first: " << to_string(v.invariant) << " slot " << v.slot << ": " << v.detail << ")";
        }
        r.detail = d.str();
    }

    void criterion5(CriterionResult& r) {
        r.name = "randomized rounding matches the fractional solution in expectation";
        RandomInstanceSpec spec;
        spec.min_horizon = 4;
        spec.max_horizon = 12;
        const auto pairs = bound_cost_pairs();
        const std::int64_t n = scale_.rounding_seeds;
        const EngineSpec basic{EngineVariant::Basic, ThetaPolicy::standard()};
        std::int64_t mean_fail = 0;
        std::int64_t freq_fail = 0;
        std::int64_t slots = 0;
        std::string first;
        double worst_z = 0.0;
        for (std::int64_t i = 0; i < 20; ++i) {
            Rng rng(derive_seed(kRoundingSeed, static_cast<std::uint64_t>(i)), streams::kInstance);
            spec.bounds = pairs[static_cast<std::size_t>(i) % pairs.size()];
            const Instance inst = gen_random_instance(spec, rng);
            const auto engine = run_engine(inst, basic);
            const double lp = engine.lp_objective();
            const auto x = engine.x_values();
            const auto T = static_cast<std::size_t>(inst.horizon());
            std::vector<std::int64_t> hits(T, 0);
            double sum = 0.0;
            double sum_sq = 0.0;
            for (std::int64_t s = 1; s <= n; ++s) {
                Rng ur(static_cast<std::uint64_t>(s), streams::kRounding);
                const auto d = round_stream(x, ur.uniform01());
                const double c = evaluate_schedule(inst, d).cost.total;
                sum += c;
                sum_sq += c * c;
                for (std::size_t t = 0; t < T; ++t) hits[t] += d[t] ? 1 : 0;
            }
            const double nn = static_cast<double>(n);
            const double mean = sum / nn;
            const double var = std::max(0.0, (sum_sq - nn * mean * mean) / (nn - 1.0));
            const double se = std::sqrt(var / nn);
            if (!(mean <= lp + 3.0 * se)) {
                ++mean_fail;
                if (first.empty())
                    first = "instance " + std::to_string(i) + ": mean " + fmt(mean) + " > LP " +
                            fmt(lp) + " + 3*" + fmt(se);
            }
            for (std::size_t t = 0; t < T; ++t) {
                ++slots;
                const double p = std::min(x[t], 1.0);
                const double f = static_cast<double>(hits[t]) / nn;
                const double sd = std::sqrt(p * (1.0 - p) / nn);
                const bool ok = sd > 0.0 ? std::abs(f - p) <= 3.0 * sd : f == p;
                if (sd > 0.0) worst_z = std::max(worst_z, std::abs(f - p) / sd);
                if (!ok) {
                    ++freq_fail;
                    if (first.empty())
                        first = "instance " + std::to_string(i) + " slot " + std::to_string(t + 1) +
                                ": frequency " + fmt(f) + " vs " + fmt(p);
                }
            }
        }
        r.pass = mean_fail == 0 && freq_fail == 0;
        std::ostringstream d;
        d << "20 instances x " << n << " seeds; mean failures " << mean_fail << ", frequency failures "
          << freq_fail << "/" << slots << " slots, max |z| " << fmt(std::round(worst_z * 1000) / 1000);
        if (!first.empty()) d << " (first: " << first << ")";
        r.detail = d.str();
    }

    void criterion6(CriterionResult& r) {
        r.name = "dynamic program equals exhaustive search";
        const auto panel = oracle_panel(scale_.oracle_cases, kOracleSeed);
        PanelOutcome o;
        std::int64_t intermittent = 0;
        for (std::size_t i = 0; i < panel.size(); ++i) {
            const auto& inst = panel[i];
            ++o.cases;
            if (!inst.all_on()) ++intermittent;
            const auto dp = opt_dp(inst);
            const auto en = opt_enumerate(inst);
            if (dp.opt_cost != en.opt_cost || dp.decisions != en.decisions)
                note_violation(o, "instance " + std::to_string(i) + " (" + describe(inst) + "): dp " +
                                      fmt(dp.opt_cost) + " vs enumerate " + fmt(en.opt_cost));
        }
        r.pass = o.cases >= 500 && o.violations == 0 && intermittent > 0;
        r.detail = panel_detail(o, false) + ", " + std::to_string(intermittent) + " with OFF slots";
    }

    void criterion7(CriterionResult& r) {
        r.name = "optimum of the adversarial cost-jump family";
        PanelOutcome o;
        for (int c = 1; c <= 10; ++c)
            for (int ratio = 1; ratio <= 3; ++ratio)
                for (std::int64_t T = 1; T <= 30; ++T) {
                    ++o.cases;
                    const double dp = opt_dp(gen_cost_jump(c, ratio, T)).opt_cost;
                    const double expect = cost_jump_opt(c, ratio, T);
                    if (dp != expect)
                        note_violation(o, "C_m=" + std::to_string(c) + " R=" + std::to_string(ratio) +
                                              " T=" + std::to_string(T) + ": " + fmt(dp) + " vs " +
                                              fmt(expect));
                }
        r.pass = o.violations == 0;
        r.detail = panel_detail(o, false);
    }

    void criterion8(CriterionResult& r) {
        r.name = "degenerate variants reproduce the basic engine bit for bit";
        const auto panel = bound_panel(100, kDegeneracySeed);
        const EngineSpec basic{EngineVariant::Basic, ThetaPolicy::standard()};
        const EngineSpec ml{EngineVariant::Ml, ThetaPolicy::ml(1.0)};
        const EngineSpec inter{EngineVariant::Intermittent, ThetaPolicy::standard()};
        const EngineSpec both{EngineVariant::MlIntermittent, ThetaPolicy::ml(1.0)};
        PanelOutcome o;
        for (std::size_t i = 0; i < panel.size(); ++i) {
            const auto& inst = panel[i];
            Rng rng(derive_seed(kDegeneracySeed, i), streams::kAdvice);
            std::vector<bool> advice(static_cast<std::size_t>(inst.horizon()));
            for (std::size_t t = 0; t < advice.size(); ++t) advice[t] = rng.bernoulli(0.5);
            const auto ref = run_engine(inst, basic);
            o.cases += 3;
            if (!same_trace(ref, run_engine(inst, ml, advice)))
                note_violation(o, "ML engine, instance " + std::to_string(i));
            if (!same_trace(ref, run_engine(inst, inter)))
                note_violation(o, "intermittent engine, instance " + std::to_string(i));
            if (!same_trace(ref, run_engine(inst, both, advice)))
                note_violation(o, "combined engine, instance " + std::to_string(i));
        }
        r.pass = o.violations == 0;
        r.detail = panel_detail(o, false);
    }

    void criterion9(CriterionResult& r) {
        r.name = "bound formula regressions";
        const double e_ratio = 1.5819767068693265;
        std::vector<std::string> bad;
        const double a = cr_bound(1.0, 1.0).asymptotic_ratio;
        if (!(std::abs(a - e_ratio) <= 1e-9)) bad.push_back("cr asymptotic at R=1 = " + fmt(a));
        for (double c : {1.0, 2.0, 5.0, 10.0}) {
            const auto m = ml_bounds(c, c, 1.0);
            if (m.robustness.asymptotic_ratio != m.consistency.asymptotic_ratio)
                bad.push_back("ml asymptotic pair differs at C_m=" + fmt(c));
            if (!(std::abs(m.robustness.asymptotic_ratio - e_ratio) <= 1e-9))
                bad.push_back("ml asymptotic at R=1 = " + fmt(m.robustness.asymptotic_ratio));
        }
        std::int64_t grid = 0;
        for (double cm : {1.0, 2.0, 3.5, 10.0})
            for (double ratio : {1.0, 2.0, 5.0})
                for (double da : {1.0, 2.0, 7.0}) {
                    ++grid;
                    const double f = intermittent_bound(cm, cm * ratio, da, 0.0).finite_ratio;
                    const double g = cr_bound(cm, cm * ratio).finite_ratio;
                    if (!(std::abs(f - g) <= 1e-12))
                        bad.push_back("intermittent T_OFF=0 at C_m=" + fmt(cm) + ": " + fmt(f) +
                                      " vs " + fmt(g));
                }
        r.pass = bad.empty();
        r.detail = "cr asymptotic(R=1) = " + fmt(a) + "; " + std::to_string(grid) +
                   " intermittent reductions checked";
        if (!bad.empty()) r.detail += "; " + std::to_string(bad.size()) + " failures (first: " + bad.front() + ")";
    }

    void criterion10(CriterionResult& r) {
        r.name = "stochastic study orderings (Revised <= Proposed <= Greedy, Proposed <= bound)";
        std::int64_t cells = 0;
        std::vector<std::string> bad;
        for (Family fam : {Family::Fig3, Family::Fig4}) {
            ExperimentConfig cfg = ExperimentConfig::defaults(fam);
            cfg.threads = opt_.threads;
            const auto res = run_experiment(cfg);
            for (const auto& f : res.failures) bad.push_back(to_string(fam) + ": " + f);
            for (double ratio : cfg.r_values)
                for (double cm : cfg.c_min_grid) {
                    ++cells;
                    const auto* prop = find_row(res.rows, cfg.tr_p, ratio, cm, "Proposed");
                    const auto* rev = find_row(res.rows, cfg.tr_p, ratio, cm, "Revised");
                    const auto* greedy = find_row(res.rows, cfg.tr_p, ratio, cm, "Greedy");
                    const std::string cell = to_string(fam) + " R=" + fmt(ratio) + " C_m=" + fmt(cm);
                    if (!prop || !rev || !greedy) {
                        bad.push_back(cell + ": missing rows");
                        continue;
                    }
                    if (!(rev->mean_cost <= prop->mean_cost * 1.02))
                        bad.push_back(cell + ": Revised " + fmt(rev->mean_cost) + " > 1.02*Proposed " +
                                      fmt(prop->mean_cost));
                    const bool exempt = fam == Family::Fig4 && ratio == 5.0 && cm >= 5.0;
                    if (!exempt && !(prop->mean_cost <= greedy->mean_cost * 1.02))
                        bad.push_back(cell + ": Proposed " + fmt(prop->mean_cost) + " > 1.02*Greedy " +
                                      fmt(greedy->mean_cost));
                    if (!(prop->mean_cost <= *prop->theory_bound))
                        bad.push_back(cell + ": Proposed " + fmt(prop->mean_cost) + " > bound*OPT " +
                                      fmt(*prop->theory_bound));
                }
        }
        r.pass = bad.empty();
        r.detail = std::to_string(cells) + " cells, " + std::to_string(bad.size()) + " failures";
        if (!bad.empty()) r.detail += " (first: " + bad.front() + ")";
    }

    void criterion11(CriterionResult& r) {
        r.name = "trust parameter follows advice when accurate and ignores it when noisy";
        ExperimentConfig cfg = ExperimentConfig::defaults(Family::Fig5);
        cfg.epsilons = {0.0, 2.5};
        cfg.lambdas = {1e-5, 1.0};
        cfg.seeds = scale_.ml_seeds;
        cfg.threads = opt_.threads;
        const auto res = run_experiment(cfg);
        std::vector<std::string> bad;
        for (const auto& f : res.failures) bad.push_back(f);
        std::ostringstream summary;
        for (double cm : cfg.c_min_grid)
            for (double eps : cfg.epsilons) {
                const auto* lo = find_row(res.rows, cfg.tr_p, 2.0, cm, "ML", eps, 1e-5);
                const auto* hi = find_row(res.rows, cfg.tr_p, 2.0, cm, "ML", eps, 1.0);
                const std::string cell = "C_m=" + fmt(cm) + " eps=" + fmt(eps);
                if (!lo || !hi || lo->samples.size() != hi->samples.size() || lo->samples.size() < 2) {
                    bad.push_back(cell + ": missing rows");
                    continue;
                }
                // Paired differences (small λ minus λ = 1) share the environment seed.
                const std::size_t n = lo->samples.size();
                double mean = 0.0;
                for (std::size_t s = 0; s < n; ++s) mean += lo->samples[s] - hi->samples[s];
                mean /= static_cast<double>(n);
                double ss = 0.0;
                for (std::size_t s = 0; s < n; ++s) {
                    const double dv = lo->samples[s] - hi->samples[s] - mean;
                    ss += dv * dv;
                }
                const double se = std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n));
                const bool ok = eps == 0.0 ? lo->mean_cost <= hi->mean_cost - se
                                           : hi->mean_cost <= lo->mean_cost - se;
                summary << ' ' << cell << ":" << fmt(lo->mean_cost) << "/" << fmt(hi->mean_cost);
                if (!ok)
                    bad.push_back(cell + ": lambda=1e-5 " + fmt(lo->mean_cost) + ", lambda=1 " +
                                  fmt(hi->mean_cost) + ", paired SE " + fmt(se));
            }
        r.pass = bad.empty();
        r.detail = std::to_string(cfg.c_min_grid.size() * 2) + " cells, " + std::to_string(bad.size()) +
                   " failures";
        if (!bad.empty()) r.detail += " (first: " + bad.front() + ")";
    }

    AcceptanceOptions opt_;
    Scale scale_;
    std::optional<PanelOutcome> c1_, c2_, c3_;
};

} // namespace

bool AcceptanceReport::all_pass() const {
    return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.pass; });
}

std::string AcceptanceReport::to_text() const {
    std::ostringstream o;
    for (const auto& r : results) {
        o << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.name << ": " << r.detail << " ("
          << fmt(std::round(r.seconds * 100) / 100) << " s)\n";
    }
    return o.str();
}

std::vector<CostBounds> bound_cost_pairs() { return {{1, 1}, {1, 2}, {2, 6}, {5, 5}}; }

std::vector<Instance> bound_panel(std::int64_t count, std::uint64_t seed) {
    return make_panel(count, seed, [](std::int64_t, Rng&) {
        RandomInstanceSpec s;
        s.min_horizon = 1;
        s.max_horizon = 50;
        s.max_delta = 3;
        s.max_initial_age = 3;
        return s;
    });
}

std::vector<Instance> intermittent_panel(std::int64_t count, std::uint64_t seed) {
    return make_panel(count, seed, [](std::int64_t, Rng& rng) {
        RandomInstanceSpec s;
        s.min_horizon = 1;
        s.max_horizon = 50;
        s.max_delta = 2;
        s.max_initial_age = 2;
        s.max_first_batch = 2;
        s.on_probability = 0.3 + 0.6 * rng.uniform01();
        s.max_off_run = 2;
        return s;
    });
}

std::vector<Instance> oracle_panel(std::int64_t count, std::uint64_t seed) {
    return make_panel(count, seed, [](std::int64_t, Rng& rng) {
        RandomInstanceSpec s;
        s.min_horizon = 1;
        s.max_horizon = 15;
        s.max_delta = 3;
        s.max_initial_age = 3;
        s.on_probability = 0.3 + 0.7 * rng.uniform01();
        return s;
    });
}

void InvariantTally::absorb(const InvariantMonitor& monitor) {
    ++runs;
    checks += monitor.checks_performed();
    for (const auto& v : monitor.violations()) {
        if (violations.size() >= kMaxStoredViolations) break;
        violations.push_back(v);
    }
}

PanelOutcome check_basic_bound(const std::vector<Instance>& panel) {
    const EngineSpec spec{EngineVariant::Basic, ThetaPolicy::standard()};
    PanelOutcome out;
    for (std::size_t i = 0; i < panel.size(); ++i) {
        const auto& inst = panel[i];
        InvariantMonitor monitor(spec, inst.all_on());
        const double lp = run_engine(inst, spec, {}, &monitor).lp_objective();
        out.invariants.absorb(monitor);
        const double opt = opt_dp(inst).opt_cost;
        const double bound = cr_bound(inst.cost_bounds().min, inst.cost_bounds().max).finite_ratio;
        ++out.cases;
        if (!within(out, lp, bound, opt))
            note_violation(out, "instance " + std::to_string(i) + " (" + describe(inst) + "): LP " +
                                    fmt(lp) + " > " + fmt(bound) + "*" + fmt(opt));
    }
    return out;
}

PanelOutcome check_ml_bounds(const std::vector<Instance>& panel, std::uint64_t seed) {
    PanelOutcome out;
    for (std::size_t i = 0; i < panel.size(); ++i) {
        const auto& inst = panel[i];
        const auto T = static_cast<std::size_t>(inst.horizon());
        const auto oracle = opt_dp(inst);
        Rng rng(derive_seed(seed, i), streams::kAdvice);
        std::vector<bool> random_bits(T);
        for (std::size_t t = 0; t < T; ++t) random_bits[t] = rng.bernoulli(0.3);
        const std::pair<const char*, std::vector<bool>> advices[] = {
            {"perfect", oracle.decisions},
            {"zeros", std::vector<bool>(T, false)},
            {"random", random_bits},
        };
        for (const auto& [name, bits] : advices) {
            const double j = follow_ml(inst, bits).cost.total;
            for (double lambda : {0.25, 0.5, 1.0}) {
                const EngineSpec spec{EngineVariant::Ml, ThetaPolicy::ml(lambda)};
                InvariantMonitor monitor(spec, inst.all_on());
                const double lp = run_engine(inst, spec, bits, &monitor).lp_objective();
                out.invariants.absorb(monitor);
                const auto b = ml_bounds(inst.cost_bounds().min, inst.cost_bounds().max, lambda);
                ++out.cases;
                const std::string where = "instance " + std::to_string(i) + " (" + describe(inst) +
                                          ") advice " + name + " lambda " + fmt(lambda);
                if (!within(out, lp, b.robustness.finite_ratio, oracle.opt_cost))
                    note_violation(out, where + ": LP " + fmt(lp) + " > robustness*OPT " +
                                            fmt(b.robustness.finite_ratio * oracle.opt_cost));
                if (!within(out, lp, b.consistency.finite_ratio, j))
                    note_violation(out, where + ": LP " + fmt(lp) + " > consistency*J " +
                                            fmt(b.consistency.finite_ratio * j));
            }
        }
    }
    return out;
}

PanelOutcome check_intermittent_bound(const std::vector<Instance>& panel) {
    const EngineSpec spec{EngineVariant::Intermittent, ThetaPolicy::standard()};
    PanelOutcome out;
    for (std::size_t i = 0; i < panel.size(); ++i) {
        const auto& inst = panel[i];
        InvariantMonitor monitor(spec, inst.all_on());
        const double lp = run_engine(inst, spec, {}, &monitor).lp_objective();
        out.invariants.absorb(monitor);
        const double opt = opt_dp(inst).opt_cost;
        const auto b = intermittent_bound(inst.cost_bounds().min, inst.cost_bounds().max,
                                          static_cast<double>(inst.max_arrival()),
                                          static_cast<double>(inst.t_off()));
        ++out.cases;
        if (!within(out, lp, b.finite_ratio, opt))
            note_violation(out, "instance " + std::to_string(i) + " (" + describe(inst) + ", T_OFF=" +
                                    std::to_string(inst.t_off()) + "): LP " + fmt(lp) + " > " +
                                    fmt(b.finite_ratio) + "*" + fmt(opt));
    }
    return out;
}

AcceptanceReport run_acceptance(const AcceptanceOptions& options) {
    Suite suite(options);
    AcceptanceReport report;
    std::vector<int> ids = options.only;
    if (ids.empty())
        for (int i = 1; i <= 11; ++i) ids.push_back(i);
    for (int id : ids) {
        report.results.push_back(suite.run(id));
        if (options.progress) {
            AcceptanceReport one;
            one.results.push_back(report.results.back());
            *options.progress << one.to_text() << std::flush;
        }
    }
    return report;
}

} // namespace aoisched
