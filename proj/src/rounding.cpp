#include <aoisched/rounding.hpp>

#include <aoisched/error.hpp>
#include <aoisched/rng.hpp>

#include <algorithm>
#include <cmath>

namespace aoisched {

Rounder::Rounder(double u) : threshold_(u) {
    if (!(u >= 0.0 && u < 1.0)) fail(ErrorCode::UOutOfRange, "u = " + textio::format_double(u));
}

bool Rounder::step(double x) {
    require(x >= 0.0 && std::isfinite(x), ErrorCode::InvalidArgument,
            "x must be finite and nonnegative");
    x_pre_ = x_sum_;
    x_sum_ += std::min(x, 1.0);
    const bool d = x_pre_ <= threshold_ && threshold_ < x_sum_;
    if (d) {
        threshold_ += 1.0;
        ++sent_;
    }
    return d;
}

std::vector<bool> round_stream(std::span<const double> x_values, double u) {
    Rounder r(u);
    std::vector<bool> d;
    d.reserve(x_values.size());
    for (double x : x_values) d.push_back(r.step(x));
    return d;
}

textio::Document RunRecord::to_document(bool with_decisions) const {
    textio::Document doc;
    doc.set("engine", engine);
    doc.set("theta", theta);
    doc.set("aging", aging);
    doc.set("seed", std::to_string(seed));
    doc.set("u", textio::format_double(u));
    doc.set("update_cost", textio::format_double(realized.update_cost));
    doc.set("age_cost", textio::format_double(realized.age_cost));
    doc.set("total_cost", textio::format_double(realized.total));
    doc.set("lp_clearing", textio::format_double(lp_clearing));
    doc.set("lp_holding", textio::format_double(lp_holding));
    doc.set("lp_objective", textio::format_double(lp_objective()));
    if (with_decisions) doc.set("decisions", textio::join_bools(decisions));
    return doc;
}

RunResult run_online(const RunConfig& config) {
    const Instance& inst = config.instance;
    const auto horizon = inst.horizon();
    const auto& advice = config.advice;
    if (advice.kind == AdviceInput::Kind::Bits)
        require(static_cast<std::int64_t>(advice.bits.size()) == horizon,
                ErrorCode::LengthMismatch, "advice length differs from horizon");
    if (advice.kind == AdviceInput::Kind::Thresholds)
        require(static_cast<std::int64_t>(advice.thresholds.size()) == horizon,
                ErrorCode::LengthMismatch, "advice thresholds length differs from horizon");

    FractionalEngine engine(inst.cost_bounds(), config.engine);
    engine.set_observer(config.observer);

    Rng rng(config.seed, streams::kRounding);
    const double u = rng.uniform01();
    Rounder rounder(u);

    std::vector<bool> decisions(static_cast<std::size_t>(horizon), false);
    std::vector<bool> advice_used(static_cast<std::size_t>(horizon), false);
    Age age = inst.initial_age();
    std::int64_t elapsed = 0;
    for (Slot t = 1; t <= horizon; ++t) {
        const auto i = static_cast<std::size_t>(t - 1);
        const Age inc = realized_increment(config.aging, inst, t, elapsed);
        const Age pending = saturating_add(age, inc);
        const Age arrivals = t == 1 ? saturating_add(inc, inst.initial_age()) : inc;

        bool bit = false;
        if (advice.kind == AdviceInput::Kind::Bits) bit = advice.bits[i];
        if (advice.kind == AdviceInput::Kind::Thresholds)
            bit = static_cast<double>(pending) >= std::max(advice.thresholds[i], 1.0);
        advice_used[i] = bit;

        engine.step({t, arrivals, inst.cost(t), bit, inst.on(t)});
        const double x = inst.on(t) ? std::min(engine.x(t), 1.0) : 0.0;
        const bool d = rounder.step(x);
        decisions[i] = d;
        if (d) {
            age = 0;
            elapsed = 0;
        } else {
            age = pending;
            ++elapsed;
        }
    }
    engine.set_observer(nullptr);

    RunResult out;
    out.trace = evaluate_schedule(inst, config.aging, decisions);
    out.ledger = engine.ledger();
    out.advice = std::move(advice_used);
    out.record.engine = to_string(config.engine.variant);
    out.record.theta = config.engine.theta.name();
    out.record.aging = config.aging.name();
    out.record.seed = config.seed;
    out.record.u = u;
    out.record.realized = out.trace.cost;
    out.record.lp_clearing = out.ledger.clearing;
    out.record.lp_holding = out.ledger.holding;
    out.record.decisions = decisions;
    return out;
}

std::vector<RunResult> run_replications(const RunConfig& config) {
    require(config.replications >= 1, ErrorCode::InvalidArgument, "replications must be >= 1");
    std::vector<RunResult> out;
    out.reserve(static_cast<std::size_t>(config.replications));
    RunConfig c = config;
    for (std::int64_t k = 0; k < config.replications; ++k) {
        c.seed = config.seed + static_cast<std::uint64_t>(k);
        out.push_back(run_online(c));
    }
    return out;
}

} // namespace aoisched
