#include <aoisched/generators.hpp>

#include <aoisched/error.hpp>

#include <algorithm>
#include <cmath>

namespace aoisched {

Instance gen_cost_jump(double c_min, double ratio, std::int64_t horizon) {
    require(c_min > 0.0 && ratio >= 1.0 && horizon >= 1, ErrorCode::InvalidArgument,
            "need C_m > 0, R >= 1, T >= 1");
    const double high = c_min * ratio;
    std::vector<double> cost(static_cast<std::size_t>(horizon), high);
    cost.front() = c_min;
    return Instance::always_on(1, std::vector<Age>(static_cast<std::size_t>(horizon), 0),
                               std::move(cost), {c_min, high});
}

double cost_jump_opt(double c_min, double ratio, std::int64_t horizon) {
    double best = std::min(static_cast<double>(horizon), c_min);
    for (std::int64_t t = 2; t <= horizon; ++t)
        best = std::min(best, static_cast<double>(t - 1) + c_min * ratio);
    return best;
}

namespace {

Instance single_slot(double c_min) { return Instance::always_on(1, {0}, {c_min}, {c_min, c_min}); }

} // namespace

InstancePair gen_age_jump_pair(std::int64_t c_min) {
    require(c_min >= 2, ErrorCode::InvalidArgument, "needs C_m >= 2 so that C_m^2 - 2 >= 0");
    const auto c = static_cast<double>(c_min);
    Instance first(1, {0, c_min * c_min - 2}, {c, c}, {true, false}, {c, c});
    return {std::move(first), single_slot(c)};
}

InstancePair gen_off_run_pair(std::int64_t c_min) {
    require(c_min >= 1, ErrorCode::InvalidArgument, "needs C_m >= 1");
    const auto c = static_cast<double>(c_min);
    const auto T = static_cast<std::size_t>(c_min * c_min + 1);
    std::vector<bool> on(T, false);
    on.front() = true;
    Instance first(1, std::vector<Age>(T, 0), std::vector<double>(T, c), std::move(on), {c, c});
    return {std::move(first), single_slot(c)};
}

// ---------------------------------------------------------------------------

void GilbertElliottCosts::validate() const {
    require(tr_p >= 0.0 && tr_p <= 1.0 && tr_q >= 0.0 && tr_q <= 1.0, ErrorCode::InvalidArgument,
            "transition probabilities must lie in [0, 1]");
    require(c_low > 0.0 && c_low <= c_high, ErrorCode::InvalidArgument, "need 0 < C_L <= C_H");
}

double GilbertElliottCosts::stationary_low() const {
    return tr_p + tr_q > 0.0 ? tr_q / (tr_p + tr_q) : 1.0;
}

StochasticEnv gen_stochastic_env(const GilbertElliottCosts& ge, double opportunity_rate,
                                 std::int64_t horizon, const AgingModel& aging, std::uint64_t seed) {
    ge.validate();
    require(opportunity_rate >= 0.0 && opportunity_rate <= 1.0, ErrorCode::InvalidArgument,
            "opportunity rate must lie in [0, 1]");
    require(horizon >= 1, ErrorCode::InvalidArgument, "horizon must be positive");
    Rng cost_rng(seed, streams::kCosts);
    Rng on_rng(seed, streams::kOpportunity);
    const auto T = static_cast<std::size_t>(horizon);

    std::vector<CostState> labels(T);
    std::vector<double> cost(T);
    std::vector<bool> on(T);
    std::vector<Age> delta(T, 1);
    CostState s = ge.initial ? *ge.initial
                             : (cost_rng.uniform01() < ge.stationary_low() ? CostState::Low
                                                                           : CostState::High);
    for (std::size_t i = 0; i < T; ++i) {
        if (i > 0) {
            const double flip = s == CostState::Low ? ge.tr_p : ge.tr_q;
            if (cost_rng.uniform01() < flip) s = s == CostState::Low ? CostState::High : CostState::Low;
        }
        labels[i] = s;
        cost[i] = s == CostState::Low ? ge.c_low : ge.c_high;
        on[i] = opportunity_rate >= 1.0 || on_rng.uniform01() < opportunity_rate;
        if (!aging.is_exogenous()) {
            const auto k = static_cast<std::int64_t>(i);
            delta[i] = aging.g(k + 1) - aging.g(k);
        }
    }
    return {Instance(0, std::move(delta), std::move(cost), std::move(on), {ge.c_low, ge.c_high}),
            std::move(labels)};
}

// ---------------------------------------------------------------------------

double advice_sigma(double epsilon, double ideal_threshold) {
    return epsilon * ideal_threshold / kNormalQuantile975;
}

std::vector<double> advice_thresholds(const AdviceSpec& spec, const std::vector<CostState>& labels) {
    require(spec.epsilon >= 0.0, ErrorCode::InvalidArgument, "epsilon must be nonnegative");
    if (spec.epsilon > 0.0 && (spec.ideal.t_low <= 0 || spec.ideal.t_high <= 0))
        fail(ErrorCode::ZeroThresholdWithNoise, "relative noise needs positive thresholds");
    Rng rng(spec.seed, streams::kAdvice);
    std::vector<double> out;
    out.reserve(labels.size());
    for (CostState s : labels) {
        const auto ideal = static_cast<double>(spec.ideal.threshold(s));
        const double noise = spec.epsilon > 0.0 ? rng.normal() * advice_sigma(spec.epsilon, ideal) : 0.0;
        out.push_back(ideal + noise);
    }
    return out;
}

AdviceSequence gen_ml_advice(const AdviceSpec& spec, const std::vector<CostState>& labels,
                             std::span<const Age> pending_ages) {
    require(pending_ages.size() == labels.size(), ErrorCode::LengthMismatch,
            "pending ages and labels differ in length");
    const auto th = advice_thresholds(spec, labels);
    AdviceSequence out{std::vector<bool>(labels.size()), spec.epsilon, spec.seed};
    for (std::size_t i = 0; i < labels.size(); ++i)
        out.bits[i] = static_cast<double>(pending_ages[i]) >= std::max(th[i], 1.0);
    return out;
}

// ---------------------------------------------------------------------------

Instance gen_random_instance(const RandomInstanceSpec& spec, Rng& rng) {
    require(spec.min_horizon >= 1 && spec.min_horizon <= spec.max_horizon,
            ErrorCode::InvalidArgument, "bad horizon range");
    auto uniform_int = [&rng](std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<std::int64_t>(rng.next_u64() % span);
    };
    const auto T = static_cast<std::size_t>(uniform_int(spec.min_horizon, spec.max_horizon));
    const double lo_k = std::ceil(spec.bounds.min / spec.cost_grid);
    const double hi_k = std::floor(spec.bounds.max / spec.cost_grid);

    std::vector<Age> delta(T);
    std::vector<double> cost(T);
    std::vector<bool> on(T);
    std::int64_t off_run = 0;
    for (std::size_t i = 0; i < T; ++i) {
        delta[i] = uniform_int(0, spec.max_delta);
        if (hi_k < lo_k || spec.bounds.min == spec.bounds.max) {
            cost[i] = spec.bounds.min;
        } else {
            cost[i] = static_cast<double>(uniform_int(static_cast<std::int64_t>(lo_k),
                                                      static_cast<std::int64_t>(hi_k))) *
                      spec.cost_grid;
        }
        bool u = spec.on_probability >= 1.0 || rng.uniform01() < spec.on_probability;
        if (!u && spec.max_off_run >= 0 && off_run >= spec.max_off_run) u = true;
        off_run = u ? 0 : off_run + 1;
        on[i] = u;
    }
    Age a0 = uniform_int(0, spec.max_initial_age);
    if (spec.max_first_batch >= 0) {
        delta[0] = std::min(delta[0], spec.max_first_batch);
        a0 = std::min(a0, spec.max_first_batch - delta[0]);
    }
    return Instance(a0, std::move(delta), std::move(cost), std::move(on), spec.bounds);
}

} // namespace aoisched
