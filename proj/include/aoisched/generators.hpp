#pragma once

#include <aoisched/baselines.hpp>
#include <aoisched/instance.hpp>
#include <aoisched/oracle.hpp>
#include <aoisched/rng.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace aoisched {

// -- adversarial families ---------------------------------------------------

/// A0 = 1, ΔA ≡ 0, C = (C_m, C_m·R, …, C_m·R), U ≡ 1.
Instance gen_cost_jump(double c_min, double ratio, std::int64_t horizon);
/// min{T, C_m, min_{2≤t≤T} (t−1) + C_m·R}.
double cost_jump_opt(double c_min, double ratio, std::int64_t horizon);

struct InstancePair {
    Instance first;  // the construction used when the first-slot transmit probability is < 1
    Instance second; // T = 1, ΔA = (0), U = (1), A0 = 1
};

/// T = 2, ΔA = (0, C_m² − 2), U = (1, 0), C ≡ C_m, A0 = 1. Needs integer C_m ≥ 2.
InstancePair gen_age_jump_pair(std::int64_t c_min);
/// T = C_m² + 1, U = (1, 0, …, 0), ΔA ≡ 0, C ≡ C_m, A0 = 1. Needs integer C_m ≥ 1.
InstancePair gen_off_run_pair(std::int64_t c_min);

// -- stochastic environment ---------------------------------------------------

struct GilbertElliottCosts {
    double tr_p = 0.2; // L → H
    double tr_q = 0.8; // H → L
    double c_low = 1.0;
    double c_high = 1.0;
    /// Default: stationary draw, L with probability tr_q / (tr_p + tr_q).
    std::optional<CostState> initial;

    void validate() const;
    double stationary_low() const;
};

struct StochasticEnv {
    Instance instance;
    std::vector<CostState> labels;
};

/// Costs from the two-state chain, Bernoulli(opportunity_rate) opportunities,
/// A0 = 0. delta_a holds the never-update increments of the aging model (the
/// closed-loop runner recomputes them from realized transmissions when the
/// aging is elapsed-time based; under exogenous aging ΔA ≡ 1).
StochasticEnv gen_stochastic_env(const GilbertElliottCosts& ge, double opportunity_rate,
                                 std::int64_t horizon, const AgingModel& aging, std::uint64_t seed);

// -- noisy advice -------------------------------------------------------------

/// z_{0.975}; fixed instead of computed so σ is bit-stable everywhere.
inline constexpr double kNormalQuantile975 = 1.959964;

/// σ = ε·T*/z_{0.975}, so |T_𝓜 − T*| ≤ ε·T* with probability 0.95.
double advice_sigma(double epsilon, double ideal_threshold);

struct AdviceSpec {
    ThresholdPolicy ideal;
    double epsilon = 0.0;
    std::uint64_t seed = 0;
};

/// T_𝓜(t) = T*_{S(t)} + N(0, σ²), an independent draw each slot.
/// Throws ZeroThresholdWithNoise when ε > 0 and some T* ≤ 0.
std::vector<double> advice_thresholds(const AdviceSpec& spec, const std::vector<CostState>& labels);

/// 𝓜(t) = 1 iff pending_age(t) ≥ max{T_𝓜(t), 1}.
AdviceSequence gen_ml_advice(const AdviceSpec& spec, const std::vector<CostState>& labels,
                             std::span<const Age> pending_ages);

// -- random test instances ----------------------------------------------------

struct RandomInstanceSpec {
    std::int64_t min_horizon = 1;
    std::int64_t max_horizon = 15;
    Age max_delta = 3;
    Age max_initial_age = 3;
    CostBounds bounds{1.0, 1.0};
    /// Probability of U(t) = 1; 1 gives U ≡ 1.
    double on_probability = 1.0;
    /// Longest allowed OFF run (-1: unlimited).
    std::int64_t max_off_run = -1;
    /// Cap on the slot-1 batch A0 + ΔA(1) (-1: unlimited).
    Age max_first_batch = -1;
    /// Costs are drawn on a grid of 1/64 so sums stay exact in binary floating point.
    double cost_grid = 1.0 / 64.0;
};

Instance gen_random_instance(const RandomInstanceSpec& spec, Rng& rng);

} // namespace aoisched
