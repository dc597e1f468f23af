#pragma once

#include <aoisched/instance.hpp>
#include <aoisched/textio.hpp>

#include <cstdint>
#include <vector>

namespace aoisched {

struct OracleResult {
    double opt_cost = 0.0;
    std::vector<bool> decisions;
    /// Audit: states (candidate last-update slots) and transitions examined.
    std::int64_t states = 0;
    std::int64_t transitions = 0;

    textio::Document to_document() const;
};

/// Exact offline optimum by dynamic programming over the last update slot,
/// O(T²) time and O(T) memory. Among optimal schedules the one that
/// transmits earliest (lexicographically, 1 before 0) is returned.
OracleResult opt_dp(const Instance& instance);
OracleResult opt_dp(const Instance& instance, const AgingModel& aging);

/// Exhaustive search over every feasible schedule, same tie rule.
/// Throws HorizonTooLarge for T > 20.
OracleResult opt_enumerate(const Instance& instance);
OracleResult opt_enumerate(const Instance& instance, const AgingModel& aging);

inline constexpr std::int64_t kMaxEnumerationHorizon = 20;

enum class CostState : std::uint8_t { Low, High };

struct ThresholdPolicy {
    std::int64_t t_low = 1;
    std::int64_t t_high = 1;

    std::int64_t threshold(CostState s) const { return s == CostState::High ? t_high : t_low; }
    friend bool operator==(const ThresholdPolicy&, const ThresholdPolicy&) = default;
};

/// Transmit at slot t iff U(t) = 1 and the pending age A(t−1) + ΔA(t)
/// reaches the threshold of the current cost state.
ScheduleTrace eval_threshold_policy(const Instance& instance, const std::vector<CostState>& labels,
                                    const ThresholdPolicy& policy,
                                    const AgingModel& aging = AgingModel::exogenous());

struct ThresholdSearchResult {
    ThresholdPolicy policy;
    double cost = 0.0;
};

/// Exhaustive search over (T_L, T_H) ∈ [1, grid_max]²; ties go to the
/// lexicographically smallest pair. Throws GridEmpty for grid_max < 1.
ThresholdSearchResult best_threshold_policy(const Instance& instance,
                                            const std::vector<CostState>& labels,
                                            std::int64_t grid_max,
                                            const AgingModel& aging = AgingModel::exogenous());

/// ⌈2·C_M⌉ + 2·ΔA_M. Under elapsed aging ΔA_M is the increment g(k+1) − g(k)
/// at the first k with g(k) ≥ 2·C_M, the largest step a useful threshold can see.
std::int64_t default_grid_max(const Instance& instance,
                              const AgingModel& aging = AgingModel::exogenous());

} // namespace aoisched
