#pragma once

#include <aoisched/instance.hpp>

#include <cstdint>
#include <vector>

namespace aoisched {

/// Per-slot ML bits 𝓜(t) with where they came from.
struct AdviceSequence {
    std::vector<bool> bits;
    double epsilon = 0.0;
    std::uint64_t seed = 0;
};

/// At each ON slot transmit iff C(t) < pending age + 1, where the pending age
/// is A(t−1) + ΔA(t). Unlike the online LP, greedy observes C(t).
ScheduleTrace greedy_schedule(const Instance& instance,
                              const AgingModel& aging = AgingModel::exogenous());

/// d(t) = 𝓜(t)·U(t).
ScheduleTrace follow_ml(const Instance& instance, const AdviceSequence& advice,
                        const AgingModel& aging = AgingModel::exogenous());
ScheduleTrace follow_ml(const Instance& instance, const std::vector<bool>& bits,
                        const AgingModel& aging = AgingModel::exogenous());

/// Blindly follows threshold-style advice: the bit is recomputed against the
/// device's own pending age, so it transmits iff U(t) = 1 and the pending age
/// reaches max{T_𝓜(t), 1}.
ScheduleTrace follow_ml_thresholds(const Instance& instance, const std::vector<double>& thresholds,
                                   const AgingModel& aging = AgingModel::exogenous());

ScheduleTrace never_update(const Instance& instance,
                           const AgingModel& aging = AgingModel::exogenous());
/// Transmit at every ON slot.
ScheduleTrace always_update(const Instance& instance,
                            const AgingModel& aging = AgingModel::exogenous());

} // namespace aoisched
