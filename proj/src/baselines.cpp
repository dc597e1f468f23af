#include <aoisched/baselines.hpp>

#include <aoisched/error.hpp>

#include <algorithm>

namespace aoisched {

ScheduleTrace greedy_schedule(const Instance& instance, const AgingModel& aging) {
    std::vector<bool> d(static_cast<std::size_t>(instance.horizon()), false);
    Age age = instance.initial_age();
    std::int64_t elapsed = 0;
    for (Slot t = 1; t <= instance.horizon(); ++t) {
        const Age pending = saturating_add(age, realized_increment(aging, instance, t, elapsed));
        if (instance.on(t) && instance.cost(t) < static_cast<double>(pending) + 1.0) {
            d[static_cast<std::size_t>(t - 1)] = true;
            age = 0;
            elapsed = 0;
        } else {
            age = pending;
            ++elapsed;
        }
    }
    return evaluate_schedule(instance, aging, d);
}

ScheduleTrace follow_ml(const Instance& instance, const AdviceSequence& advice,
                        const AgingModel& aging) {
    return follow_ml(instance, advice.bits, aging);
}

ScheduleTrace follow_ml(const Instance& instance, const std::vector<bool>& bits,
                        const AgingModel& aging) {
    require(static_cast<std::int64_t>(bits.size()) == instance.horizon(), ErrorCode::LengthMismatch,
            "advice length differs from horizon");
    std::vector<bool> d(bits.size());
    for (Slot t = 1; t <= instance.horizon(); ++t) {
        const auto i = static_cast<std::size_t>(t - 1);
        d[i] = bits[i] && instance.on(t);
    }
    return evaluate_schedule(instance, aging, d);
}

ScheduleTrace follow_ml_thresholds(const Instance& instance, const std::vector<double>& thresholds,
                                   const AgingModel& aging) {
    require(static_cast<std::int64_t>(thresholds.size()) == instance.horizon(),
            ErrorCode::LengthMismatch, "advice thresholds length differs from horizon");
    std::vector<bool> d(thresholds.size(), false);
    Age age = instance.initial_age();
    std::int64_t elapsed = 0;
    for (Slot t = 1; t <= instance.horizon(); ++t) {
        const auto i = static_cast<std::size_t>(t - 1);
        const Age pending = saturating_add(age, realized_increment(aging, instance, t, elapsed));
        if (instance.on(t) && static_cast<double>(pending) >= std::max(thresholds[i], 1.0)) {
            d[i] = true;
            age = 0;
            elapsed = 0;
        } else {
            age = pending;
            ++elapsed;
        }
    }
    return evaluate_schedule(instance, aging, d);
}

ScheduleTrace never_update(const Instance& instance, const AgingModel& aging) {
    return evaluate_schedule(instance, aging,
                             std::vector<bool>(static_cast<std::size_t>(instance.horizon()), false));
}

ScheduleTrace always_update(const Instance& instance, const AgingModel& aging) {
    return evaluate_schedule(instance, aging, instance.opportunity());
}

} // namespace aoisched
