#include <aoisched/invariants.hpp>

#include <aoisched/textio.hpp>

#include <algorithm>
#include <cmath>

namespace aoisched {

std::string to_string(InvariantId id) {
    switch (id) {
    case InvariantId::MassLowerBound: return "mass_lower_bound";
    case InvariantId::ActivationCount: return "activation_count";
    case InvariantId::ActiveSetSize: return "active_set_size";
    case InvariantId::MlMassLowerBound: return "ml_mass_lower_bound";
    case InvariantId::MlStepBudget: return "ml_step_budget";
    case InvariantId::MassGrowth: return "mass_growth";
    }
    return "?";
}

InvariantChecks InvariantChecks::for_spec(const EngineSpec& spec, bool always_on) {
    InvariantChecks c;
    const ThetaKind kind = spec.theta.kind;
    if (kind == ThetaKind::Adaptive) return c;
    const bool intermittent = spec.variant == EngineVariant::Intermittent ||
                              spec.variant == EngineVariant::MlIntermittent;
    if (spec.theta.uses_advice()) {
        c.ml_mass = true;
        c.ml_budget = true;
    } else {
        c.mass_lower_bound = true;
        c.activation_count = true;
        c.active_set_size = always_on && (spec.variant == EngineVariant::Basic ||
                                          spec.variant == EngineVariant::Intermittent);
    }
    c.mass_growth = intermittent;
    return c;
}

InvariantMonitor::InvariantMonitor(InvariantChecks checks) : enabled_(checks) {}

InvariantMonitor::InvariantMonitor(const EngineSpec& spec, bool always_on)
    : enabled_(InvariantChecks::for_spec(spec, always_on)) {}

void InvariantMonitor::record(InvariantId id, Slot t, Slot r, std::string detail) {
    violations_.push_back({id, t, r, std::move(detail)});
}

void InvariantMonitor::on_slot_begin(const FractionalEngine& e, Slot t) {
    const auto& active = e.active();
    if (!active.empty() && active.back().arrival == t)
        max_arrival_ = std::max(max_arrival_, active.back().count);
    if (active.empty()) return;
    refs_.push_back({t, active.back().arrival, 0, 0, 0, 0});
}

namespace {

bool below(double value, double bound) {
    return value < bound * (1.0 - InvariantMonitor::kTolerance) - InvariantMonitor::kTolerance;
}

bool above(double value, double bound) {
    return value > bound * (1.0 + InvariantMonitor::kTolerance) + InvariantMonitor::kTolerance;
}

} // namespace

void InvariantMonitor::on_activation(const FractionalEngine& e, const ActivationEvent& ev) {
    const double c_max = e.c_max_now();
    const double exponent = e.spec().theta.base_exponent(e.c_min_now(), c_max);
    const ThetaPair theta = e.theta();
    const double lambda = e.spec().theta.lambda;
    const auto cap = static_cast<std::int64_t>(std::ceil(exponent - 1e-12));

    for (auto& ref : refs_) {
        ref.n_all += ev.multiplicity;
        if (ev.arrival <= ref.newest) {
            ref.n += ev.multiplicity;
            (ev.kind == StepKind::Fast ? ref.n_fast : ref.n_slow) += ev.multiplicity;
        }
        const double s_min = e.cumulative_since(ref.newest);

        if (enabled_.mass_lower_bound && ev.arrival <= ref.newest) {
            ++checks_;
            const double bound = theta_power(c_max, static_cast<double>(ref.n)) / theta.slow;
            if (below(s_min, bound))
                record(InvariantId::MassLowerBound, ev.slot, ref.r,
                       "S=" + textio::format_double(s_min) + " < " + textio::format_double(bound) +
                           " after n=" + std::to_string(ref.n));
        }
        if (enabled_.activation_count && ev.arrival <= ref.newest) {
            ++checks_;
            if (ref.n > cap)
                record(InvariantId::ActivationCount, ev.slot, ref.r,
                       "n=" + std::to_string(ref.n) + " > " + std::to_string(cap));
        }
        if (enabled_.ml_mass && ev.arrival <= ref.newest) {
            ++checks_;
            const double growth = std::exp(static_cast<double>(ref.n_fast) * std::log1p(1.0 / c_max));
            const double slow_part = theta_power(c_max, static_cast<double>(ref.n_slow)) / theta.slow;
            const double fast_part = theta_power(c_max, static_cast<double>(ref.n_fast)) / theta.fast;
            const double bound = slow_part * growth + fast_part;
            if (below(s_min, bound))
                record(InvariantId::MlMassLowerBound, ev.slot, ref.r,
                       "S=" + textio::format_double(s_min) + " < " + textio::format_double(bound) +
                           " after N_s=" + std::to_string(ref.n_slow) +
                           " N_f=" + std::to_string(ref.n_fast));
        }
        if (enabled_.ml_budget && ev.arrival <= ref.newest) {
            ++checks_;
            const double used = static_cast<double>(ref.n_slow) * lambda + static_cast<double>(ref.n_fast);
            if (above(used, exponent + 1.0))
                record(InvariantId::MlStepBudget, ev.slot, ref.r,
                       "N_s*lambda + N_f = " + textio::format_double(used));
        }
        if (enabled_.mass_growth) {
            ++checks_;
            const double theta_min = std::min(theta.slow, theta.fast);
            const double growth = e.cumulative_since(ref.r);
            const double bound = (1.0 + 1.0 / theta_min) *
                                 theta_power(c_max, static_cast<double>(ref.n_all));
            if (above(growth, bound))
                record(InvariantId::MassGrowth, ev.slot, ref.r,
                       "growth=" + textio::format_double(growth) + " > " +
                           textio::format_double(bound) + " after n=" + std::to_string(ref.n_all));
        }
    }
}

void InvariantMonitor::on_slot_end(const FractionalEngine& e, Slot t) {
    if (enabled_.active_set_size && max_arrival_ > 0) {
        ++checks_;
        const double exponent = e.spec().theta.base_exponent(e.c_min_now(), e.c_max_now());
        const auto limit = 2 * static_cast<std::int64_t>(
                                   std::ceil(std::sqrt(static_cast<double>(max_arrival_) * exponent) - 1e-12));
        const std::int64_t active = e.active_members();
        if (active > limit)
            record(InvariantId::ActiveSetSize, t, t,
                   std::to_string(active) + " active members > " + std::to_string(limit));
    }
    // A reference is spent once its newest cohort clears (older ones clear first).
    const auto& active = e.active();
    std::erase_if(refs_, [&active](const Reference& ref) {
        return std::none_of(active.begin(), active.end(),
                            [&ref](const ActiveCohort& c) { return c.arrival == ref.newest; });
    });
}

} // namespace aoisched
