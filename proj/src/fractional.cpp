#include <aoisched/fractional.hpp>

#include <aoisched/error.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

namespace aoisched {

ThetaPolicy ThetaPolicy::ml(double lambda) { return {ThetaKind::Ml, lambda, 1}; }
ThetaPolicy ThetaPolicy::ml_revised(double lambda) { return {ThetaKind::MlRevised, lambda, 1}; }
ThetaPolicy ThetaPolicy::adaptive(std::int64_t t_est) { return {ThetaKind::Adaptive, 1.0, t_est}; }

double ThetaPolicy::base_exponent(double c_min, double c_max) const {
    return (kind == ThetaKind::Revised || kind == ThetaKind::MlRevised) ? c_max : c_min;
}

std::string ThetaPolicy::name() const {
    switch (kind) {
    case ThetaKind::Default: return "default";
    case ThetaKind::Revised: return "revised";
    case ThetaKind::Ml: return "ml:" + textio::format_double(lambda);
    case ThetaKind::MlRevised: return "ml_revised:" + textio::format_double(lambda);
    case ThetaKind::Adaptive: return "adaptive:" + textio::format_int(t_est);
    }
    return "?";
}

ThetaPolicy ThetaPolicy::from_name(const std::string& name) {
    const auto colon = name.find(':');
    const std::string head = name.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
    if (head == "default" && arg.empty()) return standard();
    if (head == "revised" && arg.empty()) return revised();
    if (head == "ml" && !arg.empty()) return ml(textio::parse_double(arg));
    if (head == "ml_revised" && !arg.empty()) return ml_revised(textio::parse_double(arg));
    if (head == "adaptive" && !arg.empty()) return adaptive(textio::parse_int(arg));
    fail(ErrorCode::ConfigError, "unknown theta policy '" + name + "'");
}

double theta_power(double c_max, double exponent) {
    const double v = std::expm1(exponent * std::log1p(1.0 / c_max));
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
}

ThetaPair theta_value(const ThetaPolicy& policy, double c_min, double c_max,
                      const ThetaContext& context) {
    require(c_min > 0.0 && c_min <= c_max, ErrorCode::InvalidArgument, "need 0 < C_m <= C_M");
    switch (policy.kind) {
    case ThetaKind::Default: {
        const double t = theta_power(c_max, c_min);
        return {t, t};
    }
    case ThetaKind::Revised: {
        const double t = theta_power(c_max, c_max);
        return {t, t};
    }
    case ThetaKind::Ml:
    case ThetaKind::MlRevised: {
        const double lam = policy.lambda;
        if (!(lam > 0.0 && lam <= 1.0))
            fail(ErrorCode::LambdaOutOfRange, "lambda = " + textio::format_double(lam));
        const double e = policy.base_exponent(c_min, c_max);
        return {theta_power(c_max, e / lam), theta_power(c_max, e * lam)};
    }
    case ThetaKind::Adaptive: {
        require(policy.t_est >= 1, ErrorCode::InvalidArgument, "T_est must be >= 1");
        if (context.observed_costs.empty())
            fail(ErrorCode::EmptyObservationWindow, "no cost sample observed yet");
        const auto [lo, hi] =
            std::minmax_element(context.observed_costs.begin(), context.observed_costs.end());
        const double t = theta_power(*hi, *lo);
        return {t, t};
    }
    }
    fail(ErrorCode::InvalidArgument, "unknown theta kind");
}

std::string to_string(EngineVariant v) {
    switch (v) {
    case EngineVariant::Basic: return "basic";
    case EngineVariant::Ml: return "ml";
    case EngineVariant::Intermittent: return "intermittent";
    case EngineVariant::MlIntermittent: return "ml_intermittent";
    }
    return "?";
}

EngineVariant variant_from_name(const std::string& name) {
    if (name == "basic") return EngineVariant::Basic;
    if (name == "ml") return EngineVariant::Ml;
    if (name == "intermittent") return EngineVariant::Intermittent;
    if (name == "ml_intermittent") return EngineVariant::MlIntermittent;
    fail(ErrorCode::ConfigError, "unknown engine variant '" + name + "'");
}

// ---------------------------------------------------------------------------

FractionalEngine::FractionalEngine(CostBounds bounds, EngineSpec spec)
    : bounds_(bounds)
    , spec_(spec)
    , c_min_now_(bounds.min)
    , c_max_now_(bounds.max) {
    require(bounds.min > 0.0 && bounds.min <= bounds.max, ErrorCode::InvalidArgument,
            "need 0 < C_m <= C_M");
    if (spec_.theta.kind == ThetaKind::Adaptive)
        require(spec_.theta.t_est >= 1, ErrorCode::InvalidArgument, "T_est must be >= 1");
    else
        theta_ = theta_value(spec_.theta, bounds.min, bounds.max);
}

void FractionalEngine::step_basic(Slot t, Age arrivals, double cost) {
    run_slot(t, arrivals, cost, false, true, false);
}

void FractionalEngine::step_ml(Slot t, Age arrivals, double cost, bool advice) {
    run_slot(t, arrivals, cost, advice, true, false);
}

void FractionalEngine::step_intermittent(Slot t, Age arrivals, double cost, bool on) {
    run_slot(t, arrivals, cost, false, on, true);
}

void FractionalEngine::step_ml_intermittent(Slot t, Age arrivals, double cost, bool advice,
                                            bool on) {
    run_slot(t, arrivals, cost, advice, on, true);
}

void FractionalEngine::step(const SlotInput& in) {
    switch (spec_.variant) {
    case EngineVariant::Basic: step_basic(in.t, in.arrivals, in.cost); break;
    case EngineVariant::Ml: step_ml(in.t, in.arrivals, in.cost, in.advice); break;
    case EngineVariant::Intermittent: step_intermittent(in.t, in.arrivals, in.cost, in.on); break;
    case EngineVariant::MlIntermittent:
        step_ml_intermittent(in.t, in.arrivals, in.cost, in.advice, in.on);
        break;
    }
}

double FractionalEngine::cumulative_since(Slot a) const {
    require(a >= 1 && a <= t_, ErrorCode::InvalidArgument, "slot outside the processed range");
    return cohort_mass(a);
}

std::int64_t FractionalEngine::active_members() const {
    std::int64_t n = 0;
    for (const auto& c : active_) n += c.count;
    return n;
}

void FractionalEngine::refresh_theta(Slot t, double cost) {
    if (spec_.theta.kind != ThetaKind::Adaptive) return;
    if ((t - 1) % spec_.theta.t_est != 0) return;
    samples_.push_back(cost);
    const auto [lo, hi] = std::minmax_element(samples_.begin(), samples_.end());
    c_min_now_ = *lo;
    c_max_now_ = *hi;
    theta_ = theta_value(spec_.theta, c_min_now_, c_max_now_, {samples_});
}

void FractionalEngine::activate_member(Slot t, ActiveCohort& c, StepKind kind, double theta,
                                       std::int64_t& slot_activations) {
    const double s = cohort_mass(c.arrival);
    const double inc = s / c_max_now_ + 1.0 / (theta * c_max_now_);
    x_cur_ += inc;
    ++c.activations;
    ++slot_activations;
    ++total_;
    ++(kind == StepKind::Fast ? fast_ : slow_);
    if (observer_) observer_->on_activation(*this, {t, c.arrival, kind, s, inc, 1});
}

void FractionalEngine::run_slot(Slot t, Age arrivals, double cost, bool advice, bool on,
                                bool intermittent) {
    if (t != t_ + 1)
        fail(ErrorCode::OutOfOrderSlot,
             "expected slot " + std::to_string(t_ + 1) + ", got " + std::to_string(t));
    require(arrivals >= 0, ErrorCode::InvalidArgument, "negative arrivals");
    t_ = t;
    base_ = prefix_.back();
    x_cur_ = 0.0;
    refresh_theta(t, cost);

    if (intermittent && t > 1 && prev_on_) t_hat_ = t;
    if (advice) t_ml_ = t;
    if (arrivals > 0) active_.push_back({t, arrivals, 0});
    if (observer_) observer_->on_slot_begin(*this, t);

    const double holding_before = ledger_.holding;
    std::int64_t acts = 0;
    for (auto& c : active_) {
        double s = cohort_mass(c.arrival);
        if (s >= 1.0 - kClearingSlack) continue;
        const bool advised = spec_.guard == AdviceGuard::Inclusive ? c.arrival <= t_ml_ : c.arrival < t_ml_;
        const StepKind kind = advised ? StepKind::Fast : StepKind::Slow;
        const double theta = kind == StepKind::Fast ? theta_.fast : theta_.slow;
        if (intermittent && !on) {
            ledger_.holding += static_cast<double>(c.count) * (1.0 - s);
            continue;
        }
        const std::int64_t reps = (intermittent && c.arrival < t_hat_) ? t - t_hat_ + 1 : 1;
        for (Age remaining = c.count; remaining > 0; --remaining) {
            s = cohort_mass(c.arrival);
            if (s >= 1.0 - kClearingSlack) break;
            if (s / c_max_now_ + 1.0 / (theta * c_max_now_) == 0.0) {
                // No member can move x; fold the rest of the cohort.
                const std::int64_t n = remaining * reps;
                ledger_.holding += static_cast<double>(remaining) * (1.0 - s);
                c.activations += n;
                acts += n;
                total_ += n;
                (kind == StepKind::Fast ? fast_ : slow_) += n;
                if (observer_) observer_->on_activation(*this, {t, c.arrival, kind, s, 0.0, n});
                break;
            }
            ledger_.holding += 1.0 - s;
            for (std::int64_t r = 0; r < reps; ++r) {
                if (cohort_mass(c.arrival) >= 1.0 - kClearingSlack) break;
                activate_member(t, c, kind, theta, acts);
            }
        }
    }

    x_.push_back(x_cur_);
    prefix_.push_back(base_ + x_cur_);
    const double clearing = cost * x_cur_;
    ledger_.clearing += clearing;
    std::erase_if(active_, [this](const ActiveCohort& c) {
        return cohort_mass(c.arrival) >= 1.0 - kClearingSlack;
    });
    prev_on_ = on;

    SlotAudit audit{t, x_cur_, active_members(), acts, clearing, ledger_.holding - holding_before};
    if (trace_) {
        *trace_ << "t=" << t << " x=" << textio::format_double(audit.x)
                << " active=" << audit.active_members << " activations=" << audit.activations
                << " clearing=" << textio::format_double(audit.clearing)
                << " holding=" << textio::format_double(audit.holding) << '\n';
    }
    ledger_.slots.push_back(audit);
    if (observer_) observer_->on_slot_end(*this, t);
}

FractionalEngine run_engine(const Instance& instance, const EngineSpec& spec,
                            const std::vector<bool>& advice, EngineObserver* observer) {
    require(advice.empty() || static_cast<std::int64_t>(advice.size()) == instance.horizon(),
            ErrorCode::LengthMismatch, "advice length differs from horizon");
    FractionalEngine engine(instance.cost_bounds(), spec);
    engine.set_observer(observer);
    const auto cohorts = expand_cohorts(instance);
    for (Slot t = 1; t <= instance.horizon(); ++t) {
        const auto i = static_cast<std::size_t>(t - 1);
        engine.step({t, cohorts[i].count, instance.cost(t), !advice.empty() && advice[i],
                     instance.on(t)});
    }
    engine.set_observer(nullptr);
    return engine;
}

} // namespace aoisched
