#pragma once

#include <aoisched/instance.hpp>

#include <cstdint>
#include <deque>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace aoisched {

enum class ThetaKind { Default, Revised, Ml, MlRevised, Adaptive };

/// Which θ constants drive the x-increment rule.
///   default     θ  = (1+1/C_M)^{C_m} − 1
///   revised     θ' = (1+1/C_M)^{C_M} − 1
///   ml          θ_f, θ_s with exponents C_m·λ and C_m/λ
///   ml_revised  θ_f, θ_s with exponents C_M·λ and C_M/λ
///   adaptive    default θ, with C_m and C_M replaced by the running
///               min/max of costs sampled every T_est slots
struct ThetaPolicy {
    ThetaKind kind = ThetaKind::Default;
    double lambda = 1.0;
    std::int64_t t_est = 1;

    static ThetaPolicy standard() { return {}; }
    static ThetaPolicy revised() { return {ThetaKind::Revised, 1.0, 1}; }
    static ThetaPolicy ml(double lambda);
    static ThetaPolicy ml_revised(double lambda);
    static ThetaPolicy adaptive(std::int64_t t_est);

    bool uses_advice() const { return kind == ThetaKind::Ml || kind == ThetaKind::MlRevised; }
    /// Exponent of the slow (and non-ML) step, C_m or C_M.
    double base_exponent(double c_min, double c_max) const;

    std::string name() const;
    /// "default", "revised", "ml:<λ>", "ml_revised:<λ>", "adaptive:<T_est>".
    static ThetaPolicy from_name(const std::string& name);
};

struct ThetaPair {
    double slow = 0.0; // θ_s; equals θ outside the ML kinds
    double fast = 0.0; // θ_f
};

/// Cost samples observed so far (adaptive kind only).
struct ThetaContext {
    std::span<const double> observed_costs;
};

/// (1+1/C_M)^e − 1 in a cancellation-free form. Infinite when it overflows.
double theta_power(double c_max, double exponent);

/// Throws LambdaOutOfRange, InvalidArgument, EmptyObservationWindow.
ThetaPair theta_value(const ThetaPolicy& policy, double c_min, double c_max,
                      const ThetaContext& context = {});

enum class EngineVariant { Basic, Ml, Intermittent, MlIntermittent };

std::string to_string(EngineVariant v);
EngineVariant variant_from_name(const std::string& name);

/// Which packets take fast steps once the advice has asked for a clearing
/// at slot T_ML.
///   Inclusive  T_i ≤ T_ML: packets arriving in the advised slot are covered
///              by that clearing (the reading the consistency bound needs)
///   Strict     T_i < T_ML: same-slot arrivals still take slow steps
enum class AdviceGuard { Inclusive, Strict };

struct EngineSpec {
    EngineVariant variant = EngineVariant::Basic;
    ThetaPolicy theta;
    AdviceGuard guard = AdviceGuard::Inclusive;
};

/// A cohort whose cumulative clearing mass is still counted as below 1.
/// Cleared cohorts are treated as S ≥ 1 once S ≥ 1 − kClearingSlack, which
/// absorbs round-off when C_m (or C_M) is an integer and the exact sum lands
/// on 1.
inline constexpr double kClearingSlack = 1e-9;

struct ActiveCohort {
    Slot arrival = 1;
    Age count = 0;
    std::int64_t activations = 0;
};

enum class StepKind { Slow, Fast };

struct ActivationEvent {
    Slot slot = 0;
    Slot arrival = 0;
    StepKind kind = StepKind::Slow;
    double s_before = 0.0;
    double increment = 0.0;
    /// Identical activations folded together (only when the increment is 0).
    std::int64_t multiplicity = 1;
};

struct SlotAudit {
    Slot t = 0;
    double x = 0.0;
    std::int64_t active_members = 0;
    std::int64_t activations = 0;
    double clearing = 0.0;
    double holding = 0.0;
};

struct LpObjectiveLedger {
    double clearing = 0.0;
    double holding = 0.0;
    std::vector<SlotAudit> slots;

    double total() const { return clearing + holding; }
};

class FractionalEngine;

/// Receives every activation and slot boundary; used by the invariant monitor.
class EngineObserver {
public:
    virtual ~EngineObserver() = default;
    virtual void on_slot_begin(const FractionalEngine&, Slot) {}
    virtual void on_activation(const FractionalEngine&, const ActivationEvent&) {}
    virtual void on_slot_end(const FractionalEngine&, Slot) {}
};

struct SlotInput {
    Slot t = 0;
    Age arrivals = 0;
    double cost = 0.0;
    bool advice = false;
    bool on = true;
};

/// Online fractional LP updater. Holds x(τ) for past slots, frozen prefix
/// totals, and the active cohorts in ascending arrival order. Each step_*
/// call processes exactly one slot and must be given t = current_slot() + 1.
class FractionalEngine {
public:
    FractionalEngine(CostBounds bounds, EngineSpec spec);

    void step_basic(Slot t, Age arrivals, double cost);
    void step_ml(Slot t, Age arrivals, double cost, bool advice);
    void step_intermittent(Slot t, Age arrivals, double cost, bool on);
    void step_ml_intermittent(Slot t, Age arrivals, double cost, bool advice, bool on);
    /// Dispatches on the configured variant (basic ignores advice and on).
    void step(const SlotInput& in);

    const EngineSpec& spec() const { return spec_; }
    CostBounds bounds() const { return bounds_; }
    Slot current_slot() const { return t_; }

    std::span<const double> x_values() const { return x_; }
    double x(Slot t) const { return x_[static_cast<std::size_t>(t - 1)]; }
    /// x(t) of the slot in progress, or of the last finished slot.
    double x_current() const { return x_cur_; }
    /// Σ_{τ=a}^{t} x(τ) with t the slot in progress (or last finished).
    double cumulative_since(Slot a) const;

    const LpObjectiveLedger& ledger() const { return ledger_; }
    double lp_objective() const { return ledger_.total(); }

    const std::deque<ActiveCohort>& active() const { return active_; }
    std::int64_t active_members() const;
    std::int64_t total_activations() const { return total_; }
    std::int64_t slow_activations() const { return slow_; }
    std::int64_t fast_activations() const { return fast_; }

    /// Constants in force for the slot in progress.
    ThetaPair theta() const { return theta_; }
    double increment_scale() const { return 1.0 / c_max_now_; }
    double c_min_now() const { return c_min_now_; }
    double c_max_now() const { return c_max_now_; }
    Slot t_hat() const { return t_hat_; }
    Slot t_ml() const { return t_ml_; }

    void set_observer(EngineObserver* observer) { observer_ = observer; }
    /// One line per slot: t, x, active members, activations, ledger deltas.
    void set_trace(std::ostream* out) { trace_ = out; }

private:
    void run_slot(Slot t, Age arrivals, double cost, bool advice, bool on, bool intermittent);
    void refresh_theta(Slot t, double cost);
    void activate_member(Slot t, ActiveCohort& c, StepKind kind, double theta,
                         std::int64_t& slot_activations);
    double cohort_mass(Slot arrival) const { return base_ + x_cur_ - prefix_[static_cast<std::size_t>(arrival - 1)]; }

    CostBounds bounds_;
    EngineSpec spec_;

    Slot t_ = 0;
    bool in_slot_ = false;
    std::vector<double> x_;
    std::vector<double> prefix_{0.0}; // prefix_[k] = Σ_{τ≤k} x(τ)
    double base_ = 0.0;               // prefix_[t−1] during slot t
    double x_cur_ = 0.0;

    std::deque<ActiveCohort> active_;
    Slot t_hat_ = 1;
    Slot t_ml_ = 0;
    bool prev_on_ = false;

    ThetaPair theta_;
    double c_min_now_;
    double c_max_now_;
    std::vector<double> samples_;

    std::int64_t total_ = 0;
    std::int64_t slow_ = 0;
    std::int64_t fast_ = 0;
    LpObjectiveLedger ledger_;

    EngineObserver* observer_ = nullptr;
    std::ostream* trace_ = nullptr;
};

/// Feeds a whole instance through a fresh engine (exogenous arrivals).
/// advice may be empty (treated as all zeros).
FractionalEngine run_engine(const Instance& instance, const EngineSpec& spec,
                            const std::vector<bool>& advice = {},
                            EngineObserver* observer = nullptr);

} // namespace aoisched
