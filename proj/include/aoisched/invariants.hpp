#pragma once

#include <aoisched/fractional.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace aoisched {

enum class InvariantId { MassLowerBound, ActivationCount, ActiveSetSize, MlMassLowerBound, MlStepBudget, MassGrowth };

std::string to_string(InvariantId id);

struct InvariantViolation {
    InvariantId invariant;
    Slot slot = 0;
    Slot reference = 0;
    std::string detail;
};

struct InvariantChecks {
    bool mass_lower_bound = false; // S ≥ ((1+c)^n − 1)/θ after n activations of P(r)
    bool activation_count = false; // n ≤ ⌈exponent⌉
    bool active_set_size = false;  // active members ≤ 2⌈√(ΔA_M · exponent)⌉
    bool ml_mass = false;          // slow/fast version of the lower bound
    bool ml_budget = false;        // N_s·λ + N_f ≤ C_m + 1
    bool mass_growth = false;      // Σ_{τ≥r} x ≤ (1+1/θ)((1+c)^{n_all} − 1)

    /// The checks that apply to an engine configuration.
    static InvariantChecks for_spec(const EngineSpec& spec, bool always_on);
};

/// Instruments a fractional engine: for every reference slot r whose packet
/// set P(r) (cohorts present at slot r) still has active members it counts
/// the activations by P(r) since r (split slow/fast) and all activations
/// since r, and checks the activation-level invariants after every activation
/// and the active-set bound at every slot end.
class InvariantMonitor : public EngineObserver {
public:
    explicit InvariantMonitor(InvariantChecks checks);
    InvariantMonitor(const EngineSpec& spec, bool always_on);

    void on_slot_begin(const FractionalEngine& e, Slot t) override;
    void on_activation(const FractionalEngine& e, const ActivationEvent& ev) override;
    void on_slot_end(const FractionalEngine& e, Slot t) override;

    bool ok() const { return violations_.empty(); }
    const std::vector<InvariantViolation>& violations() const { return violations_; }
    std::int64_t checks_performed() const { return checks_; }
    const InvariantChecks& checks() const { return enabled_; }

    /// Relative tolerance on the real-valued inequalities.
    static constexpr double kTolerance = 1e-9;

private:
    struct Reference {
        Slot r = 0;
        Slot newest = 0; // newest arrival in P(r)
        std::int64_t n = 0;
        std::int64_t n_slow = 0;
        std::int64_t n_fast = 0;
        std::int64_t n_all = 0;
    };

    void record(InvariantId id, Slot t, Slot r, std::string detail);

    InvariantChecks enabled_;
    std::vector<Reference> refs_;
    Age max_arrival_ = 0;
    std::vector<InvariantViolation> violations_;
    std::int64_t checks_ = 0;
};

} // namespace aoisched
