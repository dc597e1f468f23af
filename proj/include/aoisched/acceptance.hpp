#pragma once

#include <aoisched/fractional.hpp>
#include <aoisched/instance.hpp>
#include <aoisched/invariants.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace aoisched {

enum class VerifyLevel { Quick, Full };

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceReport {
    std::vector<CriterionResult> results;

    bool all_pass() const;
    /// One "[PASS]/[FAIL] <id> <name>: <detail>" line per criterion.
    std::string to_text() const;
};

// -- instance panels ----------------------------------------------------------

/// The four (C_m, C_M) pairs of the bound checks.
std::vector<CostBounds> bound_cost_pairs();

/// Seeded random instances, round-robin over the cost pairs: T ≤ 50, ΔA ≤ 3,
/// A0 ≤ 3, U ≡ 1.
std::vector<Instance> bound_panel(std::int64_t count, std::uint64_t seed);
/// Same pairs with intermittent U (OFF runs ≤ 2, so T_OFF ≤ 3) and ΔA ≤ 2, A0 + ΔA(1) ≤ 2,
/// so every virtual arrival batch is at most 2.
std::vector<Instance> intermittent_panel(std::int64_t count, std::uint64_t seed);
/// T ≤ 15, ΔA ≤ 3, A0 ≤ 3, U density drawn from [0.3, 1].
std::vector<Instance> oracle_panel(std::int64_t count, std::uint64_t seed);

/// Counts of invariant checks gathered while running a panel.
struct InvariantTally {
    std::int64_t runs = 0;
    std::int64_t checks = 0;
    std::vector<InvariantViolation> violations;

    void absorb(const InvariantMonitor& monitor);
};

/// Relative slack on the bound comparisons. The bounds are tight on some
/// instances, where the floating-point LP objective can exceed the exact
/// bound by a few ulps.
inline constexpr double kBoundSlack = 1e-12;

struct PanelOutcome {
    std::int64_t cases = 0;
    /// Largest LP objective / (bound · reference cost) seen.
    double max_bound_use = 0.0;
    std::int64_t violations = 0;
    std::string first_violation;
    InvariantTally invariants;
};

/// LP objective ≤ cr_bound·OPT on every instance (basic engine).
PanelOutcome check_basic_bound(const std::vector<Instance>& panel);
/// Robustness and consistency with perfect, all-zero and Bernoulli(0.3) advice
/// for λ ∈ {0.25, 0.5, 1}.
PanelOutcome check_ml_bounds(const std::vector<Instance>& panel, std::uint64_t seed);
/// LP objective ≤ intermittent_bound·OPT (intermittent engine).
PanelOutcome check_intermittent_bound(const std::vector<Instance>& panel);

// -- the criteria ---------------------------------------------------------------

struct AcceptanceOptions {
    VerifyLevel level = VerifyLevel::Quick;
    /// Criteria to run (empty: all).
    std::vector<int> only;
    /// Worker threads for the experiment criteria (0: hardware concurrency).
    std::int64_t threads = 0;
    std::ostream* progress = nullptr;
};

AcceptanceReport run_acceptance(const AcceptanceOptions& options);

} // namespace aoisched
