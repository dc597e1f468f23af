#pragma once

#include <aoisched/fractional.hpp>
#include <aoisched/instance.hpp>
#include <aoisched/textio.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace aoisched {

/// Converts a fractional stream into transmissions with one uniform draw:
/// slot t transmits iff the threshold u (shifted by +1 per transmission)
/// falls in [Σ_{τ<t} min{x,1}, Σ_{τ≤t} min{x,1}).
class Rounder {
public:
    /// Throws UOutOfRange unless 0 ≤ u < 1.
    explicit Rounder(double u);

    bool step(double x);

    double threshold() const { return threshold_; }
    double x_pre_sum() const { return x_pre_; }
    double x_sum() const { return x_sum_; }
    std::int64_t transmissions() const { return sent_; }

private:
    double threshold_;
    double x_pre_ = 0.0;
    double x_sum_ = 0.0;
    std::int64_t sent_ = 0;
};

std::vector<bool> round_stream(std::span<const double> x_values, double u);

/// Source of the per-slot ML bit for a closed-loop run.
struct AdviceInput {
    enum class Kind { None, Bits, Thresholds };
    Kind kind = Kind::None;
    /// Fixed bits 𝓜(t).
    std::vector<bool> bits;
    /// Noisy thresholds T_𝓜(t); 𝓜(t) = 1 iff pending age ≥ max{T_𝓜(t), 1}.
    std::vector<double> thresholds;

    static AdviceInput none() { return {}; }
    static AdviceInput fixed(std::vector<bool> bits) { return {Kind::Bits, std::move(bits), {}}; }
    static AdviceInput from_thresholds(std::vector<double> th) {
        return {Kind::Thresholds, {}, std::move(th)};
    }
};

struct RunConfig {
    EngineSpec engine;
    Instance instance;
    AgingModel aging = AgingModel::exogenous();
    AdviceInput advice;
    std::uint64_t seed = 0;
    std::int64_t replications = 1;
    EngineObserver* observer = nullptr;
};

struct RunRecord {
    std::string engine;
    std::string theta;
    std::string aging;
    std::uint64_t seed = 0;
    double u = 0.0;
    CostBreakdown realized;
    double lp_clearing = 0.0;
    double lp_holding = 0.0;
    std::vector<bool> decisions;

    double lp_objective() const { return lp_clearing + lp_holding; }
    textio::Document to_document(bool with_decisions = false) const;
};

struct RunResult {
    ScheduleTrace trace;
    LpObjectiveLedger ledger;
    RunRecord record;
    std::vector<bool> advice;
};

/// One closed-loop run: per slot obtain the increment (exogenous, or from the
/// elapsed time since the last realized transmission), feed the engine, round
/// min{x(t),1} (0 at OFF slots), and reset the realized age on transmission.
RunResult run_online(const RunConfig& config);

/// config.replications runs with seeds seed, seed+1, ….
std::vector<RunResult> run_replications(const RunConfig& config);

} // namespace aoisched
