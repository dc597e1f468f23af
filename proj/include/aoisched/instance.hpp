#pragma once

#include <aoisched/textio.hpp>

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace aoisched {

/// Slots are 1-based throughout, matching the age recursion A(t) for t = 1..T.
using Slot = std::int64_t;
/// Ages and age increments are exact integers (one unit = one virtual packet).
using Age = std::int64_t;

/// Ages saturate here instead of overflowing; only reachable under
/// exponential aging when a schedule never updates.
inline constexpr Age kAgeCap = Age{1} << 48;

Age saturating_add(Age a, Age b);

struct CostBounds {
    double min = 1.0;
    double max = 1.0;

    double ratio() const { return max / min; }
    friend bool operator==(const CostBounds&, const CostBounds&) = default;
};

/// One uncertainty realization: horizon, initial age, and the per-slot
/// age-increment, update-cost and update-opportunity sequences.
class Instance {
public:
    Instance(Age initial_age, std::vector<Age> delta_a, std::vector<double> cost,
             std::vector<bool> opportunity, CostBounds bounds);

    /// Convenience: every slot is an update opportunity.
    static Instance always_on(Age initial_age, std::vector<Age> delta_a, std::vector<double> cost,
                              CostBounds bounds);

    std::int64_t horizon() const { return static_cast<std::int64_t>(cost_.size()); }
    Age initial_age() const { return initial_age_; }
    CostBounds cost_bounds() const { return bounds_; }

    std::span<const Age> delta_a() const { return delta_a_; }
    std::span<const double> cost() const { return cost_; }
    const std::vector<bool>& opportunity() const { return opportunity_; }

    Age delta(Slot t) const { return delta_a_[static_cast<std::size_t>(t - 1)]; }
    double cost(Slot t) const { return cost_[static_cast<std::size_t>(t - 1)]; }
    bool on(Slot t) const { return opportunity_[static_cast<std::size_t>(t - 1)]; }

    /// Largest per-slot increment max_t ΔA(t).
    Age max_delta() const;
    /// Largest virtual arrival batch, counting the initial age in slot 1.
    Age max_arrival() const;
    /// Longest run of consecutive OFF slots (0 when every slot is ON).
    std::int64_t max_off_run() const;
    /// Longest OFF run counted through the ON slot that ends it (0 when every
    /// slot is ON); a trailing run with no later ON slot counts only its OFF slots.
    std::int64_t t_off() const;
    bool all_on() const;

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    Age initial_age_;
    std::vector<Age> delta_a_;
    std::vector<double> cost_;
    std::vector<bool> opportunity_;
    CostBounds bounds_;
};

/// How the age grows between updates: either the instance's exogenous
/// ΔA(t) sequence, or a function g of the number of slots elapsed since the
/// last delivered update (g(0) = 0, nondecreasing).
class AgingModel {
public:
    using Function = std::function<Age(std::int64_t)>;

    static AgingModel exogenous();
    static AgingModel elapsed(Function g, std::string name);
    /// g(x) = x.
    static AgingModel linear();
    /// g(x) = floor(exp(rate * x)) - 1.
    static AgingModel exp_floor(double rate);
    /// Parses "exogenous", "linear" or "exp:<rate>".
    static AgingModel from_name(const std::string& name);

    bool is_exogenous() const { return !g_; }
    const std::string& name() const { return name_; }
    Age g(std::int64_t elapsed) const;

private:
    AgingModel(Function g, std::string name);

    std::shared_ptr<const Function> g_;
    std::string name_;
};

/// Age increment realized in slot t given the slots elapsed since the last
/// update at the end of slot t-1: g(e+1) - g(e), or ΔA(t) when exogenous.
Age realized_increment(const AgingModel& aging, const Instance& instance, Slot t,
                       std::int64_t elapsed);

struct CostBreakdown {
    double update_cost = 0.0;
    double age_cost = 0.0;
    double total = 0.0;
};

struct ScheduleTrace {
    std::vector<bool> decisions;
    std::vector<Age> ages;
    CostBreakdown cost;
};

/// Applies the age recursion and sums update plus age cost.
/// Throws LengthMismatch or DecisionAtOffSlot.
ScheduleTrace evaluate_schedule(const Instance& instance, const std::vector<bool>& decisions);
ScheduleTrace evaluate_schedule(const Instance& instance, const AgingModel& aging,
                                const std::vector<bool>& decisions);

/// A batch of virtual packets sharing one arrival slot.
struct Cohort {
    Slot arrival = 1;
    Age count = 0;
    friend bool operator==(const Cohort&, const Cohort&) = default;
};

/// One cohort per slot; the slot-1 cohort absorbs the initial age.
std::vector<Cohort> expand_cohorts(const Instance& instance);
/// Same, from real-valued ages; throws NonIntegerDelta on fractional input.
std::vector<Cohort> expand_cohorts(double initial_age, std::span<const double> delta_a);

/// Total holding cost counted packet-by-packet through the virtual queue:
/// a cohort stays until the first d = 1 slot at or after its arrival.
double virtual_queue_age_cost(std::span<const Cohort> cohorts, const std::vector<bool>& decisions);

/// Instance with real-valued increments, before rescaling.
struct RealInstance {
    double initial_age = 0.0;
    std::vector<double> delta_a;
    std::vector<double> cost;
    std::vector<bool> opportunity;
    CostBounds bounds;
};

/// Multiplies ages and costs by the smallest common constant that makes every
/// increment integral. Throws IrrationalDelta when some increment has no
/// small-denominator rational representation.
Instance rescale_to_integer(const RealInstance& instance);
/// The multiplier rescale_to_integer would apply.
std::int64_t integer_multiplier(const RealInstance& instance);

textio::Document to_document(const Instance& instance);
Instance instance_from_document(const textio::Document& doc);
std::string to_text(const Instance& instance);
Instance instance_from_text(std::string_view text);

} // namespace aoisched
