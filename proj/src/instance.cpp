#include <aoisched/instance.hpp>

#include <aoisched/error.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace aoisched {

Age saturating_add(Age a, Age b) {
    if (a >= kAgeCap - b) return kAgeCap;
    return a + b;
}

Instance::Instance(Age initial_age, std::vector<Age> delta_a, std::vector<double> cost,
                   std::vector<bool> opportunity, CostBounds bounds)
    : initial_age_(initial_age)
    , delta_a_(std::move(delta_a))
    , cost_(std::move(cost))
    , opportunity_(std::move(opportunity))
    , bounds_(bounds) {
    require(!cost_.empty(), ErrorCode::InvalidInstance, "horizon must be positive");
    require(delta_a_.size() == cost_.size() && opportunity_.size() == cost_.size(),
            ErrorCode::LengthMismatch, "delta_a, cost and opportunity must have length T");
    require(initial_age_ >= 0, ErrorCode::InvalidInstance, "negative initial age");
    require(std::isfinite(bounds_.min) && std::isfinite(bounds_.max) && bounds_.min > 0.0 &&
                bounds_.min <= bounds_.max,
            ErrorCode::InvalidInstance, "cost bounds need 0 < C_m <= C_M");
    for (std::size_t i = 0; i < cost_.size(); ++i) {
        require(delta_a_[i] >= 0, ErrorCode::InvalidInstance,
                "negative delta_a at slot " + std::to_string(i + 1));
        require(cost_[i] >= bounds_.min && cost_[i] <= bounds_.max, ErrorCode::InvalidInstance,
                "cost at slot " + std::to_string(i + 1) + " outside [C_m, C_M]");
    }
}

Instance Instance::always_on(Age initial_age, std::vector<Age> delta_a, std::vector<double> cost,
                             CostBounds bounds) {
    std::vector<bool> on(cost.size(), true);
    return Instance(initial_age, std::move(delta_a), std::move(cost), std::move(on), bounds);
}

Age Instance::max_delta() const { return *std::max_element(delta_a_.begin(), delta_a_.end()); }

Age Instance::max_arrival() const {
    return std::max(max_delta(), saturating_add(initial_age_, delta_a_.front()));
}

std::int64_t Instance::max_off_run() const {
    std::int64_t best = 0;
    std::int64_t run = 0;
    for (bool on : opportunity_) {
        run = on ? 0 : run + 1;
        best = std::max(best, run);
    }
    return best;
}

std::int64_t Instance::t_off() const {
    std::int64_t best = 0;
    std::int64_t run = 0;
    for (bool on : opportunity_) {
        if (on) {
            if (run > 0) best = std::max(best, run + 1);
            run = 0;
        } else {
            ++run;
        }
    }
    return std::max(best, run);
}

bool Instance::all_on() const {
    return std::all_of(opportunity_.begin(), opportunity_.end(), [](bool b) { return b; });
}

// ---------------------------------------------------------------------------

AgingModel::AgingModel(Function g, std::string name)
    : g_(g ? std::make_shared<const Function>(std::move(g)) : nullptr)
    , name_(std::move(name)) {}

AgingModel AgingModel::exogenous() { return AgingModel(nullptr, "exogenous"); }

AgingModel AgingModel::elapsed(Function g, std::string name) {
    require(static_cast<bool>(g), ErrorCode::InvalidArgument, "aging function is empty");
    require(g(0) == 0, ErrorCode::InvalidArgument, "aging function needs g(0) = 0");
    // Spot check monotonicity over a prefix; g is user supplied.
    Age prev = 0;
    for (std::int64_t x = 1; x <= 64; ++x) {
        const Age v = g(x);
        require(v >= prev, ErrorCode::InvalidArgument, "aging function must be nondecreasing");
        prev = v;
    }
    return AgingModel(std::move(g), std::move(name));
}

AgingModel AgingModel::linear() {
    return elapsed([](std::int64_t x) { return std::min<Age>(x, kAgeCap); }, "linear");
}

AgingModel AgingModel::exp_floor(double rate) {
    require(rate > 0.0 && std::isfinite(rate), ErrorCode::InvalidArgument, "rate must be positive");
    auto g = [rate](std::int64_t x) -> Age {
        const double v = std::floor(std::exp(rate * static_cast<double>(x))) - 1.0;
        if (!(v < static_cast<double>(kAgeCap))) return kAgeCap;
        return static_cast<Age>(v);
    };
    return elapsed(g, "exp:" + textio::format_double(rate));
}

AgingModel AgingModel::from_name(const std::string& name) {
    if (name == "exogenous") return exogenous();
    if (name == "linear") return linear();
    if (name.rfind("exp:", 0) == 0) return exp_floor(textio::parse_double(name.substr(4)));
    fail(ErrorCode::ConfigError, "unknown aging model '" + name + "'");
}

Age AgingModel::g(std::int64_t elapsed) const {
    require(g_ != nullptr, ErrorCode::InvalidArgument, "exogenous aging has no g");
    return (*g_)(elapsed);
}

Age realized_increment(const AgingModel& aging, const Instance& instance, Slot t,
                       std::int64_t elapsed) {
    if (aging.is_exogenous()) return instance.delta(t);
    return aging.g(elapsed + 1) - aging.g(elapsed);
}

// ---------------------------------------------------------------------------

namespace {

void check_decisions(const Instance& instance, const std::vector<bool>& decisions) {
    require(static_cast<std::int64_t>(decisions.size()) == instance.horizon(),
            ErrorCode::LengthMismatch,
            "decisions has length " + std::to_string(decisions.size()) + ", horizon is " +
                std::to_string(instance.horizon()));
    for (Slot t = 1; t <= instance.horizon(); ++t) {
        if (decisions[static_cast<std::size_t>(t - 1)] && !instance.on(t))
            fail(ErrorCode::DecisionAtOffSlot, "d(" + std::to_string(t) + ") = 1 while U = 0");
    }
}

} // namespace

ScheduleTrace evaluate_schedule(const Instance& instance, const std::vector<bool>& decisions) {
    return evaluate_schedule(instance, AgingModel::exogenous(), decisions);
}

ScheduleTrace evaluate_schedule(const Instance& instance, const AgingModel& aging,
                                const std::vector<bool>& decisions) {
    check_decisions(instance, decisions);
    ScheduleTrace trace;
    trace.decisions = decisions;
    trace.ages.reserve(decisions.size());
    Age age = instance.initial_age();
    std::int64_t elapsed = 0;
    for (Slot t = 1; t <= instance.horizon(); ++t) {
        const auto i = static_cast<std::size_t>(t - 1);
        const Age inc = realized_increment(aging, instance, t, elapsed);
        if (decisions[i]) {
            age = 0;
            elapsed = 0;
            trace.cost.update_cost += instance.cost(t);
        } else {
            age = saturating_add(age, inc);
            ++elapsed;
        }
        trace.ages.push_back(age);
        trace.cost.age_cost += static_cast<double>(age);
    }
    trace.cost.total = trace.cost.update_cost + trace.cost.age_cost;
    return trace;
}

std::vector<Cohort> expand_cohorts(const Instance& instance) {
    std::vector<Cohort> out;
    out.reserve(static_cast<std::size_t>(instance.horizon()));
    for (Slot t = 1; t <= instance.horizon(); ++t) out.push_back({t, instance.delta(t)});
    out.front().count = saturating_add(out.front().count, instance.initial_age());
    return out;
}

std::vector<Cohort> expand_cohorts(double initial_age, std::span<const double> delta_a) {
    auto as_int = [](double v, const std::string& what) {
        if (!(v >= 0.0) || v != std::floor(v) || v >= static_cast<double>(kAgeCap))
            fail(ErrorCode::NonIntegerDelta, what + " = " + textio::format_double(v));
        return static_cast<Age>(v);
    };
    std::vector<Cohort> out;
    for (std::size_t i = 0; i < delta_a.size(); ++i)
        out.push_back({static_cast<Slot>(i + 1), as_int(delta_a[i], "delta_a[" + std::to_string(i + 1) + "]")});
    const Age a0 = as_int(initial_age, "initial_age");
    if (out.empty()) {
        require(a0 == 0, ErrorCode::InvalidInstance, "initial age without any slot");
        return out;
    }
    out.front().count = saturating_add(out.front().count, a0);
    return out;
}

double virtual_queue_age_cost(std::span<const Cohort> cohorts, const std::vector<bool>& decisions) {
    require(cohorts.size() == decisions.size(), ErrorCode::LengthMismatch,
            "one cohort per slot expected");
    double total = 0.0;
    for (const Cohort& c : cohorts) {
        for (Slot t = c.arrival; t <= static_cast<Slot>(decisions.size()); ++t) {
            if (decisions[static_cast<std::size_t>(t - 1)]) break;
            total += static_cast<double>(c.count);
        }
    }
    return total;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::int64_t kMaxDenominator = 1'000'000;
constexpr std::int64_t kMaxMultiplier = 1'000'000'000;

// Smallest-denominator rational within a relative 1e-12 of v, via continued
// fractions. Returns the denominator, or 0 if none exists below the limit.
std::int64_t rational_denominator(double v) {
    if (!(v >= 0.0) || !std::isfinite(v)) return 0;
    const double tol = 1e-12 * std::max(1.0, v);
    double frac = v;
    std::int64_t h0 = 1, h1 = 0, k0 = 0, k1 = 1; // convergents h/k
    for (int iter = 0; iter < 64; ++iter) {
        const double a = std::floor(frac);
        if (a > 9e15) return 0;
        const auto ai = static_cast<std::int64_t>(a);
        const std::int64_t h2 = ai * h0 + h1;
        const std::int64_t k2 = ai * k0 + k1;
        if (k2 > kMaxDenominator) return 0;
        h1 = h0; h0 = h2;
        k1 = k0; k0 = k2;
        if (std::abs(static_cast<double>(h0) / static_cast<double>(k0) - v) <= tol) return k0;
        const double rest = frac - a;
        if (rest <= 0.0) return 0;
        frac = 1.0 / rest;
    }
    return 0;
}

} // namespace

std::int64_t integer_multiplier(const RealInstance& instance) {
    std::int64_t m = 1;
    auto absorb = [&m](double v, const std::string& what) {
        const std::int64_t q = rational_denominator(v);
        if (q == 0) fail(ErrorCode::IrrationalDelta, what + " = " + textio::format_double(v));
        m = std::lcm(m, q);
        if (m > kMaxMultiplier) fail(ErrorCode::IrrationalDelta, "common multiplier too large");
    };
    absorb(instance.initial_age, "initial_age");
    for (std::size_t i = 0; i < instance.delta_a.size(); ++i)
        absorb(instance.delta_a[i], "delta_a[" + std::to_string(i + 1) + "]");
    return m;
}

Instance rescale_to_integer(const RealInstance& instance) {
    const std::int64_t m = integer_multiplier(instance);
    const double md = static_cast<double>(m);
    auto scaled = [md](double v) { return static_cast<Age>(std::llround(v * md)); };
    std::vector<Age> delta;
    delta.reserve(instance.delta_a.size());
    for (double v : instance.delta_a) delta.push_back(scaled(v));
    std::vector<double> cost;
    cost.reserve(instance.cost.size());
    for (double c : instance.cost) cost.push_back(c * md);
    return Instance(scaled(instance.initial_age), std::move(delta), std::move(cost),
                    instance.opportunity, {instance.bounds.min * md, instance.bounds.max * md});
}

// ---------------------------------------------------------------------------

textio::Document to_document(const Instance& instance) {
    textio::Document doc;
    doc.set("horizon", textio::format_int(instance.horizon()));
    doc.set("initial_age", textio::format_int(instance.initial_age()));
    doc.set("delta_a", textio::join_ints(instance.delta_a()));
    doc.set("cost", textio::join_doubles(instance.cost()));
    doc.set("opportunity", textio::join_bools(instance.opportunity()));
    const double b[2] = {instance.cost_bounds().min, instance.cost_bounds().max};
    doc.set("cost_bounds", textio::join_doubles(b));
    return doc;
}

Instance instance_from_document(const textio::Document& doc) {
    const auto horizon = textio::parse_int(doc.get("horizon"));
    auto delta = textio::parse_int_list(doc.get("delta_a"));
    auto cost = textio::parse_double_list(doc.get("cost"));
    auto on = doc.has("opportunity") ? textio::parse_bool_list(doc.get("opportunity"))
                                     : std::vector<bool>(cost.size(), true);
    const auto bounds = textio::parse_double_list(doc.get("cost_bounds"));
    require(bounds.size() == 2, ErrorCode::ParseError, "cost_bounds needs two values");
    require(static_cast<std::int64_t>(cost.size()) == horizon, ErrorCode::LengthMismatch,
            "cost length differs from horizon");
    return Instance(textio::parse_int(doc.get_or("initial_age", "0")), std::move(delta),
                    std::move(cost), std::move(on), {bounds[0], bounds[1]});
}

std::string to_text(const Instance& instance) { return to_document(instance).to_string(); }

Instance instance_from_text(std::string_view text) {
    return instance_from_document(textio::Document::parse(text));
}

} // namespace aoisched
