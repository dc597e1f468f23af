#include <aoisched/oracle.hpp>

#include <aoisched/error.hpp>

#include <cmath>
#include <limits>

namespace aoisched {

textio::Document OracleResult::to_document() const {
    textio::Document doc;
    doc.set("opt_cost", textio::format_double(opt_cost));
    doc.set("decisions", textio::join_bools(decisions));
    doc.set("states", textio::format_int(states));
    doc.set("transitions", textio::format_int(transitions));
    return doc;
}

namespace {

// Holding cost of the slots after an update, and before the first update.
class SegmentCosts {
public:
    SegmentCosts(const Instance& inst, const AgingModel& aging)
        : exogenous_(aging.is_exogenous())
        , a0_(static_cast<double>(inst.initial_age())) {
        const auto T = static_cast<std::size_t>(inst.horizon());
        if (exogenous_) {
            d_.assign(T + 1, 0.0);
            pd_.assign(T + 1, 0.0);
            for (std::size_t k = 1; k <= T; ++k) {
                d_[k] = d_[k - 1] + static_cast<double>(inst.delta_a()[k - 1]);
                pd_[k] = pd_[k - 1] + d_[k];
            }
        } else {
            g_.assign(T + 1, 0.0);
            for (std::size_t k = 1; k <= T; ++k)
                g_[k] = g_[k - 1] + static_cast<double>(aging.g(static_cast<std::int64_t>(k)));
        }
    }

    /// Σ_{t=s+1}^{e} A(t) given an update at s and none in (s, e].
    double after(std::int64_t s, std::int64_t e) const {
        if (e <= s) return 0.0;
        const auto si = static_cast<std::size_t>(s);
        const auto ei = static_cast<std::size_t>(e);
        if (exogenous_) return (pd_[ei] - pd_[si]) - static_cast<double>(e - s) * d_[si];
        return g_[static_cast<std::size_t>(e - s)];
    }

    /// Σ_{t=1}^{e} A(t) with no update in [1, e].
    double before(std::int64_t e) const {
        if (e <= 0) return 0.0;
        const auto ei = static_cast<std::size_t>(e);
        return static_cast<double>(e) * a0_ + (exogenous_ ? pd_[ei] : g_[ei]);
    }

private:
    bool exogenous_;
    double a0_;
    std::vector<double> d_, pd_, g_;
};

// Earliest-transmission order: at the first difference the schedule with a 1 wins.
bool earlier(const std::vector<bool>& a, const std::vector<bool>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i];
    return false;
}

} // namespace

OracleResult opt_dp(const Instance& instance) { return opt_dp(instance, AgingModel::exogenous()); }

OracleResult opt_dp(const Instance& instance, const AgingModel& aging) {
    const std::int64_t T = instance.horizon();
    const SegmentCosts seg(instance, aging);
    constexpr double inf = std::numeric_limits<double>::infinity();
    constexpr std::int64_t kNever = -1;

    // best[s]: minimum cost of slots s+1..T given an update at s; next[s]: the
    // following update slot or kNever.
    std::vector<double> best(static_cast<std::size_t>(T + 1), inf);
    std::vector<std::int64_t> next(static_cast<std::size_t>(T + 1), kNever);
    OracleResult out;
    for (std::int64_t s = T; s >= 1; --s) {
        if (!instance.on(s)) continue;
        ++out.states;
        double b = inf;
        std::int64_t arg = kNever;
        for (std::int64_t s2 = s + 1; s2 <= T; ++s2) {
            if (!instance.on(s2)) continue;
            ++out.transitions;
            const double v = seg.after(s, s2 - 1) + instance.cost(s2) + best[static_cast<std::size_t>(s2)];
            if (v < b) {
                b = v;
                arg = s2;
            }
        }
        const double never = seg.after(s, T);
        if (never < b) {
            b = never;
            arg = kNever;
        }
        best[static_cast<std::size_t>(s)] = b;
        next[static_cast<std::size_t>(s)] = arg;
    }

    double b = inf;
    std::int64_t first = kNever;
    for (std::int64_t s = 1; s <= T; ++s) {
        if (!instance.on(s)) continue;
        ++out.transitions;
        const double v = seg.before(s - 1) + instance.cost(s) + best[static_cast<std::size_t>(s)];
        if (v < b) {
            b = v;
            first = s;
        }
    }
    if (seg.before(T) < b) first = kNever;

    out.decisions.assign(static_cast<std::size_t>(T), false);
    for (std::int64_t s = first; s != kNever; s = next[static_cast<std::size_t>(s)])
        out.decisions[static_cast<std::size_t>(s - 1)] = true;
    out.opt_cost = evaluate_schedule(instance, aging, out.decisions).cost.total;
    return out;
}

OracleResult opt_enumerate(const Instance& instance) {
    return opt_enumerate(instance, AgingModel::exogenous());
}

OracleResult opt_enumerate(const Instance& instance, const AgingModel& aging) {
    const std::int64_t T = instance.horizon();
    if (T > kMaxEnumerationHorizon)
        fail(ErrorCode::HorizonTooLarge, "T = " + std::to_string(T) + " exceeds " +
                                             std::to_string(kMaxEnumerationHorizon));
    std::vector<std::size_t> on_slots;
    for (Slot t = 1; t <= T; ++t)
        if (instance.on(t)) on_slots.push_back(static_cast<std::size_t>(t - 1));

    OracleResult out;
    out.opt_cost = std::numeric_limits<double>::infinity();
    const std::uint64_t count = std::uint64_t{1} << on_slots.size();
    std::vector<bool> d(static_cast<std::size_t>(T), false);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        for (std::size_t k = 0; k < on_slots.size(); ++k) d[on_slots[k]] = (mask >> k) & 1U;
        const double cost = evaluate_schedule(instance, aging, d).cost.total;
        ++out.states;
        if (cost < out.opt_cost || (cost == out.opt_cost && earlier(d, out.decisions))) {
            out.opt_cost = cost;
            out.decisions = d;
        }
    }
    return out;
}

ScheduleTrace eval_threshold_policy(const Instance& instance, const std::vector<CostState>& labels,
                                    const ThresholdPolicy& policy, const AgingModel& aging) {
    require(static_cast<std::int64_t>(labels.size()) == instance.horizon(),
            ErrorCode::LengthMismatch, "labels length differs from horizon");
    std::vector<bool> d(labels.size(), false);
    Age age = instance.initial_age();
    std::int64_t elapsed = 0;
    for (Slot t = 1; t <= instance.horizon(); ++t) {
        const auto i = static_cast<std::size_t>(t - 1);
        const Age pending = saturating_add(age, realized_increment(aging, instance, t, elapsed));
        if (instance.on(t) && pending >= policy.threshold(labels[i])) {
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

ThresholdSearchResult best_threshold_policy(const Instance& instance,
                                            const std::vector<CostState>& labels,
                                            std::int64_t grid_max, const AgingModel& aging) {
    if (grid_max < 1) fail(ErrorCode::GridEmpty, "grid_max must be >= 1");
    ThresholdSearchResult best{{1, 1}, std::numeric_limits<double>::infinity()};
    for (std::int64_t tl = 1; tl <= grid_max; ++tl) {
        for (std::int64_t th = 1; th <= grid_max; ++th) {
            const double c = eval_threshold_policy(instance, labels, {tl, th}, aging).cost.total;
            if (c < best.cost) best = {{tl, th}, c};
        }
    }
    return best;
}

std::int64_t default_grid_max(const Instance& instance, const AgingModel& aging) {
    const double cmax = instance.cost_bounds().max;
    const auto base = static_cast<std::int64_t>(std::ceil(2.0 * cmax));
    Age step = 0;
    if (aging.is_exogenous()) {
        step = instance.max_arrival();
    } else {
        std::int64_t k = 0;
        while (static_cast<double>(aging.g(k)) < 2.0 * cmax && aging.g(k) < kAgeCap) ++k;
        step = aging.g(k + 1) - aging.g(k);
    }
    return base + 2 * step;
}

} // namespace aoisched
