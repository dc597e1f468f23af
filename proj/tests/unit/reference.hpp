#pragma once
// Independent test oracles: literal per-packet loops and direct summation,
// sharing no code paths with the library engine or oracle.

#include <aoisched/fractional.hpp>
#include <aoisched/instance.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

namespace ref {

using aoisched::Instance;

struct Eval {
    std::vector<std::int64_t> ages;
    double update = 0.0;
    double age = 0.0;
    double total() const { return update + age; }
};

inline Eval evaluate(const Instance& inst, const std::vector<bool>& d) {
    Eval e;
    std::int64_t a = inst.initial_age();
    for (std::int64_t t = 1; t <= inst.horizon(); ++t) {
        const auto i = static_cast<std::size_t>(t - 1);
        if (d[i]) {
            a = 0;
            e.update += inst.cost(t);
        } else {
            a += inst.delta(t);
        }
        e.ages.push_back(a);
        e.age += static_cast<double>(a);
    }
    return e;
}

/// Minimum over every feasible schedule, by counting through bit masks.
inline double brute_opt(const Instance& inst) {
    const auto T = static_cast<std::size_t>(inst.horizon());
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << T); ++mask) {
        std::vector<bool> d(T);
        bool ok = true;
        for (std::size_t i = 0; i < T; ++i) {
            d[i] = (mask >> i) & 1U;
            if (d[i] && !inst.on(static_cast<std::int64_t>(i) + 1)) ok = false;
        }
        if (ok) best = std::min(best, evaluate(inst, d).total());
    }
    return best;
}

/// Literal transcription of the per-packet loops. Every virtual packet is
/// stored individually and its cumulative mass is summed directly over
/// x(T_i..t). guard_inclusive picks T_i <= T_ML over T_i < T_ML.
struct Engine {
    double c_min, c_max;
    double theta_slow, theta_fast;
    bool intermittent = false;
    bool guard_inclusive = true;
    double slack = aoisched::kClearingSlack;

    std::vector<double> x;          // x[0] unused; x[t]
    std::vector<std::int64_t> packets; // arrival slot per packet
    double clearing = 0.0;
    double holding = 0.0;
    std::int64_t t_hat = 1;
    std::int64_t t_ml = 0;
    bool prev_on = false;

    Engine(double cm, double cM, double th_s, double th_f)
        : c_min(cm), c_max(cM), theta_slow(th_s), theta_fast(th_f), x(1, 0.0) {}

    double mass(std::int64_t arrival, std::int64_t t) const {
        double s = 0.0;
        for (std::int64_t tau = arrival; tau <= t; ++tau) s += x[static_cast<std::size_t>(tau)];
        return s;
    }

    void step(std::int64_t t, std::int64_t arrivals, double cost, bool advice, bool on) {
        x.push_back(0.0);
        if (intermittent && t > 1 && prev_on) t_hat = t;
        if (advice) t_ml = t;
        for (std::int64_t k = 0; k < arrivals; ++k) packets.push_back(t);
        for (const std::int64_t ti : packets) {
            if (mass(ti, t) >= 1.0 - slack) continue;
            const double s0 = mass(ti, t);
            holding += 1.0 - s0;
            if (intermittent && !on) continue;
            const bool advised = guard_inclusive ? ti <= t_ml : ti < t_ml;
            const double theta = advised ? theta_fast : theta_slow;
            const std::int64_t reps = (intermittent && ti < t_hat) ? t - t_hat + 1 : 1;
            for (std::int64_t r = 0; r < reps; ++r) {
                const double s = mass(ti, t);
                if (s >= 1.0 - slack) break;
                x[static_cast<std::size_t>(t)] += s / c_max + 1.0 / (theta * c_max);
            }
        }
        clearing += cost * x[static_cast<std::size_t>(t)];
        prev_on = on;
    }

    double objective() const { return clearing + holding; }
};

inline double power_minus_one(double c_max, double e) { return std::pow(1.0 + 1.0 / c_max, e) - 1.0; }

} // namespace ref
