#include "reference.hpp"

#include <aoisched/baselines.hpp>
#include <aoisched/error.hpp>
#include <aoisched/generators.hpp>
#include <aoisched/oracle.hpp>
#include <aoisched/rounding.hpp>

#include <doctest.h>

#include <cmath>

using namespace aoisched;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::InvalidArgument;
}

Instance three_slot(double c) { return Instance::always_on(0, {1, 1, 1}, {c, c, c}, {c, c}); }

RandomInstanceSpec small_spec(double on_prob) {
    RandomInstanceSpec s;
    s.max_horizon = 12;
    s.bounds = {1, 6};
    s.on_probability = on_prob;
    return s;
}

} // namespace

TEST_CASE("oracle examples") {
    CHECK(opt_dp(three_slot(2)).opt_cost == 4.0);
    CHECK(opt_dp(three_slot(2)).decisions == std::vector<bool>{false, true, false});
    CHECK(opt_dp(three_slot(5)).opt_cost == 6.0);
    CHECK(opt_dp(gen_cost_jump(2, 2, 5)).opt_cost == 2.0);
    CHECK(cost_jump_opt(2, 2, 5) == 2.0);

    const Instance dark(3, {1, 2}, {1, 1}, {false, false}, {1, 1});
    CHECK(opt_enumerate(dark).opt_cost == 4.0 + 6.0);
    CHECK(opt_dp(dark).opt_cost == 10.0);

    const auto long_inst = Instance::always_on(0, std::vector<Age>(21, 1), std::vector<double>(21, 1.0), {1, 1});
    CHECK(code_of([&] { opt_enumerate(long_inst); }) == ErrorCode::HorizonTooLarge);
}

TEST_CASE("dynamic program matches exhaustive search") {
    Rng rng(404);
    const auto exp_aging = AgingModel::exp_floor(0.3);
    for (int trial = 0; trial < 300; ++trial) {
        const auto inst = gen_random_instance(small_spec(trial % 2 ? 0.6 : 1.0), rng);
        const auto dp = opt_dp(inst);
        const auto en = opt_enumerate(inst);
        REQUIRE(dp.opt_cost == en.opt_cost);
        REQUIRE(dp.decisions == en.decisions);
        REQUIRE(dp.opt_cost == ref::brute_opt(inst));
        REQUIRE(evaluate_schedule(inst, dp.decisions).cost.total == dp.opt_cost);

        const auto dpa = opt_dp(inst, exp_aging);
        const auto ena = opt_enumerate(inst, exp_aging);
        REQUIRE(dpa.opt_cost == ena.opt_cost);
        REQUIRE(dpa.decisions == ena.decisions);
        REQUIRE(evaluate_schedule(inst, exp_aging, dpa.decisions).cost.total == dpa.opt_cost);
    }
}

TEST_CASE("optimum never decreases when a slot is appended") {
    Rng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const auto inst = gen_random_instance(small_spec(0.7), rng);
        const auto T = static_cast<std::size_t>(inst.horizon());
        auto delta = std::vector<Age>(inst.delta_a().begin(), inst.delta_a().end());
        auto cost = std::vector<double>(inst.cost().begin(), inst.cost().end());
        auto on = inst.opportunity();
        delta.push_back(static_cast<Age>(rng.next_u64() % 4));
        cost.push_back(inst.cost_bounds().min);
        on.push_back(rng.bernoulli(0.5));
        const Instance longer(inst.initial_age(), delta, cost, on, inst.cost_bounds());
        CHECK(opt_dp(longer).opt_cost >= opt_dp(inst).opt_cost);
        CHECK(T + 1 == static_cast<std::size_t>(longer.horizon()));
    }
}

TEST_CASE("optimum is below every baseline") {
    Rng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const auto inst = gen_random_instance(small_spec(0.7), rng);
        const double opt = opt_dp(inst).opt_cost;
        CHECK(opt <= greedy_schedule(inst).cost.total);
        CHECK(opt <= never_update(inst).cost.total);
        CHECK(opt <= always_update(inst).cost.total);
        for (std::uint64_t s = 0; s < 5; ++s) {
            RunConfig c{{EngineVariant::Intermittent, {}}, inst, AgingModel::exogenous(),
                        AdviceInput::none(), s, 1, nullptr};
            CHECK(opt <= run_online(c).trace.cost.total);
        }
        const auto dp = opt_dp(inst);
        CHECK(follow_ml(inst, dp.decisions).cost.total == opt);
    }
}

TEST_CASE("greedy examples") {
    const auto g = greedy_schedule(three_slot(2));
    CHECK(g.decisions == std::vector<bool>{false, true, false});
    CHECK(g.cost.total == 4.0);
    const auto cheap = greedy_schedule(three_slot(0.5));
    CHECK(cheap.decisions == std::vector<bool>{true, true, true});
}

TEST_CASE("baseline schedules respect opportunities") {
    const Instance inst(0, {1, 1, 1, 1}, {1, 1, 1, 1}, {true, false, true, false}, {1, 1});
    CHECK(always_update(inst).decisions == std::vector<bool>{true, false, true, false});
    CHECK(never_update(inst).cost.total == 10.0);
    CHECK(follow_ml(inst, {true, true, true, true}).decisions ==
          std::vector<bool>{true, false, true, false});
    CHECK(follow_ml_thresholds(inst, {1, 1, 1, 1}).decisions ==
          std::vector<bool>{true, false, true, false});
    CHECK(follow_ml_thresholds(inst, {2, 2, 2, 2}).decisions ==
          std::vector<bool>{false, false, true, false});
}

TEST_CASE("threshold policy search") {
    const auto inst = Instance::always_on(0, std::vector<Age>(12, 1), std::vector<double>(12, 2.0), {2, 2});
    const std::vector<CostState> labels(12, CostState::Low);
    const auto best = best_threshold_policy(inst, labels, 10);
    CHECK((best.policy.t_low == 2 || best.policy.t_low == 3));
    CHECK(best.policy.t_high == 1);
    CHECK(best.cost == eval_threshold_policy(inst, labels, best.policy).cost.total);

    // Independent scan over the same grid, with the same tie rule.
    double scan = INFINITY;
    ThresholdPolicy arg;
    for (std::int64_t l = 1; l <= 10; ++l)
        for (std::int64_t h = 1; h <= 10; ++h) {
            const double c = eval_threshold_policy(inst, labels, {l, h}).cost.total;
            if (c < scan) {
                scan = c;
                arg = {l, h};
            }
        }
    CHECK(best.cost == scan);
    CHECK(best.policy == arg);

    const auto every = best_threshold_policy(inst, labels, 1);
    CHECK(eval_threshold_policy(inst, labels, every.policy).decisions == std::vector<bool>(12, true));
    CHECK(code_of([&] { best_threshold_policy(inst, labels, 0); }) == ErrorCode::GridEmpty);
}

TEST_CASE("threshold search agrees with a scan on stochastic environments") {
    GilbertElliottCosts ge{0.2, 0.8, 1.0, 3.0, std::nullopt};
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto env = gen_stochastic_env(ge, 0.7, 200, AgingModel::exogenous(), seed);
        const auto grid = default_grid_max(env.instance);
        CHECK(grid == static_cast<std::int64_t>(std::ceil(2.0 * 3.0)) + 2 * env.instance.max_delta());
        const auto best = best_threshold_policy(env.instance, env.labels, grid);
        for (std::int64_t l = 1; l <= grid; ++l)
            for (std::int64_t h = 1; h <= grid; ++h)
                REQUIRE(best.cost <= eval_threshold_policy(env.instance, env.labels, {l, h}).cost.total);
    }
}

TEST_CASE("adversarial families") {
    const auto cj = gen_cost_jump(2, 3, 6);
    CHECK(cj.initial_age() == 1);
    CHECK(cj.cost(1) == 2.0);
    CHECK(cj.cost(4) == 6.0);
    for (double ratio : {1.0, 1.5, 4.0})
        for (std::int64_t T : {1, 3, 8})
            CHECK(cost_jump_opt(2, ratio, T) == ref::brute_opt(gen_cost_jump(2, ratio, T)));

    for (std::int64_t cm : {2, 3, 4}) {
        const auto aj = gen_age_jump_pair(cm);
        CHECK(aj.first.horizon() == 2);
        CHECK(aj.first.delta(2) == cm * cm - 2);
        CHECK_FALSE(aj.first.on(2));
        CHECK(aj.second.horizon() == 1);
        CHECK(opt_dp(aj.first).opt_cost == ref::brute_opt(aj.first));
        CHECK(opt_dp(aj.second).opt_cost == 1.0);
    }
    CHECK(opt_dp(gen_age_jump_pair(2).first).opt_cost == 4.0);

    for (std::int64_t cm : {1, 2, 3}) {
        const auto off = gen_off_run_pair(cm);
        CHECK(off.first.horizon() == cm * cm + 1);
        CHECK(off.first.max_off_run() == cm * cm);
        CHECK(opt_dp(off.first).opt_cost == static_cast<double>(std::min<std::int64_t>(cm, cm * cm + 1)));
    }
    CHECK_THROWS_AS(gen_age_jump_pair(1), Error);
}

TEST_CASE("two-state cost chain") {
    GilbertElliottCosts stay{0.0, 0.5, 1.0, 4.0, CostState::Low};
    const auto env = gen_stochastic_env(stay, 1.0, 100, AgingModel::exogenous(), 9);
    for (Slot t = 1; t <= 100; ++t) CHECK(env.instance.cost(t) == 1.0);
    CHECK(env.instance.all_on());
    CHECK(env.instance.initial_age() == 0);

    GilbertElliottCosts ge{0.2, 0.8, 1.0, 4.0, std::nullopt};
    CHECK(ge.stationary_low() == doctest::Approx(0.8));
    const auto big = gen_stochastic_env(ge, 0.5, 20000, AgingModel::exogenous(), 3);
    double low = 0, on = 0;
    for (Slot t = 1; t <= 20000; ++t) {
        low += big.labels[static_cast<std::size_t>(t - 1)] == CostState::Low;
        on += big.instance.on(t);
        CHECK(big.instance.cost(t) ==
              (big.labels[static_cast<std::size_t>(t - 1)] == CostState::Low ? 1.0 : 4.0));
    }
    CHECK(low / 20000 == doctest::Approx(0.8).epsilon(0.03));
    CHECK(on / 20000 == doctest::Approx(0.5).epsilon(0.03));

    const auto again = gen_stochastic_env(ge, 0.5, 20000, AgingModel::exogenous(), 3);
    CHECK(again.instance == big.instance);

    GilbertElliottCosts bad{1.5, 0.5, 1.0, 2.0, std::nullopt};
    CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("noisy advice") {
    CHECK(advice_sigma(1.0, 4.0) == doctest::Approx(2.0409).epsilon(1e-4));
    CHECK(advice_sigma(0.0, 4.0) == 0.0);

    GilbertElliottCosts ge{0.3, 0.6, 1.0, 3.0, std::nullopt};
    const auto env = gen_stochastic_env(ge, 0.8, 300, AgingModel::exogenous(), 12);
    const ThresholdPolicy ideal{2, 5};
    const auto exact = advice_thresholds({ideal, 0.0, 7}, env.labels);
    for (std::size_t i = 0; i < exact.size(); ++i)
        CHECK(exact[i] == static_cast<double>(ideal.threshold(env.labels[i])));
    CHECK(follow_ml_thresholds(env.instance, exact).decisions ==
          eval_threshold_policy(env.instance, env.labels, ideal).decisions);

    const auto noisy = advice_thresholds({ideal, 1.0, 7}, env.labels);
    CHECK(noisy == advice_thresholds({ideal, 1.0, 7}, env.labels));
    CHECK(noisy != advice_thresholds({ideal, 1.0, 8}, env.labels));
    CHECK(code_of([&] { advice_thresholds({{0, 3}, 0.5, 1}, env.labels); }) ==
          ErrorCode::ZeroThresholdWithNoise);

    const std::vector<Age> pending(env.labels.size(), 3);
    const auto bits = gen_ml_advice({ideal, 0.0, 1}, env.labels, pending);
    for (std::size_t i = 0; i < bits.bits.size(); ++i)
        CHECK(bits.bits[i] == (env.labels[i] == CostState::Low));
}

TEST_CASE("advice noise has the advertised spread") {
    std::vector<CostState> labels(20000, CostState::Low);
    const ThresholdPolicy ideal{4, 4};
    const auto th = advice_thresholds({ideal, 0.5, 99}, labels);
    double inside = 0, sum = 0;
    for (double v : th) {
        inside += std::abs(v - 4.0) <= 0.5 * 4.0;
        sum += v;
    }
    CHECK(inside / 20000 == doctest::Approx(0.95).epsilon(0.01));
    CHECK(sum / 20000 == doctest::Approx(4.0).epsilon(0.01));
}

TEST_CASE("random instance generator honours its limits") {
    Rng rng(1);
    RandomInstanceSpec spec;
    spec.min_horizon = 5;
    spec.max_horizon = 30;
    spec.bounds = {1.0, 2.5};
    spec.on_probability = 0.3;
    spec.max_off_run = 2;
    spec.max_first_batch = 2;
    for (int trial = 0; trial < 200; ++trial) {
        const auto inst = gen_random_instance(spec, rng);
        CHECK(inst.horizon() >= 5);
        CHECK(inst.horizon() <= 30);
        CHECK(inst.max_off_run() <= 2);
        CHECK(inst.initial_age() + inst.delta(1) <= 2);
        for (Slot t = 1; t <= inst.horizon(); ++t) {
            CHECK(inst.cost(t) * 64 == std::floor(inst.cost(t) * 64));
            CHECK(inst.delta(t) <= 3);
        }
    }
}
