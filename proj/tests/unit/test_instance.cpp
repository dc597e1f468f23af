#include "reference.hpp"

#include <aoisched/error.hpp>
#include <aoisched/generators.hpp>
#include <aoisched/instance.hpp>
#include <aoisched/rng.hpp>

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

Instance three_slot() { return Instance::always_on(0, {1, 1, 1}, {2, 2, 2}, {2, 2}); }

} // namespace

TEST_CASE("evaluate_schedule applies the age recursion") {
    const auto inst = three_slot();
    const auto mid = evaluate_schedule(inst, {false, true, false});
    CHECK(mid.ages == std::vector<Age>{1, 0, 1});
    CHECK(mid.cost.update_cost == 2.0);
    CHECK(mid.cost.age_cost == 2.0);
    CHECK(mid.cost.total == 4.0);

    const auto none = evaluate_schedule(inst, {false, false, false});
    CHECK(none.ages == std::vector<Age>{1, 2, 3});
    CHECK(none.cost.total == 6.0);
}

TEST_CASE("evaluate_schedule rejects malformed decisions") {
    const auto inst = three_slot();
    CHECK(code_of([&] { evaluate_schedule(inst, {true, false}); }) == ErrorCode::LengthMismatch);
    const Instance gap(0, {1, 1}, {1, 1}, {true, false}, {1, 1});
    CHECK(code_of([&] { evaluate_schedule(gap, {false, true}); }) == ErrorCode::DecisionAtOffSlot);
}

TEST_CASE("instance construction validates its fields") {
    CHECK(code_of([] { Instance::always_on(0, {}, {}, {1, 1}); }) == ErrorCode::InvalidInstance);
    CHECK(code_of([] { Instance::always_on(-1, {1}, {1}, {1, 1}); }) == ErrorCode::InvalidInstance);
    CHECK(code_of([] { Instance::always_on(0, {-1}, {1}, {1, 1}); }) == ErrorCode::InvalidInstance);
    CHECK(code_of([] { Instance::always_on(0, {1}, {3}, {1, 2}); }) == ErrorCode::InvalidInstance);
    CHECK(code_of([] { Instance::always_on(0, {1}, {1}, {2, 1}); }) == ErrorCode::InvalidInstance);
}

TEST_CASE("instance summaries") {
    const Instance inst(2, {1, 0, 4, 0, 0, 1}, {1, 1, 1, 1, 1, 1},
                        {true, false, false, true, false, true}, {1, 1});
    CHECK(inst.max_delta() == 4);
    CHECK(inst.max_arrival() == 4);
    CHECK(inst.max_off_run() == 2);
    CHECK(inst.t_off() == 3);
    CHECK_FALSE(inst.all_on());
    CHECK(three_slot().t_off() == 0);
    CHECK(three_slot().all_on());
    const Instance trailing(0, {1, 1, 1}, {1, 1, 1}, {true, false, false}, {1, 1});
    CHECK(trailing.t_off() == 2);
}

TEST_CASE("expand_cohorts folds the initial age into slot 1") {
    const auto a = expand_cohorts(Instance::always_on(2, {1, 0}, {1, 1}, {1, 1}));
    CHECK(a == std::vector<Cohort>{{1, 3}, {2, 0}});
    const auto b = expand_cohorts(Instance::always_on(1, {0, 0, 0}, {1, 1, 1}, {1, 1}));
    CHECK(b.front() == Cohort{1, 1});

    const std::vector<double> frac{1.0, 0.5};
    CHECK(code_of([&] { expand_cohorts(0.0, frac); }) == ErrorCode::NonIntegerDelta);
}

TEST_CASE("realized_increment under each aging model") {
    const auto inst = Instance::always_on(0, {0, 5}, {1, 1}, {1, 1});
    const auto ex = AgingModel::from_name("exp:0.3");
    CHECK(realized_increment(ex, inst, 1, 0) == 0);
    CHECK(realized_increment(ex, inst, 1, 2) == 1);
    CHECK(realized_increment(ex, inst, 1, 3) == 1);
    CHECK(realized_increment(AgingModel::linear(), inst, 1, 7) == 1);
    CHECK(realized_increment(AgingModel::exogenous(), inst, 2, 0) == 5);
    CHECK(code_of([] { AgingModel::from_name("quadratic"); }) == ErrorCode::ConfigError);
    CHECK(code_of([] { AgingModel::exp_floor(-1.0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("rescale_to_integer scales ages and costs together") {
    RealInstance a{0.0, {0.5, 1.5}, {2.0, 2.0}, {true, true}, {2.0, 2.0}};
    CHECK(integer_multiplier(a) == 2);
    const auto ia = rescale_to_integer(a);
    CHECK(std::vector<Age>(ia.delta_a().begin(), ia.delta_a().end()) == std::vector<Age>{1, 3});
    CHECK(std::vector<double>(ia.cost().begin(), ia.cost().end()) == std::vector<double>{4.0, 4.0});
    CHECK(ia.cost_bounds() == CostBounds{4.0, 4.0});

    RealInstance b{0.0, {1.0 / 3.0}, {3.0}, {true}, {3.0, 3.0}};
    const auto ib = rescale_to_integer(b);
    CHECK(ib.delta(1) == 1);
    CHECK(ib.cost(1) == doctest::Approx(9.0));

    RealInstance c{0.0, {std::sqrt(2.0)}, {1.0}, {true}, {1.0, 1.0}};
    CHECK(code_of([&] { rescale_to_integer(c); }) == ErrorCode::IrrationalDelta);
}

TEST_CASE("rescaling preserves the set of optimal schedules") {
    Rng rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        const auto T = static_cast<std::size_t>(1 + rng.next_u64() % 8);
        RealInstance r;
        r.initial_age = 0.5 * static_cast<double>(rng.next_u64() % 3);
        for (std::size_t i = 0; i < T; ++i) {
            r.delta_a.push_back(0.5 * static_cast<double>(rng.next_u64() % 5));
            r.cost.push_back(1.0 + 0.25 * static_cast<double>(rng.next_u64() % 9));
            r.opportunity.push_back(true);
        }
        r.bounds = {1.0, 3.0};
        const auto inst = rescale_to_integer(r);
        const double m = static_cast<double>(integer_multiplier(r));

        // Real-valued objective evaluated directly, scaled by m.
        double best_real = INFINITY;
        double best_int = INFINITY;
        std::vector<double> real_cost(std::size_t{1} << T), int_cost(std::size_t{1} << T);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << T); ++mask) {
            double age = r.initial_age, total = 0.0;
            std::vector<bool> d(T);
            for (std::size_t i = 0; i < T; ++i) {
                d[i] = (mask >> i) & 1U;
                age = d[i] ? 0.0 : age + r.delta_a[i];
                total += age + (d[i] ? r.cost[i] : 0.0);
            }
            real_cost[mask] = total * m;
            int_cost[mask] = ref::evaluate(inst, d).total();
            best_real = std::min(best_real, real_cost[mask]);
            best_int = std::min(best_int, int_cost[mask]);
        }
        CHECK(best_int == doctest::Approx(best_real));
        for (std::uint64_t mask = 0; mask < real_cost.size(); ++mask)
            CHECK((std::abs(real_cost[mask] - best_real) < 1e-9) ==
                  (std::abs(int_cost[mask] - best_int) < 1e-9));
    }
}

TEST_CASE("virtual queue holding cost equals the age cost") {
    Rng rng(11);
    RandomInstanceSpec spec;
    spec.max_horizon = 10;
    spec.on_probability = 0.7;
    for (int trial = 0; trial < 40; ++trial) {
        const auto inst = gen_random_instance(spec, rng);
        const auto T = static_cast<std::size_t>(inst.horizon());
        const auto cohorts = expand_cohorts(inst);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << T); ++mask) {
            std::vector<bool> d(T);
            bool ok = true;
            for (std::size_t i = 0; i < T; ++i) {
                d[i] = (mask >> i) & 1U;
                ok = ok && (!d[i] || inst.on(static_cast<Slot>(i) + 1));
            }
            if (!ok) continue;
            const double age = ref::evaluate(inst, d).age;
            REQUIRE(virtual_queue_age_cost(cohorts, d) == age);
            REQUIRE(evaluate_schedule(inst, d).cost.age_cost == age);
        }
    }
}

TEST_CASE("instance text round trip is exact") {
    Rng rng(5);
    RandomInstanceSpec spec;
    spec.bounds = {1.0, 7.5};
    spec.on_probability = 0.6;
    for (int i = 0; i < 20; ++i) {
        const auto inst = gen_random_instance(spec, rng);
        CHECK(instance_from_text(to_text(inst)) == inst);
    }
    CHECK(code_of([] { instance_from_text("horizon = 2\ninitial_age = 0\ndelta_a = 1\ncost = 1\n"
                                          "opportunity = 1\ncost_bounds = 1,1\n"); }) ==
          ErrorCode::LengthMismatch);
}
