#include <aoisched/baselines.hpp>
#include <aoisched/error.hpp>
#include <aoisched/generators.hpp>
#include <aoisched/rounding.hpp>

#include <doctest.h>

#include <cmath>

using namespace aoisched;

TEST_CASE("round_stream examples") {
    const std::vector<double> x{0.5, 0.7};
    CHECK(round_stream(x, 0.6) == std::vector<bool>{false, true});
    CHECK(round_stream(x, 0.3) == std::vector<bool>{true, false});
    CHECK(round_stream(std::vector<double>{1.0}, 0.0) == std::vector<bool>{true});
    CHECK(round_stream(std::vector<double>{1.0}, 0.999) == std::vector<bool>{true});
    CHECK(round_stream(std::vector<double>{0.0, 0.0}, 0.0) == std::vector<bool>{false, false});
}

TEST_CASE("rounder rejects thresholds outside [0, 1)") {
    for (double u : {-0.1, 1.0, 2.0, std::nan("")}) {
        try {
            Rounder r(u);
            FAIL("accepted u = " << u);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::UOutOfRange);
        }
    }
}

TEST_CASE("rounder transmits once per unit of clipped mass") {
    Rng rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const double u = rng.uniform01();
        Rounder r(u);
        double sum = 0.0;
        for (int t = 0; t < 50; ++t) {
            const double x = rng.bernoulli(0.2) ? 0.0 : 1.6 * rng.uniform01();
            const auto sent_before = r.transmissions();
            const bool d = r.step(x);
            sum += std::min(x, 1.0);
            CHECK(r.transmissions() - sent_before == (d ? 1 : 0));
            // Integers k >= 0 with u + k < sum.
            const auto expect = sum > u ? static_cast<std::int64_t>(std::ceil(sum - u)) : 0;
            REQUIRE(r.transmissions() == expect);
            if (x == 0.0) REQUIRE_FALSE(d);
        }
    }
}

TEST_CASE("marginal transmission frequency equals clipped x") {
    const std::vector<double> x{0.25, 0.6, 1.4, 0.0, 0.35, 0.9};
    const int n = 4000;
    std::vector<int> hits(x.size(), 0);
    for (int k = 0; k < n; ++k) {
        const auto d = round_stream(x, (k + 0.5) / n);
        for (std::size_t i = 0; i < d.size(); ++i) hits[i] += d[i];
    }
    for (std::size_t i = 0; i < x.size(); ++i)
        CHECK(static_cast<double>(hits[i]) / n == doctest::Approx(std::min(x[i], 1.0)).epsilon(0.001));
}

namespace {

RunConfig config_for(Instance inst, std::uint64_t seed) {
    return RunConfig{{}, std::move(inst), AgingModel::exogenous(), AdviceInput::none(), seed, 1, nullptr};
}

} // namespace

TEST_CASE("run_online examples") {
    auto c = config_for(Instance::always_on(1, {0, 0}, {1, 1}, {1, 1}), 4);
    const auto r = run_online(c);
    CHECK(r.trace.decisions == std::vector<bool>{true, false});
    CHECK(r.trace.cost.total == 1.0);
    CHECK(r.record.u >= 0.0);
    CHECK(r.record.u < 1.0);

    const Instance off(2, {1, 1, 1}, {1, 1, 1}, {false, false, false}, {1, 1});
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto co = config_for(off, seed);
        co.engine.variant = EngineVariant::Intermittent;
        CHECK(run_online(co).trace.cost.total == never_update(off).cost.total);
    }
}

TEST_CASE("run_online replays from its seed") {
    Rng rng(21);
    RandomInstanceSpec spec;
    spec.max_horizon = 60;
    spec.bounds = {1, 5};
    spec.on_probability = 0.8;
    const auto inst = gen_random_instance(spec, rng);
    auto c = config_for(inst, 1234);
    c.engine.variant = EngineVariant::Intermittent;
    const auto a = run_online(c);
    const auto b = run_online(c);
    CHECK(a.record.decisions == b.record.decisions);
    CHECK(a.record.to_document(true).to_string() == b.record.to_document(true).to_string());

    c.replications = 3;
    const auto reps = run_replications(c);
    REQUIRE(reps.size() == 3);
    CHECK(reps[0].record.seed == 1234);
    CHECK(reps[2].record.seed == 1236);
    CHECK(reps[0].record.decisions == a.record.decisions);
}

TEST_CASE("closed loop under exogenous aging matches the open-loop engine") {
    Rng rng(55);
    RandomInstanceSpec spec;
    spec.max_horizon = 40;
    spec.bounds = {1, 4};
    spec.on_probability = 0.75;
    for (int trial = 0; trial < 40; ++trial) {
        const auto inst = gen_random_instance(spec, rng);
        std::vector<bool> bits(static_cast<std::size_t>(inst.horizon()));
        for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = rng.bernoulli(0.3);
        const EngineSpec es{EngineVariant::MlIntermittent, ThetaPolicy::ml(0.5)};
        auto c = config_for(inst, static_cast<std::uint64_t>(trial));
        c.engine = es;
        c.advice = AdviceInput::fixed(bits);
        const auto online = run_online(c);
        const auto open = run_engine(inst, es, bits);
        CHECK(online.ledger.total() == open.lp_objective());
        CHECK(online.advice == bits);
        // Transmissions only where U = 1.
        for (Slot t = 1; t <= inst.horizon(); ++t)
            if (online.trace.decisions[static_cast<std::size_t>(t - 1)]) CHECK(inst.on(t));
    }
}

TEST_CASE("run_online checks advice lengths") {
    auto c = config_for(Instance::always_on(0, {1, 1}, {1, 1}, {1, 1}), 1);
    c.advice = AdviceInput::fixed({true});
    CHECK_THROWS_AS(run_online(c), Error);
    c.advice = AdviceInput::from_thresholds({1.0, 2.0, 3.0});
    CHECK_THROWS_AS(run_online(c), Error);
}

TEST_CASE("threshold advice is evaluated against the pending age") {
    // The bit is recomputed from the realized age, so it depends on earlier transmissions.
    const auto inst = Instance::always_on(0, {1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1});
    auto c = config_for(inst, 0);
    c.engine = {EngineVariant::Ml, ThetaPolicy::ml(1.0)};
    c.advice = AdviceInput::from_thresholds({3.0, 3.0, 3.0, 3.0});
    const auto r = run_online(c);
    for (std::size_t i = 0; i < 4; ++i) {
        Age pending = 0;
        Age age = 0;
        for (std::size_t j = 0; j <= i; ++j) {
            pending = age + 1;
            age = r.trace.decisions[j] ? 0 : pending;
        }
        CHECK(r.advice[i] == (pending >= 3));
    }
}
