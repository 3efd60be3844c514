#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pebble/exact.hpp"
#include "pebble/families.hpp"
#include "pebble/formulas.hpp"

using namespace pebble;

namespace {

ExactOptions serial_opts()
{
    ExactOptions opts;
    opts.policy = ExecutionPolicy::serial;
    return opts;
}

// Frozen values from the independent exhaustive reference run.
struct Pin {
    const char* name;
    PricedGraph graph;
    std::vector<std::int64_t> pi; // pi^1 .. pi^n
};

std::vector<Pin> pinned()
{
    std::vector<Pin> pins;
    pins.push_back({"P_2", make_path(2), {2, 3}});
    pins.push_back({"P_3", make_path(3), {4, 6, 7}});
    pins.push_back({"P_4", make_path(4), {8, 12, 14, 15}});
    pins.push_back({"K_3", make_complete(3), {3, 4, 5}});
    pins.push_back({"K_4", make_complete(4), {4, 5, 6, 7}});
    pins.push_back({"S_3", make_star(3), {5, 8, 10, 11}});
    pins.push_back({"C_4", make_cycle(4), {4, 6, 8, 9}});
    return pins;
}

void check_number_result(const PricedGraph& g, int t, const NumberResult& r)
{
    // The witness is a verified counterexample one below the threshold.
    REQUIRE(r.witness_config.has_value());
    CHECK(r.witness_config->size() == r.value - 1);
    CHECK_FALSE(is_t_solvable(*r.witness_config, g, t).solvable);

    // A sample of configurations at the threshold is solvable.
    std::uint64_t total = configuration_count(g.vertex_count(), r.value);
    std::uint64_t samples = std::min<std::uint64_t>(total, 100);
    for (std::uint64_t i = 0; i < samples; ++i) {
        std::uint64_t index = total <= 100 ? i : i * (total / samples);
        auto c = ConfigurationStream::at_index(g.vertex_count(), r.value, index);
        CHECK(is_t_solvable(c, g, t).solvable);
    }
}

} // namespace

TEST_CASE("pebbling numbers match the pinned reference values")
{
    for (const auto& pin : pinned()) {
        int n = pin.graph.vertex_count();
        for (int t = 1; t <= n; ++t) {
            CAPTURE(pin.name);
            CAPTURE(t);
            auto result = pebbling_number(pin.graph, t);
            CHECK(result.value == pin.pi[t - 1]);
        }
    }
}

TEST_CASE("number results carry verified witnesses")
{
    auto p3 = make_path(3);
    auto result = pebbling_number(p3, 2);
    CHECK(result.value == 6);
    check_number_result(p3, 2, result);
    CHECK(*result.witness_config == Configuration{{5, 0, 0}});
    REQUIRE(result.witness_spec.has_value());
    CHECK(std::get<TargetSet>(*result.witness_spec) == TargetSet::of({1, 2}));

    auto s3 = make_star(3);
    auto star = pebbling_number(s3, 1);
    CHECK(star.value == 5);
    CHECK(*star.witness_config == Configuration{{0, 3, 1, 0}});
    check_number_result(s3, 1, star);
}

TEST_CASE("one-vertex graph has pebbling number 1")
{
    auto k1 = PricedGraph::make(1, {}, {2});
    auto r = pebbling_number(k1, 1);
    CHECK(r.value == 1);
    CHECK(*r.witness_config == Configuration{{0}});
    CHECK(weighted_cover_number(k1, WeightFunction{{1}}).value == 1);
}

TEST_CASE("priced instances")
{
    CHECK(pebbling_number(make_path(3, {3, 2, 2}), 1).value == 6);
    CHECK(pebbling_number(make_path(3, {2, 2, 3}), 1).value == 6);
    auto k3 = make_complete(3, {2, 2, 3});
    CHECK(pebbling_number(k3, 1).value == 4);
    CHECK(pebbling_number(k3, 2).value == 6);
    CHECK(pebbling_number(k3, 3).value == 7);
}

TEST_CASE("weighted cover numbers")
{
    auto p2 = make_path(2);
    auto c1 = weighted_cover_number(p2, WeightFunction{{1, 1}});
    CHECK(c1.value == 3);
    REQUIRE(c1.witness_config.has_value());
    CHECK(*c1.witness_config == Configuration{{2, 0}});
    CHECK(weighted_cover_number(p2, WeightFunction{{0, 1}}).value == 2);

    auto zero = weighted_cover_number(p2, WeightFunction{{0, 0}});
    CHECK(zero.value == 0);
    CHECK_FALSE(zero.witness_config.has_value());

    CHECK(weighted_cover_number(make_path(3), WeightFunction{{1, 1, 1}}).value == 7);
    CHECK(weighted_cover_number(make_complete(3), WeightFunction{{0, 1, 1}}).value == 4);
    CHECK(weighted_cover_number(make_complete(3), WeightFunction{{0, 0, 2}}).value == 5);
}

TEST_CASE("gamma with all-ones weights equals the cover pebbling number")
{
    for (const auto& pin : pinned()) {
        int n = pin.graph.vertex_count();
        auto gamma =
            weighted_cover_number(pin.graph, WeightFunction::ones(n));
        CHECK(gamma.value == pin.pi[n - 1]);
    }
}

TEST_CASE("monotonicity in t")
{
    for (const auto& pin : pinned())
        for (std::size_t i = 0; i + 1 < pin.pi.size(); ++i)
            CHECK(pin.pi[i] <= pin.pi[i + 1]);
}

TEST_CASE("critical sets are complete and verified")
{
    auto p2_critical = critical_configurations(make_path(2), 1);
    CHECK(p2_critical.pi == 2);
    REQUIRE(p2_critical.members.size() == 2);
    CHECK(p2_critical.members[0].first == Configuration{{1, 0}});
    CHECK(p2_critical.members[1].first == Configuration{{0, 1}});

    auto p3_critical = critical_configurations(make_path(3), 1);
    REQUIRE(p3_critical.members.size() == 2);
    CHECK(p3_critical.members[0].first == Configuration{{3, 0, 0}});
    CHECK(p3_critical.members[1].first == Configuration{{0, 0, 3}});

    auto k3_critical = critical_configurations(make_complete(3), 1);
    REQUIRE(k3_critical.members.size() == 3);
    CHECK(k3_critical.members[0].first == Configuration{{1, 1, 0}});

    auto g = make_complete(3);
    for (const auto& [config, failing] : k3_critical.members) {
        CHECK_FALSE(can_reach_spec(config, g, failing).solvable);
        CHECK(config.size() == k3_critical.member_size);
    }
}

TEST_CASE("serial and parallel policies agree field for field")
{
    std::vector<std::pair<PricedGraph, int>> instances = {
        {make_path(4), 2}, {make_star(3), 3}, {make_complete(4), 3},
        {make_cycle(4), 2}, {make_path(3, {3, 2, 2}), 1}};
    for (const auto& [g, t] : instances) {
        auto serial = pebbling_number(g, t, serial_opts());
        ExactOptions parallel;
        parallel.policy = ExecutionPolicy::parallel;
        for (int threads : {1, 4}) {
            parallel.threads = threads;
            auto result = pebbling_number(g, t, parallel);
            CHECK(result.value == serial.value);
            CHECK(result.witness_config == serial.witness_config);
            CHECK(result.configs_examined == serial.configs_examined);
        }
    }

    auto serial_crit = critical_configurations(make_cycle(4), 1, serial_opts());
    auto parallel_crit = critical_configurations(make_cycle(4), 1);
    REQUIRE(serial_crit.members.size() == parallel_crit.members.size());
    CHECK(serial_crit.members.size() == 8);
    for (std::size_t i = 0; i < serial_crit.members.size(); ++i)
        CHECK(serial_crit.members[i].first == parallel_crit.members[i].first);
}

TEST_CASE("budgets abort deterministically instead of answering wrongly")
{
    ExactOptions tiny;
    tiny.budget_configs = 3;
    CHECK_THROWS_AS(pebbling_number(make_path(4), 1, tiny), Error);
    try {
        pebbling_number(make_path(4), 1, tiny);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ResourceLimit);
    }

    ExactOptions starved;
    starved.budget_states = 1;
    try {
        pebbling_number(make_path(4), 1, starved);
        FAIL("expected ResourceLimit");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ResourceLimit);
    }

    // enumerating a critical set needs budget beyond the number search
    ExactOptions cramped;
    cramped.budget_configs = 40; // enough for pi(P_3, 1) = 4 but not the sweep at 3
    CHECK(pebbling_number(make_path(3), 1, cramped).value == 4);
    ExactOptions tight = cramped;
    tight.budget_configs = 12;
    CHECK_THROWS_AS(critical_configurations(make_path(3), 1, tight), Error);
}

TEST_CASE("search start never trusts the closed-form hint")
{
    // The spread bound is exact on complete graphs, so the search starts at
    // the answer and must still certify one size below it.
    auto k4 = make_complete(4);
    auto result = pebbling_number(k4, 2);
    CHECK(result.value == 5);
    CHECK(result.witness_config->size() == 4);
    CHECK_FALSE(is_t_solvable(*result.witness_config, k4, 2).solvable);
}
