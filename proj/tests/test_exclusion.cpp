#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "mslab/errors.hpp"
#include "mslab/exclusion.hpp"

using namespace mslab;

TEST_CASE("two-state TV curve matches the closed form") {
    StateSpace sp(ColorProfile({1, 1}));
    const SparseOperator op =
        exclusion_generator(sp, WeightedGraph::mean_field(2));
    const std::vector<double> times{0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0};
    const MixingCurve c = tv_decay_exact(op, StartPolicy::fixed, 0, times);
    for (size_t i = 0; i < times.size(); ++i)
        CHECK(c.tv[i] == doctest::Approx(0.5 * std::exp(-times[i])).epsilon(1e-11));
}

TEST_CASE("TV at time zero is 1 - 1/N and curves decay") {
    StateSpace sp(ColorProfile({2, 2}));
    const SparseOperator op =
        exclusion_generator(sp, WeightedGraph::mean_field(4));
    const std::vector<double> grid = default_time_grid(1.0);
    for (StartPolicy pol :
         {StartPolicy::fixed, StartPolicy::transitive, StartPolicy::worst}) {
        const MixingCurve c = tv_decay_exact(op, pol, 2, grid);
        CHECK(c.tv[0] == doctest::Approx(1.0 - 1.0 / sp.size()));
        for (size_t i = 1; i < c.tv.size(); ++i)
            CHECK(c.tv[i] <= c.tv[i - 1] + 1e-12);
        CHECK(c.tv.back() < 1e-8);
    }
    // mean-field walk is transitive: worst start equals any fixed start
    const MixingCurve fixed = tv_decay_exact(op, StartPolicy::fixed, 3, grid);
    const MixingCurve worst = tv_decay_exact(op, StartPolicy::worst, 0, grid);
    for (size_t i = 0; i < grid.size(); ++i)
        CHECK(fixed.tv[i] == doctest::Approx(worst.tv[i]).epsilon(1e-10));
}

TEST_CASE("mixing time interpolates the curve") {
    MixingCurve c;
    c.times = {0.0, 1.0, 2.0};
    c.tv = {0.5, 0.3, 0.1};
    CHECK(mixing_time(c, 0.5) == doctest::Approx(0.0));
    CHECK(mixing_time(c, 0.3) == doctest::Approx(1.0));
    CHECK(mixing_time(c, 0.2) == doctest::Approx(1.5));
    CHECK_THROWS_AS(mixing_time(c, 0.05), ConfigError);
    CHECK_THROWS_AS(mixing_time(c, 0.0), ConfigError);
    // analytic cross-check on the two-state chain: t_mix(eps) = log(1/(2 eps))
    StateSpace sp(ColorProfile({1, 1}));
    const SparseOperator op =
        exclusion_generator(sp, WeightedGraph::mean_field(2));
    const MixingCurve two =
        tv_decay_exact(op, StartPolicy::fixed, 0, default_time_grid(1.0));
    CHECK(mixing_time(two, 0.25) == doctest::Approx(std::log(2.0)).epsilon(1e-3));
}

TEST_CASE("trajectory simulation is deterministic and profile-preserving") {
    const ColorProfile p({2, 2, 1});
    const WeightedGraph g = WeightedGraph::cycle(5);
    const Word start{1, 2, 1, 3, 2};
    const TrajectorySample a = simulate_trajectory(p, g, start, 50.0, 99);
    const TrajectorySample b = simulate_trajectory(p, g, start, 50.0, 99);
    CHECK(a.jump_times == b.jump_times);
    CHECK(a.swaps == b.swaps);
    CHECK(!a.jump_times.empty());

    // replay the swaps: counts preserved, every swap crosses colors and an edge
    Word w = start;
    for (size_t k = 0; k < a.swaps.size(); ++k) {
        const auto [i, j] = a.swaps[k];
        REQUIRE(1 <= i);
        REQUIRE(i < j);
        REQUIRE(j <= 5);
        CHECK(g.at(i - 1, j - 1) > 0.0);
        CHECK(w[i - 1] != w[j - 1]);
        std::swap(w[i - 1], w[j - 1]);
        if (k + 1 < a.visited_ranks.size()) {
            StateSpace sp(p);
            CHECK(sp.rank(w) == a.visited_ranks[k + 1]);
        }
    }
    std::vector<int> cnt(3, 0);
    for (uint8_t c : w) ++cnt[c - 1];
    CHECK(cnt == p.counts);

    CHECK_THROWS_AS(simulate_trajectory(p, g, Word{1, 1, 1, 2, 3}, 1.0, 1),
                    MalformedStateError);
    CHECK_THROWS_AS(simulate_trajectory(p, g, Word{1, 2, 1, 3}, 1.0, 1),
                    ConfigError);
}

TEST_CASE("CSV emitters") {
    StateSpace sp(ColorProfile({1, 1}));
    const SparseOperator op =
        exclusion_generator(sp, WeightedGraph::mean_field(2));
    const MixingCurve c =
        tv_decay_exact(op, StartPolicy::fixed, 0, {0.0, 1.0, 2.0});
    const std::string path = "test_curve.csv";
    store_mixing_curve_csv(c, path);
    {
        std::ifstream in(path);
        std::string header;
        std::getline(in, header);
        CHECK(header == "time,tv");
        int lines = 0;
        std::string line;
        while (std::getline(in, line)) ++lines;
        CHECK(lines == 3);
    }
    std::remove(path.c_str());

    const TrajectorySample t = simulate_trajectory(
        ColorProfile({1, 1}), WeightedGraph::mean_field(2), Word{1, 2}, 10.0, 7);
    const std::string tpath = "test_traj.csv";
    store_trajectory_csv(t, tpath);
    {
        std::ifstream in(tpath);
        std::string line;
        std::getline(in, line);
        CHECK(line == "# start=1,2 seed=7");
        std::getline(in, line);
        CHECK(line == "time,i,j");
    }
    std::remove(tpath.c_str());
}
