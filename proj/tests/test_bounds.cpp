#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "mslab/bounds.hpp"
#include "mslab/errors.hpp"

using namespace mslab;

TEST_CASE("Phi and the main interval at hand-checked points") {
    // (1,3): interval (log 4, (4/log 2) log 4) = (log 4, 8)
    const ColorProfile p({1, 3});
    const auto [lo, hi] = bound_main(p);
    CHECK(lo == doctest::Approx(std::log(4.0)));
    CHECK(hi == doctest::Approx(8.0));
    CHECK(phi_upper(ColorProfile({1, 1})) == doctest::Approx(4.0));
    CHECK_THROWS_AS(phi_upper(ColorProfile({5})), DegenerateSpaceError);
}

TEST_CASE("complete graph and random transposition walks") {
    CHECK(bound_complete_graph(2) == doctest::Approx(2.0));
    CHECK(bound_complete_graph(5) == doctest::Approx(5.0 * std::log(4.0) / 3.0));
    CHECK_THROWS_AS(bound_complete_graph(1), ConfigError);
    const auto [lo, hi] = bound_random_transposition(6);
    CHECK(lo == doctest::Approx(std::log(6.0)));
    CHECK(hi == doctest::Approx(4.0 * std::log(6.0)));
}

TEST_CASE("Bernoulli-Laplace bound") {
    const BernoulliLaplaceBound bl = bound_bernoulli_laplace(1, 2);
    CHECK(bl.lower_shape == doctest::Approx(std::log(4.0)));
    CHECK(bl.upper == doctest::Approx(4.0));  // equals Phi(1,1)
    const BernoulliLaplaceBound half = bound_bernoulli_laplace(5, 10);
    CHECK(half.upper == doctest::Approx(2.0 / std::log(2.0) * std::log(4.0)));
    CHECK_THROWS_AS(bound_bernoulli_laplace(0, 5), ConfigError);
    CHECK_THROWS_AS(bound_bernoulli_laplace(5, 5), ConfigError);
}

TEST_CASE("FOW bound dominates the main upper bound direction") {
    const ColorProfile p({2, 2, 1});
    const double fow = bound_fow(p);
    double expect = 0.0;
    for (int k : p.counts) expect += std::log(20.0 / k);
    CHECK(fow == doctest::Approx(2.0 / std::log(2.0) * expect));
}

TEST_CASE("trivial single-site chain value") {
    CHECK(bound_trivial_chain(ColorProfile({2, 2})) == doctest::Approx(2.0));
    // n=4, kappa_min=1: 4/2 log 3
    CHECK(bound_trivial_chain(ColorProfile({1, 3})) ==
          doctest::Approx(2.0 * std::log(3.0)));
}

TEST_CASE("two-color weight stays below its cap") {
    for (const ColorProfile& p :
         {ColorProfile({2, 3}), ColorProfile({1, 2, 2}), ColorProfile({4, 1, 1})}) {
        for (int ell = 1; ell <= p.l(); ++ell) {
            const TwoColorWeight w = two_color_weight(p, ell);
            CHECK(w.lhs <= w.bound + 1e-12);
        }
    }
}

TEST_CASE("recursion closes below Phi and traces its steps") {
    for (const ColorProfile& p :
         {ColorProfile({1, 1}), ColorProfile({2, 2, 1}), ColorProfile({3, 3, 3}),
          ColorProfile({1, 1, 1, 1, 1}), ColorProfile({5, 4, 3, 2, 1})}) {
        const RecursionTrace tr = recursive_upper(p);
        CHECK(tr.final_value <= phi_upper(p) + 1e-12);
        CHECK(tr.final_value > 0.0);
        REQUIRE(!tr.steps.empty());
        // the last recorded step carries the requested (canonical) profile
        CHECK(tr.steps.back().profile == p.canonical());
        CHECK(tr.steps.back().value == doctest::Approx(tr.final_value));
    }
    // L = 2 base case is the Bernoulli-Laplace upper bound itself
    CHECK(recursive_upper(ColorProfile({3, 2})).final_value ==
          doctest::Approx(bound_bernoulli_laplace(2, 5).upper));
}

TEST_CASE("iota and colored-process intervals") {
    const ColorProfile p({2, 2});
    const auto [ilo, ihi] = bound_iota(p);
    CHECK(ihi == doctest::Approx(4.0 / std::log(2.0)));
    CHECK(ilo == doctest::Approx(std::log(2.0) / 4.0 * ihi));
    const auto [clo, chi] = bound_colored(p, 1.5, 2.0);
    CHECK(clo == doctest::Approx(4.0));  // max(2*2, log 2)
    CHECK(chi == doctest::Approx(4.0 / std::log(2.0) * 1.5 * std::log(2.0)));
    CHECK_THROWS_AS(bound_colored(p, 0.0, 1.0), ConfigError);
}

TEST_CASE("bounds report rows") {
    const auto rows = bounds_report(ColorProfile({1, 3}));
    bool saw_main = false, saw_bl = false, saw_complete = false;
    for (const BoundEntry& r : rows) {
        if (r.name == "main") {
            saw_main = true;
            CHECK(r.lower == doctest::Approx(std::log(4.0)));
            CHECK(r.upper == doctest::Approx(8.0));
        }
        if (r.name == "bernoulli_laplace") saw_bl = true;
        if (r.name == "complete_graph") saw_complete = true;
    }
    CHECK(saw_main);
    CHECK(saw_bl);
    CHECK(saw_complete);
    // random transposition row only for kappa = (1,...,1)
    bool saw_rt = false;
    for (const BoundEntry& r : bounds_report(ColorProfile({1, 1, 1})))
        if (r.name == "random_transposition") saw_rt = true;
    CHECK(saw_rt);
}
