#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "mslab/bounds.hpp"
#include "mslab/errors.hpp"
#include "mslab/isoperimetry.hpp"

using namespace mslab;

TEST_CASE("adjacency degrees count unequal-color pairs") {
    StateSpace sp(ColorProfile({2, 2, 1}));
    const Adjacency adj = build_adjacency(sp);
    REQUIRE(adj.nbr.size() == sp.size());
    // degree = # pairs (i<j) with w_i != w_j = (n^2 - sum kappa_ell^2)/2 = 8
    for (const auto& row : adj.nbr) CHECK(row.size() == 8);
    CHECK(adj.edge_count == sp.size() * 8 / 2);
    // neighbors are mutual
    for (uint64_t s = 0; s < sp.size(); ++s)
        for (uint32_t t : adj.nbr[s]) {
            bool back = false;
            for (uint32_t u : adj.nbr[t])
                if (u == s) back = true;
            CHECK(back);
        }
}

TEST_CASE("edge boundary agrees with a direct double count") {
    StateSpace sp(ColorProfile({2, 2}));
    const Adjacency adj = build_adjacency(sp);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 50; ++trial) {
        SubsetMask a = SubsetMask::empty(sp.size());
        for (uint64_t i = 0; i < sp.size(); ++i)
            if (coin(rng)) a.set(i);
        uint64_t direct = 0;
        for (uint64_t s = 0; s < sp.size(); ++s)
            for (uint32_t t : adj.nbr[s])
                if (a.test(s) != a.test(t)) ++direct;
        CHECK(edge_boundary(adj, a) == direct / 2);
    }
}

TEST_CASE("brute-force iota on the 3-state triangle") {
    // Omega_(1,2) is a triangle: singletons minimize, iota = 2/log 3
    StateSpace sp(ColorProfile({1, 2}));
    const IotaResult r = brute_force_iota(sp);
    CHECK(r.iota == doctest::Approx(2.0 / std::log(3.0)));
    CHECK(r.argmin.popcount == 1);
    // the candidate set here is a singleton too, so sharp bound is exact
    CHECK(candidate_bound(ColorProfile({1, 2})).sharp ==
          doctest::Approx(r.iota));
}

TEST_CASE("iota respects the theorem interval on enumerable spaces") {
    for (const ColorProfile& p :
         {ColorProfile({1, 1}), ColorProfile({2, 2}), ColorProfile({1, 3}),
          ColorProfile({1, 1, 2}), ColorProfile({3, 3})}) {
        StateSpace sp(p);
        const IotaResult r = brute_force_iota(sp);
        const auto [lo, hi] = bound_iota(p);
        CHECK(r.iota >= lo - 1e-9);
        CHECK(r.iota <= candidate_bound(p).sharp + 1e-9);
        CHECK(candidate_bound(p).loose == doctest::Approx(hi));
        CHECK(r.argmin.popcount >= 1);
        CHECK(r.argmin.popcount < sp.size());
    }
}

TEST_CASE("sweep cap is enforced") {
    StateSpace sp(ColorProfile({2, 3}));  // 10 states, fine
    CHECK_NOTHROW(brute_force_iota(sp));
    StateSpace big(ColorProfile({3, 4}));  // 35 states
    CHECK_THROWS_AS(brute_force_iota(big), CapError);
}

TEST_CASE("sharpness curve shows the log 2 prefactor gap") {
    const auto rows = sharpness_curve(12);
    REQUIRE(!rows.empty());
    for (const SharpnessRow& r : rows) {
        // n / candidate <= 4 log(n/kappa_min): candidate meets co:exp's range
        CHECK(r.n_over_candidate <= r.four_log + 1e-9);
        CHECK(r.n_over_candidate > 0.0);
    }
}
