#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>
#include <random>

#include "mslab/errors.hpp"
#include "mslab/functionals.hpp"
#include "mslab/sparse_operator.hpp"

using namespace mslab;

namespace {

Observable random_obs(const StateSpace& sp, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.1, 1.1);
    std::vector<double> v(sp.size());
    for (double& x : v) x = uni(rng);
    return Observable(sp, std::move(v));
}

}  // namespace

TEST_CASE("moments on hand-computed values") {
    StateSpace sp(ColorProfile({1, 1}));
    const Observable f(sp, {3.0, 1.0});
    CHECK(expectation(f) == doctest::Approx(2.0));
    CHECK(variance(f) == doctest::Approx(1.0));
    const Observable g(sp, {2.0, 0.0});
    CHECK(entropy(g) == doctest::Approx(std::log(2.0)));  // 0 log 0 = 0
    CHECK(entropy(Observable::constant(sp, 5.0)) == doctest::Approx(0.0));
    const Observable neg(sp, {1.0, -0.5});
    CHECK_THROWS_AS(entropy(neg), std::domain_error);
}

TEST_CASE("parallel kernels agree with serial references") {
    StateSpace sp(ColorProfile({2, 2, 1}));
    std::mt19937_64 rng(11);
    const WeightedGraph mf = WeightedGraph::mean_field(5);
    for (int trial = 0; trial < 10; ++trial) {
        const Observable f = random_obs(sp, rng);
        const Observable g = random_obs(sp, rng);
        CHECK(expectation(f) == doctest::Approx(ref::expectation(f)).epsilon(1e-13));
        CHECK(entropy(f) == doctest::Approx(ref::entropy(f)).epsilon(1e-13));
        CHECK(dirichlet_form(f, g, mf) ==
              doctest::Approx(ref::dirichlet_form(f, g, mf)).epsilon(1e-13));
    }
}

TEST_CASE("Dirichlet form equals the generator pairing") {
    std::mt19937_64 rng(23);
    for (const char* text : {"2,2,1", "1,1,1,1", "3,2"}) {
        StateSpace sp(ColorProfile::parse(text));
        for (const WeightedGraph& g :
             {WeightedGraph::mean_field(sp.n()), WeightedGraph::cycle(sp.n()),
              WeightedGraph::complete_srw(sp.n())}) {
            const SparseOperator op = build_generator(sp, g);
            const Observable f1 = random_obs(sp, rng);
            const Observable f2 = random_obs(sp, rng);
            const double direct = dirichlet_form(f1, f2, g);
            const double pairing = op.dirichlet(f1.values, f2.values);
            CHECK(direct == doctest::Approx(pairing).epsilon(1e-12));
        }
    }
}

TEST_CASE("Dirichlet form vanishes on constants and is symmetric") {
    StateSpace sp(ColorProfile({2, 3}));
    std::mt19937_64 rng(5);
    const WeightedGraph mf = WeightedGraph::mean_field(5);
    const Observable c = Observable::constant(sp, 3.7);
    const Observable f = random_obs(sp, rng);
    CHECK(dirichlet_form(c, c, mf) == doctest::Approx(0.0));
    CHECK(dirichlet_form(f, c, mf) == doctest::Approx(0.0));
    const Observable g = random_obs(sp, rng);
    CHECK(dirichlet_form(f, g, mf) == doctest::Approx(dirichlet_form(g, f, mf)));
}

TEST_CASE("conditional decomposition adds up to the entropy") {
    std::mt19937_64 rng(31);
    for (const char* text : {"2,1", "2,2", "1,2,2", "1,1,1,1"}) {
        StateSpace sp(ColorProfile::parse(text));
        const int L = sp.num_colors();
        for (int trial = 0; trial < 20; ++trial) {
            const Observable f = random_obs(sp, rng);
            const double ent = entropy(f);
            for (int ell = 1; ell <= L; ++ell) {
                const Decomposition d = conditional_decomposition(f, ell);
                CHECK(d.local + d.projected == doctest::Approx(ent).epsilon(1e-12));
                CHECK(d.local >= -1e-13);
                CHECK(d.projected >= -1e-13);
                // projected part is the entropy of the conditional expectation
                const Observable cf = conditional_expectation(f, ell);
                CHECK(entropy(cf) == doctest::Approx(d.projected).epsilon(1e-11));
                CHECK(expectation(cf) == doctest::Approx(expectation(f)));
            }
            const EntropySplit s = weighted_entropy_split(f);
            CHECK(s.sigma1 + s.sigma2 ==
                  doctest::Approx((L - 1) * ent).epsilon(1e-12));
        }
    }
}

TEST_CASE("conditional expectation is constant on fibers") {
    StateSpace sp(ColorProfile({2, 2, 1}));
    std::mt19937_64 rng(17);
    const Observable f = random_obs(sp, rng);
    for (int ell = 1; ell <= 3; ++ell) {
        const Observable cf = conditional_expectation(f, ell);
        const std::vector<uint32_t> grp = color_group_index(sp, ell);
        std::map<uint32_t, double> rep;
        for (uint64_t i = 0; i < sp.size(); ++i) {
            auto [it, fresh] = rep.emplace(grp[i], cf[i]);
            if (!fresh) CHECK(cf[i] == doctest::Approx(it->second));
        }
    }
}

TEST_CASE("color groups partition the space evenly") {
    StateSpace sp(ColorProfile({2, 2, 1}));
    for (int ell = 1; ell <= 3; ++ell) {
        const std::vector<uint32_t> grp = color_group_index(sp, ell);
        std::map<uint32_t, uint64_t> sizes;
        for (uint32_t g : grp) ++sizes[g];
        // number of fibers = C(5, kappa_ell)
        const uint64_t expected_groups = (ell == 3) ? 5 : 10;
        CHECK(sizes.size() == expected_groups);
        const uint64_t fiber = sp.size() / expected_groups;
        for (const auto& [g, sz] : sizes) CHECK(sz == fiber);
    }
}
