#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "mslab/errors.hpp"
#include "mslab/graph.hpp"
#include "mslab/state_space.hpp"

using namespace mslab;

TEST_CASE("profile parsing and accessors") {
    const ColorProfile p = ColorProfile::parse("2,3,1");
    CHECK(p.counts == std::vector<int>{2, 3, 1});
    CHECK(p.n() == 6);
    CHECK(p.l() == 3);
    CHECK(p.kappa_min() == 1);
    CHECK(p.canonical().counts == std::vector<int>{3, 2, 1});
    CHECK(p.removed(2).counts == std::vector<int>{2, 1});
    CHECK(p.to_string() == "2,3,1");

    CHECK_THROWS_AS(ColorProfile::parse("0,2"), ConfigError);
    CHECK_THROWS_AS(ColorProfile::parse("2,-1"), ConfigError);
    CHECK_THROWS_AS(ColorProfile::parse(""), ConfigError);
    CHECK_THROWS_AS(ColorProfile::parse("2,,1"), ConfigError);
    CHECK_THROWS_AS(ColorProfile::parse("a,b"), ConfigError);
}

TEST_CASE("multinomial sizes") {
    CHECK(multinomial_size(ColorProfile({1, 1})) == 2);
    CHECK(multinomial_size(ColorProfile({2, 2})) == 6);
    CHECK(multinomial_size(ColorProfile({2, 3, 1})) == 60);
    CHECK(multinomial_size(ColorProfile(std::vector<int>(10, 1))) == 3628800);
    // 61 ones: 61! overflows 64 bits
    CHECK_THROWS_AS(multinomial_size(ColorProfile(std::vector<int>(61, 1))),
                    OverflowError);
}

TEST_CASE("rank/unrank bijection matches brute-force lexicographic order") {
    for (const char* text : {"1,1", "2,2", "2,3,1", "1,1,1,1", "3,2"}) {
        const ColorProfile p = ColorProfile::parse(text);
        StateSpace sp(p);
        // oracle: enumerate the multiset permutations with next_permutation
        Word w;
        for (int c = 1; c <= p.l(); ++c)
            w.insert(w.end(), p.counts[c - 1], static_cast<uint8_t>(c));
        uint64_t idx = 0;
        do {
            CHECK(sp.rank(w) == idx);
            CHECK(sp.unrank(idx) == w);
            ++idx;
        } while (std::next_permutation(w.begin(), w.end()));
        CHECK(idx == sp.size());
    }
}

TEST_CASE("rank rejects malformed words") {
    StateSpace sp(ColorProfile({2, 1}));
    CHECK_THROWS_AS(sp.rank(Word{1, 1, 1}), MalformedStateError);
    CHECK_THROWS_AS(sp.rank(Word{1, 2}), MalformedStateError);
    CHECK_THROWS_AS(sp.rank(Word{1, 2, 3}), MalformedStateError);
    CHECK_THROWS_AS(sp.unrank(sp.size()), ConfigError);
}

TEST_CASE("state cap") {
    CHECK_THROWS_AS(StateSpace(ColorProfile({10, 10}), 100), CapError);
    CHECK_NOTHROW(StateSpace(ColorProfile({10, 10}), 200000));
}

TEST_CASE("transposition image and color regions") {
    const Word w{1, 2, 2, 3};
    CHECK(transposition_image(w, 1, 4) == Word{3, 2, 2, 1});
    CHECK(transposition_image(w, 2, 3) == w);
    CHECK(color_region(w, 2, 3) == std::vector<int>{2, 3});
    CHECK(color_region(w, 3, 3) == std::vector<int>{4});
}

TEST_CASE("coarsening map sends consecutive blocks to their color") {
    const ColorProfile p({2, 1, 3});
    CHECK(coarsening_map(p) == std::vector<int>{1, 1, 2, 3, 3, 3});
    // a permutation word over [6] coarsened to Omega_(2,1,3)
    const Word perm{3, 1, 6, 2, 5, 4};
    CHECK(coarsen_word(p, perm) == Word{2, 1, 3, 1, 3, 3});
}

TEST_CASE("partitions and compositions") {
    CHECK(all_partitions(4).size() == 4);      // 3+1, 2+2, 2+1+1, 1+1+1+1
    CHECK(all_compositions(4).size() == 7);    // 2^3 - 1 with >= 2 parts
    for (const ColorProfile& p : all_partitions(6)) {
        CHECK(p.n() == 6);
        CHECK(p.l() >= 2);
        CHECK(std::is_sorted(p.counts.rbegin(), p.counts.rend()));
    }
}

TEST_CASE("built-in graphs") {
    const WeightedGraph mf = WeightedGraph::mean_field(4);
    CHECK(mf.at(0, 1) == doctest::Approx(0.25));
    CHECK(mf.at(2, 2) == 0.0);
    CHECK(mf.connected());

    const WeightedGraph cy = WeightedGraph::cycle(5);
    CHECK(cy.at(0, 1) == doctest::Approx(0.5));
    CHECK(cy.at(0, 4) == doctest::Approx(0.5));
    CHECK(cy.at(0, 2) == 0.0);

    const WeightedGraph hc = WeightedGraph::hypercube(3);
    CHECK(hc.n == 8);
    CHECK(hc.at(0, 1) == doctest::Approx(1.0 / 3));
    CHECK(hc.at(0, 3) == 0.0);

    CHECK(WeightedGraph::by_name("complete_srw", 3).at(0, 2) ==
          doctest::Approx(0.5));
    CHECK_THROWS_AS(WeightedGraph::by_name("hypercube", 6), ConfigError);
    CHECK_THROWS_AS(WeightedGraph::by_name("nope", 4), ConfigError);
    for (const WeightedGraph& g : {mf, cy, hc}) CHECK_NOTHROW(g.validate());
}

TEST_CASE("edge-list file round trip") {
    const std::string path = "test_graph_edges.txt";
    {
        std::ofstream out(path);
        out << "n 3\n1 2 0.5\n2 3 1.5\n";
    }
    const WeightedGraph g = WeightedGraph::from_edge_list(path);
    CHECK(g.n == 3);
    CHECK(g.at(0, 1) == doctest::Approx(0.5));
    CHECK(g.at(1, 0) == doctest::Approx(0.5));  // symmetric closure
    CHECK(g.at(1, 2) == doctest::Approx(1.5));
    CHECK(g.at(0, 2) == 0.0);
    CHECK(g.connected());
    std::remove(path.c_str());
    CHECK_THROWS_AS(WeightedGraph::from_edge_list("does_not_exist.txt"),
                    ConfigError);
}
