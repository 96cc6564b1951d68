#include <doctest.h>

#include <algorithm>

#include "bihole/exact.hpp"
#include "bihole/generators.hpp"
#include "bihole/rng.hpp"
#include "test_util.hpp"

using namespace bihole;
using bihole_tests::max_balanced_biclique_enum;
using bihole_tests::random_bounded_degree_graph;

namespace {

BipartiteGraph complete(int n) {
    BipartiteGraph g(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.add_edge(a, b);
    return g;
}

BipartiteGraph perfect_matching(int n) {
    BipartiteGraph g(n, n);
    for (int i = 0; i < n; ++i) g.add_edge(i, i);
    return g;
}

}  // namespace

TEST_CASE("max_bihole on canonical instances") {
    CHECK(max_bihole(BipartiteGraph(5, 5)).k == 5);
    CHECK(max_bihole(complete(3)).k == 0);
    CHECK(max_bihole(perfect_matching(3)).k == brute_force_bihole(perfect_matching(3)).k);
    CHECK(max_bihole(perfect_matching(3)).k == 1);
    // C_8: f(4,2) = ceil(4/2) - 1 = 1, confirmed by brute force
    const BipartiteGraph c8 = even_cycle(4);
    CHECK(brute_force_bihole(c8).k == 1);
    CHECK(max_bihole(c8).k == 1);
}

TEST_CASE("has_bihole") {
    const BipartiteGraph c8 = even_cycle(4);
    const auto zero = has_bihole(c8, 0);
    REQUIRE(zero.has_value());
    CHECK(zero->size() == 0);
    CHECK_FALSE(has_bihole(c8, 2).has_value());

    const BipartiteGraph c10 = even_cycle(5);
    const auto two = has_bihole(c10, 2);
    REQUIRE(two.has_value());
    CHECK(verify_bihole(c10, *two));
    CHECK(two->size() == 2);

    CHECK_THROWS_AS(has_bihole(c8, 5), std::invalid_argument);
}

TEST_CASE("brute force oracle") {
    CHECK(brute_force_bihole(BipartiteGraph(5, 5)).k == 5);
    CHECK(brute_force_bihole(perfect_matching(4)).k == 2);
    CHECK_THROWS_AS(brute_force_bihole(BipartiteGraph(15, 15)), std::invalid_argument);

    RandomEngine rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const BipartiteGraph g = random_binomial_bipartite(8, 8, 0.4, rng);
        const SolveResult a = max_bihole(g);
        const SolveResult b = brute_force_bihole(g);
        CHECK(a.k == b.k);
        CHECK(verify_bihole(g, a.certificate));
        CHECK(verify_bihole(g, b.certificate));
    }
}

TEST_CASE("oracle agreement across densities") {
    RandomEngine rng(32500);
    int checked = 0;
    for (double p : {0.1, 0.3, 0.5, 0.8}) {
        for (int trial = 0; trial < 130; ++trial) {
            const int n = 2 + static_cast<int>(rng.uniform_below(9));
            const BipartiteGraph g = random_binomial_bipartite(n, n, p, rng);
            REQUIRE(max_bihole(g).k == brute_force_bihole(g).k);
            ++checked;
        }
    }
    CHECK(checked >= 500);
}

TEST_CASE("complement duality against independent biclique enumeration") {
    RandomEngine rng(88);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform_below(7));
        const BipartiteGraph g = random_bounded_degree_graph(n, n, rng);
        CHECK(max_bihole(g).k == max_balanced_biclique_enum(g.complement()));
    }
}

TEST_CASE("adding an edge never increases the maximum bi-hole") {
    RandomEngine rng(99);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform_below(7));
        BipartiteGraph g = random_binomial_bipartite(n, n, 0.3, rng);
        const int before = max_bihole(g).k;
        const int a = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
        const int b = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
        g.add_edge(a, b);
        CHECK(max_bihole(g).k <= before);
    }
}

TEST_CASE("certificates are lexicographically minimal among maximum bi-holes") {
    RandomEngine rng(123);
    for (int trial = 0; trial < 30; ++trial) {
        const BipartiteGraph g = random_binomial_bipartite(6, 6, 0.4, rng);
        const SolveResult result = max_bihole(g);
        REQUIRE(verify_bihole(g, result.certificate));

        // Enumerate every x_set of the optimal size whose common
        // non-neighborhood is large enough, and take the smallest.
        std::vector<int> best;
        for (std::uint64_t mask = 0; mask < (1u << 6); ++mask) {
            std::vector<int> xs;
            Bitset cnn(6);
            cnn.set();
            for (int a = 0; a < 6; ++a)
                if (mask >> a & 1) {
                    xs.push_back(a);
                    cnn -= g.row(a);
                }
            if (static_cast<int>(xs.size()) != result.k) continue;
            if (static_cast<int>(cnn.count()) < result.k) continue;
            if (best.empty() || std::lexicographical_compare(xs.begin(), xs.end(),
                                                             best.begin(), best.end()))
                best = xs;
        }
        if (result.k > 0) CHECK(result.certificate.x_set == best);
    }
}

TEST_CASE("node budget yields a flagged lower bound") {
    RandomEngine rng(7);
    const BipartiteGraph g = random_binomial_bipartite(12, 12, 0.3, rng);
    const SolveResult full = max_bihole(g);
    const SolveResult cut = max_bihole(g, 5);
    CHECK(full.optimal);
    CHECK_FALSE(cut.optimal);
    CHECK(cut.k <= full.k);
    CHECK(verify_bihole(g, cut.certificate));
    CHECK(cut.certificate.size() == cut.k);
}

TEST_CASE("solver is deterministic") {
    RandomEngine rng(55);
    const BipartiteGraph g = random_binomial_bipartite(9, 9, 0.5, rng);
    const SolveResult a = max_bihole(g);
    const SolveResult b = max_bihole(g);
    CHECK(a.k == b.k);
    CHECK(a.certificate == b.certificate);
    CHECK(a.nodes_explored == b.nodes_explored);
}
