#include <doctest.h>

#include <cmath>
#include <set>

#include "bihole/bounds.hpp"
#include "bihole/constructive.hpp"
#include "bihole/exact.hpp"
#include "bihole/generators.hpp"
#include "test_util.hpp"

using namespace bihole;
using bihole_tests::random_bounded_degree_graph;

namespace {

// Random square graph with every A-degree at most `cap`.
BipartiteGraph random_capped_graph(int n, int cap, RandomEngine& rng) {
    BipartiteGraph g(n, n);
    for (int a = 0; a < n; ++a) {
        const int d = static_cast<int>(rng.uniform_below(
            static_cast<std::uint64_t>(std::min(cap, n) + 1)));
        for (int b : rng.sample_sorted(n, d)) g.add_edge(a, b);
    }
    return g;
}

}  // namespace

TEST_CASE("degree padding preserves bi-holes of the padded graph") {
    RandomEngine rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 3 + static_cast<int>(rng.uniform_below(10));
        const BipartiteGraph g = random_capped_graph(n, 2, rng);
        const BipartiteGraph padded = pad_a_degrees(g, 2);
        for (int a = 0; a < n; ++a) {
            CHECK(padded.degree_a(a) == 2);
            CHECK((g.row(a) & ~padded.row(a)).none());  // edges only grew
        }
        // any bi-hole of the padded graph is one of g
        const BiHoleCertificate cert = bihole_maxdeg2(padded);
        CHECK(verify_bihole(padded, cert));
        CHECK(verify_bihole(g, cert));
    }
}

TEST_CASE("auxiliary multigraph structure") {
    RandomEngine rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 3 + static_cast<int>(rng.uniform_below(12));
        const BipartiteGraph padded = pad_a_degrees(random_capped_graph(n, 2, rng), 2);
        const AuxiliaryMultigraph aux = AuxiliaryMultigraph::build(padded);
        CHECK(static_cast<int>(aux.edges.size()) == n);  // bijection with A

        int vertex_total = 0, edge_total = 0;
        for (const auto& comp : aux.components) {
            vertex_total += static_cast<int>(comp.vertices.size());
            edge_total += static_cast<int>(comp.edge_ids.size());
            CHECK(comp.dense == (comp.edge_ids.size() >= comp.vertices.size()));
        }
        CHECK(vertex_total == n);
        CHECK(edge_total == n);

        // the proof's counting bound: the selected span has at most
        // floor(n/2)+1 vertices
        const int target = (n + 1) / 2 - 1;
        const EdgeVertexSelection sel = select_bihole_sets(aux, target);
        CHECK(static_cast<int>(sel.edge_ids.size()) == target);
        CHECK(static_cast<int>(sel.span_vertices.size()) <= n / 2 + 1);
        CHECK(static_cast<int>(sel.vertices.size()) == target);
        for (int v : sel.vertices)
            CHECK(std::find(sel.span_vertices.begin(), sel.span_vertices.end(), v) ==
                  sel.span_vertices.end());
    }
}

TEST_CASE("bihole_maxdeg2 canonical cases") {
    CHECK(bihole_maxdeg2(even_cycle(4)).size() == 1);
    CHECK(verify_bihole(even_cycle(4), bihole_maxdeg2(even_cycle(4))));

    const BipartiteGraph empty6(6, 6);
    const BiHoleCertificate cert = bihole_maxdeg2(empty6);
    CHECK(cert.size() >= 2);
    CHECK(verify_bihole(empty6, cert));

    CHECK(bihole_maxdeg2(BipartiteGraph(1, 1)).size() == 0);
    CHECK(bihole_maxdeg2(BipartiteGraph(2, 2)).size() == 0);

    BipartiteGraph deg3(3, 3);
    deg3.add_edge(0, 0);
    deg3.add_edge(0, 1);
    deg3.add_edge(0, 2);
    CHECK_THROWS_AS(bihole_maxdeg2(deg3), std::invalid_argument);
}

TEST_CASE("bihole_maxdeg2 meets the f(n,2) value on random instances") {
    RandomEngine rng(0xBEE);
    for (int trial = 0; trial < 500; ++trial) {
        const BipartiteGraph g = random_capped_graph(9, 2, rng);
        const BiHoleCertificate cert = bihole_maxdeg2(g);
        CHECK(cert.size() == (9 + 1) / 2 - 1);  // exactly ceil(n/2)-1
        CHECK(cert.size() >= 3);
        CHECK(verify_bihole(g, cert));
        CHECK(cert.size() <= max_bihole(g).k);
    }
}

TEST_CASE("bihole_general_delta") {
    SUBCASE("empty graph takes the first branch") {
        for (int n : {5, 9, 14})
            for (int delta : {2, 3, 4}) {
                const BipartiteGraph g(n, n);
                const BiHoleCertificate cert = bihole_general_delta(g, delta);
                CHECK(cert.size() == std::max(0, (n - 2) / delta));
                CHECK(verify_bihole(g, cert));
            }
    }
    SUBCASE("n=11 delta=3 guarantee") {
        RandomEngine rng(3);
        for (int trial = 0; trial < 50; ++trial) {
            const BipartiteGraph g = random_capped_graph(11, 3, rng);
            const BiHoleCertificate cert = bihole_general_delta(g, 3);
            CHECK(cert.size() >= 3);
            CHECK(verify_bihole(g, cert));
        }
    }
    SUBCASE("random n=12 delta=3 suite") {
        RandomEngine rng(4);
        for (int trial = 0; trial < 200; ++trial) {
            const BipartiteGraph g = random_capped_graph(12, 3, rng);
            const BiHoleCertificate cert = bihole_general_delta(g, 3);
            CHECK(cert.size() >= (12 - 2) / 3);
            CHECK(verify_bihole(g, cert));
        }
    }
    SUBCASE("constructive never exceeds the exact optimum") {
        RandomEngine rng(5);
        for (int trial = 0; trial < 60; ++trial) {
            const int n = 5 + static_cast<int>(rng.uniform_below(8));
            const BipartiteGraph g = random_capped_graph(n, 3, rng);
            CHECK(bihole_general_delta(g, 3).size() <= max_bihole(g).k);
        }
    }
    CHECK_THROWS_AS(bihole_general_delta(BipartiteGraph(4, 4), 1), std::invalid_argument);
}

TEST_CASE("bihole_xi_chain") {
    SUBCASE("3-regular instance at n=1000 meets the chain guarantee") {
        RandomEngine rng(2024);
        const BipartiteGraph g = pairing_model_switched(1000, 3, rng).graph;
        const long long guarantee = xi_chain_guarantee(1000, 3);
        CHECK(guarantee >= 334);  // floor chain of 0.34116n with floors
        XiChainResult r = bihole_xi_chain(g, 3, rng);
        REQUIRE(r.certificate.has_value());
        CHECK(r.certificate->size() >= guarantee);
        CHECK(verify_bihole(g, *r.certificate));
    }
    SUBCASE("trace levels decrement to the base case") {
        RandomEngine rng(2025);
        const BipartiteGraph g = pairing_model_switched(120, 5, rng).graph;
        XiChainResult r = bihole_xi_chain(g, 5, rng);
        REQUIRE(r.certificate.has_value());
        REQUIRE(r.trace.levels.size() == 3);  // deltas 5, 4, 3
        for (std::size_t i = 0; i < r.trace.levels.size(); ++i) {
            CHECK(r.trace.levels[i].delta == 5 - static_cast<int>(i));
            CHECK(r.trace.levels[i].neighborhood_size >= r.trace.levels[i].surviving_size);
        }
        CHECK(r.trace.terminal_delta == 2);
        CHECK(r.trace.terminal_size == r.certificate->size());
        CHECK(verify_bihole(g, *r.certificate));
    }
    SUBCASE("empty graph short-circuits to the full bi-hole") {
        RandomEngine rng(1);
        XiChainResult r = bihole_xi_chain(BipartiteGraph(30, 30), 4, rng);
        REQUIRE(r.certificate.has_value());
        CHECK(r.certificate->size() == 30);
    }
    SUBCASE("random bounded-degree instances verify and meet the guarantee") {
        RandomEngine rng(2026);
        for (int trial = 0; trial < 25; ++trial) {
            const int n = 60 + static_cast<int>(rng.uniform_below(60));
            const BipartiteGraph g = random_capped_graph(n, 4, rng);
            XiChainResult r = bihole_xi_chain(g, 4, rng);
            REQUIRE(r.certificate.has_value());
            CHECK(r.certificate->size() >= xi_chain_guarantee(n, 4));
            CHECK(verify_bihole(g, *r.certificate));
        }
    }
}

TEST_CASE("bihole_random_subset") {
    const int delta = 8;
    const int n = 90;  // >= 5 * 8 * log 8 = 83.2

    SUBCASE("regular instances succeed and meet floor(x n)") {
        RandomEngine rng(42);
        int successes = 0;
        for (int trial = 0; trial < 20; ++trial) {
            const BipartiteGraph g = pairing_model_switched(n, delta, rng).graph;
            RandomSubsetResult r = bihole_random_subset(g, delta, rng);
            if (!r.certificate) continue;
            ++successes;
            const long long target = static_cast<long long>(
                std::floor(0.5 * std::log(static_cast<double>(delta)) / delta * n));
            CHECK(r.certificate->size() >= target);
            CHECK(verify_bihole(g, *r.certificate));
            CHECK(static_cast<int>(r.t_sizes.size()) == r.retries_used);
        }
        CHECK(successes >= 18);
    }
    SUBCASE("empty graph returns the full bi-hole") {
        RandomEngine rng(43);
        RandomSubsetResult r = bihole_random_subset(BipartiteGraph(n, n), delta, rng);
        REQUIRE(r.certificate.has_value());
        CHECK(r.certificate->size() == n);
    }
    SUBCASE("the proof regime precondition is enforced") {
        RandomEngine rng(44);
        CHECK_THROWS_AS(bihole_random_subset(BipartiteGraph(20, 20), 8, rng),
                        std::invalid_argument);
    }
}

TEST_CASE("bihole_dense_regime") {
    SUBCASE("perfect matching hosts an easy certificate") {
        BipartiteGraph pm(16, 16);
        for (int i = 0; i < 16; ++i) pm.add_edge(i, i);
        DenseRegimeResult r = bihole_dense_regime(pm, 0.5);
        CHECK(r.achieved_t >= r.requested_t);
        CHECK(verify_bihole(pm, r.certificate));
    }
    SUBCASE("complete graph minus random non-edges, n=256") {
        RandomEngine rng(256);
        BipartiteGraph g(256, 256);
        for (int a = 0; a < 256; ++a)
            for (int b = 0; b < 256; ++b)
                if (!rng.bernoulli(0.5)) g.add_edge(a, b);
        // realized degrees hover around n/2, so eps = 0.4 is a safe slack
        DenseRegimeResult r = bihole_dense_regime(g, 0.4);
        CHECK(r.certificate.size() >= 2);
        CHECK(verify_bihole(g, r.certificate));
    }
    SUBCASE("achieved size never exceeds the exact optimum on small slices") {
        RandomEngine rng(12);
        for (int trial = 0; trial < 30; ++trial) {
            BipartiteGraph g(12, 12);
            for (int a = 0; a < 12; ++a)
                for (int b = 0; b < 12; ++b)
                    if (!rng.bernoulli(0.5)) g.add_edge(a, b);
            if (g.max_degree_a() > (1.0 - 0.3) * 12) continue;
            DenseRegimeResult r = bihole_dense_regime(g, 0.3);
            CHECK(verify_bihole(g, r.certificate));
            CHECK(r.certificate.size() <= max_bihole(g).k);
        }
    }
    SUBCASE("degree precondition is enforced") {
        BipartiteGraph g(4, 4);
        for (int b = 0; b < 4; ++b) g.add_edge(0, b);
        CHECK_THROWS_AS(bihole_dense_regime(g, 0.5), std::invalid_argument);
    }
}
