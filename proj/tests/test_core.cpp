#include <doctest.h>

#include "bihole/bipartite_graph.hpp"
#include "bihole/certificate.hpp"
#include "bihole/graph_io.hpp"
#include "bihole/rng.hpp"
#include "test_util.hpp"

using namespace bihole;
using bihole_tests::random_bounded_degree_graph;

namespace {

const std::initializer_list<std::pair<int, int>> kC8Edges = {
    {0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 0}};

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

TEST_CASE("graph construction from edge lists") {
    const BipartiteGraph empty = BipartiteGraph::from_edges(2, 2, {});
    CHECK(empty.edge_count() == 0);
    CHECK(empty.size_a() == 2);

    const BipartiteGraph c8 = BipartiteGraph::from_edges(4, 4, kC8Edges);
    for (int a = 0; a < 4; ++a) CHECK(c8.degree_a(a) == 2);
    CHECK(c8.edge_count() == 8);

    const BipartiteGraph k33 = complete(3);
    CHECK(k33.edge_count() == 9);

    SUBCASE("duplicates collapse silently") {
        const BipartiteGraph g = BipartiteGraph::from_edges(2, 2, {{0, 0}, {0, 0}, {1, 1}});
        CHECK(g.edge_count() == 2);
    }
    SUBCASE("out-of-range edge is rejected naming the pair") {
        CHECK_THROWS_WITH_AS(BipartiteGraph::from_edges(2, 2, {{0, 3}}),
                             doctest::Contains("(0,3)"), std::out_of_range);
    }
}

TEST_CASE("bipartite complement") {
    CHECK(complete(3).complement() == BipartiteGraph(3, 3));

    const BipartiteGraph pm3c = perfect_matching(3).complement();
    CHECK(pm3c.edge_count() == 6);
    for (int a = 0; a < 3; ++a) CHECK(pm3c.degree_a(a) == 2);

    RandomEngine rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng.uniform_below(12));
        const BipartiteGraph g = random_bounded_degree_graph(n, n, rng);
        CHECK(g.complement().complement() == g);
        // degree conservation against the complement
        CHECK(g.edge_count() + g.complement().edge_count() ==
              static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    }
}

TEST_CASE("verify_bihole") {
    const BipartiteGraph empty(3, 3);
    CHECK(verify_bihole(empty, {{0, 1, 2}, {0, 1, 2}}));
    CHECK_FALSE(verify_bihole(complete(3), {{0}, {0}}));

    const BipartiteGraph c8 = BipartiteGraph::from_edges(4, 4, kC8Edges);
    CHECK(verify_bihole(c8, {{0}, {2}}));  // a_0's neighbors are b_0, b_1
    CHECK_FALSE(verify_bihole(c8, {{0}, {1}}));

    CHECK_FALSE(verify_bihole(empty, {{0, 1}, {0}}));  // unbalanced
    CHECK_FALSE(verify_bihole(empty, {{0, 0}, {1, 2}}));  // duplicate index
    CHECK_THROWS_AS(verify_bihole(empty, {{7}, {0}}), std::out_of_range);
}

TEST_CASE("verify_bihole matches biclique in the complement") {
    RandomEngine rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform_below(8));
        const BipartiteGraph g = random_bounded_degree_graph(n, n, rng);
        const BipartiteGraph gc = g.complement();
        const int k = 1 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
        BiHoleCertificate cert{rng.sample_sorted(n, k), rng.sample_sorted(n, k)};

        bool complete_in_complement = true;
        for (int a : cert.x_set)
            for (int b : cert.y_set)
                if (!gc.has_edge(a, b)) complete_in_complement = false;
        CHECK(verify_bihole(g, cert) == complete_in_complement);
    }
}

TEST_CASE("edge-list format") {
    const BipartiteGraph single = read_graph_text("p bihole 2 2 1\ne 1 1\n");
    CHECK(single.size_a() == 2);
    CHECK(single.edge_count() == 1);
    CHECK(single.has_edge(0, 0));

    SUBCASE("round trip is the identity") {
        const BipartiteGraph k33 = complete(3);
        CHECK(read_graph_text(write_graph_text(k33)) == k33);

        RandomEngine rng(5);
        for (int trial = 0; trial < 50; ++trial) {
            const int n = 1 + static_cast<int>(rng.uniform_below(15));
            const BipartiteGraph g = random_bounded_degree_graph(n, n, rng);
            CHECK(read_graph_text(write_graph_text(g)) == g);
        }
    }
    SUBCASE("comments are ignored") {
        const BipartiteGraph g = read_graph_text("c hello\np bihole 2 2 1\nc mid\ne 2 2\n");
        CHECK(g.has_edge(1, 1));
    }
    SUBCASE("parse errors carry line numbers") {
        try {
            read_graph_text("p bihole 2 2 1\ne 3 1\n");
            FAIL("expected ParseError");
        } catch (const ParseError& err) {
            CHECK(err.line() == 2);
        }
        CHECK_THROWS_AS(read_graph_text("e 1 1\n"), ParseError);
        CHECK_THROWS_AS(read_graph_text("p bihole 2 2 5\ne 1 1\n"), ParseError);
        CHECK_THROWS_AS(read_graph_text("p bihole 2 2 1\nq 1 1\n"), ParseError);
    }
}

TEST_CASE("certificate JSON round trip") {
    const BiHoleCertificate cert{{0, 2, 5}, {1, 3, 4}};
    CHECK(certificate_to_json(cert) == R"({"x":[0,2,5],"y":[1,3,4]})");
    CHECK(certificate_from_json(certificate_to_json(cert)) == cert);
}
