#ifndef BIHOLE_CONSTRUCTIVE_HPP
#define BIHOLE_CONSTRUCTIVE_HPP

#include <optional>
#include <vector>

#include "bihole/bipartite_graph.hpp"
#include "bihole/certificate.hpp"
#include "bihole/rng.hpp"

namespace bihole {

/// Auxiliary multigraph on the B-side of a host graph whose A-degrees are
/// all exactly 2: one edge {b1, b2} per A-vertex with neighborhood {b1, b2}.
/// Parallel edges are kept (two A-vertices may share both neighbors); the
/// edge/A bijection is what the size argument rests on.
struct AuxiliaryMultigraph {
    struct Edge {
        int b1, b2;  // b1 < b2
        int a;       // originating A-vertex
    };
    struct Component {
        std::vector<int> vertices;
        std::vector<int> edge_ids;
        bool dense = false;  // e(C) >= |C|
    };

    int n = 0;  // vertex count = |B|
    std::vector<Edge> edges;
    std::vector<Component> components;

    /// Host must have every A-degree exactly 2 and square parts.
    static AuxiliaryMultigraph build(const BipartiteGraph& host);
};

/// E'/V' selection of the f(n,2) argument: `edge_ids` is a set of `target`
/// edges consisting of whole components (dense ones first, larger first)
/// plus a connected piece of the boundary component; `vertices` are `target`
/// B-vertices disjoint from the span; `span_vertices` is the span itself.
struct EdgeVertexSelection {
    std::vector<int> edge_ids;
    std::vector<int> vertices;
    std::vector<int> span_vertices;
};
EdgeVertexSelection select_bihole_sets(const AuxiliaryMultigraph& aux, int target);

/// Copy of g with every A-degree padded up to exactly `degree` by dummy
/// edges to the smallest free B-vertices. A bi-hole of the padded graph is
/// a bi-hole of g, since edges were only added.
BipartiteGraph pad_a_degrees(const BipartiteGraph& g, int degree);

/// Certificate of size exactly ceil(n/2) - 1 on a square graph whose
/// A-degrees are at most 2.
BiHoleCertificate bihole_maxdeg2(const BipartiteGraph& g);

/// Certificate of size >= floor((n-2)/delta) on a square graph with
/// A-degrees at most delta >= 2, by neighborhood-splitting recursion down
/// to the degree-2 base case.
BiHoleCertificate bihole_general_delta(const BipartiteGraph& g, int delta);

/// One level of the xi-recursion chain, recorded for auditability.
struct ReductionLevel {
    int delta = 0;                // level degree bound
    std::vector<int> s_set;       // chosen S, host-graph B indices
    int neighborhood_size = 0;    // |N(S)| at the successful draw
    int surviving_size = 0;       // both surviving part sizes
    int retries_used = 0;
};
struct ReductionTrace {
    std::vector<ReductionLevel> levels;  // deltas decrease by exactly 1
    int terminal_delta = 2;
    int terminal_size = 0;
};

struct XiChainResult {
    std::optional<BiHoleCertificate> certificate;
    ReductionTrace trace;
};

/// Randomized recursion f(n,delta) >= f(floor(xi*n), delta-1): repeatedly
/// draw S in B with |B \ S| = floor(xi*n) until |N(S)| >= floor(xi*n), then
/// recurse on (N(S), B \ S); degree-2 base via bihole_maxdeg2. A level that
/// exhausts max_retries yields a failure carrying the trace so far.
XiChainResult bihole_xi_chain(const BipartiteGraph& g, int delta, RandomEngine& rng,
                              int max_retries = 200);

/// The size the xi-chain guarantees on success, floors included.
long long xi_chain_guarantee(long long n, int delta);

struct RandomSubsetResult {
    std::optional<BiHoleCertificate> certificate;
    int retries_used = 0;
    std::vector<int> t_sizes;  // |T| observed at each draw
};

/// The large-Delta lower-bound procedure: with x = log(delta)/(2*delta),
/// draw S in B of size floor((1-2x)n) - 2; the vertices with at least
/// delta-2 neighbors in S send at most 2 edges to B \ S, so when enough of
/// them exist the degree-2 case applies and yields size >= floor(x*n).
/// Requires n >= 5*delta*log(delta).
RandomSubsetResult bihole_random_subset(const BipartiteGraph& g, int delta,
                                        RandomEngine& rng, int max_retries = 200);

struct DenseRegimeResult {
    BiHoleCertificate certificate;
    int requested_t = 0;
    int achieved_t = 0;
};

/// Dense regime (A-degrees <= (1-eps)n): finds K_{t,t} in the bipartite
/// complement by the Kovari-Sos-Turan double-counting argument, made
/// constructive through conditional expectations: B-vertices are picked one
/// by one, each maximizing the expected number of A-vertices whose
/// complement neighborhood contains the final t-set. No sharp constant is
/// asserted; t defaults to floor(log n / (2 log(1/eps))) and the achieved
/// value is reported.
DenseRegimeResult bihole_dense_regime(const BipartiteGraph& g, double eps,
                                      std::optional<int> t = std::nullopt);

}  // namespace bihole

#endif
