#ifndef BIHOLE_GENERATORS_HPP
#define BIHOLE_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "bihole/bipartite_graph.hpp"
#include "bihole/rng.hpp"

namespace bihole {

/// C_{2n} with its natural bipartition: a_i adjacent to b_i and b_{i+1 mod n}.
/// All degrees are exactly 2. Requires n >= 2.
BipartiteGraph even_cycle(int n);

/// G(n_a, n_b, p): every pair an edge independently with probability p.
BipartiteGraph random_binomial_bipartite(int n_a, int n_b, double p, RandomEngine& rng);

/// Induced subgraph on target_n uniformly chosen A-vertices of degree at
/// most delta_cap and the first target_n B-vertices. nullopt when fewer
/// than target_n A-vertices qualify (caller regenerates).
std::optional<BipartiteGraph> trim_to_low_degree(const BipartiteGraph& g, int delta_cap,
                                                 int target_n, RandomEngine& rng);

/// Half-edge sets and the perfect matching between them, before projection.
struct PairingState {
    int n = 0;
    int delta = 0;
    /// matching[k] = index of the Y half-edge matched to X half-edge k;
    /// half-edge k belongs to vertex k / delta.
    std::vector<int> matching;

    /// Projected multigraph edge list (with multiplicities).
    std::vector<std::pair<int, int>> projected_edges() const;
    bool projection_simple() const;
};

PairingState draw_pairing(int n, int delta, RandomEngine& rng);

struct PairingResult {
    std::optional<BipartiteGraph> graph;
    int rejections = 0;
};

/// Uniform random simple delta-regular n x n bipartite graph: uniform
/// pairings are drawn and projections with parallel edges rejected. Each
/// simple graph arises from exactly (delta!)^{2n} pairings, so conditioning
/// on simplicity preserves uniformity. The simplicity probability decays in
/// delta roughly like exp(-(delta-1)^2/2), so rejection is only viable for
/// small delta; see pairing_model_switched for larger degrees.
PairingResult pairing_model(int n, int delta, RandomEngine& rng, int max_rejects = 10000);

struct RegularPairingResult {
    BipartiteGraph graph;
    int switches = 0;
};

/// One pairing draw followed by degree-preserving edge switches that remove
/// parallel edges. Always yields a simple delta-regular graph; the
/// distribution is only approximately uniform, which is enough wherever any
/// bounded-degree instance serves.
RegularPairingResult pairing_model_switched(int n, int delta, RandomEngine& rng);

/// Exact number of K_{t,t} subgraphs (unordered side-respecting pairs of
/// t-sets). Counts fit 64 bits at any size this library targets.
std::uint64_t count_ktt(const BipartiteGraph& g, int t);

/// Number of K_{t,t} copies whose A-side contains vertex v.
std::uint64_t per_vertex_ktt(const BipartiteGraph& g, int t, int v);

struct KttRepairReport {
    std::uint64_t copies_before = 0;
    std::uint64_t edges_removed = 0;
    int min_degree_after = 0;
    std::vector<std::uint64_t> per_vertex_copy_counts;  // indexed by A' position
    std::vector<int> degrees_before;                    // A' degrees pre-repair
    int resamples = 0;
    double p = 0.0;
};

struct KttFreeResult {
    std::optional<BipartiteGraph> graph;
    KttRepairReport report;
};

/// The Zarankiewicz-style construction: sample G(2n, n, p) with
/// p = c*(2n)^{-2/(t+1)}, resample until the copy count and per-vertex copy
/// counts are controlled, keep the n best A-vertices, then delete one edge
/// per surviving K_{t,t} copy. The output is K_{t,t}-free; the report
/// carries the degree bookkeeping the argument tracks.
KttFreeResult ktt_free_construction(int n, int t, double c, RandomEngine& rng,
                                    int max_resamples = 1000);

}  // namespace bihole

#endif
