#ifndef BIHOLE_EXACT_HPP
#define BIHOLE_EXACT_HPP

#include <cstdint>
#include <optional>

#include "bihole/bipartite_graph.hpp"
#include "bihole/certificate.hpp"

namespace bihole {

struct SolveResult {
    int k = 0;
    BiHoleCertificate certificate;
    std::uint64_t nodes_explored = 0;
    /// False only when the node budget ran out; k is then a lower bound.
    bool optimal = true;
};

/// Exact maximum bi-hole via branch and bound over inclusion/exclusion of
/// A-vertices, keeping the bitset of B-vertices compatible with the chosen
/// set. Among maximum certificates the lexicographically smallest x_set is
/// returned, with y_set the first compatible B-vertices.
SolveResult max_bihole(const BipartiteGraph& g,
                       std::optional<std::uint64_t> node_budget = std::nullopt);

/// Certificate of size exactly k if one exists (lexicographically smallest
/// x_set), otherwise nullopt. k = 0 always succeeds with empty sets.
std::optional<BiHoleCertificate> has_bihole(const BipartiteGraph& g, int k);

/// Reference oracle: exhaustive enumeration over all subsets of the smaller
/// side. Refuses parts larger than 14 on the enumerated side.
SolveResult brute_force_bihole(const BipartiteGraph& g);

}  // namespace bihole

#endif
