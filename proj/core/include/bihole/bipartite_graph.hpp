#ifndef BIHOLE_BIPARTITE_GRAPH_HPP
#define BIHOLE_BIPARTITE_GRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace bihole {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

struct DegreeProfile {
    std::vector<int> degrees;
    int max_degree = 0;
    int min_degree = 0;
};

/// An n_a x n_b bipartite graph with one-sided adjacency: each A-vertex owns
/// a bitset over B. Graphs are treated as immutable once built; algorithms
/// take const references and produce new graphs instead of mutating inputs.
class BipartiteGraph {
public:
    BipartiteGraph() = default;

    BipartiteGraph(int n_a, int n_b) : n_a_(n_a), n_b_(n_b) {
        if (n_a < 0 || n_b < 0)
            throw std::invalid_argument("BipartiteGraph: negative part size");
        adj_.assign(static_cast<std::size_t>(n_a), Bitset(static_cast<std::size_t>(n_b)));
    }

    /// Build from an edge list. Duplicate edges collapse silently;
    /// an out-of-range endpoint is rejected naming the offending pair.
    static BipartiteGraph from_edges(int n_a, int n_b,
                                     std::span<const std::pair<int, int>> edges);
    static BipartiteGraph from_edges(int n_a, int n_b,
                                     std::initializer_list<std::pair<int, int>> edges);

    int size_a() const { return n_a_; }
    int size_b() const { return n_b_; }

    bool has_edge(int a, int b) const { return adj_[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(b)); }
    const Bitset& row(int a) const { return adj_[static_cast<std::size_t>(a)]; }

    void add_edge(int a, int b);
    void remove_edge(int a, int b);

    int degree_a(int a) const { return static_cast<int>(adj_[static_cast<std::size_t>(a)].count()); }
    std::vector<int> neighbors(int a) const;

    std::size_t edge_count() const;
    int max_degree_a() const;
    DegreeProfile degree_profile_a() const;
    DegreeProfile degree_profile_b() const;

    /// Same parts, edge present iff absent here.
    BipartiteGraph complement() const;

    /// Swap the roles of A and B.
    BipartiteGraph transpose() const;

    /// Induced subgraph on the listed vertices; indices of the result follow
    /// the order of the argument lists.
    BipartiteGraph induced(std::span<const int> a_vertices,
                           std::span<const int> b_vertices) const;

    bool operator==(const BipartiteGraph& other) const = default;

private:
    int n_a_ = 0;
    int n_b_ = 0;
    std::vector<Bitset> adj_;
};

/// Indices of the first k set bits.
std::vector<int> first_k_set_bits(const Bitset& bits, int k);

/// All set bits, in increasing order.
std::vector<int> set_bits(const Bitset& bits);

}  // namespace bihole

#endif
