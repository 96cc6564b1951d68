#include "bihole/bipartite_graph.hpp"

#include <algorithm>
#include <string>

namespace bihole {

BipartiteGraph BipartiteGraph::from_edges(int n_a, int n_b,
                                          std::span<const std::pair<int, int>> edges) {
    BipartiteGraph g(n_a, n_b);
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= n_a || b < 0 || b >= n_b)
            throw std::out_of_range("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                    ") outside " + std::to_string(n_a) + "x" + std::to_string(n_b));
        g.adj_[static_cast<std::size_t>(a)].set(static_cast<std::size_t>(b));
    }
    return g;
}

BipartiteGraph BipartiteGraph::from_edges(int n_a, int n_b,
                                          std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n_a, n_b, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

void BipartiteGraph::add_edge(int a, int b) {
    if (a < 0 || a >= n_a_ || b < 0 || b >= n_b_)
        throw std::out_of_range("add_edge: index out of range");
    adj_[static_cast<std::size_t>(a)].set(static_cast<std::size_t>(b));
}

void BipartiteGraph::remove_edge(int a, int b) {
    if (a < 0 || a >= n_a_ || b < 0 || b >= n_b_)
        throw std::out_of_range("remove_edge: index out of range");
    adj_[static_cast<std::size_t>(a)].reset(static_cast<std::size_t>(b));
}

std::vector<int> BipartiteGraph::neighbors(int a) const {
    return set_bits(adj_[static_cast<std::size_t>(a)]);
}

std::size_t BipartiteGraph::edge_count() const {
    std::size_t m = 0;
    for (const auto& row : adj_) m += row.count();
    return m;
}

int BipartiteGraph::max_degree_a() const {
    int d = 0;
    for (const auto& row : adj_) d = std::max(d, static_cast<int>(row.count()));
    return d;
}

DegreeProfile BipartiteGraph::degree_profile_a() const {
    DegreeProfile p;
    p.degrees.reserve(static_cast<std::size_t>(n_a_));
    for (const auto& row : adj_) p.degrees.push_back(static_cast<int>(row.count()));
    if (!p.degrees.empty()) {
        auto [mn, mx] = std::minmax_element(p.degrees.begin(), p.degrees.end());
        p.min_degree = *mn;
        p.max_degree = *mx;
    }
    return p;
}

DegreeProfile BipartiteGraph::degree_profile_b() const {
    DegreeProfile p;
    p.degrees.assign(static_cast<std::size_t>(n_b_), 0);
    for (const auto& row : adj_)
        for (std::size_t b = row.find_first(); b != Bitset::npos; b = row.find_next(b))
            ++p.degrees[b];
    if (!p.degrees.empty()) {
        auto [mn, mx] = std::minmax_element(p.degrees.begin(), p.degrees.end());
        p.min_degree = *mn;
        p.max_degree = *mx;
    }
    return p;
}

BipartiteGraph BipartiteGraph::complement() const {
    BipartiteGraph g(n_a_, n_b_);
    for (std::size_t a = 0; a < adj_.size(); ++a) g.adj_[a] = ~adj_[a];
    return g;
}

BipartiteGraph BipartiteGraph::transpose() const {
    BipartiteGraph g(n_b_, n_a_);
    for (std::size_t a = 0; a < adj_.size(); ++a) {
        const Bitset& row = adj_[a];
        for (std::size_t b = row.find_first(); b != Bitset::npos; b = row.find_next(b))
            g.adj_[b].set(a);
    }
    return g;
}

BipartiteGraph BipartiteGraph::induced(std::span<const int> a_vertices,
                                       std::span<const int> b_vertices) const {
    BipartiteGraph g(static_cast<int>(a_vertices.size()), static_cast<int>(b_vertices.size()));
    for (std::size_t i = 0; i < a_vertices.size(); ++i) {
        const int a = a_vertices[i];
        if (a < 0 || a >= n_a_) throw std::out_of_range("induced: A index out of range");
        const Bitset& row = adj_[static_cast<std::size_t>(a)];
        for (std::size_t j = 0; j < b_vertices.size(); ++j) {
            const int b = b_vertices[j];
            if (b < 0 || b >= n_b_) throw std::out_of_range("induced: B index out of range");
            if (row.test(static_cast<std::size_t>(b))) g.adj_[i].set(j);
        }
    }
    return g;
}

std::vector<int> first_k_set_bits(const Bitset& bits, int k) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(std::max(k, 0)));
    for (std::size_t b = bits.find_first(); b != Bitset::npos && static_cast<int>(out.size()) < k;
         b = bits.find_next(b))
        out.push_back(static_cast<int>(b));
    return out;
}

std::vector<int> set_bits(const Bitset& bits) {
    std::vector<int> out;
    out.reserve(bits.count());
    for (std::size_t b = bits.find_first(); b != Bitset::npos; b = bits.find_next(b))
        out.push_back(static_cast<int>(b));
    return out;
}

}  // namespace bihole
