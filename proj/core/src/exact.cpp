#include "bihole/exact.hpp"

#include <algorithm>
#include <numeric>

namespace bihole {

namespace {

// Phase 1: find the optimum size. Branches on A-vertices in descending
// degree order (removes B-compatibility fastest); bound at a node is
// min(|chosen| + candidates left, |compatible B|).
class BoundSearch {
public:
    BoundSearch(const BipartiteGraph& g, std::optional<std::uint64_t> budget)
        : g_(g), budget_(budget) {
        order_.resize(static_cast<std::size_t>(g.size_a()));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return g.degree_a(a) > g.degree_a(b); });
    }

    void run() {
        Bitset compat(static_cast<std::size_t>(g_.size_b()));
        compat.set();
        std::vector<int> chosen;
        dfs(0, chosen, compat);
    }

    int best() const { return best_; }
    const BiHoleCertificate& witness() const { return witness_; }
    std::uint64_t nodes() const { return nodes_; }
    bool exhausted() const { return exhausted_; }

private:
    void dfs(std::size_t pos, std::vector<int>& chosen, const Bitset& compat) {
        if (exhausted_) return;
        ++nodes_;
        if (budget_ && nodes_ > *budget_) {
            exhausted_ = true;
            return;
        }
        const int compat_count = static_cast<int>(compat.count());
        const int realizable = std::min(static_cast<int>(chosen.size()), compat_count);
        if (realizable > best_) {
            best_ = realizable;
            witness_.x_set.assign(chosen.begin(), chosen.begin() + realizable);
            std::sort(witness_.x_set.begin(), witness_.x_set.end());
            witness_.y_set = first_k_set_bits(compat, realizable);
        }
        if (pos == order_.size()) return;
        const int bound =
            std::min(static_cast<int>(chosen.size() + (order_.size() - pos)), compat_count);
        if (bound <= best_) return;

        const int a = order_[pos];
        Bitset next = compat;
        next -= g_.row(a);
        chosen.push_back(a);
        dfs(pos + 1, chosen, next);
        chosen.pop_back();
        dfs(pos + 1, chosen, compat);
    }

    const BipartiteGraph& g_;
    std::optional<std::uint64_t> budget_;
    std::vector<int> order_;
    int best_ = 0;
    BiHoleCertificate witness_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

// Phase 2: first size-k certificate found by include-first DFS in index
// order, which is the one with lexicographically smallest x_set.
class LexSearch {
public:
    LexSearch(const BipartiteGraph& g, int k) : g_(g), k_(k) {}

    std::optional<BiHoleCertificate> run() {
        if (k_ == 0) return BiHoleCertificate{};
        if (k_ > g_.size_a() || k_ > g_.size_b()) return std::nullopt;
        Bitset compat(static_cast<std::size_t>(g_.size_b()));
        compat.set();
        std::vector<int> chosen;
        found_ = std::nullopt;
        dfs(0, chosen, compat);
        return found_;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    bool dfs(int next_a, std::vector<int>& chosen, const Bitset& compat) {
        ++nodes_;
        if (static_cast<int>(chosen.size()) == k_) {
            found_ = BiHoleCertificate{chosen, first_k_set_bits(compat, k_)};
            return true;
        }
        if (next_a == g_.size_a()) return false;
        if (static_cast<int>(chosen.size()) + (g_.size_a() - next_a) < k_) return false;

        Bitset next = compat;
        next -= g_.row(next_a);
        if (static_cast<int>(next.count()) >= k_) {
            chosen.push_back(next_a);
            if (dfs(next_a + 1, chosen, next)) return true;
            chosen.pop_back();
        }
        return dfs(next_a + 1, chosen, compat);
    }

    const BipartiteGraph& g_;
    int k_;
    std::optional<BiHoleCertificate> found_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

SolveResult max_bihole(const BipartiteGraph& g, std::optional<std::uint64_t> node_budget) {
    if (g.size_a() == 0 || g.size_b() == 0)
        throw std::invalid_argument("max_bihole: empty part");

    BoundSearch search(g, node_budget);
    search.run();

    SolveResult result;
    result.k = search.best();
    result.nodes_explored = search.nodes();
    result.optimal = !search.exhausted();
    result.certificate = search.witness();

    if (result.optimal) {
        LexSearch lex(g, result.k);
        if (auto cert = lex.run()) result.certificate = std::move(*cert);
        result.nodes_explored += lex.nodes();
    }
    return result;
}

std::optional<BiHoleCertificate> has_bihole(const BipartiteGraph& g, int k) {
    if (k < 0 || k > std::min(g.size_a(), g.size_b()))
        throw std::invalid_argument("has_bihole: k out of range");
    LexSearch lex(g, k);
    return lex.run();
}

SolveResult brute_force_bihole(const BipartiteGraph& g) {
    const bool a_side = g.size_a() <= g.size_b();
    const BipartiteGraph gt = a_side ? g : g.transpose();
    const int n_small = gt.size_a();
    const int n_large = gt.size_b();
    if (n_small > 14) throw std::invalid_argument("brute_force_bihole: enumerated side exceeds 14");

    SolveResult result;
    std::uint64_t best_mask = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n_small); ++mask) {
        ++result.nodes_explored;
        Bitset cnn(static_cast<std::size_t>(n_large));
        cnn.set();
        int popcount = 0;
        for (int v = 0; v < n_small; ++v)
            if (mask >> v & 1) {
                ++popcount;
                cnn -= gt.row(v);
            }
        const int value = std::min(popcount, static_cast<int>(cnn.count()));
        if (value > result.k) {
            result.k = value;
            best_mask = mask;
        }
    }

    Bitset cnn(static_cast<std::size_t>(n_large));
    cnn.set();
    std::vector<int> xs;
    for (int v = 0; v < n_small; ++v)
        if (best_mask >> v & 1) {
            xs.push_back(v);
            cnn -= gt.row(v);
        }
    xs.resize(static_cast<std::size_t>(result.k));
    BiHoleCertificate cert{xs, first_k_set_bits(cnn, result.k)};
    if (!a_side) std::swap(cert.x_set, cert.y_set);
    result.certificate = std::move(cert);
    return result;
}

}  // namespace bihole
