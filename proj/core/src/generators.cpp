#include "bihole/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace bihole {

BipartiteGraph even_cycle(int n) {
    if (n < 2) throw std::invalid_argument("even_cycle: n must be >= 2");
    BipartiteGraph g(n, n);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, i);
        g.add_edge(i, (i + 1) % n);
    }
    return g;
}

BipartiteGraph random_binomial_bipartite(int n_a, int n_b, double p, RandomEngine& rng) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("random_binomial_bipartite: p outside [0,1]");
    BipartiteGraph g(n_a, n_b);
    if (p == 0.0) return g;
    for (int a = 0; a < n_a; ++a)
        for (int b = 0; b < n_b; ++b)
            if (p == 1.0 || rng.bernoulli(p)) g.add_edge(a, b);
    return g;
}

std::optional<BipartiteGraph> trim_to_low_degree(const BipartiteGraph& g, int delta_cap,
                                                 int target_n, RandomEngine& rng) {
    if (target_n < 0 || target_n > g.size_b())
        throw std::invalid_argument("trim_to_low_degree: target_n out of range");
    std::vector<int> eligible;
    for (int a = 0; a < g.size_a(); ++a)
        if (g.degree_a(a) <= delta_cap) eligible.push_back(a);
    if (static_cast<int>(eligible.size()) < target_n) return std::nullopt;

    std::vector<int> pick = rng.sample_sorted(static_cast<int>(eligible.size()), target_n);
    std::vector<int> a_map;
    a_map.reserve(static_cast<std::size_t>(target_n));
    for (int i : pick) a_map.push_back(eligible[static_cast<std::size_t>(i)]);

    std::vector<int> b_map(static_cast<std::size_t>(target_n));
    std::iota(b_map.begin(), b_map.end(), 0);
    return g.induced(a_map, b_map);
}

std::vector<std::pair<int, int>> PairingState::projected_edges() const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(matching.size());
    for (std::size_t k = 0; k < matching.size(); ++k)
        edges.emplace_back(static_cast<int>(k) / delta, matching[k] / delta);
    return edges;
}

bool PairingState::projection_simple() const {
    auto edges = projected_edges();
    std::sort(edges.begin(), edges.end());
    return std::adjacent_find(edges.begin(), edges.end()) == edges.end();
}

PairingState draw_pairing(int n, int delta, RandomEngine& rng) {
    if (n < 1 || delta < 1) throw std::invalid_argument("draw_pairing: n and delta must be >= 1");
    PairingState state;
    state.n = n;
    state.delta = delta;
    state.matching.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(delta));
    std::iota(state.matching.begin(), state.matching.end(), 0);
    rng.shuffle(state.matching);
    return state;
}

PairingResult pairing_model(int n, int delta, RandomEngine& rng, int max_rejects) {
    PairingResult result;
    for (;;) {
        PairingState state = draw_pairing(n, delta, rng);
        if (state.projection_simple()) {
            BipartiteGraph g(n, n);
            for (const auto& [a, b] : state.projected_edges()) g.add_edge(a, b);
            result.graph = std::move(g);
            return result;
        }
        if (++result.rejections > max_rejects) return result;
    }
}

RegularPairingResult pairing_model_switched(int n, int delta, RandomEngine& rng) {
    PairingState state = draw_pairing(n, delta, rng);
    std::vector<std::pair<int, int>> edges = state.projected_edges();
    std::map<std::pair<int, int>, int> mult;
    for (const auto& e : edges) ++mult[e];

    RegularPairingResult result;
    for (;;) {
        auto it = std::find_if(mult.begin(), mult.end(),
                               [](const auto& kv) { return kv.second > 1; });
        if (it == mult.end()) break;
        const auto [a, b] = it->first;
        // Switch one copy of (a,b) with a random edge (a2,b2) such that the
        // replacements (a,b2) and (a2,b) are both new; total excess
        // multiplicity strictly drops, so this terminates.
        for (;;) {
            const std::size_t idx = static_cast<std::size_t>(
                rng.uniform_below(static_cast<std::uint64_t>(edges.size())));
            const auto [a2, b2] = edges[idx];
            if (a2 == a || b2 == b) continue;
            if (mult.count({a, b2}) || mult.count({a2, b})) continue;
            const auto self = std::find(edges.begin(), edges.end(), std::make_pair(a, b));
            *self = {a, b2};
            edges[idx] = {a2, b};
            auto drop = [&](std::pair<int, int> key) {
                auto m = mult.find(key);
                if (--m->second == 0) mult.erase(m);
            };
            drop({a, b});
            drop({a2, b2});
            ++mult[{a, b2}];
            ++mult[{a2, b}];
            ++result.switches;
            break;
        }
    }

    BipartiteGraph g(n, n);
    for (const auto& [a, b] : edges) g.add_edge(a, b);
    result.graph = std::move(g);
    return result;
}

namespace {

// Enumerate t-subsets of A with common-neighborhood pruning, reporting the
// subset and C(|common neighborhood|, t) to the sink.
template <class Sink>
void enumerate_ktt_a_sets(const BipartiteGraph& g, int t, Sink&& sink) {
    const int n_a = g.size_a();
    std::vector<int> chosen;
    std::vector<Bitset> stack;
    stack.reserve(static_cast<std::size_t>(t) + 1);
    Bitset all(static_cast<std::size_t>(g.size_b()));
    all.set();
    stack.push_back(all);

    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(chosen.size()) == t) return;
        for (int a = start; a <= n_a - (t - static_cast<int>(chosen.size())); ++a) {
            Bitset common = stack.back() & g.row(a);
            if (static_cast<int>(common.count()) < t) continue;
            chosen.push_back(a);
            if (static_cast<int>(chosen.size()) == t)
                sink(chosen, common);
            else {
                stack.push_back(common);
                self(self, a + 1);
                stack.pop_back();
            }
            chosen.pop_back();
        }
    };
    rec(rec, 0);
}

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

std::uint64_t count_ktt(const BipartiteGraph& g, int t) {
    if (t < 1) throw std::invalid_argument("count_ktt: t must be >= 1");
    // Enumerate on the smaller side.
    const BipartiteGraph* work = &g;
    BipartiteGraph transposed;
    if (g.size_b() < g.size_a()) {
        transposed = g.transpose();
        work = &transposed;
    }
    std::uint64_t total = 0;
    enumerate_ktt_a_sets(*work, t, [&](const std::vector<int>&, const Bitset& common) {
        total += binomial_u64(common.count(), static_cast<std::uint64_t>(t));
    });
    return total;
}

std::uint64_t per_vertex_ktt(const BipartiteGraph& g, int t, int v) {
    if (t < 1) throw std::invalid_argument("per_vertex_ktt: t must be >= 1");
    if (v < 0 || v >= g.size_a()) throw std::out_of_range("per_vertex_ktt: vertex out of range");
    // Fix v, extend with t-1 further A-vertices in increasing order.
    const Bitset& base = g.row(v);
    if (static_cast<int>(base.count()) < t) return 0;

    std::uint64_t total = 0;
    std::vector<int> pool;
    for (int a = 0; a < g.size_a(); ++a)
        if (a != v) pool.push_back(a);

    auto rec = [&](auto&& self, std::size_t start, int depth, const Bitset& common) -> void {
        if (depth == t - 1) {
            total += binomial_u64(common.count(), static_cast<std::uint64_t>(t));
            return;
        }
        for (std::size_t i = start; i + static_cast<std::size_t>(t - 1 - depth) <= pool.size();
             ++i) {
            Bitset next = common & g.row(pool[i]);
            if (static_cast<int>(next.count()) < t) continue;
            self(self, i + 1, depth + 1, next);
        }
    };
    rec(rec, 0, 0, base);
    return total;
}

namespace {

// Delete one edge from every intact K_{t,t} copy, batch-wise, recounting
// after each batch. Deletions never create copies, so one batch normally
// suffices; the loop guards against that reasoning ever breaking.
std::uint64_t repair_ktt_free(BipartiteGraph& g, int t) {
    std::uint64_t removed = 0;
    for (;;) {
        struct Copy {
            std::vector<int> a_set, b_set;
        };
        std::vector<Copy> copies;
        enumerate_ktt_a_sets(g, t, [&](const std::vector<int>& a_set, const Bitset& common) {
            // All t-subsets of the common neighborhood.
            const std::vector<int> options = set_bits(common);
            std::vector<int> pick;
            auto rec = [&](auto&& self, std::size_t start) -> void {
                if (static_cast<int>(pick.size()) == t) {
                    copies.push_back({a_set, pick});
                    return;
                }
                for (std::size_t i = start;
                     i + static_cast<std::size_t>(t) - pick.size() <= options.size(); ++i) {
                    pick.push_back(options[i]);
                    self(self, i + 1);
                    pick.pop_back();
                }
            };
            rec(rec, 0);
        });
        if (copies.empty()) return removed;
        for (const auto& copy : copies) {
            bool intact = true;
            for (int a : copy.a_set) {
                for (int b : copy.b_set)
                    if (!g.has_edge(a, b)) {
                        intact = false;
                        break;
                    }
                if (!intact) break;
            }
            if (!intact) continue;
            g.remove_edge(copy.a_set.front(), copy.b_set.front());
            ++removed;
        }
    }
}

}  // namespace

KttFreeResult ktt_free_construction(int n, int t, double c, RandomEngine& rng,
                                    int max_resamples) {
    if (t < 2) throw std::invalid_argument("ktt_free_construction: t must be >= 2");
    if (n < 2) throw std::invalid_argument("ktt_free_construction: n must be >= 2");
    const int big_n = 2 * n;
    const double p = c * std::pow(static_cast<double>(big_n), -2.0 / (t + 1));
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("ktt_free_construction: p = c*(2n)^{-2/(t+1)} must be in (0,1)");

    auto binom_d = [](int nn, int kk) {
        double r = 1.0;
        for (int i = 1; i <= kk; ++i) r = r * (nn - kk + i) / i;
        return r;
    };
    const double p_tt = std::pow(p, static_cast<double>(t) * t);
    const double expected_copies = binom_d(big_n, t) * binom_d(n, t) * p_tt;
    const double copy_cap = 2.0 * expected_copies;
    const double per_vertex_cap = (4.0 * t / n) * binom_d(big_n, t) * binom_d(big_n, t) * p_tt;
    const double degree_floor = p * n / 2.0;

    KttFreeResult result;
    result.report.p = p;

    for (int attempt = 1; attempt <= max_resamples; ++attempt) {
        result.report.resamples = attempt;
        BipartiteGraph g = random_binomial_bipartite(big_n, n, p, rng);

        std::vector<std::uint64_t> copy_count(static_cast<std::size_t>(big_n), 0);
        std::uint64_t copies = 0;
        enumerate_ktt_a_sets(g, t, [&](const std::vector<int>& a_set, const Bitset& common) {
            const std::uint64_t k = binomial_u64(common.count(), static_cast<std::uint64_t>(t));
            copies += k;
            for (int a : a_set) copy_count[static_cast<std::size_t>(a)] += k;
        });
        if (static_cast<double>(copies) > copy_cap) continue;

        // The proof needs n A-vertices that simultaneously have controlled
        // copy counts and degree at least pn/2; at finite scale the two
        // conditions are checked jointly instead of demanding the degree
        // bound of every vertex.
        std::vector<int> eligible;
        for (int a = 0; a < big_n; ++a)
            if (static_cast<double>(copy_count[static_cast<std::size_t>(a)]) <= per_vertex_cap &&
                static_cast<double>(g.degree_a(a)) >= degree_floor)
                eligible.push_back(a);
        if (static_cast<int>(eligible.size()) < n) continue;

        std::stable_sort(eligible.begin(), eligible.end(),
                         [&](int a, int b) { return g.degree_a(a) > g.degree_a(b); });
        std::vector<int> a_prime(eligible.begin(), eligible.begin() + n);
        std::sort(a_prime.begin(), a_prime.end());

        std::vector<int> b_all(static_cast<std::size_t>(n));
        std::iota(b_all.begin(), b_all.end(), 0);
        BipartiteGraph h = g.induced(a_prime, b_all);

        result.report.copies_before = count_ktt(h, t);
        result.report.per_vertex_copy_counts.resize(static_cast<std::size_t>(n));
        result.report.degrees_before.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            result.report.per_vertex_copy_counts[static_cast<std::size_t>(i)] =
                per_vertex_ktt(h, t, i);
            result.report.degrees_before[static_cast<std::size_t>(i)] = h.degree_a(i);
        }

        result.report.edges_removed = repair_ktt_free(h, t);
        result.report.min_degree_after = h.degree_profile_a().min_degree;
        result.graph = std::move(h);
        return result;
    }
    return result;  // resample budget exhausted; graph stays empty
}

}  // namespace bihole
