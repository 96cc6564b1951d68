#include "bihole/constructive.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "bihole/bounds.hpp"

namespace bihole {

namespace {

void require_square(const BipartiteGraph& g, const char* who) {
    if (g.size_a() != g.size_b())
        throw std::invalid_argument(std::string(who) + ": parts must have equal size");
}

void require_max_degree(const BipartiteGraph& g, int delta, const char* who) {
    for (int a = 0; a < g.size_a(); ++a)
        if (g.degree_a(a) > delta)
            throw std::invalid_argument(std::string(who) + ": A-vertex " + std::to_string(a) +
                                        " has degree " + std::to_string(g.degree_a(a)) +
                                        " > " + std::to_string(delta));
}

BiHoleCertificate full_bihole(const BipartiteGraph& g) {
    BiHoleCertificate c;
    const int n = std::min(g.size_a(), g.size_b());
    c.x_set.resize(static_cast<std::size_t>(n));
    c.y_set.resize(static_cast<std::size_t>(n));
    std::iota(c.x_set.begin(), c.x_set.end(), 0);
    std::iota(c.y_set.begin(), c.y_set.end(), 0);
    return c;
}

std::vector<int> range_vector(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

// A-vertices (local indices) with at least one neighbor inside `mask`.
std::vector<int> neighborhood_of_set(const BipartiteGraph& g, const Bitset& mask) {
    std::vector<int> out;
    for (int a = 0; a < g.size_a(); ++a)
        if ((g.row(a) & mask).any()) out.push_back(a);
    return out;
}

}  // namespace

BipartiteGraph pad_a_degrees(const BipartiteGraph& g, int degree) {
    if (g.size_b() < degree)
        throw std::invalid_argument("pad_a_degrees: fewer B-vertices than target degree");
    BipartiteGraph padded = g;
    for (int a = 0; a < padded.size_a(); ++a) {
        int b = 0;
        while (padded.degree_a(a) < degree) {
            if (!padded.has_edge(a, b)) padded.add_edge(a, b);
            ++b;
        }
    }
    return padded;
}

AuxiliaryMultigraph AuxiliaryMultigraph::build(const BipartiteGraph& host) {
    require_square(host, "AuxiliaryMultigraph");
    AuxiliaryMultigraph aux;
    aux.n = host.size_b();
    aux.edges.reserve(static_cast<std::size_t>(host.size_a()));
    for (int a = 0; a < host.size_a(); ++a) {
        const auto nb = host.neighbors(a);
        if (nb.size() != 2)
            throw std::invalid_argument("AuxiliaryMultigraph: A-vertex " + std::to_string(a) +
                                        " does not have degree exactly 2");
        aux.edges.push_back({nb[0], nb[1], a});
    }

    // Components over B via union-find.
    std::vector<int> parent = range_vector(aux.n);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const auto& e : aux.edges) {
        int r1 = find(e.b1), r2 = find(e.b2);
        if (r1 != r2) parent[static_cast<std::size_t>(r1)] = r2;
    }

    std::vector<int> root_to_comp(static_cast<std::size_t>(aux.n), -1);
    for (int b = 0; b < aux.n; ++b) {
        int r = find(b);
        if (root_to_comp[static_cast<std::size_t>(r)] < 0) {
            root_to_comp[static_cast<std::size_t>(r)] = static_cast<int>(aux.components.size());
            aux.components.emplace_back();
        }
        aux.components[static_cast<std::size_t>(root_to_comp[static_cast<std::size_t>(r)])]
            .vertices.push_back(b);
    }
    for (int id = 0; id < static_cast<int>(aux.edges.size()); ++id) {
        int c = root_to_comp[static_cast<std::size_t>(find(aux.edges[static_cast<std::size_t>(id)].b1))];
        aux.components[static_cast<std::size_t>(c)].edge_ids.push_back(id);
    }
    for (auto& comp : aux.components)
        comp.dense = comp.edge_ids.size() >= comp.vertices.size();
    return aux;
}

EdgeVertexSelection select_bihole_sets(const AuxiliaryMultigraph& aux, int target) {
    if (target > static_cast<int>(aux.edges.size()))
        throw std::invalid_argument("select_bihole_sets: target exceeds edge count");

    EdgeVertexSelection sel;
    if (target <= 0) return sel;

    // Dense components first, then non-dense, larger edge counts first;
    // ties broken by smallest contained vertex for determinism.
    std::vector<int> order(aux.components.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        const auto& ci = aux.components[static_cast<std::size_t>(i)];
        const auto& cj = aux.components[static_cast<std::size_t>(j)];
        if (ci.dense != cj.dense) return ci.dense;
        if (ci.edge_ids.size() != cj.edge_ids.size()) return ci.edge_ids.size() > cj.edge_ids.size();
        return ci.vertices.front() < cj.vertices.front();
    });

    std::set<int> span;
    for (int ci : order) {
        const auto& comp = aux.components[static_cast<std::size_t>(ci)];
        const int have = static_cast<int>(sel.edge_ids.size());
        const int comp_edges = static_cast<int>(comp.edge_ids.size());
        if (have + comp_edges <= target) {
            for (int id : comp.edge_ids) {
                sel.edge_ids.push_back(id);
                span.insert(aux.edges[static_cast<std::size_t>(id)].b1);
                span.insert(aux.edges[static_cast<std::size_t>(id)].b2);
            }
        } else {
            // Grow a connected piece of this component edge by edge, always
            // extending from the vertices already reached.
            int need = target - have;
            std::vector<std::vector<int>> incident(static_cast<std::size_t>(aux.n));
            for (int id : comp.edge_ids) {
                incident[static_cast<std::size_t>(aux.edges[static_cast<std::size_t>(id)].b1)]
                    .push_back(id);
                incident[static_cast<std::size_t>(aux.edges[static_cast<std::size_t>(id)].b2)]
                    .push_back(id);
            }
            std::set<int> grown{comp.vertices.front()};
            std::set<int> taken;
            while (need > 0) {
                int pick = -1;
                for (int v : grown) {
                    for (int id : incident[static_cast<std::size_t>(v)])
                        if (!taken.count(id)) {
                            pick = id;
                            break;
                        }
                    if (pick >= 0) break;
                }
                taken.insert(pick);
                sel.edge_ids.push_back(pick);
                const auto& e = aux.edges[static_cast<std::size_t>(pick)];
                grown.insert(e.b1);
                grown.insert(e.b2);
                span.insert(e.b1);
                span.insert(e.b2);
                --need;
            }
            break;
        }
        if (static_cast<int>(sel.edge_ids.size()) == target) break;
    }

    sel.span_vertices.assign(span.begin(), span.end());
    for (int b = 0; b < aux.n && static_cast<int>(sel.vertices.size()) < target; ++b)
        if (!span.count(b)) sel.vertices.push_back(b);
    if (static_cast<int>(sel.vertices.size()) < target)
        throw std::logic_error("select_bihole_sets: span too large, counting argument violated");
    return sel;
}

BiHoleCertificate bihole_maxdeg2(const BipartiteGraph& g) {
    require_square(g, "bihole_maxdeg2");
    require_max_degree(g, 2, "bihole_maxdeg2");
    const int n = g.size_a();
    const int target = (n + 1) / 2 - 1;
    if (target <= 0) return {};

    const BipartiteGraph padded = pad_a_degrees(g, 2);
    const AuxiliaryMultigraph aux = AuxiliaryMultigraph::build(padded);
    const EdgeVertexSelection sel = select_bihole_sets(aux, target);

    BiHoleCertificate cert;
    cert.x_set.reserve(sel.edge_ids.size());
    for (int id : sel.edge_ids) cert.x_set.push_back(aux.edges[static_cast<std::size_t>(id)].a);
    std::sort(cert.x_set.begin(), cert.x_set.end());
    cert.y_set = sel.vertices;
    return cert;
}

BiHoleCertificate bihole_general_delta(const BipartiteGraph& g, int delta) {
    if (delta < 2) throw std::invalid_argument("bihole_general_delta: delta must be >= 2");
    require_square(g, "bihole_general_delta");
    require_max_degree(g, delta, "bihole_general_delta");
    if (delta == 2) return bihole_maxdeg2(g);

    const int n = g.size_a();
    const int k = (n - 2) / delta;
    if (n <= 2 || k <= 0) return {};

    Bitset x_mask(static_cast<std::size_t>(n));
    for (int b = 0; b < k; ++b) x_mask.set(static_cast<std::size_t>(b));
    const std::vector<int> nx = neighborhood_of_set(g, x_mask);

    if (static_cast<int>(nx.size()) <= n - k) {
        BiHoleCertificate cert;
        Bitset in_nx(static_cast<std::size_t>(n));
        for (int a : nx) in_nx.set(static_cast<std::size_t>(a));
        for (int a = 0; a < n && static_cast<int>(cert.x_set.size()) < k; ++a)
            if (!in_nx.test(static_cast<std::size_t>(a))) cert.x_set.push_back(a);
        cert.y_set = set_bits(x_mask);
        return cert;
    }

    // |N(X)| > n - k: recurse on (N(X), B \ X) with degree bound delta - 1.
    const int next_n = n - k;
    std::vector<int> a_map(nx.begin(), nx.begin() + next_n);
    std::vector<int> b_map;
    b_map.reserve(static_cast<std::size_t>(next_n));
    for (int b = k; b < n; ++b) b_map.push_back(b);

    const BipartiteGraph sub = g.induced(a_map, b_map);
    const BiHoleCertificate inner = bihole_general_delta(sub, delta - 1);
    return map_certificate(inner, a_map, b_map);
}

long long xi_chain_guarantee(long long n, int delta) {
    long long m = n;
    for (int d = delta; d >= 3; --d)
        m = static_cast<long long>(std::floor(xi_of_delta(d) * static_cast<double>(m)));
    return std::max<long long>(0, (m + 1) / 2 - 1);
}

XiChainResult bihole_xi_chain(const BipartiteGraph& g, int delta, RandomEngine& rng,
                              int max_retries) {
    if (delta < 3) throw std::invalid_argument("bihole_xi_chain: delta must be >= 3");
    require_square(g, "bihole_xi_chain");
    require_max_degree(g, delta, "bihole_xi_chain");

    XiChainResult result;
    // Working graph: host edges plus padding dummies accumulated level by
    // level. A bi-hole of the working graph is one of the host.
    BipartiteGraph work = g;
    std::vector<int> a_map = range_vector(g.size_a());
    std::vector<int> b_map = range_vector(g.size_b());

    for (int d = delta; d >= 3; --d) {
        const int n_cur = work.size_a();
        if (work.edge_count() == 0) {
            result.certificate = map_certificate(full_bihole(work), a_map, b_map);
            result.trace.terminal_delta = d;
            result.trace.terminal_size = result.certificate->size();
            return result;
        }
        if (n_cur >= d) work = pad_a_degrees(work, d);

        const int next_n = static_cast<int>(
            std::floor(xi_of_delta(d) * static_cast<double>(n_cur)));
        if (next_n <= 0) {
            result.certificate = BiHoleCertificate{};
            result.trace.terminal_delta = d;
            result.trace.terminal_size = 0;
            return result;
        }
        const int s_size = n_cur - next_n;

        bool advanced = false;
        for (int attempt = 1; attempt <= max_retries; ++attempt) {
            const std::vector<int> s_local = rng.sample_sorted(n_cur, s_size);
            Bitset s_mask(static_cast<std::size_t>(n_cur));
            for (int b : s_local) s_mask.set(static_cast<std::size_t>(b));
            const std::vector<int> ns = neighborhood_of_set(work, s_mask);
            if (static_cast<int>(ns.size()) < next_n) continue;

            ReductionLevel level;
            level.delta = d;
            level.s_set.reserve(s_local.size());
            for (int b : s_local) level.s_set.push_back(b_map[static_cast<std::size_t>(b)]);
            level.neighborhood_size = static_cast<int>(ns.size());
            level.surviving_size = next_n;
            level.retries_used = attempt;
            result.trace.levels.push_back(std::move(level));

            std::vector<int> a_local(ns.begin(), ns.begin() + next_n);
            std::vector<int> b_local;
            b_local.reserve(static_cast<std::size_t>(next_n));
            for (int b = 0; b < n_cur; ++b)
                if (!s_mask.test(static_cast<std::size_t>(b))) b_local.push_back(b);

            std::vector<int> new_a_map, new_b_map;
            new_a_map.reserve(a_local.size());
            new_b_map.reserve(b_local.size());
            for (int a : a_local) new_a_map.push_back(a_map[static_cast<std::size_t>(a)]);
            for (int b : b_local) new_b_map.push_back(b_map[static_cast<std::size_t>(b)]);

            work = work.induced(a_local, b_local);
            a_map = std::move(new_a_map);
            b_map = std::move(new_b_map);
            advanced = true;
            break;
        }
        if (!advanced) {
            ReductionLevel level;
            level.delta = d;
            level.retries_used = max_retries;
            result.trace.levels.push_back(std::move(level));
            return result;  // certificate stays empty: failure with trace
        }
    }

    const BiHoleCertificate base = bihole_maxdeg2(work);
    result.certificate = map_certificate(base, a_map, b_map);
    result.trace.terminal_delta = 2;
    result.trace.terminal_size = result.certificate->size();
    return result;
}

RandomSubsetResult bihole_random_subset(const BipartiteGraph& g, int delta,
                                        RandomEngine& rng, int max_retries) {
    if (delta < 3) throw std::invalid_argument("bihole_random_subset: delta must be >= 3");
    require_square(g, "bihole_random_subset");
    require_max_degree(g, delta, "bihole_random_subset");
    const int n = g.size_a();
    if (static_cast<double>(n) < 5.0 * delta * std::log(delta))
        throw std::invalid_argument("bihole_random_subset: requires n >= 5*delta*log(delta)");

    RandomSubsetResult result;
    if (g.edge_count() == 0) {
        result.certificate = full_bihole(g);
        return result;
    }

    const double x = 0.5 * std::log(static_cast<double>(delta)) / delta;
    const int m = static_cast<int>(std::floor((1.0 - 2.0 * x) * n));
    const int s_size = m - 2;
    const int q = n - s_size;  // |B \ S|; integer |T| >= 2xn+2 iff |T| >= q
    if (s_size <= 0 || q > n)
        throw std::invalid_argument("bihole_random_subset: degenerate subset sizes");

    for (int attempt = 1; attempt <= max_retries; ++attempt) {
        result.retries_used = attempt;
        const std::vector<int> s = rng.sample_sorted(n, s_size);
        Bitset s_mask(static_cast<std::size_t>(n));
        for (int b : s) s_mask.set(static_cast<std::size_t>(b));

        std::vector<int> t_set;
        for (int a = 0; a < n; ++a)
            if (static_cast<int>((g.row(a) & s_mask).count()) >= delta - 2) t_set.push_back(a);
        result.t_sizes.push_back(static_cast<int>(t_set.size()));
        if (static_cast<int>(t_set.size()) < q) continue;

        std::vector<int> a_map(t_set.begin(), t_set.begin() + q);
        std::vector<int> b_map;
        b_map.reserve(static_cast<std::size_t>(q));
        for (int b = 0; b < n; ++b)
            if (!s_mask.test(static_cast<std::size_t>(b))) b_map.push_back(b);

        const BipartiteGraph sub = g.induced(a_map, b_map);
        const BiHoleCertificate inner = bihole_maxdeg2(sub);
        result.certificate = map_certificate(inner, a_map, b_map);
        return result;
    }
    return result;
}

DenseRegimeResult bihole_dense_regime(const BipartiteGraph& g, double eps,
                                      std::optional<int> t_request) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("bihole_dense_regime: eps must lie in (0,1)");
    require_square(g, "bihole_dense_regime");
    const int n = g.size_a();
    const double cap = (1.0 - eps) * n;
    for (int a = 0; a < n; ++a)
        if (g.degree_a(a) > cap)
            throw std::invalid_argument("bihole_dense_regime: A-degree exceeds (1-eps)n");

    DenseRegimeResult result;
    int t = t_request.value_or(static_cast<int>(std::floor(
        std::log(static_cast<double>(std::max(n, 2))) / (2.0 * std::log(1.0 / eps)))));
    t = std::min(t, n);
    result.requested_t = t;

    const BipartiteGraph compT = g.complement().transpose();  // rows: B over A
    std::vector<int> cdeg(static_cast<std::size_t>(n));
    for (int b = 0; b < n; ++b) cdeg[static_cast<std::size_t>(b)] = compT.degree_a(b);

    // Binomial weights as doubles; the greedy only compares sums of them.
    const int maxn = n + 1;
    std::vector<std::vector<double>> binom(static_cast<std::size_t>(maxn + 1));
    for (int i = 0; i <= maxn; ++i) {
        binom[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(maxn + 1), 0.0);
        binom[static_cast<std::size_t>(i)][0] = 1.0;
        for (int j = 1; j <= i; ++j)
            binom[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                binom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                binom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }

    auto greedy = [&](int tt) -> BiHoleCertificate {
        Bitset x_mask(static_cast<std::size_t>(n));
        x_mask.set();
        std::vector<bool> chosen(static_cast<std::size_t>(n), false);
        std::vector<int> y_set;
        for (int j = 0; j < tt; ++j) {
            int best_b = -1;
            double best_w = -1.0;
            for (int b = 0; b < n; ++b) {
                if (chosen[static_cast<std::size_t>(b)]) continue;
                const Bitset cand = x_mask & compT.row(b);
                double w = 0.0;
                for (std::size_t a = cand.find_first(); a != Bitset::npos; a = cand.find_next(a)) {
                    const int rem = cdeg[a] - (j + 1);
                    const int need = tt - j - 1;
                    if (rem >= need)
                        w += binom[static_cast<std::size_t>(rem)][static_cast<std::size_t>(need)];
                }
                if (w > best_w) {
                    best_w = w;
                    best_b = b;
                }
            }
            if (best_b < 0 || best_w <= 0.0) break;
            chosen[static_cast<std::size_t>(best_b)] = true;
            y_set.push_back(best_b);
            x_mask &= compT.row(best_b);
        }
        const int achieved = std::min(static_cast<int>(y_set.size()),
                                      static_cast<int>(x_mask.count()));
        BiHoleCertificate cert;
        cert.x_set = first_k_set_bits(x_mask, achieved);
        y_set.resize(static_cast<std::size_t>(achieved));
        std::sort(y_set.begin(), y_set.end());
        cert.y_set = std::move(y_set);
        return cert;
    };

    for (int tt = std::max(t, 1); tt >= 1; --tt) {
        BiHoleCertificate cert = greedy(tt);
        if (cert.size() > result.certificate.size()) result.certificate = std::move(cert);
        if (result.certificate.size() >= tt) break;
    }
    result.achieved_t = result.certificate.size();
    return result;
}

}  // namespace bihole
