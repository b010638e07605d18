#pragma once

// Reference implementations for cross-checking the library solvers. These are
// written as plainly as possible and share no solver code with the library:
// agreement between the two is the point of the tests.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "coatss/instance.hpp"

namespace testref {

using coatss::Edge;
using coatss::Graph;
using coatss::Instance;
using coatss::Vertex;
using coatss::VertexSet;

inline Instance make_inst(int n, bool directed, const std::vector<std::pair<int, int>>& edges,
                          const std::vector<int>& thresholds) {
    std::vector<Edge> es;
    for (auto [u, v] : edges) es.emplace_back(u, v);
    std::vector<int> t(n + 1, 0);
    for (int v = 1; v <= n; ++v) t[v] = thresholds[v - 1];
    return Instance(Graph(n, directed, std::move(es)), std::move(t));
}

// Round-based simulation by rescanning all vertices; O(n^2 m) worst case.
inline std::vector<char> simulate(const Instance& inst, const std::vector<char>& seed) {
    int n = inst.n();
    std::vector<char> active = seed;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<char> next = active;
        for (Vertex v = 1; v <= n; ++v) {
            if (active[v]) continue;
            int cnt = 0;
            for (Vertex u : inst.g.supporters(v)) cnt += active[u];
            if (cnt >= inst.t[v]) {
                next[v] = 1;
                changed = true;
            }
        }
        active = std::move(next);
    }
    return active;
}

inline bool activates_all(const Instance& inst, const std::vector<char>& seed) {
    std::vector<char> a = simulate(inst, seed);
    for (Vertex v = 1; v <= inst.n(); ++v)
        if (!a[v]) return false;
    return true;
}

inline std::vector<char> to_mask(const Instance& inst, const VertexSet& s) {
    std::vector<char> m(inst.n() + 1, 0);
    for (Vertex v : s) m[v] = 1;
    return m;
}

// Minimum contagious set, found by enumerating vertex subsets in (size, lex)
// order with an index odometer.
inline VertexSet brute_min_target_set(const Instance& inst) {
    int n = inst.n();
    for (int k = 0; k <= n; ++k) {
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 1);
        while (true) {
            std::vector<char> seed(n + 1, 0);
            for (int v : idx) seed[v] = 1;
            if (activates_all(inst, seed)) return VertexSet(idx.begin(), idx.end());
            int i = k - 1;
            while (i >= 0 && idx[i] == n - (k - 1 - i)) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    throw std::logic_error("brute_min_target_set: full vertex set must work");
}

// Minimum incentive weight as the best activation order: any valid assignment
// linearizes to an order, and paying each vertex its shortfall along an order
// is itself valid.
inline long long brute_min_incentives(const Instance& inst) {
    int n = inst.n();
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    long long best = -1;
    do {
        long long w = 0;
        std::vector<char> placed(n + 1, 0);
        for (Vertex v : perm) {
            int cnt = 0;
            for (Vertex u : inst.g.supporters(v)) cnt += placed[u];
            if (inst.t[v] > cnt) w += inst.t[v] - cnt;
            placed[v] = 1;
            if (best >= 0 && w >= best) break;
        }
        if (best < 0 || w < best) best = w;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return n == 0 ? 0 : best;
}

// Exhaustive search over raw assignments q with 0 <= q(v) <= t(v); feasible
// only for tiny threshold sums. Returns the minimum valid weight.
inline long long brute_min_incentives_raw(const Instance& inst) {
    int n = inst.n();
    std::vector<int> q(n + 1, 0);
    long long best = -1;
    while (true) {
        std::vector<int> residual(n + 1, 0);
        for (Vertex v = 1; v <= n; ++v) residual[v] = inst.t[v] - q[v];
        std::vector<char> active(n + 1, 0);
        bool changed = true;
        while (changed) {
            changed = false;
            for (Vertex v = 1; v <= n; ++v) {
                if (active[v]) continue;
                int cnt = 0;
                for (Vertex u : inst.g.supporters(v)) cnt += active[u];
                if (cnt >= residual[v]) {
                    active[v] = 1;
                    changed = true;
                }
            }
        }
        bool all = true;
        for (Vertex v = 1; v <= n; ++v) all = all && active[v];
        if (all) {
            long long w = std::accumulate(q.begin(), q.end(), 0LL);
            if (best < 0 || w < best) best = w;
        }
        int v = 1;
        while (v <= n && q[v] == inst.t[v]) q[v++] = 0;
        if (v > n) break;
        ++q[v];
    }
    return best;
}

// Cut size of a prefix, counted straight off the edge list.
inline int prefix_cut(const Graph& g, const std::vector<char>& in_prefix) {
    int c = 0;
    for (const auto& [u, v] : g.edges) c += in_prefix[u] != in_prefix[v];
    return c;
}

inline int brute_cutwidth(const Graph& g) {
    int n = g.n;
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    int best = -1;
    do {
        std::vector<char> in(n + 1, 0);
        int width = 0;
        for (int i = 0; i + 1 < n; ++i) {
            in[perm[i]] = 1;
            width = std::max(width, prefix_cut(g, in));
        }
        if (best < 0 || width < best) best = width;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return n <= 1 ? 0 : best;
}

// Definition check: every nonempty induced subgraph has a vertex whose
// threshold reaches its induced degree.
inline bool brute_degenerate(const Instance& inst) {
    int n = inst.n();
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        bool has = false;
        for (Vertex v = 1; v <= n && !has; ++v) {
            if (!(s >> (v - 1) & 1)) continue;
            int deg = 0;
            for (Vertex u : inst.g.adj[v]) deg += (s >> (u - 1)) & 1;
            if (inst.t[v] >= deg) has = true;
        }
        if (!has) return false;
    }
    return true;
}

inline bool is_acyclic_without(const Graph& g, std::uint32_t removed) {
    int n = g.n;
    std::vector<int> indeg(n + 1, 0);
    for (const auto& [u, v] : g.edges)
        if (!((removed >> (u - 1)) & 1) && !((removed >> (v - 1)) & 1)) ++indeg[v];
    std::vector<Vertex> stack;
    int seen = 0;
    for (Vertex v = 1; v <= n; ++v)
        if (!((removed >> (v - 1)) & 1) && indeg[v] == 0) stack.push_back(v);
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        ++seen;
        for (Vertex u : g.adj[v])
            if (!((removed >> (u - 1)) & 1) && --indeg[u] == 0) stack.push_back(u);
    }
    int kept = 0;
    for (Vertex v = 1; v <= n; ++v) kept += !((removed >> (v - 1)) & 1);
    return seen == kept;
}

inline int brute_min_fvs(const Graph& g) {
    int n = g.n;
    for (int k = 0; k <= n; ++k)
        for (std::uint32_t s = 0; s < (1u << n); ++s)
            if (std::popcount(s) == k && is_acyclic_without(g, s)) return k;
    throw std::logic_error("brute_min_fvs: removing everything leaves a DAG");
}

// Asynchronous fixpoint: keep applying single-vertex updates in random order.
inline std::vector<char> async_closure(const Instance& inst, const VertexSet& seed,
                                       std::mt19937_64& eng) {
    int n = inst.n();
    std::vector<char> active(n + 1, 0);
    for (Vertex v : seed) active[v] = 1;
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = n - 1; i > 0; --i)
            std::swap(order[i], order[static_cast<int>(eng() % (i + 1))]);
        for (Vertex v : order) {
            if (active[v]) continue;
            int cnt = 0;
            for (Vertex u : inst.g.supporters(v)) cnt += active[u];
            if (cnt >= inst.t[v]) {
                active[v] = 1;
                changed = true;
            }
        }
    }
    return active;
}

// Random graph helpers for property tests; these deliberately do not reuse
// the library generators.

inline Graph random_graph(std::mt19937_64& eng, int n, int target_edges, bool directed) {
    std::vector<std::pair<int, int>> all;
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v) {
            if (u == v) continue;
            if (!directed && u > v) continue;
            all.emplace_back(u, v);
        }
    for (int i = static_cast<int>(all.size()) - 1; i > 0; --i)
        std::swap(all[i], all[static_cast<int>(eng() % (i + 1))]);
    int m = std::min<int>(target_edges, static_cast<int>(all.size()));
    std::vector<Edge> es;
    for (int i = 0; i < m; ++i) es.emplace_back(all[i].first, all[i].second);
    return Graph(n, directed, std::move(es));
}

// Arbitrary thresholds in [lo(v), hi(v)] given by callables.
template <class Lo, class Hi>
inline Instance random_thresholds(std::mt19937_64& eng, Graph g, Lo lo, Hi hi) {
    int n = g.n;
    std::vector<int> t(n + 1, 0);
    for (Vertex v = 1; v <= n; ++v) {
        int a = lo(g, v), b = hi(g, v);
        if (b < a) b = a;
        t[v] = a + static_cast<int>(eng() % static_cast<std::uint64_t>(b - a + 1));
    }
    return Instance(std::move(g), std::move(t));
}

// Degenerate-by-construction: pick a random order, give each vertex its back
// degree along it plus a small bump, capped at its full degree when asked.
inline Instance random_degenerate(std::mt19937_64& eng, int n, int target_edges, int max_bump,
                                  bool cap_at_degree) {
    Graph g = random_graph(eng, n, target_edges, false);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 1);
    for (int i = n - 1; i > 0; --i)
        std::swap(order[i], order[static_cast<int>(eng() % (i + 1))]);
    std::vector<int> pos(n + 1, 0);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<int> t(n + 1, 0);
    for (Vertex v = 1; v <= n; ++v) {
        int back = 0;
        for (Vertex u : g.adj[v]) back += pos[u] < pos[v];
        int bump = max_bump > 0 ? static_cast<int>(eng() % (max_bump + 1)) : 0;
        t[v] = back + bump;
        if (cap_at_degree) t[v] = std::min(t[v], g.degree(v));
        t[v] = std::max(t[v], back);
    }
    return Instance(std::move(g), std::move(t));
}

inline Instance random_weak_majority(std::mt19937_64& eng, int n, int target_edges,
                                     bool cap_at_degree) {
    Graph g = random_graph(eng, n, target_edges, false);
    std::vector<int> t(n + 1, 0);
    for (Vertex v = 1; v <= n; ++v) {
        int d = g.degree(v);
        int lo = (d + 1) / 2;
        int hi = cap_at_degree ? d : d + 1;
        if (hi < lo) hi = lo;
        t[v] = lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    return Instance(std::move(g), std::move(t));
}

}  // namespace testref
