#pragma once

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coatss/arrangement.hpp"
#include "coatss/dynamics.hpp"
#include "coatss/instance.hpp"

namespace coatss {

// Exhaustive solvers for small instances. Size ceilings default to 20
// (subset enumeration) and 22 (subset dynamic programs) and can be
// overridden through the COA_TSS_ORACLE_LIMIT environment variable;
// the dynamic programs additionally refuse n > 24 to bound memory.
inline int oracle_limit(int fallback) {
    if (const char* s = std::getenv("COA_TSS_ORACLE_LIMIT")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return fallback;
}

namespace detail {

// Supporter masks: bit u-1 of mask[v] is set iff u's activity counts toward v.
inline std::vector<std::uint64_t> supporter_masks(const Instance& inst) {
    std::vector<std::uint64_t> mask(inst.n() + 1, 0);
    for (Vertex v = 1; v <= inst.n(); ++v)
        for (Vertex u : inst.g.supporters(v)) mask[v] |= 1ULL << (u - 1);
    return mask;
}

inline std::uint64_t mask_closure(const std::vector<std::uint64_t>& sup,
                                  const std::vector<int>& t, int n, std::uint64_t seed) {
    std::uint64_t act = seed;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v = 1; v <= n; ++v) {
            std::uint64_t bit = 1ULL << (v - 1);
            if (act & bit) continue;
            if (__builtin_popcountll(sup[v] & act) >= t[v]) {
                act |= bit;
                changed = true;
            }
        }
    }
    return act;
}

}  // namespace detail

// Smallest contagious set; among minimum-size sets, the lexicographically
// least (as a sorted id list). Subset enumeration by increasing size.
inline VertexSet exact_min_target_set(const Instance& inst, int limit = oracle_limit(20)) {
    int n = inst.n();
    if (n > limit)
        throw std::invalid_argument("exact_min_target_set: n exceeds oracle limit " +
                                    std::to_string(limit));
    if (n > 64) throw std::invalid_argument("exact_min_target_set: n exceeds 64");
    auto sup = detail::supporter_masks(inst);
    std::uint64_t full = n == 64 ? ~0ULL : ((1ULL << n) - 1);
    if (detail::mask_closure(sup, inst.t, n, 0) == full) return {};

    // Vertices that cannot be activated by neighbors must be seeded.
    int forced = 0;
    for (Vertex v = 1; v <= n; ++v)
        if (inst.t[v] > inst.g.activation_degree(v)) ++forced;

    std::vector<int> idx;
    for (int k = std::max(1, forced); k <= n; ++k) {
        // Lexicographic k-combinations of 1..n.
        idx.assign(k, 0);
        for (int i = 0; i < k; ++i) idx[i] = i + 1;
        while (true) {
            std::uint64_t seed = 0;
            for (int i = 0; i < k; ++i) seed |= 1ULL << (idx[i] - 1);
            if (detail::mask_closure(sup, inst.t, n, seed) == full)
                return VertexSet(idx.begin(), idx.end());
            int i = k - 1;
            while (i >= 0 && idx[i] == n - (k - 1 - i)) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    throw std::logic_error("exact_min_target_set: no contagious set found");  // unreachable: V works
}

namespace detail {

struct IncentiveDp {
    bool feasible = false;
    IncentiveAssignment assignment;
};

// Subset DP over activation orders: f(S) = min over v in S of f(S \ v) plus
// the shortfall of v against its supporters inside S \ v. An optional per-
// vertex cap bounds how much may be paid to each vertex.
inline IncentiveDp exact_min_incentives_impl(const Instance& inst, const std::vector<int>* caps,
                                             int limit) {
    int n = inst.n();
    if (n > limit)
        throw std::invalid_argument("exact_min_incentives: n exceeds oracle limit " +
                                    std::to_string(limit));
    if (n > 24) throw std::invalid_argument("exact_min_incentives: n exceeds 24");
    if (!inst.thresholds_within_degree())
        throw std::invalid_argument("exact_min_incentives: threshold above degree");
    IncentiveDp out;
    if (n == 0) {
        out.feasible = true;
        out.assignment = IncentiveAssignment(0);
        return out;
    }
    auto sup = detail::supporter_masks(inst);
    const std::uint32_t INF = std::numeric_limits<std::uint32_t>::max();
    size_t size = 1ULL << n;
    std::vector<std::uint32_t> f(size, INF);
    std::vector<std::uint8_t> choice(size, 0);
    f[0] = 0;
    for (std::uint64_t s = 1; s < size; ++s) {
        std::uint32_t best = INF;
        std::uint8_t pick = 0;
        for (int v = 1; v <= n; ++v) {
            std::uint64_t bit = 1ULL << (v - 1);
            if (!(s & bit)) continue;
            std::uint64_t rest = s ^ bit;
            if (f[rest] == INF) continue;
            int have = __builtin_popcountll(sup[v] & rest);
            int short_v = inst.t[v] > have ? inst.t[v] - have : 0;
            if (caps && short_v > (*caps)[v]) continue;
            std::uint32_t cand = f[rest] + static_cast<std::uint32_t>(short_v);
            if (cand < best) {
                best = cand;
                pick = static_cast<std::uint8_t>(v);
            }
        }
        f[s] = best;
        choice[s] = pick;
    }
    std::uint64_t full = size - 1;
    if (f[full] == INF) return out;  // only possible with caps
    out.feasible = true;
    out.assignment = IncentiveAssignment(n);
    std::uint64_t s = full;
    while (s) {
        int v = choice[s];
        std::uint64_t rest = s ^ (1ULL << (v - 1));
        int have = __builtin_popcountll(sup[v] & rest);
        out.assignment.q[v] = inst.t[v] > have ? inst.t[v] - have : 0;
        s = rest;
    }
    return out;
}

}  // namespace detail

// Minimum-weight valid incentive assignment (thresholds must not exceed
// degrees, so paying every threshold is always feasible).
inline IncentiveAssignment exact_min_incentives(const Instance& inst,
                                                int limit = oracle_limit(22)) {
    return detail::exact_min_incentives_impl(inst, nullptr, limit).assignment;
}

// Same, but q(v) <= caps[v] per vertex; infeasible instances yield nullopt.
inline std::optional<IncentiveAssignment> exact_min_incentives_capped(
    const Instance& inst, const std::vector<int>& caps, int limit = oracle_limit(22)) {
    if (static_cast<int>(caps.size()) != inst.n() + 1)
        throw std::invalid_argument("exact_min_incentives_capped: caps size must be n+1");
    auto res = detail::exact_min_incentives_impl(inst, &caps, limit);
    if (!res.feasible) return std::nullopt;
    return res.assignment;
}

// Exact cutwidth by subset DP: g(S) = max(cut(S), min over v in S of
// g(S \ v)), where S is the prefix set. Arcs count in either direction.
inline Arrangement exact_cutwidth(const Graph& graph, int limit = oracle_limit(22)) {
    int n = graph.n;
    if (n > limit)
        throw std::invalid_argument("exact_cutwidth: n exceeds oracle limit " +
                                    std::to_string(limit));
    if (n > 24) throw std::invalid_argument("exact_cutwidth: n exceeds 24");
    Arrangement arr;
    arr.exact = true;
    arr.order.assign(n + 1, 0);
    if (n == 0) return arr;

    // Adjacency with multiplicity 2 where anti-parallel arcs coincide.
    std::vector<std::uint64_t> nb(n + 1, 0), nb2(n + 1, 0);
    std::vector<int> deg(n + 1, 0);
    for (const auto& [u, v] : graph.edges) {
        std::uint64_t bu = 1ULL << (u - 1), bv = 1ULL << (v - 1);
        if (nb[u] & bv) {
            nb2[u] |= bv;
            nb2[v] |= bu;
        } else {
            nb[u] |= bv;
            nb[v] |= bu;
        }
        ++deg[u];
        ++deg[v];
    }
    size_t size = 1ULL << n;
    std::vector<std::uint32_t> cut(size, 0), g(size, 0);
    std::vector<std::uint8_t> choice(size, 0);
    const std::uint32_t INF = std::numeric_limits<std::uint32_t>::max();
    for (std::uint64_t s = 1; s < size; ++s) {
        int low = __builtin_ctzll(s);
        std::uint64_t rest0 = s & (s - 1);
        int v0 = low + 1;
        int inside = __builtin_popcountll(nb[v0] & rest0) + __builtin_popcountll(nb2[v0] & rest0);
        cut[s] = cut[rest0] + static_cast<std::uint32_t>(deg[v0]) -
                 2 * static_cast<std::uint32_t>(inside);
        std::uint32_t best = INF;
        std::uint8_t pick = 0;
        for (int v = 1; v <= n; ++v) {
            std::uint64_t bit = 1ULL << (v - 1);
            if (!(s & bit)) continue;
            std::uint32_t cand = g[s ^ bit];
            if (cand < best) {
                best = cand;
                pick = static_cast<std::uint8_t>(v);
            }
        }
        g[s] = std::max(best, cut[s]);
        choice[s] = pick;
    }
    std::uint64_t s = size - 1;
    arr.width = g[s];
    for (int pos = n; pos >= 1; --pos) {
        int v = choice[s];
        arr.order[pos] = v;
        s ^= 1ULL << (v - 1);
    }
    return arr;
}

}  // namespace coatss
