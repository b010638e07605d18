#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coatss/instance.hpp"

namespace coatss {

// Synchronous spread: seeds are active at round 0; in each later round every
// inactive vertex with at least t(v) active supporters at the end of the
// previous round activates. Threshold-0 vertices therefore activate at round 1
// even when unseeded. Runs in O(n + m).
struct ActivationTrace {
    VertexSet seed;
    std::vector<std::pair<int, Vertex>> order;  // (round, vertex), seeds at round 0
    std::vector<char> active;                   // size n+1
    int active_count = 0;
    bool stalled = false;                       // true iff some vertex never activates
    int rounds = 0;

    bool covers_all(int n) const { return active_count == n; }
};

inline ActivationTrace closure(const Instance& inst, const VertexSet& seed) {
    int n = inst.n();
    ActivationTrace tr;
    tr.seed = seed;
    tr.active.assign(n + 1, 0);
    std::vector<int> cnt(n + 1, 0);
    std::vector<Vertex> frontier;
    for (Vertex v : seed) {
        if (v < 1 || v > n) throw std::invalid_argument("closure: seed vertex out of range");
        if (!tr.active[v]) {
            tr.active[v] = 1;
            ++tr.active_count;
            tr.order.emplace_back(0, v);
            frontier.push_back(v);
        }
    }
    for (Vertex v : frontier)
        for (Vertex u : inst.g.influence(v)) ++cnt[u];

    // Round 1 scans everything: seeds may already satisfy neighbors, and
    // threshold-0 vertices start on their own.
    std::vector<Vertex> next;
    for (Vertex v = 1; v <= n; ++v)
        if (!tr.active[v] && cnt[v] >= inst.t[v]) next.push_back(v);

    int round = 0;
    while (!next.empty()) {
        ++round;
        frontier = std::move(next);
        next.clear();
        for (Vertex v : frontier) {
            tr.active[v] = 1;
            ++tr.active_count;
            tr.order.emplace_back(round, v);
        }
        std::vector<Vertex> cand;
        for (Vertex v : frontier)
            for (Vertex u : inst.g.influence(v)) {
                ++cnt[u];
                if (!tr.active[u]) cand.push_back(u);
            }
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        for (Vertex u : cand)
            if (!tr.active[u] && cnt[u] >= inst.t[u]) next.push_back(u);
    }
    tr.rounds = round;
    tr.stalled = tr.active_count != n;
    return tr;
}

inline bool is_contagious(const Instance& inst, const VertexSet& seed) {
    return closure(inst, seed).covers_all(inst.n());
}

// An incentive assignment q with 0 <= q(v) <= t(v); valid only on instances
// whose thresholds do not exceed degrees.
struct IncentiveAssignment {
    std::vector<int> q;  // size n+1

    IncentiveAssignment() : q(1, 0) {}
    explicit IncentiveAssignment(int n) : q(n + 1, 0) {}
    explicit IncentiveAssignment(std::vector<int> q_) : q(std::move(q_)) {}

    long long weight() const {
        long long w = 0;
        for (size_t v = 1; v < q.size(); ++v) w += q[v];
        return w;
    }
};

// Residual instance with thresholds t(v) - q(v).
inline Instance apply_incentives(const Instance& inst, const IncentiveAssignment& ia) {
    if (static_cast<int>(ia.q.size()) != inst.n() + 1)
        throw std::invalid_argument("apply_incentives: assignment size must be n+1");
    std::vector<int> t2(inst.n() + 1, 0);
    for (Vertex v = 1; v <= inst.n(); ++v) {
        if (ia.q[v] < 0)
            throw std::invalid_argument("apply_incentives: negative incentive at vertex " +
                                        std::to_string(v));
        if (ia.q[v] > inst.t[v])
            throw std::invalid_argument("apply_incentives: incentive exceeds threshold at vertex " +
                                        std::to_string(v));
        t2[v] = inst.t[v] - ia.q[v];
    }
    return Instance(inst.g, std::move(t2));
}

// Valid iff the residual thresholds activate everything from the empty seed.
// Requires t(v) <= degree(v) on the instance (the incentive model's domain).
inline bool is_valid_incentive(const Instance& inst, const IncentiveAssignment& ia) {
    if (!inst.thresholds_within_degree())
        throw std::invalid_argument("is_valid_incentive: instance has a threshold above degree");
    Instance resid = apply_incentives(inst, ia);
    return is_contagious(resid, {});
}

// Prefix cuts of a vertex ordering: cuts[k] = number of edges between the
// first k vertices and the rest, k = 1..n. Arcs count in either direction.
struct CutProfile {
    std::vector<Vertex> ordering;   // size n+1, [1..n]
    std::vector<long long> cuts;    // size n+1, cuts[0] = 0
    long long width = 0;
};

inline CutProfile cut_profile(const Graph& g, const std::vector<Vertex>& order) {
    int n = g.n;
    std::vector<Vertex> ord;
    if (static_cast<int>(order.size()) == n + 1 && (n == 0 || order[0] == 0))
        ord = order;
    else {
        ord.assign(1, 0);
        ord.insert(ord.end(), order.begin(), order.end());
    }
    if (static_cast<int>(ord.size()) != n + 1)
        throw std::invalid_argument("cut_profile: ordering must list all n vertices");
    std::vector<int> pos(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        Vertex v = ord[i];
        if (v < 1 || v > n || pos[v] != 0)
            throw std::invalid_argument("cut_profile: ordering is not a permutation of 1..n");
        pos[v] = i;
    }
    CutProfile cp;
    cp.ordering = std::move(ord);
    cp.cuts.assign(n + 1, 0);
    std::vector<long long> diff(n + 2, 0);
    for (const auto& [u, v] : g.edges) {
        int a = std::min(pos[u], pos[v]), b = std::max(pos[u], pos[v]);
        diff[a] += 1;
        diff[b] -= 1;
    }
    long long run = 0;
    for (int k = 1; k <= n; ++k) {
        run += diff[k];
        cp.cuts[k] = run;
        cp.width = std::max(cp.width, run);
    }
    return cp;
}

}  // namespace coatss
