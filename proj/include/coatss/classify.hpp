#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coatss/instance.hpp"

namespace coatss {

// Ordering v_1..v_n with back_degree[i] = number of neighbors of order[i]
// among order[1..i-1]; a valid witness satisfies t(order[i]) >= back_degree[i].
struct Ordering {
    std::vector<Vertex> order;      // size n+1, order[0] unused
    std::vector<int> back_degree;   // size n+1, aligned with order
};

struct DegeneracyResult {
    bool ok = false;
    Ordering ordering;      // valid iff ok
    VertexSet witness;      // iff !ok: a vertex set whose induced subgraph has
                            // every vertex with threshold < its induced degree
};

struct NotDegenerateError : std::invalid_argument {
    VertexSet witness;
    explicit NotDegenerateError(VertexSet w)
        : std::invalid_argument("instance is not degenerate"), witness(std::move(w)) {}
};

// Peels from the back: repeatedly pick the lowest-id remaining vertex whose
// threshold is at least its degree in the remaining induced subgraph and place
// it at the last open position. Undirected instances only.
inline DegeneracyResult degeneracy_ordering(const Instance& inst) {
    if (inst.g.directed)
        throw std::invalid_argument("degeneracy_ordering: undirected instances only");
    int n = inst.n();
    DegeneracyResult res;
    res.ordering.order.assign(n + 1, 0);
    res.ordering.back_degree.assign(n + 1, 0);
    std::vector<int> deg(n + 1, 0);
    std::vector<char> removed(n + 1, 0);
    for (Vertex v = 1; v <= n; ++v) deg[v] = inst.g.degree(v);
    for (int pos = n; pos >= 1; --pos) {
        Vertex pick = 0;
        for (Vertex v = 1; v <= n; ++v)
            if (!removed[v] && inst.t[v] >= deg[v]) {
                pick = v;
                break;
            }
        if (pick == 0) {
            std::vector<Vertex> rest;
            for (Vertex v = 1; v <= n; ++v)
                if (!removed[v]) rest.push_back(v);
            res.ok = false;
            res.witness = make_vertex_set(std::move(rest));
            res.ordering = Ordering{};
            return res;
        }
        res.ordering.order[pos] = pick;
        res.ordering.back_degree[pos] = deg[pick];
        removed[pick] = 1;
        for (Vertex u : inst.g.adj[pick])
            if (!removed[u]) --deg[u];
    }
    res.ok = true;
    return res;
}

// Exact maximum of activation_degree(v)/t(v) as a fraction; only defined when
// every threshold is positive.
struct Ratio {
    long long num = 0;
    long long den = 1;
    double value() const { return den == 0 ? 0.0 : static_cast<double>(num) / den; }
};

struct ClassReport {
    int n = 0;
    int m = 0;
    bool directed = false;
    int max_degree = 0;
    double avg_degree = 0.0;
    long long threshold_sum = 0;

    std::optional<bool> coa;              // sum of thresholds >= half the degree sum
    std::optional<bool> weak_majority;    // t(v) >= d(v)/2 everywhere
    std::optional<bool> strict_majority;  // t(v) > d(v)/2 everywhere
    std::optional<bool> balanced;  // t_u/d_u + t_v/d_v >= 1 per edge; needs t >= 1
    std::optional<bool> degenerate;
    std::optional<Ratio> influence_ratio;  // max d(v)/t(v); needs t >= 1

    // Digraph-only classes.
    std::optional<bool> extremal;   // t(v) in {1, in_degree(v)}
    std::optional<bool> unanimous;  // t(v) = in_degree(v)
    std::optional<bool> restricted; // degree profiles {(1,2),(2,1)} with equal counts
};

// The undirected threshold classes are left unset for digraphs, and the
// digraph classes for undirected instances; nothing throws.
inline ClassReport classify(const Instance& inst) {
    ClassReport r;
    const Graph& g = inst.g;
    r.n = inst.n();
    r.m = inst.m();
    r.directed = g.directed;
    r.max_degree = g.max_degree();
    r.avg_degree = g.avg_degree();
    r.threshold_sum = inst.threshold_sum();

    if (!g.directed) {
        // CoA: 2*sum(t) >= sum(d) = 2m.
        r.coa = r.threshold_sum >= r.m;
        bool weak = true, strict = true;
        bool all_positive = true;
        for (Vertex v = 1; v <= g.n; ++v) {
            int d = g.degree(v);
            if (2 * inst.t[v] < d) weak = false;
            if (2 * inst.t[v] <= d) strict = false;
            if (inst.t[v] < 1) all_positive = false;
        }
        r.weak_majority = weak;
        r.strict_majority = strict;
        if (all_positive) {
            bool bal = true;
            for (const auto& [u, v] : g.edges) {
                long long du = g.degree(u), dv = g.degree(v);
                // t_u/d_u + t_v/d_v >= 1  <=>  t_u*d_v + t_v*d_u >= d_u*d_v
                if (static_cast<long long>(inst.t[u]) * dv +
                        static_cast<long long>(inst.t[v]) * du <
                    du * dv)
                    bal = false;
            }
            r.balanced = bal;
            Ratio best{0, 1};
            for (Vertex v = 1; v <= g.n; ++v) {
                long long d = g.degree(v), tv = inst.t[v];
                if (d * best.den > best.num * tv) best = Ratio{d, tv};
            }
            r.influence_ratio = best;
        }
        r.degenerate = degeneracy_ordering(inst).ok;
    } else {
        bool ext = true, una = true;
        for (Vertex v = 1; v <= g.n; ++v) {
            int din = g.in_degree(v);
            if (inst.t[v] != din) una = false;
            if (inst.t[v] != 1 && inst.t[v] != din) ext = false;
        }
        r.extremal = ext;
        r.unanimous = una;
        bool restr = true;
        int c12 = 0, c21 = 0;
        for (Vertex v = 1; v <= g.n; ++v) {
            int din = g.in_degree(v), dout = g.out_degree(v);
            if (din == 1 && dout == 2)
                ++c12;
            else if (din == 2 && dout == 1)
                ++c21;
            else
                restr = false;
        }
        r.restricted = restr && c12 == c21;
    }
    return r;
}

}  // namespace coatss
