#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "coatss/graph.hpp"

namespace coatss {

// A threshold instance: a graph plus one non-negative threshold per vertex.
// t[0] is unused. For target-set problems thresholds may exceed degrees;
// incentive problems additionally require t(v) <= degree(v), which the
// respective operations enforce.
struct Instance {
    Graph g;
    std::vector<int> t;  // size n+1

    Instance() : t(1, 0) {}

    Instance(Graph g_, std::vector<int> t_) : g(std::move(g_)), t(std::move(t_)) {
        if (static_cast<int>(t.size()) != g.n + 1)
            throw std::invalid_argument("instance: threshold vector size must be n+1");
        for (Vertex v = 1; v <= g.n; ++v)
            if (t[v] < 0)
                throw std::invalid_argument("instance: negative threshold at vertex " +
                                            std::to_string(v));
    }

    int n() const { return g.n; }
    int m() const { return g.m(); }

    long long threshold_sum() const {
        return std::accumulate(t.begin() + 1, t.end(), 0LL);
    }

    int min_threshold() const {
        int tm = 0;
        for (Vertex v = 1; v <= g.n; ++v) tm = (v == 1) ? t[v] : std::min(tm, t[v]);
        return g.n == 0 ? 0 : tm;
    }
    int max_threshold() const {
        int tm = 0;
        for (Vertex v = 1; v <= g.n; ++v) tm = std::max(tm, t[v]);
        return tm;
    }

    bool thresholds_within_degree() const {
        for (Vertex v = 1; v <= g.n; ++v)
            if (t[v] > g.activation_degree(v)) return false;
        return true;
    }
};

// Induced subgraph on `keep` (sorted, unique ids of the host), with vertices
// renumbered 1..|keep| in ascending host-id order. `origin[i]` gives the host
// id of new vertex i.
struct InducedInstance {
    Instance inst;
    std::vector<Vertex> origin;  // size |keep|+1
};

inline InducedInstance induced_instance(const Instance& host, const VertexSet& keep) {
    std::vector<int> new_id(host.n() + 1, 0);
    for (size_t i = 0; i < keep.size(); ++i) {
        Vertex v = keep[i];
        if (v < 1 || v > host.n()) throw std::invalid_argument("induced: vertex out of range");
        new_id[v] = static_cast<int>(i) + 1;
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : host.g.edges)
        if (new_id[u] && new_id[v]) edges.emplace_back(new_id[u], new_id[v]);
    std::vector<int> t(keep.size() + 1, 0);
    std::vector<Vertex> origin(keep.size() + 1, 0);
    for (size_t i = 0; i < keep.size(); ++i) {
        t[i + 1] = host.t[keep[i]];
        origin[i + 1] = keep[i];
    }
    InducedInstance out;
    out.inst = Instance(Graph(static_cast<int>(keep.size()), host.g.directed, std::move(edges)),
                        std::move(t));
    out.origin = std::move(origin);
    return out;
}

}  // namespace coatss
