#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coatss {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;  // sorted, unique

// Vertices are 1..n. Undirected edges are stored with u < v; arcs keep
// their direction. No self-loops, no duplicate edges (anti-parallel arcs
// are allowed in digraphs).
struct Graph {
    int n = 0;
    bool directed = false;
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> adj;     // undirected: neighbors; directed: out-neighbors
    std::vector<std::vector<Vertex>> in_adj;  // directed only

    Graph() = default;

    Graph(int n_, bool directed_, std::vector<Edge> edges_) {
        if (n_ < 0) throw std::invalid_argument("graph: negative vertex count");
        n = n_;
        directed = directed_;
        edges = std::move(edges_);
        for (auto& [u, v] : edges) {
            if (u < 1 || u > n || v < 1 || v > n)
                throw std::invalid_argument("graph: vertex out of range on edge (" +
                                            std::to_string(u) + "," + std::to_string(v) + ")");
            if (u == v)
                throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
            if (!directed && u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw std::invalid_argument("graph: duplicate edge");
        adj.assign(n + 1, {});
        if (directed) in_adj.assign(n + 1, {});
        for (const auto& [u, v] : edges) {
            adj[u].push_back(v);
            if (directed)
                in_adj[v].push_back(u);
            else
                adj[v].push_back(u);
        }
        for (auto& a : adj) std::sort(a.begin(), a.end());
        for (auto& a : in_adj) std::sort(a.begin(), a.end());
    }

    int m() const { return static_cast<int>(edges.size()); }

    // Undirected degree.
    int degree(Vertex v) const { return static_cast<int>(adj[v].size()); }
    int out_degree(Vertex v) const { return static_cast<int>(adj[v].size()); }
    int in_degree(Vertex v) const { return static_cast<int>(in_adj[v].size()); }
    int total_degree(Vertex v) const {
        return directed ? in_degree(v) + out_degree(v) : degree(v);
    }
    // Degree the activation rule compares thresholds against: in-degree for
    // digraphs, plain degree otherwise.
    int activation_degree(Vertex v) const { return directed ? in_degree(v) : degree(v); }
    // Vertices whose activation can be influenced by v becoming active.
    const std::vector<Vertex>& influence(Vertex v) const { return adj[v]; }
    // Vertices whose activity counts toward v's threshold.
    const std::vector<Vertex>& supporters(Vertex v) const {
        return directed ? in_adj[v] : adj[v];
    }

    int max_degree() const {
        int d = 0;
        for (Vertex v = 1; v <= n; ++v) d = std::max(d, total_degree(v));
        return d;
    }
    double avg_degree() const { return n == 0 ? 0.0 : 2.0 * m() / n; }

    bool has_edge(Vertex u, Vertex v) const {
        if (!directed && u > v) std::swap(u, v);
        return std::binary_search(edges.begin(), edges.end(), Edge{u, v});
    }
};

inline VertexSet make_vertex_set(std::vector<Vertex> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

inline bool set_contains(const VertexSet& s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
}

}  // namespace coatss
