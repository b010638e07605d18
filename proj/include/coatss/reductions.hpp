#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coatss/classify.hpp"
#include "coatss/dynamics.hpp"
#include "coatss/instance.hpp"

namespace coatss {

// An instance transformation with solution maps. `push` carries a source
// solution to the target, `lift` carries a target solution back;
// `correspondence` states the declared optimum relation. `vertex_map` lists
// the target ids standing in for each source vertex, and `notes` records
// extra gadget bookkeeping (one comment-ready line each).
struct Reduction {
    Instance source;
    Instance target;
    std::string correspondence;
    std::function<VertexSet(const VertexSet&)> push;
    std::function<VertexSet(const VertexSet&)> lift;
    std::map<Vertex, std::vector<Vertex>> vertex_map;
    std::vector<std::string> notes;
};

// Feedback vertex set as unanimous-threshold spread: S breaks all cycles of
// the digraph iff seeding S activates everything under t(v) = in_degree(v).
inline Reduction fvs_as_unanimous_tss(const Graph& g) {
    if (!g.directed) throw std::invalid_argument("fvs_as_unanimous_tss: digraphs only");
    std::vector<int> t(g.n + 1, 0);
    for (Vertex v = 1; v <= g.n; ++v) t[v] = g.in_degree(v);
    Reduction r;
    r.source = Instance(g, t);
    r.target = r.source;
    r.correspondence =
        "S is a feedback vertex set of the source digraph iff S is a target set of the "
        "unanimous-threshold instance; optima coincide";
    r.push = [](const VertexSet& s) { return s; };
    r.lift = [](const VertexSet& s) { return s; };
    for (Vertex v = 1; v <= g.n; ++v) r.vertex_map[v] = {v};
    return r;
}

// Topological order of g minus the seeded set, as an activation schedule
// witness; empty optional when a cycle survives.
inline std::optional<std::vector<Vertex>> fvs_activation_witness(const Graph& g,
                                                                 const VertexSet& s) {
    if (!g.directed) throw std::invalid_argument("fvs_activation_witness: digraphs only");
    std::vector<char> removed(g.n + 1, 0);
    for (Vertex v : s) {
        if (v < 1 || v > g.n) throw std::invalid_argument("fvs_activation_witness: bad vertex");
        removed[v] = 1;
    }
    std::vector<int> indeg(g.n + 1, 0);
    for (const auto& [u, v] : g.edges)
        if (!removed[u] && !removed[v]) ++indeg[v];
    std::vector<Vertex> order;
    std::vector<Vertex> ready;
    for (Vertex v = 1; v <= g.n; ++v)
        if (!removed[v] && indeg[v] == 0) ready.push_back(v);
    std::sort(ready.rbegin(), ready.rend());
    while (!ready.empty()) {
        Vertex v = ready.back();
        ready.pop_back();
        order.push_back(v);
        std::vector<Vertex> fresh;
        for (Vertex u : g.adj[v])
            if (!removed[u] && --indeg[u] == 0) fresh.push_back(u);
        for (Vertex u : fresh) ready.push_back(u);
        std::sort(ready.rbegin(), ready.rend());
    }
    size_t kept = 0;
    for (Vertex v = 1; v <= g.n; ++v) kept += !removed[v];
    if (order.size() != kept) return std::nullopt;
    return order;
}

namespace detail {

// One renumbering step: a vertex disappears, survivors shift down, fresh
// gadget ids are appended. Kept as data so push/lift can be composed.
struct SplitStep {
    Vertex replaced;                  // id in the graph this step saw
    std::vector<Vertex> old_to_new;   // survivors, 0 for the replaced vertex
    std::vector<Vertex> new_to_old;   // inverse for survivors, 0 for gadget ids
    Vertex push_target;               // gadget vertex standing in for `replaced`
    Vertex gadget_lo, gadget_hi;      // gadget id range in the new graph
};

}  // namespace detail

// Splits every vertex of total degree above three of an extremal-threshold
// digraph into a path gadget, preserving the optimum target-set size exactly.
// Requires every vertex to have an in- and an out-neighbor.
inline Reduction split_extremal_degrees(const Instance& inst) {
    if (!inst.g.directed) throw std::invalid_argument("split_extremal_degrees: digraphs only");
    for (Vertex v = 1; v <= inst.n(); ++v) {
        if (inst.t[v] != 1 && inst.t[v] != inst.g.in_degree(v))
            throw std::invalid_argument("split_extremal_degrees: thresholds must be extremal");
        if (inst.g.in_degree(v) < 1 || inst.g.out_degree(v) < 1)
            throw std::invalid_argument(
                "split_extremal_degrees: every vertex needs an in- and an out-neighbor");
    }
    auto steps = std::make_shared<std::vector<detail::SplitStep>>();
    Instance cur = inst;
    Reduction r;
    r.source = inst;
    while (true) {
        Vertex big = 0;
        for (Vertex v = 1; v <= cur.n(); ++v)
            if (cur.g.total_degree(v) > 3) {
                big = v;
                break;
            }
        if (big == 0) break;
        int n = cur.n();
        std::vector<Vertex> ins = cur.g.in_adj[big];
        std::vector<Vertex> outs = cur.g.adj[big];
        int k = static_cast<int>(ins.size()), l = static_cast<int>(outs.size());
        detail::SplitStep step;
        step.replaced = big;
        step.old_to_new.assign(n + 1, 0);
        int next = 0;
        for (Vertex v = 1; v <= n; ++v)
            if (v != big) step.old_to_new[v] = ++next;
        step.new_to_old.assign(n - 1 + k + l + 1, 0);
        for (Vertex v = 1; v <= n; ++v)
            if (v != big) step.new_to_old[step.old_to_new[v]] = v;
        step.gadget_lo = n;             // ids n .. n-1+k+l in the new graph
        step.gadget_hi = n - 1 + k + l;
        auto u_id = [&](int i) { return n - 1 + i; };          // u'_1..u'_k
        auto w_id = [&](int i) { return n - 1 + k + i; };      // w'_1..w'_l
        step.push_target = w_id(1);

        std::vector<Edge> edges;
        for (const auto& [a, b] : cur.g.edges)
            if (a != big && b != big) edges.emplace_back(step.old_to_new[a], step.old_to_new[b]);
        for (int i = 1; i < k; ++i) edges.emplace_back(u_id(i), u_id(i + 1));
        for (int i = 1; i < l; ++i) edges.emplace_back(w_id(i), w_id(i + 1));
        edges.emplace_back(u_id(k), w_id(1));
        for (int i = 1; i <= k; ++i) edges.emplace_back(step.old_to_new[ins[i - 1]], u_id(i));
        for (int i = 1; i <= l; ++i) edges.emplace_back(w_id(i), step.old_to_new[outs[i - 1]]);

        std::vector<int> t(n - 1 + k + l + 1, 0);
        for (Vertex v = 1; v <= n; ++v)
            if (v != big) t[step.old_to_new[v]] = cur.t[v];
        if (cur.t[big] == 1) {
            for (int i = 1; i <= k; ++i) t[u_id(i)] = 1;
            for (int i = 1; i <= l; ++i) t[w_id(i)] = 1;
        } else {  // t(big) = in_degree(big)
            t[u_id(1)] = 1;
            for (int i = 2; i <= k; ++i) t[u_id(i)] = 2;
            for (int i = 1; i <= l; ++i) t[w_id(i)] = 1;
        }
        cur = Instance(Graph(n - 1 + k + l, true, std::move(edges)), std::move(t));
        steps->push_back(std::move(step));
    }
    r.target = cur;
    r.correspondence = "optimum target-set sizes of source and target coincide";
    r.push = [steps](const VertexSet& s) {
        VertexSet out = s;
        for (const auto& st : *steps) {
            std::vector<Vertex> mapped;
            for (Vertex v : out)
                mapped.push_back(v == st.replaced ? st.push_target : st.old_to_new[v]);
            out = make_vertex_set(std::move(mapped));
        }
        return out;
    };
    r.lift = [steps](const VertexSet& s) {
        VertexSet out = s;
        for (auto it = steps->rbegin(); it != steps->rend(); ++it) {
            std::vector<Vertex> mapped;
            for (Vertex v : out)
                mapped.push_back(v >= it->gadget_lo && v <= it->gadget_hi ? it->replaced
                                                                          : it->new_to_old[v]);
            out = make_vertex_set(std::move(mapped));
        }
        return out;
    };
    // Forward image of each source vertex: survivors by composed renumbering,
    // replaced vertices by their gadget range at replacement time.
    for (Vertex v = 1; v <= inst.n(); ++v) {
        VertexSet image = r.push({v});
        r.vertex_map[v] = image;
    }
    for (const auto& st : *steps)
        r.notes.push_back("split step replaced a vertex; gadget ids now under composition");
    return r;
}

// Simulates each arc with a four-vertex one-way gadget, turning a digraph of
// total degree at most three with thresholds in {1,2} into an undirected
// instance with the same optimum target-set size.
inline Reduction directed_to_undirected(const Instance& inst) {
    if (!inst.g.directed) throw std::invalid_argument("directed_to_undirected: digraphs only");
    for (Vertex v = 1; v <= inst.n(); ++v) {
        if (inst.g.total_degree(v) > 3)
            throw std::invalid_argument("directed_to_undirected: total degree above 3");
        if (inst.t[v] != 1 && inst.t[v] != 2)
            throw std::invalid_argument("directed_to_undirected: thresholds must be 1 or 2");
    }
    int n = inst.n();
    std::vector<Edge> edges;
    std::vector<int> t(inst.t);
    auto arc_tail = std::make_shared<std::vector<Vertex>>(n + 1, 0);  // gadget id -> arc tail
    Reduction r;
    r.source = inst;
    int next = n;
    for (const auto& [a, b] : inst.g.edges) {
        int u1 = ++next, u2 = ++next, u3 = ++next, u4 = ++next;
        arc_tail->resize(next + 1, 0);
        (*arc_tail)[u1] = (*arc_tail)[u2] = (*arc_tail)[u3] = (*arc_tail)[u4] = a;
        edges.emplace_back(u1, a);
        edges.emplace_back(u1, u2);
        edges.emplace_back(u1, u3);
        edges.emplace_back(u2, u3);
        edges.emplace_back(u4, u2);
        edges.emplace_back(u4, u3);
        edges.emplace_back(u4, b);
        t.push_back(1);
        t.push_back(1);
        t.push_back(2);
        t.push_back(2);
        r.notes.push_back("# arc " + std::to_string(a) + " -> " + std::to_string(b) +
                          " simulated by vertices " + std::to_string(u1) + ".." +
                          std::to_string(u4));
    }
    r.target = Instance(Graph(next, false, std::move(edges)), std::move(t));
    r.correspondence = "optimum target-set sizes of source and target coincide";
    r.push = [](const VertexSet& s) { return s; };
    int n_src = n;
    r.lift = [arc_tail, n_src](const VertexSet& s) {
        std::vector<Vertex> out;
        for (Vertex v : s) out.push_back(v <= n_src ? v : (*arc_tail)[v]);
        return make_vertex_set(std::move(out));
    };
    for (Vertex v = 1; v <= n; ++v) r.vertex_map[v] = {v};
    return r;
}

// Two copies of a graph with degrees two and three, joined by a matching on
// the degree-two vertices: the target is 3-regular and its optimum lies
// between the source optimum and twice it.
inline Reduction duplicate_to_cubic(const Instance& inst) {
    if (inst.g.directed) throw std::invalid_argument("duplicate_to_cubic: undirected only");
    for (Vertex v = 1; v <= inst.n(); ++v) {
        int d = inst.g.degree(v);
        if (d != 2 && d != 3)
            throw std::invalid_argument("duplicate_to_cubic: degrees must be 2 or 3");
        if (inst.t[v] != 1 && inst.t[v] != 2)
            throw std::invalid_argument("duplicate_to_cubic: thresholds must be 1 or 2");
    }
    int n = inst.n();
    std::vector<Edge> edges;
    for (const auto& [u, v] : inst.g.edges) {
        edges.emplace_back(u, v);
        edges.emplace_back(u + n, v + n);
    }
    for (Vertex v = 1; v <= n; ++v)
        if (inst.g.degree(v) == 2) edges.emplace_back(v, v + n);
    std::vector<int> t(2 * n + 1, 0);
    for (Vertex v = 1; v <= n; ++v) t[v] = t[v + n] = inst.t[v];
    Reduction r;
    r.source = inst;
    r.target = Instance(Graph(2 * n, false, std::move(edges)), std::move(t));
    for (Vertex v = 1; v <= 2 * n; ++v)
        if (r.target.g.degree(v) != 3)
            throw std::logic_error("duplicate_to_cubic: target failed to be 3-regular");
    r.correspondence =
        "source optimum <= target optimum <= 2 * source optimum (copy both sides / project)";
    r.push = [n](const VertexSet& s) {
        std::vector<Vertex> out;
        for (Vertex v : s) {
            out.push_back(v);
            out.push_back(v + n);
        }
        return make_vertex_set(std::move(out));
    };
    r.lift = [n](const VertexSet& s) {
        std::vector<Vertex> out;
        for (Vertex v : s) out.push_back(v > n ? v - n : v);
        return make_vertex_set(std::move(out));
    };
    for (Vertex v = 1; v <= n; ++v) r.vertex_map[v] = {v, v + n};
    return r;
}

// Adds three vertices adjacent to every original vertex, raising original
// thresholds by three; the triple joins every solution, and dropping it from
// a target solution leaves a source solution.
inline Reduction wrap_universal_triple(const Instance& inst) {
    if (inst.g.directed) throw std::invalid_argument("wrap_universal_triple: undirected only");
    int n = inst.n();
    std::vector<Edge> edges = inst.g.edges;
    for (int j = 1; j <= 3; ++j)
        for (Vertex v = 1; v <= n; ++v) edges.emplace_back(n + j, v);
    std::vector<int> t(n + 4, 0);
    for (Vertex v = 1; v <= n; ++v) t[v] = inst.t[v] + 3;
    for (int j = 1; j <= 3; ++j) t[n + j] = n;
    Reduction r;
    r.source = inst;
    r.target = Instance(Graph(n + 3, false, std::move(edges)), std::move(t));
    r.correspondence = "source optimum <= target optimum <= source optimum + 3";
    VertexSet triple{n + 1, n + 2, n + 3};
    r.push = [triple](const VertexSet& s) {
        std::vector<Vertex> out(s);
        out.insert(out.end(), triple.begin(), triple.end());
        return make_vertex_set(std::move(out));
    };
    int n_src = n;
    r.lift = [n_src](const VertexSet& s) {
        std::vector<Vertex> out;
        for (Vertex v : s)
            if (v <= n_src) out.push_back(v);
        return make_vertex_set(std::move(out));
    };
    for (Vertex v = 1; v <= n; ++v) r.vertex_map[v] = {v};
    r.notes.push_back("# universal vertices " + std::to_string(n + 1) + " " +
                      std::to_string(n + 2) + " " + std::to_string(n + 3));
    return r;
}

enum class LadderVariant { t2, t3 };

// Appends the eight-vertex wrapped ladder, deletes one rung, and wires its
// open ends to u and w. Variant t2 gives every gadget vertex threshold 2;
// variant t3 gives threshold 3 and raises the thresholds of u and w by one.
// The gadget needs exactly 2 (t2) or 3 (t3) internal seeds once u and w are
// active.
inline Instance attach_ladder(const Instance& inst, Vertex u, Vertex w, LadderVariant variant) {
    if (inst.g.directed) throw std::invalid_argument("attach_ladder: undirected only");
    if (u < 1 || u > inst.n() || w < 1 || w > inst.n())
        throw std::invalid_argument("attach_ladder: attachment vertex out of range");
    if (u == w) throw std::invalid_argument("attach_ladder: attachment vertices must differ");
    int n = inst.n();
    auto s_id = [n](int i) { return n + 1 + i; };      // s_0..s_3
    auto t_id = [n](int i) { return n + 5 + i; };      // t_0..t_3
    std::vector<Edge> edges = inst.g.edges;
    for (int i = 0; i < 4; ++i) {
        int j = (i + 1) % 4;
        if (!(i == 1))  // the (s_1, s_2) rung is deleted
            edges.emplace_back(s_id(i), s_id(j));
        edges.emplace_back(t_id(i), t_id(j));
        edges.emplace_back(s_id(i), t_id(j));
        edges.emplace_back(t_id(i), s_id(j));
    }
    edges.emplace_back(s_id(1), u);
    edges.emplace_back(s_id(2), w);
    std::vector<int> t(inst.t);
    t.resize(n + 9, 0);
    int gadget_t = variant == LadderVariant::t2 ? 2 : 3;
    for (int i = 0; i < 8; ++i) t[n + 1 + i] = gadget_t;
    if (variant == LadderVariant::t3) {
        t[u] += 1;
        t[w] += 1;
    }
    return Instance(Graph(n + 8, false, std::move(edges)), std::move(t));
}

// Splits every vertex of a digraph with all in- and out-degrees at least two
// into a path gadget whose vertices have degree profile (2,1) or (1,2),
// preserving the minimum feedback vertex set size. Source and target carry
// unanimous thresholds so both sides double as spread instances.
inline Reduction restrict_dfvs(const Graph& g) {
    if (!g.directed) throw std::invalid_argument("restrict_dfvs: digraphs only");
    for (Vertex v = 1; v <= g.n; ++v)
        if (g.in_degree(v) < 2 || g.out_degree(v) < 2)
            throw std::invalid_argument("restrict_dfvs: every vertex needs in- and out-degree >= 2");
    int n = g.n;
    // Gadget layout per vertex: u'_1..u'_{k-1} then w'_1..w'_{l-1}.
    std::vector<int> base(n + 2, 0);
    for (Vertex v = 1; v <= n; ++v)
        base[v + 1] = base[v] + g.in_degree(v) - 1 + g.out_degree(v) - 1;
    auto u_id = [&](Vertex v, int i) { return base[v] + i; };
    auto w_id = [&](Vertex v, int i) { return base[v] + g.in_degree(v) - 1 + i; };
    int n_target = base[n + 1];

    std::vector<Edge> edges;
    for (Vertex v = 1; v <= n; ++v) {
        int k = g.in_degree(v), l = g.out_degree(v);
        for (int i = 1; i < k - 1; ++i) edges.emplace_back(u_id(v, i), u_id(v, i + 1));
        for (int i = 1; i < l - 1; ++i) edges.emplace_back(w_id(v, i), w_id(v, i + 1));
        edges.emplace_back(u_id(v, k - 1), w_id(v, 1));
    }
    // Arc (x -> y): x's out-port (position of y among x's out-neighbors) to
    // y's in-port (position of x among y's in-neighbors).
    for (const auto& [x, y] : g.edges) {
        const auto& outs = g.adj[x];
        const auto& ins = g.in_adj[y];
        int jo = static_cast<int>(std::lower_bound(outs.begin(), outs.end(), y) - outs.begin()) + 1;
        int ji = static_cast<int>(std::lower_bound(ins.begin(), ins.end(), x) - ins.begin()) + 1;
        int l = g.out_degree(x), k = g.in_degree(y);
        Vertex from = w_id(x, std::min(jo, l - 1));
        Vertex to = u_id(y, std::max(1, ji - 1));
        edges.emplace_back(from, to);
    }
    Graph tg(n_target, true, std::move(edges));
    for (Vertex v = 1; v <= n_target; ++v) {
        int din = tg.in_degree(v), dout = tg.out_degree(v);
        if (!((din == 1 && dout == 2) || (din == 2 && dout == 1)))
            throw std::logic_error("restrict_dfvs: gadget degree profile broken");
    }
    std::vector<int> tt(n_target + 1, 0);
    for (Vertex v = 1; v <= n_target; ++v) tt[v] = tg.in_degree(v);
    std::vector<int> ts(n + 1, 0);
    for (Vertex v = 1; v <= n; ++v) ts[v] = g.in_degree(v);

    Reduction r;
    r.source = Instance(g, ts);
    r.target = Instance(std::move(tg), std::move(tt));
    r.correspondence = "minimum feedback vertex set sizes of source and target coincide";
    auto owner = std::make_shared<std::vector<Vertex>>(n_target + 1, 0);
    for (Vertex v = 1; v <= n; ++v)
        for (int i = base[v] + 1; i <= base[v + 1]; ++i) (*owner)[i] = v;
    std::vector<Vertex> chokepoint(n + 1, 0);
    for (Vertex v = 1; v <= n; ++v) chokepoint[v] = u_id(v, g.in_degree(v) - 1);
    r.push = [chokepoint](const VertexSet& s) {
        std::vector<Vertex> out;
        for (Vertex v : s) out.push_back(chokepoint[v]);
        return make_vertex_set(std::move(out));
    };
    r.lift = [owner](const VertexSet& s) {
        std::vector<Vertex> out;
        for (Vertex v : s) out.push_back((*owner)[v]);
        return make_vertex_set(std::move(out));
    };
    for (Vertex v = 1; v <= n; ++v) {
        std::vector<Vertex> ids;
        for (int i = base[v] + 1; i <= base[v + 1]; ++i) ids.push_back(i);
        r.vertex_map[v] = ids;
    }
    return r;
}

}  // namespace coatss
