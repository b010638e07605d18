#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coatss/approx_tss.hpp"
#include "coatss/classify.hpp"
#include "coatss/dynamics.hpp"
#include "coatss/instance.hpp"

namespace coatss {

struct IncentiveLowerBounds {
    long long edge_bound = 0;  // max(0, sum(t) - |E|)
    long long tmin_bound = 0;  // t_min (t_min + 1) / 2
    long long best = 0;
};

inline IncentiveLowerBounds incentive_lower_bounds(const Instance& inst) {
    if (!inst.thresholds_within_degree())
        throw std::invalid_argument("incentive_lower_bounds: threshold above degree");
    IncentiveLowerBounds b;
    b.edge_bound = std::max(0LL, inst.threshold_sum() - inst.m());
    if (inst.n() > 0) {
        long long tm = inst.min_threshold();
        b.tmin_bound = tm * (tm + 1) / 2;
    }
    b.best = std::max(b.edge_bound, b.tmin_bound);
    return b;
}

namespace detail {

inline void require_incentive_domain(const Instance& inst, const char* who) {
    if (!inst.thresholds_within_degree())
        throw std::invalid_argument(std::string(who) + ": threshold above degree");
}

inline void require_weak_majority(const Instance& inst, const char* who) {
    if (inst.g.directed)
        throw std::invalid_argument(std::string(who) + ": undirected instances only");
    for (Vertex v = 1; v <= inst.n(); ++v)
        if (2 * inst.t[v] < inst.g.degree(v))
            throw std::invalid_argument(std::string(who) + ": thresholds below weak majority");
}

}  // namespace detail

// Repeatedly pays the cheapest inactive vertex just enough to activate it
// given the currently active set, then recomputes the closure. Weight is at
// most n * sqrt(2 * OPT).
inline IncentiveAssignment greedy_min_threshold(const Instance& inst) {
    detail::require_incentive_domain(inst, "greedy_min_threshold");
    int n = inst.n();
    IncentiveAssignment ia(n);
    while (true) {
        Instance resid = apply_incentives(inst, ia);
        ActivationTrace tr = closure(resid, {});
        if (!tr.stalled) break;
        Vertex pick = 0;
        int best = 0;
        for (Vertex v = 1; v <= n; ++v) {
            if (tr.active[v]) continue;
            int have = 0;
            for (Vertex u : inst.g.supporters(v)) have += tr.active[u];
            int s = std::max(0, inst.t[v] - have);
            if (pick == 0 || s < best) {
                pick = v;
                best = s;
            }
        }
        ia.q[pick] += best;
    }
    return ia;
}

// One processed round of the arrangement-driven solver: the arrangement used,
// how much was paid, and the prefix it paid (as original vertex ids).
struct ArrangementRound {
    long long width = 0;
    long long paid = 0;
    std::vector<Vertex> prefix;          // original ids, in arrangement order
    Instance round_instance;             // the instance the round saw
    std::vector<Vertex> round_origin;    // round-local id -> original id
    std::vector<Vertex> round_prefix;    // round-local ids paid this round
};

struct ArrangementSolveResult {
    IncentiveAssignment assignment;
    std::vector<ArrangementRound> rounds;
};

// Arrangement-driven solver. Each round arranges the remaining graph, walks
// i forward while the suffix beyond position i is contagious, pays each
// prefix vertex min(threshold, suffix neighbors) and the stopping vertex its
// full threshold, then recurses on the suffix with thresholds lowered by the
// activated prefix. Pays at most 3x the round's arrangement width per round.
inline ArrangementSolveResult algorithm_two(const Instance& inst, const Effort& effort,
                                            std::uint64_t seed = 0) {
    detail::require_weak_majority(inst, "algorithm_two");
    detail::require_incentive_domain(inst, "algorithm_two");
    ArrangementSolveResult res;
    res.assignment = IncentiveAssignment(inst.n());

    Instance cur = inst;
    std::vector<Vertex> origin(inst.n() + 1);
    for (Vertex v = 1; v <= inst.n(); ++v) origin[v] = v;
    int round_no = 0;
    while (cur.n() > 0) {
        if (!closure(cur, {}).stalled) break;  // remainder activates on its own
        Arrangement arr = arrangement_search(cur.g, effort, seed + round_no);
        ++round_no;
        int nc = cur.n();
        // Smallest i >= 1 whose strict suffix fails to activate everything.
        int stop = nc;
        for (int i = 1; i <= nc; ++i) {
            VertexSet suffix(arr.order.begin() + i + 1, arr.order.end());
            std::sort(suffix.begin(), suffix.end());
            if (!is_contagious(cur, suffix)) {
                stop = i;
                break;
            }
        }
        ArrangementRound round;
        round.width = arr.width;
        round.round_instance = cur;
        round.round_origin = origin;
        std::vector<char> in_suffix_from_stop(nc + 1, 0);
        for (int j = stop; j <= nc; ++j) in_suffix_from_stop[arr.order[j]] = 1;
        long long paid = 0;
        for (int j = 1; j < stop; ++j) {
            Vertex v = arr.order[j];
            int nbrs_in_suffix = 0;
            for (Vertex u : cur.g.adj[v]) nbrs_in_suffix += in_suffix_from_stop[u];
            int pay = std::min(cur.t[v], nbrs_in_suffix);
            res.assignment.q[origin[v]] += pay;
            paid += pay;
            round.prefix.push_back(origin[v]);
            round.round_prefix.push_back(v);
        }
        {
            Vertex v = arr.order[stop];
            res.assignment.q[origin[v]] += cur.t[v];
            paid += cur.t[v];
            round.prefix.push_back(origin[v]);
            round.round_prefix.push_back(v);
        }
        round.paid = paid;
        res.rounds.push_back(std::move(round));

        // Remainder: suffix beyond the stopping vertex, thresholds lowered by
        // the activated prefix.
        VertexSet keep(arr.order.begin() + stop + 1, arr.order.end());
        std::sort(keep.begin(), keep.end());
        std::vector<char> removed(nc + 1, 1);
        for (Vertex v : keep) removed[v] = 0;
        std::vector<int> lowered(cur.t);
        for (Vertex v : keep) {
            int from_prefix = 0;
            for (Vertex u : cur.g.adj[v]) from_prefix += removed[u];
            lowered[v] = std::max(0, cur.t[v] - from_prefix);
        }
        Instance cur_lowered(cur.g, std::move(lowered));
        InducedInstance sub = induced_instance(cur_lowered, keep);
        std::vector<Vertex> new_origin(sub.inst.n() + 1);
        for (Vertex v = 1; v <= sub.inst.n(); ++v) new_origin[v] = origin[sub.origin[v]];
        cur = std::move(sub.inst);
        origin = std::move(new_origin);
    }
    return res;
}

// Block-by-block solver: splits an arrangement of the remaining graph into a
// prefix of r vertices and the rest, pays prefix vertices their suffix
// support, finishes the prefix with greedy_min_threshold, and recurses on the
// suffix. Block length r is derived once from the weight guess.
inline IncentiveAssignment algorithm_three_single(const Instance& inst, long long guess,
                                                  const Effort& effort, std::uint64_t seed = 0) {
    detail::require_weak_majority(inst, "algorithm_three");
    detail::require_incentive_domain(inst, "algorithm_three");
    if (guess < 1) throw std::invalid_argument("algorithm_three: guess must be positive");
    IncentiveAssignment out(inst.n());
    int n0 = inst.n();
    if (n0 == 0) return out;
    // Smallest k with k^3 * guess >= n0^2.
    long long k = 1;
    while (k * k * k * guess < static_cast<long long>(n0) * n0) ++k;
    long long r = (n0 + k - 1) / k;

    Instance cur = inst;
    std::vector<Vertex> origin(n0 + 1);
    for (Vertex v = 1; v <= n0; ++v) origin[v] = v;
    int round_no = 0;
    while (cur.n() > 0) {
        if (r > cur.n()) r = cur.n();
        Arrangement arr = arrangement_search(cur.g, effort, seed + round_no);
        ++round_no;
        int nc = cur.n();
        int re = static_cast<int>(r);
        std::vector<char> in_suffix(nc + 1, 0);
        for (int j = re + 1; j <= nc; ++j) in_suffix[arr.order[j]] = 1;

        // Pay each prefix vertex its suffix support, then activate what is
        // left of the prefix with the greedy solver.
        std::vector<int> pay(nc + 1, 0);
        for (int j = 1; j <= re; ++j) {
            Vertex v = arr.order[j];
            int nbrs = 0;
            for (Vertex u : cur.g.adj[v]) nbrs += in_suffix[u];
            pay[v] = std::min(cur.t[v], nbrs);
            out.q[origin[v]] += pay[v];
        }
        VertexSet prefix(arr.order.begin() + 1, arr.order.begin() + re + 1);
        std::sort(prefix.begin(), prefix.end());
        std::vector<int> reduced(cur.t);
        for (Vertex v : prefix) reduced[v] = cur.t[v] - pay[v];
        Instance cur_reduced(cur.g, std::move(reduced));
        InducedInstance block = induced_instance(cur_reduced, prefix);
        IncentiveAssignment block_q = greedy_min_threshold(block.inst);
        for (Vertex v = 1; v <= block.inst.n(); ++v)
            out.q[origin[block.origin[v]]] += block_q.q[v];

        if (re == nc) break;
        VertexSet keep(arr.order.begin() + re + 1, arr.order.end());
        std::sort(keep.begin(), keep.end());
        std::vector<char> in_prefix(nc + 1, 0);
        for (Vertex v : prefix) in_prefix[v] = 1;
        std::vector<int> lowered(cur.t);
        for (Vertex v : keep) {
            int from_prefix = 0;
            for (Vertex u : cur.g.adj[v]) from_prefix += in_prefix[u];
            lowered[v] = std::max(0, cur.t[v] - from_prefix);
        }
        Instance cur_lowered(cur.g, std::move(lowered));
        InducedInstance sub = induced_instance(cur_lowered, keep);
        std::vector<Vertex> new_origin(sub.inst.n() + 1);
        for (Vertex v = 1; v <= sub.inst.n(); ++v) new_origin[v] = origin[sub.origin[v]];
        cur = std::move(sub.inst);
        origin = std::move(new_origin);
    }
    if (!is_valid_incentive(inst, out))
        throw std::logic_error("algorithm_three: produced an invalid assignment");
    return out;
}

enum class GuessPolicy { coarse, all };

// Runs the block solver over a guess schedule and keeps the lightest valid
// result. The coarse schedule tries the best lower bound, the powers of two
// above it, and the threshold sum; `all` tries every weight up to sum(t).
inline IncentiveAssignment algorithm_three(const Instance& inst,
                                           GuessPolicy policy = GuessPolicy::coarse,
                                           const Effort& effort = Effort::exact_mode(),
                                           std::uint64_t seed = 0) {
    detail::require_weak_majority(inst, "algorithm_three");
    detail::require_incentive_domain(inst, "algorithm_three");
    if (inst.n() == 0) return IncentiveAssignment(0);
    long long lo = std::max(1LL, incentive_lower_bounds(inst).best);
    long long hi = std::max(lo, inst.threshold_sum());
    std::vector<long long> guesses;
    if (policy == GuessPolicy::all) {
        for (long long g = 1; g <= hi; ++g) guesses.push_back(g);
    } else {
        guesses.push_back(lo);
        for (long long g = 1; g < hi; g *= 2)
            if (g > lo) guesses.push_back(g);
        if (hi > lo) guesses.push_back(hi);
    }
    std::optional<IncentiveAssignment> best;
    for (long long g : guesses) {
        IncentiveAssignment ia = algorithm_three_single(inst, g, effort, seed);
        if (!best || ia.weight() < best->weight()) best = std::move(ia);
    }
    return *best;
}

// Exact solver for degenerate instances: along a degeneracy ordering pay each
// vertex the gap between its threshold and its back-degree. Total weight is
// exactly sum(t) - |E|.
inline IncentiveAssignment exact_degenerate_incentives(const Instance& inst) {
    detail::require_incentive_domain(inst, "exact_degenerate_incentives");
    if (inst.g.directed)
        throw std::invalid_argument("exact_degenerate_incentives: undirected instances only");
    DegeneracyResult dr = degeneracy_ordering(inst);
    if (!dr.ok) throw NotDegenerateError(dr.witness);
    IncentiveAssignment ia(inst.n());
    for (int i = 1; i <= inst.n(); ++i) {
        Vertex v = dr.ordering.order[i];
        ia.q[v] = inst.t[v] - dr.ordering.back_degree[i];
    }
    if (ia.weight() != inst.threshold_sum() - inst.m())
        throw std::logic_error("exact_degenerate_incentives: weight bookkeeping failed");
    return ia;
}

namespace detail {

inline std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::vector<char> seen(g.n + 1, 0);
    for (Vertex s = 1; s <= g.n; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> queue{s};
        seen[s] = 1;
        for (size_t h = 0; h < queue.size(); ++h)
            for (Vertex u : g.adj[queue[h]])
                if (!seen[u]) {
                    seen[u] = 1;
                    queue.push_back(u);
                }
        comps.push_back(make_vertex_set(std::move(queue)));
    }
    return comps;
}

}  // namespace detail

// Exact solver when every threshold is d(v) or d(v)-1. Components with some
// unanimous vertex are degenerate already; all-(d-1) components become
// degenerate after deleting any one edge, and the deleted edge costs exactly
// one extra unit, independent of the choice.
inline IncentiveAssignment exact_near_unanimous_incentives(const Instance& inst) {
    detail::require_incentive_domain(inst, "exact_near_unanimous_incentives");
    if (inst.g.directed)
        throw std::invalid_argument("exact_near_unanimous_incentives: undirected instances only");
    for (Vertex v = 1; v <= inst.n(); ++v) {
        int d = inst.g.degree(v);
        if (inst.t[v] != d && inst.t[v] != d - 1)
            throw std::invalid_argument(
                "exact_near_unanimous_incentives: threshold of vertex " + std::to_string(v) +
                " is neither d nor d-1");
    }
    IncentiveAssignment ia(inst.n());
    for (const VertexSet& comp : detail::connected_components(inst.g)) {
        InducedInstance sub = induced_instance(inst, comp);
        bool has_unanimous = false;
        for (Vertex v = 1; v <= sub.inst.n(); ++v)
            if (sub.inst.t[v] == sub.inst.g.degree(v)) has_unanimous = true;
        IncentiveAssignment part;
        if (has_unanimous) {
            part = exact_degenerate_incentives(sub.inst);
        } else {
            // Delete the lexicographically first edge; both endpoints then
            // match their new degree, making every piece degenerate.
            std::vector<Edge> edges = sub.inst.g.edges;
            edges.erase(edges.begin());
            Instance cut(Graph(sub.inst.n(), false, std::move(edges)), sub.inst.t);
            part = exact_degenerate_incentives(cut);
            IncentiveAssignment check = part;
            if (!is_valid_incentive(sub.inst, check))
                throw std::logic_error(
                    "exact_near_unanimous_incentives: edge-deleted solution invalid on component");
        }
        for (Vertex v = 1; v <= sub.inst.n(); ++v) ia.q[sub.origin[v]] = part.q[v];
    }
    return ia;
}

// Exact solver when every threshold is 1 or d(v). Contracts each component of
// the threshold-1 part to a single threshold-1 vertex, subdivides every
// surviving (multi-)edge with a threshold-1 degree-2 vertex, solves the
// resulting degenerate instance, and replays the canonical activation order
// back in the original graph: every contracted component is started with one
// unit, then the unanimous vertices pay their remaining shortfalls.
inline IncentiveAssignment exact_one_or_unanimous_incentives(const Instance& inst) {
    detail::require_incentive_domain(inst, "exact_one_or_unanimous_incentives");
    if (inst.g.directed)
        throw std::invalid_argument("exact_one_or_unanimous_incentives: undirected instances only");
    int n = inst.n();
    std::vector<char> low(n + 1, 0);  // threshold-1 side
    for (Vertex v = 1; v <= n; ++v) {
        if (inst.t[v] == 1)
            low[v] = 1;
        else if (inst.t[v] != inst.g.degree(v))
            throw std::invalid_argument("exact_one_or_unanimous_incentives: threshold of vertex " +
                                        std::to_string(v) + " is neither 1 nor d");
    }
    bool any_low = false;
    for (Vertex v = 1; v <= n; ++v) any_low |= low[v] != 0;
    if (!any_low) return exact_degenerate_incentives(inst);

    // Components of the threshold-1 part.
    std::vector<int> comp_of(n + 1, 0);
    std::vector<VertexSet> comps;
    for (Vertex s = 1; s <= n; ++s) {
        if (!low[s] || comp_of[s]) continue;
        std::vector<Vertex> queue{s};
        comp_of[s] = static_cast<int>(comps.size()) + 1;
        for (size_t h = 0; h < queue.size(); ++h)
            for (Vertex u : inst.g.adj[queue[h]])
                if (low[u] && !comp_of[u]) {
                    comp_of[u] = comp_of[s];
                    queue.push_back(u);
                }
        comps.push_back(make_vertex_set(std::move(queue)));
    }

    // Contracted-and-subdivided instance: unanimous vertices first (ascending),
    // one vertex per threshold-1 component, one subdivision vertex per
    // surviving multigraph edge.
    std::vector<Vertex> high;  // ascending original ids
    std::vector<int> high_id(n + 1, 0);
    for (Vertex v = 1; v <= n; ++v)
        if (!low[v]) {
            high.push_back(v);
            high_id[v] = static_cast<int>(high.size());
        }
    int n_high = static_cast<int>(high.size());
    int n_comp = static_cast<int>(comps.size());
    auto contracted_id = [&](Vertex v) {
        return low[v] ? n_high + comp_of[v] : high_id[v];
    };
    std::vector<Edge> hedges;
    std::vector<int> ht(1, 0);
    for (Vertex v : high) ht.push_back(inst.t[v]);
    for (int c = 0; c < n_comp; ++c) ht.push_back(1);
    std::vector<char> comp_touched(n_comp + 1, 0);
    int next_id = n_high + n_comp;
    for (const auto& [u, v] : inst.g.edges) {
        int cu = contracted_id(u), cv = contracted_id(v);
        if (cu == cv) continue;  // inside one threshold-1 component
        if (cu > n_high) comp_touched[cu - n_high] = 1;
        if (cv > n_high) comp_touched[cv - n_high] = 1;
        ++next_id;
        ht.push_back(1);
        hedges.emplace_back(cu, next_id);
        hedges.emplace_back(cv, next_id);
    }
    // A threshold-1 component with no unanimous neighbor is a whole graph
    // component; it costs exactly one unit, paid in the replay below. Keep it
    // out of the degenerate solve by zeroing its contracted threshold.
    long long isolated_comps = 0;
    for (int c = 1; c <= n_comp; ++c)
        if (!comp_touched[c]) {
            ht[n_high + c] = 0;
            ++isolated_comps;
        }
    Instance contracted(Graph(next_id, false, std::move(hedges)), std::move(ht));
    IncentiveAssignment solved = exact_degenerate_incentives(contracted);
    long long target_weight = solved.weight() + isolated_comps;

    // Replay: start each threshold-1 component with one unit at its smallest
    // vertex unless spread already reached it, then close the unanimous
    // vertices in ascending order by paying their remaining shortfall.
    IncentiveAssignment ia(n);
    ActivationTrace tr = closure(apply_incentives(inst, ia), {});
    auto refresh = [&]() { tr = closure(apply_incentives(inst, ia), {}); };
    for (const VertexSet& comp : comps) {
        bool reached = false;
        for (Vertex v : comp) reached |= tr.active[v] != 0;
        if (!reached) {
            ia.q[comp.front()] = 1;
            refresh();
        }
    }
    for (Vertex v : high) {
        if (tr.active[v]) continue;
        int have = 0;
        for (Vertex u : inst.g.adj[v]) have += tr.active[u];
        ia.q[v] = inst.t[v] - have;
        refresh();
    }
    if (ia.weight() != target_weight)
        throw std::logic_error("exact_one_or_unanimous_incentives: replay weight mismatch");
    if (!is_valid_incentive(inst, ia))
        throw std::logic_error("exact_one_or_unanimous_incentives: replay produced invalid result");
    return ia;
}

}  // namespace coatss
