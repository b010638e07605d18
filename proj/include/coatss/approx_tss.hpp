#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "coatss/arrangement.hpp"
#include "coatss/classify.hpp"
#include "coatss/dynamics.hpp"
#include "coatss/generators.hpp"
#include "coatss/instance.hpp"
#include "coatss/oracle.hpp"

namespace coatss {

// Selects T = { v_i : t(v_i) > back_degree(v_i) } along a degeneracy
// ordering. The result is always contagious; that is re-checked on every
// call. Works per component because the peeling never crosses components.
inline VertexSet algorithm_one(const Instance& inst) {
    DegeneracyResult dr = degeneracy_ordering(inst);
    if (!dr.ok) throw NotDegenerateError(dr.witness);
    std::vector<Vertex> picked;
    for (int i = 1; i <= inst.n(); ++i) {
        Vertex v = dr.ordering.order[i];
        if (inst.t[v] > dr.ordering.back_degree[i]) picked.push_back(v);
    }
    VertexSet out = make_vertex_set(std::move(picked));
    if (!is_contagious(inst, out))
        throw std::logic_error("algorithm_one: selection failed to activate the graph");
    return out;
}

// Counting bound: any contagious set's thresholds must cover
// sum(t) - |E|, so the fewest vertices whose largest thresholds reach that
// value is a lower bound; 1 when the empty set cannot work.
inline long long tss_lower_bound(const Instance& inst) {
    if (inst.g.directed)
        throw std::invalid_argument("tss_lower_bound: undirected instances only");
    long long need = inst.threshold_sum() - inst.m();
    long long k = 0;
    if (need > 0) {
        std::vector<int> ts(inst.t.begin() + 1, inst.t.end());
        std::sort(ts.rbegin(), ts.rend());
        long long acc = 0;
        for (int x : ts) {
            acc += x;
            ++k;
            if (acc >= need) break;
        }
        if (acc < need) k = inst.n();  // unreachable for well-formed data
    }
    bool empty_works = inst.n() == 0;
    if (!empty_works) {
        bool any_zero = false;
        for (Vertex v = 1; v <= inst.n(); ++v)
            if (inst.t[v] == 0) any_zero = true;
        empty_works = any_zero;
    }
    return std::max(k, empty_works ? 0LL : (inst.n() >= 1 ? 1LL : 0LL));
}

// Cutwidth arrangement: exhaustive for small graphs, otherwise a seeded
// local search (single-vertex reinsertion and adjacent swaps, accepting
// non-worsening moves under a lexicographic profile key) from the better of
// a BFS order and a min-degree peeling order.
namespace detail {

inline std::vector<long long> profile_key(const CutProfile& cp) {
    std::vector<long long> key(cp.cuts.begin() + 1, cp.cuts.end());
    std::sort(key.rbegin(), key.rend());
    return key;
}

inline std::vector<Vertex> bfs_order(const Graph& g) {
    int n = g.n;
    std::vector<Vertex> ord(1, 0);
    std::vector<char> seen(n + 1, 0);
    for (Vertex s = 1; s <= n; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> queue{s};
        seen[s] = 1;
        for (size_t h = 0; h < queue.size(); ++h) {
            Vertex v = queue[h];
            ord.push_back(v);
            for (Vertex u : g.adj[v])
                if (!seen[u]) {
                    seen[u] = 1;
                    queue.push_back(u);
                }
            if (g.directed)
                for (Vertex u : g.in_adj[v])
                    if (!seen[u]) {
                        seen[u] = 1;
                        queue.push_back(u);
                    }
        }
    }
    return ord;
}

inline std::vector<Vertex> min_degree_peel_order(const Graph& g) {
    int n = g.n;
    std::vector<int> deg(n + 1, 0);
    std::vector<char> removed(n + 1, 0);
    for (Vertex v = 1; v <= n; ++v) deg[v] = g.total_degree(v);
    std::vector<Vertex> ord(n + 1, 0);
    for (int pos = n; pos >= 1; --pos) {
        Vertex pick = 0;
        for (Vertex v = 1; v <= n; ++v)
            if (!removed[v] && (pick == 0 || deg[v] < deg[pick])) pick = v;
        ord[pos] = pick;
        removed[pick] = 1;
        for (Vertex u : g.adj[pick])
            if (!removed[u]) --deg[u];
        if (g.directed)
            for (Vertex u : g.in_adj[pick])
                if (!removed[u]) --deg[u];
    }
    return ord;
}

}  // namespace detail

inline Arrangement arrangement_search(const Graph& g, const Effort& effort,
                                      std::uint64_t seed = 0) {
    int n = g.n;
    if (effort.mode == Effort::Mode::exact) return exact_cutwidth(g);
    Arrangement arr;
    arr.exact = false;
    arr.seed = seed;
    if (n == 0) {
        arr.order.assign(1, 0);
        return arr;
    }
    std::vector<Vertex> cur = detail::bfs_order(g);
    std::vector<long long> cur_key = detail::profile_key(cut_profile(g, cur));
    {
        std::vector<Vertex> alt = detail::min_degree_peel_order(g);
        std::vector<long long> alt_key = detail::profile_key(cut_profile(g, alt));
        if (alt_key < cur_key) {
            cur = std::move(alt);
            cur_key = std::move(alt_key);
        }
    }
    std::mt19937_64 eng(seed);
    for (int it = 0; it < effort.iterations && n > 1; ++it) {
        std::vector<Vertex> cand = cur;
        if (eng() % 2 == 0) {
            int i = rng::next_int(eng, 1, n - 1);
            std::swap(cand[i], cand[i + 1]);
        } else {
            int i = rng::next_int(eng, 1, n);
            int j = rng::next_int(eng, 1, n);
            if (i == j) continue;
            Vertex v = cand[i];
            cand.erase(cand.begin() + i);
            cand.insert(cand.begin() + j, v);
        }
        std::vector<long long> key = detail::profile_key(cut_profile(g, cand));
        if (key <= cur_key) {
            cur = std::move(cand);
            cur_key = std::move(key);
        }
    }
    CutProfile cp = cut_profile(g, cur);
    arr.order = cp.ordering;
    arr.width = cp.width;
    return arr;
}

// Which cutwidth bound a solution is checked against.
enum class CutLemma {
    weak_majority,  // width <= max_degree * |T|
    balanced,       // width <= (M - 1) * max_degree * |T|, M >= 2
    incentives,     // width <= 2 * weight
};

struct LemmaReport {
    CutLemma lemma;
    long long r = 0;            // solution size or weight
    int max_degree = 0;
    Ratio influence_ratio;      // only meaningful for the balanced bound
    long long bound_num = 0;    // bound = bound_num / bound_den, exact
    long long bound_den = 1;
    long long observed = 0;     // max prefix cut along the reconstructed order
    bool holds = false;
    std::vector<Vertex> order;         // reconstructed activation order
    std::vector<long long> cuts;       // prefix cuts along it
    double bound() const { return bound_den == 0 ? 0.0 : static_cast<double>(bound_num) / bound_den; }
};

namespace detail {

// Activation order from a closure trace: seeds first (ascending id), then by
// round, ascending id inside a round. The trace already lists them that way.
inline std::vector<Vertex> order_from_trace(const ActivationTrace& tr, int n) {
    std::vector<Vertex> ord(1, 0);
    for (const auto& [round, v] : tr.order) ord.push_back(v);
    if (static_cast<int>(ord.size()) != n + 1)
        throw std::invalid_argument("cut lemma: solution does not activate the whole graph");
    return ord;
}

}  // namespace detail

// Verifies one of the cutwidth bounds along the activation order its proof
// reconstructs, and asserts the proof's per-step cut inequality on the way.
inline LemmaReport check_cut_lemma(const Instance& inst,
                                   const std::variant<VertexSet, IncentiveAssignment>& solution,
                                   CutLemma lemma) {
    if (inst.g.directed)
        throw std::invalid_argument("check_cut_lemma: undirected instances only");
    ClassReport cls = classify(inst);
    LemmaReport rep;
    rep.lemma = lemma;
    rep.max_degree = cls.max_degree;

    std::vector<int> residual(inst.t.begin(), inst.t.end());
    ActivationTrace tr;
    int first_checked_pos;  // per-step inequality applies from this position on
    if (lemma == CutLemma::incentives) {
        if (!cls.weak_majority.value_or(false) || !inst.thresholds_within_degree())
            throw std::invalid_argument(
                "check_cut_lemma: incentives bound needs weak majority thresholds within degree");
        const auto* ia = std::get_if<IncentiveAssignment>(&solution);
        if (!ia) throw std::invalid_argument("check_cut_lemma: expected an incentive assignment");
        Instance resid = apply_incentives(inst, *ia);
        if (!is_contagious(resid, {}))
            throw std::invalid_argument("check_cut_lemma: incentive assignment is not valid");
        residual.assign(resid.t.begin(), resid.t.end());
        tr = closure(resid, {});
        rep.r = ia->weight();
        rep.bound_num = 2 * rep.r;
        rep.bound_den = 1;
        first_checked_pos = 1;
    } else {
        const auto* ts = std::get_if<VertexSet>(&solution);
        if (!ts) throw std::invalid_argument("check_cut_lemma: expected a target set");
        if (lemma == CutLemma::weak_majority) {
            if (!cls.weak_majority.value_or(false))
                throw std::invalid_argument("check_cut_lemma: instance is not weak majority");
            rep.r = static_cast<long long>(ts->size());
            rep.bound_num = static_cast<long long>(cls.max_degree) * rep.r;
            rep.bound_den = 1;
        } else {
            if (!cls.balanced.value_or(false))
                throw std::invalid_argument("check_cut_lemma: instance is not balanced");
            rep.influence_ratio = *cls.influence_ratio;
            if (rep.influence_ratio.num < 2 * rep.influence_ratio.den)
                throw std::invalid_argument("check_cut_lemma: balanced bound needs M >= 2");
            rep.r = static_cast<long long>(ts->size());
            // (M - 1) * max_degree * r with M = num/den.
            rep.bound_num = (rep.influence_ratio.num - rep.influence_ratio.den) *
                            cls.max_degree * rep.r;
            rep.bound_den = rep.influence_ratio.den;
        }
        tr = closure(inst, *ts);
        if (tr.stalled)
            throw std::invalid_argument("check_cut_lemma: target set is not contagious");
        first_checked_pos = static_cast<int>(ts->size()) + 1;
    }

    rep.order = detail::order_from_trace(tr, inst.n());
    CutProfile cp = cut_profile(inst.g, rep.order);
    rep.cuts = cp.cuts;
    rep.observed = cp.width;
    // C(k) <= C(k-1) + d_k - 2*t_k for every activation the proof charges
    // (all positions for incentives, non-seed positions for target sets),
    // with the residual threshold in the incentive case.
    for (int k = first_checked_pos; k <= inst.n(); ++k) {
        Vertex v = rep.order[k];
        long long lhs = cp.cuts[k];
        long long rhs = cp.cuts[k - 1] + inst.g.degree(v) - 2LL * residual[v];
        if (lhs > rhs)
            throw std::logic_error("check_cut_lemma: per-step cut inequality violated at position " +
                                   std::to_string(k));
    }
    rep.holds = rep.observed * rep.bound_den <= rep.bound_num;
    return rep;
}

}  // namespace coatss
