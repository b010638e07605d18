#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "coatss/instance.hpp"

namespace coatss {

// All generation is deterministic given (spec, seed); randomness goes through
// these helpers so results do not depend on library distribution internals.
namespace rng {

inline std::uint64_t next_u64(std::mt19937_64& eng) { return eng(); }

// Uniform in [0,1).
inline double next_double(std::mt19937_64& eng) {
    return (eng() >> 11) * (1.0 / 9007199254740992.0);
}

// Uniform in [lo, hi], inclusive.
inline int next_int(std::mt19937_64& eng, int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("next_int: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
    return lo + static_cast<int>(eng() % span);
}

template <typename T>
inline void shuffle(std::mt19937_64& eng, std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
        size_t j = eng() % i;
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace rng

enum class ThresholdScheme { constant, half_degree_ceil, unanimous, uniform_random };

struct GenSpec {
    enum class Kind { cycle, path, star, random_gnp, random_regular, digraph_gnp };
    Kind kind;
    int n = 0;        // vertex count (star: leaves + 1)
    int k = 0;        // star leaf count
    int d = 0;        // regular degree
    double p = 0.0;   // edge probability
    ThresholdScheme scheme = ThresholdScheme::constant;
    int constant = 1; // for ThresholdScheme::constant
};

namespace detail {

// Vertices with no supporters get threshold 0 under the degree-driven schemes.
inline std::vector<int> assign_thresholds(const Graph& g, ThresholdScheme scheme, int constant,
                                          std::mt19937_64& eng) {
    std::vector<int> t(g.n + 1, 0);
    for (Vertex v = 1; v <= g.n; ++v) {
        int d = g.activation_degree(v);
        switch (scheme) {
            case ThresholdScheme::constant:
                if (constant < 0) throw std::invalid_argument("gen: negative constant threshold");
                t[v] = constant;
                break;
            case ThresholdScheme::half_degree_ceil:
                t[v] = (d + 1) / 2;
                break;
            case ThresholdScheme::unanimous:
                t[v] = d;
                break;
            case ThresholdScheme::uniform_random:
                t[v] = d == 0 ? 0 : rng::next_int(eng, 1, d);
                break;
        }
    }
    return t;
}

}  // namespace detail

inline Instance gen_instance(const GenSpec& spec, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    using K = GenSpec::Kind;
    Graph g;
    switch (spec.kind) {
        case K::cycle: {
            if (spec.n < 3) throw std::invalid_argument("gen cycle: need n >= 3");
            std::vector<Edge> e;
            for (Vertex v = 1; v < spec.n; ++v) e.emplace_back(v, v + 1);
            e.emplace_back(spec.n, 1);
            g = Graph(spec.n, false, std::move(e));
            break;
        }
        case K::path: {
            if (spec.n < 1) throw std::invalid_argument("gen path: need n >= 1");
            std::vector<Edge> e;
            for (Vertex v = 1; v < spec.n; ++v) e.emplace_back(v, v + 1);
            g = Graph(spec.n, false, std::move(e));
            break;
        }
        case K::star: {
            if (spec.k < 1) throw std::invalid_argument("gen star: need k >= 1 leaves");
            std::vector<Edge> e;
            for (Vertex v = 2; v <= spec.k + 1; ++v) e.emplace_back(1, v);
            g = Graph(spec.k + 1, false, std::move(e));
            break;
        }
        case K::random_gnp: {
            if (spec.n < 0) throw std::invalid_argument("gen gnp: need n >= 0");
            if (spec.p < 0.0 || spec.p > 1.0)
                throw std::invalid_argument("gen gnp: need p in [0,1]");
            std::vector<Edge> e;
            for (Vertex u = 1; u <= spec.n; ++u)
                for (Vertex v = u + 1; v <= spec.n; ++v)
                    if (rng::next_double(eng) < spec.p) e.emplace_back(u, v);
            g = Graph(spec.n, false, std::move(e));
            break;
        }
        case K::digraph_gnp: {
            if (spec.n < 0) throw std::invalid_argument("gen dgnp: need n >= 0");
            if (spec.p < 0.0 || spec.p > 1.0)
                throw std::invalid_argument("gen dgnp: need p in [0,1]");
            std::vector<Edge> e;
            for (Vertex u = 1; u <= spec.n; ++u)
                for (Vertex v = 1; v <= spec.n; ++v)
                    if (u != v && rng::next_double(eng) < spec.p) e.emplace_back(u, v);
            g = Graph(spec.n, true, std::move(e));
            break;
        }
        case K::random_regular: {
            // Configuration model with rejection on loops and repeats.
            if (spec.n < 1 || spec.d < 0 || spec.d >= spec.n)
                throw std::invalid_argument("gen regular: need 0 <= d < n");
            if ((static_cast<long long>(spec.n) * spec.d) % 2 != 0)
                throw std::invalid_argument("gen regular: n*d must be even");
            const int attempts = 2000;
            bool done = false;
            for (int a = 0; a < attempts && !done; ++a) {
                std::vector<Vertex> stubs;
                stubs.reserve(static_cast<size_t>(spec.n) * spec.d);
                for (Vertex v = 1; v <= spec.n; ++v)
                    for (int i = 0; i < spec.d; ++i) stubs.push_back(v);
                rng::shuffle(eng, stubs);
                std::vector<Edge> e;
                bool ok = true;
                for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
                    Vertex u = stubs[i], v = stubs[i + 1];
                    if (u == v) {
                        ok = false;
                        break;
                    }
                    if (u > v) std::swap(u, v);
                    e.emplace_back(u, v);
                }
                if (!ok) continue;
                std::sort(e.begin(), e.end());
                if (std::adjacent_find(e.begin(), e.end()) != e.end()) continue;
                g = Graph(spec.n, false, std::move(e));
                done = true;
            }
            if (!done)
                throw std::runtime_error("gen regular: no simple pairing found; try another seed");
            break;
        }
    }
    std::vector<int> t = detail::assign_thresholds(g, spec.scheme, spec.constant, eng);
    return Instance(std::move(g), std::move(t));
}

}  // namespace coatss
