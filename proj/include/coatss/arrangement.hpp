#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coatss/graph.hpp"

namespace coatss {

// A linear arrangement of a graph's vertices together with its cutwidth.
struct Arrangement {
    std::vector<Vertex> order;  // size n+1, [1..n]
    long long width = 0;
    bool exact = false;         // true iff produced by exhaustive search
    std::uint64_t seed = 0;     // seed used by the heuristic, 0 for exact
};

struct Effort {
    enum class Mode { exact, heuristic };
    Mode mode = Mode::exact;
    int iterations = 2000;  // heuristic move budget

    static Effort exact_mode() { return Effort{Mode::exact, 0}; }
    static Effort heuristic(int iters) { return Effort{Mode::heuristic, iters}; }
};

}  // namespace coatss
