#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "coatss/instance.hpp"

namespace coatss {

// Instance file format:
//   # comment lines and blank lines are skipped anywhere
//   p tss <n> <m> <u|d>
//   t <v> <threshold>     exactly n lines, one per vertex
//   e <u> <v>             exactly m lines
struct ParseError : std::runtime_error {
    enum class Kind {
        malformed_header,
        malformed_line,
        threshold_count,
        duplicate_threshold,
        edge_count,
        vertex_range,
        self_loop,
        duplicate_edge,
    };
    Kind kind;
    int line;

    ParseError(Kind k, int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_),
          kind(k),
          line(line_) {}
};

namespace detail {

inline bool split_fields(const std::string& line, std::vector<std::string>& out) {
    out.clear();
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return !out.empty();
}

inline bool parse_int(const std::string& s, long long& out) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    try {
        out = std::stoll(s);
    } catch (...) {
        return false;
    }
    return true;
}

}  // namespace detail

inline Instance parse_instance(std::istream& in) {
    using K = ParseError::Kind;
    int lineno = 0;
    std::string line;
    std::vector<std::string> f;

    auto next_content_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos) continue;
            if (line[i] == '#') continue;
            return true;
        }
        return false;
    };

    if (!next_content_line())
        throw ParseError(K::malformed_header, lineno + 1, "missing problem header");
    detail::split_fields(line, f);
    long long n = 0, m = 0;
    if (f.size() != 5 || f[0] != "p" || f[1] != "tss" || !detail::parse_int(f[2], n) ||
        !detail::parse_int(f[3], m) || (f[4] != "u" && f[4] != "d") || n < 0 || m < 0)
        throw ParseError(K::malformed_header, lineno,
                         "expected header 'p tss <n> <m> <u|d>', got '" + line + "'");
    bool directed = f[4] == "d";

    std::vector<int> t(n + 1, -1);
    for (long long i = 0; i < n; ++i) {
        if (!next_content_line())
            throw ParseError(K::threshold_count, lineno + 1,
                             "expected " + std::to_string(n) + " threshold lines, found " +
                                 std::to_string(i));
        detail::split_fields(line, f);
        if (f[0] == "e")
            throw ParseError(K::threshold_count, lineno,
                             "edge line before all " + std::to_string(n) + " thresholds were read");
        long long v = 0, thr = 0;
        if (f.size() != 3 || f[0] != "t" || !detail::parse_int(f[1], v) ||
            !detail::parse_int(f[2], thr))
            throw ParseError(K::malformed_line, lineno, "expected 't <v> <threshold>'");
        if (v < 1 || v > n)
            throw ParseError(K::vertex_range, lineno,
                             "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
        if (thr < 0)
            throw ParseError(K::malformed_line, lineno, "negative threshold");
        if (t[v] != -1)
            throw ParseError(K::duplicate_threshold, lineno,
                             "second threshold for vertex " + std::to_string(v));
        t[v] = static_cast<int>(thr);
    }

    std::vector<Edge> edges;
    for (long long i = 0; i < m; ++i) {
        if (!next_content_line())
            throw ParseError(K::edge_count, lineno + 1,
                             "expected " + std::to_string(m) + " edge lines, found " +
                                 std::to_string(i));
        detail::split_fields(line, f);
        if (f[0] == "t")
            throw ParseError(K::threshold_count, lineno,
                             "threshold line after all " + std::to_string(n) +
                                 " thresholds were read");
        long long u = 0, v = 0;
        if (f.size() != 3 || f[0] != "e" || !detail::parse_int(f[1], u) ||
            !detail::parse_int(f[2], v))
            throw ParseError(K::malformed_line, lineno, "expected 'e <u> <v>'");
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError(K::vertex_range, lineno, "edge endpoint out of range");
        if (u == v)
            throw ParseError(K::self_loop, lineno, "self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (next_content_line())
        throw ParseError(K::malformed_line, lineno, "unexpected content after edge list");
    t[0] = 0;  // the -1 sentinel only marks vertices 1..n as unset

    try {
        return Instance(Graph(static_cast<int>(n), directed, std::move(edges)), std::move(t));
    } catch (const std::invalid_argument& e) {
        std::string msg = e.what();
        if (msg.find("duplicate") != std::string::npos)
            throw ParseError(K::duplicate_edge, lineno, msg);
        throw ParseError(K::malformed_line, lineno, msg);
    }
}

inline Instance parse_instance(const std::string& text) {
    std::istringstream ss(text);
    return parse_instance(ss);
}

// Canonical form: header, thresholds by ascending vertex, edges sorted
// lexicographically (undirected edges with u < v). Comments are not kept.
inline void serialize_instance(const Instance& inst, std::ostream& out) {
    out << "p tss " << inst.n() << ' ' << inst.m() << ' ' << (inst.g.directed ? 'd' : 'u') << '\n';
    for (Vertex v = 1; v <= inst.n(); ++v) out << "t " << v << ' ' << inst.t[v] << '\n';
    for (const auto& [u, v] : inst.g.edges) out << "e " << u << ' ' << v << '\n';
}

inline std::string serialize_instance(const Instance& inst) {
    std::ostringstream ss;
    serialize_instance(inst, ss);
    return ss.str();
}

// Target-set solution format: 's target <k>' then k lines 'v <id>'.
inline void serialize_target_set(const VertexSet& s, std::ostream& out) {
    out << "s target " << s.size() << '\n';
    for (Vertex v : s) out << "v " << v << '\n';
}

inline std::string serialize_target_set(const VertexSet& s) {
    std::ostringstream ss;
    serialize_target_set(s, ss);
    return ss.str();
}

inline VertexSet parse_target_set(std::istream& in) {
    using K = ParseError::Kind;
    int lineno = 0;
    std::string line;
    std::vector<std::string> f;
    auto next_content_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos) continue;
            if (line[i] == '#') continue;
            return true;
        }
        return false;
    };
    if (!next_content_line())
        throw ParseError(K::malformed_header, lineno + 1, "missing solution header");
    detail::split_fields(line, f);
    long long k = 0;
    if (f.size() != 3 || f[0] != "s" || f[1] != "target" || !detail::parse_int(f[2], k) || k < 0)
        throw ParseError(K::malformed_header, lineno, "expected 's target <k>'");
    std::vector<Vertex> vs;
    for (long long i = 0; i < k; ++i) {
        if (!next_content_line())
            throw ParseError(K::malformed_line, lineno + 1, "missing 'v <id>' line");
        detail::split_fields(line, f);
        long long v = 0;
        if (f.size() != 2 || f[0] != "v" || !detail::parse_int(f[1], v) || v < 1)
            throw ParseError(K::malformed_line, lineno, "expected 'v <id>'");
        vs.push_back(static_cast<Vertex>(v));
    }
    if (next_content_line())
        throw ParseError(K::malformed_line, lineno, "unexpected content after vertex list");
    return make_vertex_set(std::move(vs));
}

inline VertexSet parse_target_set(const std::string& text) {
    std::istringstream ss(text);
    return parse_target_set(ss);
}

// Incentive solution format: 's incentives <weight>' then one 'q <id> <amount>'
// line per vertex with a positive incentive, ascending by id.
inline void serialize_incentives(const std::vector<int>& q, std::ostream& out) {
    long long w = 0;
    for (size_t v = 1; v < q.size(); ++v) w += q[v];
    out << "s incentives " << w << '\n';
    for (size_t v = 1; v < q.size(); ++v)
        if (q[v] > 0) out << "q " << v << ' ' << q[v] << '\n';
}

inline std::string serialize_incentives(const std::vector<int>& q) {
    std::ostringstream ss;
    serialize_incentives(q, ss);
    return ss.str();
}

// Returns the q vector sized n+1 for the given vertex count.
inline std::vector<int> parse_incentives(std::istream& in, int n) {
    using K = ParseError::Kind;
    int lineno = 0;
    std::string line;
    std::vector<std::string> f;
    auto next_content_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos) continue;
            if (line[i] == '#') continue;
            return true;
        }
        return false;
    };
    if (!next_content_line())
        throw ParseError(K::malformed_header, lineno + 1, "missing solution header");
    detail::split_fields(line, f);
    long long w = 0;
    if (f.size() != 3 || f[0] != "s" || f[1] != "incentives" || !detail::parse_int(f[2], w) ||
        w < 0)
        throw ParseError(K::malformed_header, lineno, "expected 's incentives <weight>'");
    std::vector<int> q(n + 1, 0);
    long long seen = 0;
    while (next_content_line()) {
        detail::split_fields(line, f);
        long long v = 0, amt = 0;
        if (f.size() != 3 || f[0] != "q" || !detail::parse_int(f[1], v) ||
            !detail::parse_int(f[2], amt))
            throw ParseError(K::malformed_line, lineno, "expected 'q <id> <amount>'");
        if (v < 1 || v > n)
            throw ParseError(K::vertex_range, lineno,
                             "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
        if (amt <= 0)
            throw ParseError(K::malformed_line, lineno, "incentive amount must be positive");
        if (q[v] != 0)
            throw ParseError(K::duplicate_threshold, lineno,
                             "second incentive for vertex " + std::to_string(v));
        q[v] = static_cast<int>(amt);
        seen += amt;
    }
    if (seen != w)
        throw ParseError(K::malformed_header, lineno,
                         "declared weight " + std::to_string(w) + " but incentives sum to " +
                             std::to_string(seen));
    return q;
}

inline std::vector<int> parse_incentives(const std::string& text, int n) {
    std::istringstream ss(text);
    return parse_incentives(ss, n);
}

}  // namespace coatss
