#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coatss/approx_tss.hpp"
#include "coatss/classify.hpp"
#include "coatss/generators.hpp"
#include "coatss/incentives.hpp"
#include "coatss/io.hpp"
#include "coatss/oracle.hpp"
#include "coatss/reductions.hpp"

namespace coatss::cli {

namespace detail {

inline const char* usage_text() {
    return
        "usage: coatss <subcommand> [options] [file]\n"
        "\n"
        "subcommands:\n"
        "  classify <file>                      print instance class report\n"
        "  solve tss --method auto|exact|alg1 [--seed N] <file>\n"
        "  solve tssp --method auto|exact-dp|poly|greedy|alg2|alg3\n"
        "             [--effort exact|heuristic:N] [--seed N] [--guesses coarse|all] <file>\n"
        "  verify tss <instance> <solution>     exit 1 when the set is not contagious\n"
        "  verify tssp <instance> <solution>    exit 1 when the incentives do not activate V\n"
        "  bounds <file>                        lower/upper bound bracket for both problems\n"
        "  cutwidth [--effort exact|heuristic:N] [--seed N] <file>\n"
        "  reduce --gadget fvs|split|undirect|duplicate|wrap3|ladder:t2|ladder:t3|restrict\n"
        "         [--attach U W] [-o out] <file>\n"
        "  gen <kind:key=val,...> --seed N [-o out]\n"
        "      kinds: cycle,path,star,gnp,regular,dgnp; keys: n,k,d,p,t,scheme\n"
        "      schemes: constant (via t=C), half, unanimous, random\n"
        "\n"
        "file '-' or absent reads stdin. Exit codes: 0 ok, 1 invalid solution,\n"
        "2 usage or precondition error. Exact solvers handle about 20 vertices\n"
        "(COA_TSS_ORACLE_LIMIT overrides); randomized paths require --seed.\n";
}

inline std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline std::string fraction(long long num, long long den) {
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 0) {
        num /= g;
        den /= g;
    }
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

inline const char* yesno(bool b) { return b ? "yes" : "no"; }

inline std::string opt_flag(const std::optional<bool>& b) {
    return b.has_value() ? yesno(*b) : "-";
}

// Flag scanner over the raw argument list: options may appear anywhere, the
// last non-option token is the input file.
struct Args {
    std::vector<std::string> positional;
    std::optional<std::string> method, effort, guesses, gadget, out_file;
    std::optional<std::uint64_t> seed;
    std::optional<Vertex> attach_u, attach_w;

    static bool parse_u64(const std::string& s, std::uint64_t& v) {
        if (s.empty()) return false;
        v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') return false;
            v = v * 10 + static_cast<std::uint64_t>(c - '0');
        }
        return true;
    }

    // Returns an error message, empty on success.
    std::string scan(const std::vector<std::string>& argv, size_t from) {
        for (size_t i = from; i < argv.size(); ++i) {
            const std::string& a = argv[i];
            auto take = [&](std::optional<std::string>& slot) -> std::string {
                if (i + 1 >= argv.size()) return "missing value for " + a;
                slot = argv[++i];
                return "";
            };
            std::string e;
            if (a == "--method") e = take(method);
            else if (a == "--effort") e = take(effort);
            else if (a == "--guesses") e = take(guesses);
            else if (a == "--gadget") e = take(gadget);
            else if (a == "-o" || a == "--out") e = take(out_file);
            else if (a == "--seed") {
                if (i + 1 >= argv.size()) return "missing value for --seed";
                std::uint64_t v = 0;
                if (!parse_u64(argv[++i], v)) return "bad --seed value";
                seed = v;
            } else if (a == "--attach") {
                if (i + 2 >= argv.size()) return "--attach needs two vertex ids";
                std::uint64_t u = 0, w = 0;
                if (!parse_u64(argv[i + 1], u) || !parse_u64(argv[i + 2], w) || u < 1 || w < 1)
                    return "bad --attach vertex ids";
                attach_u = static_cast<Vertex>(u);
                attach_w = static_cast<Vertex>(w);
                i += 2;
            } else if (a.size() > 1 && a[0] == '-' && a != "-") {
                return "unknown option: " + a;
            } else {
                positional.push_back(a);
            }
            if (!e.empty()) return e;
        }
        return "";
    }

    std::string input_path() const { return positional.empty() ? "-" : positional.front(); }
};

struct EffortSpec {
    Effort effort = Effort::exact_mode();
    bool randomized = false;
};

// --effort exact | heuristic | heuristic:N
inline EffortSpec parse_effort(const std::optional<std::string>& s) {
    EffortSpec spec;
    if (!s || *s == "exact") return spec;
    std::string v = *s;
    if (v.rfind("heuristic", 0) == 0) {
        int iters = 2000;
        if (v.size() > 9) {
            if (v[9] != ':') throw std::invalid_argument("bad --effort value: " + v);
            std::uint64_t it = 0;
            if (!Args::parse_u64(v.substr(10), it) || it == 0 || it > 100000000)
                throw std::invalid_argument("bad --effort iteration count: " + v);
            iters = static_cast<int>(it);
        }
        spec.effort = Effort::heuristic(iters);
        spec.randomized = true;
        return spec;
    }
    throw std::invalid_argument("bad --effort value: " + v);
}

inline void emit(const Args& args, const std::string& text, std::ostream& out) {
    if (args.out_file) {
        std::ofstream f(*args.out_file, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + *args.out_file);
        f << text;
    } else {
        out << text;
    }
}

inline int cmd_classify(const Args& args, std::ostream& out) {
    Instance inst = parse_instance(slurp(args.input_path()));
    ClassReport r = classify(inst);
    out << "n " << r.n << '\n';
    out << "m " << r.m << '\n';
    out << "directed " << yesno(r.directed) << '\n';
    out << "max_degree " << r.max_degree << '\n';
    out << "avg_degree " << (r.n == 0 ? "0" : fraction(2LL * r.m, r.n)) << '\n';
    out << "threshold_sum " << r.threshold_sum << '\n';
    out << "coa " << opt_flag(r.coa) << '\n';
    out << "weak_majority " << opt_flag(r.weak_majority) << '\n';
    out << "strict_majority " << opt_flag(r.strict_majority) << '\n';
    out << "balanced " << opt_flag(r.balanced) << '\n';
    out << "degenerate " << opt_flag(r.degenerate) << '\n';
    out << "influence_ratio "
        << (r.influence_ratio ? fraction(r.influence_ratio->num, r.influence_ratio->den) : "-")
        << '\n';
    out << "extremal " << opt_flag(r.extremal) << '\n';
    out << "unanimous " << opt_flag(r.unanimous) << '\n';
    out << "restricted " << opt_flag(r.restricted) << '\n';
    return 0;
}

inline int cmd_solve_tss(const Args& args, std::ostream& out, std::ostream& err) {
    Instance inst = parse_instance(slurp(args.input_path()));
    std::string method = args.method.value_or("auto");
    VertexSet sol;
    std::string used;
    if (method == "exact") {
        sol = exact_min_target_set(inst);
        used = "exact";
    } else if (method == "alg1") {
        sol = algorithm_one(inst);
        used = "alg1";
    } else if (method == "auto") {
        bool degen = !inst.g.directed && degeneracy_ordering(inst).ok;
        if (degen) {
            sol = algorithm_one(inst);
            used = "alg1";
        } else if (inst.n() <= oracle_limit(20)) {
            sol = exact_min_target_set(inst);
            used = "exact";
        } else {
            err << "no applicable method: instance is not degenerate and exceeds the exact "
                   "solver limit\n";
            return 2;
        }
    } else {
        err << "unknown tss method: " << method << '\n';
        return 2;
    }
    ActivationTrace tr = closure(inst, sol);
    if (!tr.covers_all(inst.n())) {
        err << "solver output failed verification\n";
        return 1;
    }
    emit(args, serialize_target_set(sol), out);
    err << "method " << used << ": target set of size " << sol.size() << ", activation rounds "
        << tr.rounds << '\n';
    return 0;
}

inline int cmd_solve_tssp(const Args& args, std::ostream& out, std::ostream& err) {
    Instance inst = parse_instance(slurp(args.input_path()));
    std::string method = args.method.value_or("auto");
    EffortSpec es = parse_effort(args.effort);
    if (es.randomized && !args.seed) {
        err << "--effort heuristic requires --seed\n";
        return 2;
    }
    std::uint64_t seed = args.seed.value_or(0);
    GuessPolicy policy = GuessPolicy::coarse;
    if (args.guesses) {
        if (*args.guesses == "all") policy = GuessPolicy::all;
        else if (*args.guesses != "coarse") {
            err << "bad --guesses value: " << *args.guesses << '\n';
            return 2;
        }
    }

    auto poly_dispatch = [&](std::string& used) -> std::optional<IncentiveAssignment> {
        if (!inst.g.directed && degeneracy_ordering(inst).ok) {
            used = "poly:degenerate";
            return exact_degenerate_incentives(inst);
        }
        bool near_u = !inst.g.directed, one_u = !inst.g.directed;
        for (Vertex v = 1; v <= inst.n() && (near_u || one_u); ++v) {
            int d = inst.g.degree(v);
            if (inst.t[v] != d && inst.t[v] != d - 1) near_u = false;
            if (inst.t[v] != d && inst.t[v] != 1) one_u = false;
        }
        if (near_u) {
            used = "poly:near-unanimous";
            return exact_near_unanimous_incentives(inst);
        }
        if (one_u) {
            used = "poly:one-or-unanimous";
            return exact_one_or_unanimous_incentives(inst);
        }
        return std::nullopt;
    };

    IncentiveAssignment sol;
    std::string used;
    if (method == "exact-dp") {
        sol = exact_min_incentives(inst);
        used = "exact-dp";
    } else if (method == "poly") {
        auto r = poly_dispatch(used);
        if (!r) {
            err << "no polynomial class applies (need degenerate, thresholds in {d-1,d}, or "
                   "thresholds in {1,d})\n";
            return 2;
        }
        sol = *r;
    } else if (method == "greedy") {
        sol = greedy_min_threshold(inst);
        used = "greedy";
    } else if (method == "alg2") {
        sol = algorithm_two(inst, es.effort, seed).assignment;
        used = "alg2";
    } else if (method == "alg3") {
        sol = algorithm_three(inst, policy, es.effort, seed);
        used = "alg3";
    } else if (method == "auto") {
        auto r = poly_dispatch(used);
        if (r) {
            sol = *r;
        } else if (inst.n() <= oracle_limit(22)) {
            sol = exact_min_incentives(inst);
            used = "exact-dp";
        } else {
            bool weak = true;
            if (inst.g.directed) weak = false;
            else
                for (Vertex v = 1; v <= inst.n(); ++v)
                    if (2 * inst.t[v] < inst.g.degree(v)) weak = false;
            if (!weak || !inst.thresholds_within_degree()) {
                err << "no applicable method: instance is too large for the exact solver and "
                       "outside the weak-majority class\n";
                return 2;
            }
            IncentiveAssignment a = algorithm_two(inst, es.effort, seed).assignment;
            IncentiveAssignment b = algorithm_three(inst, policy, es.effort, seed);
            if (b.weight() < a.weight()) {
                sol = b;
                used = "alg3";
            } else {
                sol = a;
                used = "alg2";
            }
        }
    } else {
        err << "unknown tssp method: " << method << '\n';
        return 2;
    }
    if (!is_valid_incentive(inst, sol)) {
        err << "solver output failed verification\n";
        return 1;
    }
    emit(args, serialize_incentives(sol.q), out);
    err << "method " << used << ": incentives of weight " << sol.weight() << '\n';
    return 0;
}

inline int cmd_verify_tss(const Args& args, std::ostream& out, std::ostream& err) {
    if (args.positional.size() != 2) {
        err << "verify tss needs <instance> <solution>\n";
        return 2;
    }
    Instance inst = parse_instance(slurp(args.positional[0]));
    VertexSet sol = parse_target_set(slurp(args.positional[1]));
    for (Vertex v : sol)
        if (v > inst.n()) {
            err << "solution vertex " << v << " out of range\n";
            return 2;
        }
    ActivationTrace tr = closure(inst, sol);
    bool ok = tr.covers_all(inst.n());
    out << "valid " << yesno(ok) << '\n';
    out << "seeds " << sol.size() << '\n';
    out << "active " << tr.active_count << '\n';
    out << "rounds " << tr.rounds << '\n';
    return ok ? 0 : 1;
}

inline int cmd_verify_tssp(const Args& args, std::ostream& out, std::ostream& err) {
    if (args.positional.size() != 2) {
        err << "verify tssp needs <instance> <solution>\n";
        return 2;
    }
    Instance inst = parse_instance(slurp(args.positional[0]));
    if (!inst.thresholds_within_degree()) {
        err << "instance has a threshold above the supporter count; incentives undefined\n";
        return 2;
    }
    std::vector<int> q = parse_incentives(slurp(args.positional[1]), inst.n());
    IncentiveAssignment ia(std::move(q));
    bool in_range = true;
    for (Vertex v = 1; v <= inst.n(); ++v)
        if (ia.q[v] < 0 || ia.q[v] > inst.t[v]) in_range = false;
    bool ok = in_range && is_valid_incentive(inst, ia);
    out << "valid " << yesno(ok) << '\n';
    out << "weight " << ia.weight() << '\n';
    if (in_range) {
        ActivationTrace tr = closure(apply_incentives(inst, ia), {});
        out << "active " << tr.active_count << '\n';
        out << "rounds " << tr.rounds << '\n';
    } else {
        out << "active -\n";
        out << "rounds -\n";
    }
    return ok ? 0 : 1;
}

inline int cmd_bounds(const Args& args, std::ostream& out, std::ostream& err) {
    Instance inst = parse_instance(slurp(args.input_path()));
    std::string tss_lo = "-", tss_hi = "-", tssp_lo = "-", tssp_hi = "-";
    std::string tssp_edge = "-", tssp_tmin = "-";
    if (!inst.g.directed) {
        tss_lo = std::to_string(tss_lower_bound(inst));
        if (degeneracy_ordering(inst).ok)
            tss_hi = std::to_string(algorithm_one(inst).size());
    }
    if (inst.thresholds_within_degree()) {
        IncentiveLowerBounds lb = incentive_lower_bounds(inst);
        tssp_lo = std::to_string(lb.best);
        tssp_edge = std::to_string(lb.edge_bound);
        tssp_tmin = std::to_string(lb.tmin_bound);
        tssp_hi = std::to_string(greedy_min_threshold(inst).weight());
    }
    out << "tss_lower " << tss_lo << '\n';
    out << "tss_upper " << tss_hi << '\n';
    out << "tssp_lower " << tssp_lo << '\n';
    out << "tssp_edge_bound " << tssp_edge << '\n';
    out << "tssp_tmin_bound " << tssp_tmin << '\n';
    out << "tssp_upper " << tssp_hi << '\n';
    err << "bracket: tss in [" << tss_lo << ", " << tss_hi << "], tssp in [" << tssp_lo << ", "
        << tssp_hi << "]\n";
    return 0;
}

inline int cmd_cutwidth(const Args& args, std::ostream& out, std::ostream& err) {
    Instance inst = parse_instance(slurp(args.input_path()));
    EffortSpec es = parse_effort(args.effort);
    if (es.randomized && !args.seed) {
        err << "--effort heuristic requires --seed\n";
        return 2;
    }
    Arrangement arr = arrangement_search(inst.g, es.effort, args.seed.value_or(0));
    out << "width " << arr.width << '\n';
    out << "exact " << yesno(arr.exact) << '\n';
    out << "order";
    for (int i = 1; i < static_cast<int>(arr.order.size()); ++i) out << ' ' << arr.order[i];
    out << '\n';
    return 0;
}

inline int cmd_reduce(const Args& args, std::ostream& out, std::ostream& err) {
    if (!args.gadget) {
        err << "reduce requires --gadget\n";
        return 2;
    }
    const std::string& g = *args.gadget;
    Instance inst = parse_instance(slurp(args.input_path()));
    std::ostringstream body;
    if (g == "ladder:t2" || g == "ladder:t3") {
        if (!args.attach_u || !args.attach_w) {
            err << "ladder gadgets need --attach U W\n";
            return 2;
        }
        LadderVariant var = g == "ladder:t2" ? LadderVariant::t2 : LadderVariant::t3;
        Instance t = attach_ladder(inst, *args.attach_u, *args.attach_w, var);
        body << "# gadget " << g << '\n';
        body << "# attach " << *args.attach_u << ' ' << *args.attach_w << '\n';
        body << "# ladder vertices " << inst.n() + 1 << ".." << inst.n() + 8 << '\n';
        body << "# internal seeds needed with both attachments active: "
             << (var == LadderVariant::t2 ? 2 : 3) << '\n';
        serialize_instance(t, body);
    } else {
        Reduction r;
        if (g == "fvs") r = fvs_as_unanimous_tss(inst.g);
        else if (g == "split") r = split_extremal_degrees(inst);
        else if (g == "undirect") r = directed_to_undirected(inst);
        else if (g == "duplicate") r = duplicate_to_cubic(inst);
        else if (g == "wrap3") r = wrap_universal_triple(inst);
        else if (g == "restrict") r = restrict_dfvs(inst.g);
        else {
            err << "unknown gadget: " << g << '\n';
            return 2;
        }
        body << "# gadget " << g << '\n';
        body << "# correspondence " << r.correspondence << '\n';
        for (const auto& [src, ids] : r.vertex_map) {
            body << "# map " << src << " ->";
            for (Vertex v : ids) body << ' ' << v;
            body << '\n';
        }
        for (const std::string& note : r.notes)
            body << (note.rfind("#", 0) == 0 ? "" : "# ") << note << '\n';
        serialize_instance(r.target, body);
    }
    emit(args, body.str(), out);
    return 0;
}

inline GenSpec parse_gen_spec(const std::string& s) {
    GenSpec spec;
    size_t colon = s.find(':');
    std::string kind = s.substr(0, colon);
    using K = GenSpec::Kind;
    if (kind == "cycle") spec.kind = K::cycle;
    else if (kind == "path") spec.kind = K::path;
    else if (kind == "star") spec.kind = K::star;
    else if (kind == "gnp") spec.kind = K::random_gnp;
    else if (kind == "regular") spec.kind = K::random_regular;
    else if (kind == "dgnp") spec.kind = K::digraph_gnp;
    else throw std::invalid_argument("unknown generator kind: " + kind);
    bool scheme_set = false, t_set = false;
    if (colon != std::string::npos) {
        std::istringstream rest(s.substr(colon + 1));
        std::string item;
        while (std::getline(rest, item, ',')) {
            size_t eq = item.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("bad generator key=value: " + item);
            std::string key = item.substr(0, eq), val = item.substr(eq + 1);
            auto as_int = [&](int lo) {
                std::uint64_t v = 0;
                if (!Args::parse_u64(val, v) || static_cast<long long>(v) < lo ||
                    v > 1000000)
                    throw std::invalid_argument("bad generator value: " + item);
                return static_cast<int>(v);
            };
            if (key == "n") spec.n = as_int(0);
            else if (key == "k") spec.k = as_int(1);
            else if (key == "d") spec.d = as_int(0);
            else if (key == "t") {
                spec.scheme = ThresholdScheme::constant;
                spec.constant = as_int(0);
                t_set = true;
            } else if (key == "p") {
                size_t used = 0;
                double p = std::stod(val, &used);
                if (used != val.size() || p < 0.0 || p > 1.0)
                    throw std::invalid_argument("bad generator probability: " + item);
                spec.p = p;
            } else if (key == "scheme") {
                scheme_set = true;
                if (val == "constant") spec.scheme = ThresholdScheme::constant;
                else if (val == "half") spec.scheme = ThresholdScheme::half_degree_ceil;
                else if (val == "unanimous") spec.scheme = ThresholdScheme::unanimous;
                else if (val == "random") spec.scheme = ThresholdScheme::uniform_random;
                else throw std::invalid_argument("unknown threshold scheme: " + val);
            } else {
                throw std::invalid_argument("unknown generator key: " + key);
            }
        }
    }
    if (t_set && scheme_set && spec.scheme != ThresholdScheme::constant)
        throw std::invalid_argument("generator spec sets both t= and a non-constant scheme");
    return spec;
}

inline int cmd_gen(const Args& args, std::ostream& out, std::ostream& err) {
    if (args.positional.empty()) {
        err << "gen needs a generator spec, e.g. gnp:n=10,p=0.3,scheme=half\n";
        return 2;
    }
    if (!args.seed) {
        err << "gen requires --seed\n";
        return 2;
    }
    GenSpec spec = parse_gen_spec(args.positional.front());
    Instance inst = gen_instance(spec, *args.seed);
    emit(args, serialize_instance(inst), out);
    err << "generated n=" << inst.n() << " m=" << inst.m() << '\n';
    return 0;
}

}  // namespace detail

// Entry point shared by the binary and the tests; argv excludes the program
// name. Streams capture stdout/stderr.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    using namespace detail;
    if (argv.empty() || argv[0] == "--help" || argv[0] == "help" || argv[0] == "-h") {
        out << usage_text();
        return argv.empty() ? 2 : 0;
    }
    try {
        const std::string& cmd = argv[0];
        Args args;
        if (cmd == "classify") {
            std::string e = args.scan(argv, 1);
            if (!e.empty()) { err << e << '\n'; return 2; }
            return cmd_classify(args, out);
        }
        if (cmd == "solve" || cmd == "verify") {
            if (argv.size() < 2 || (argv[1] != "tss" && argv[1] != "tssp")) {
                err << cmd << " needs a problem: tss or tssp\n";
                return 2;
            }
            std::string e = args.scan(argv, 2);
            if (!e.empty()) { err << e << '\n'; return 2; }
            if (cmd == "solve")
                return argv[1] == "tss" ? cmd_solve_tss(args, out, err)
                                        : cmd_solve_tssp(args, out, err);
            return argv[1] == "tss" ? cmd_verify_tss(args, out, err)
                                    : cmd_verify_tssp(args, out, err);
        }
        if (cmd == "bounds") {
            std::string e = args.scan(argv, 1);
            if (!e.empty()) { err << e << '\n'; return 2; }
            return cmd_bounds(args, out, err);
        }
        if (cmd == "cutwidth") {
            std::string e = args.scan(argv, 1);
            if (!e.empty()) { err << e << '\n'; return 2; }
            return cmd_cutwidth(args, out, err);
        }
        if (cmd == "reduce") {
            std::string e = args.scan(argv, 1);
            if (!e.empty()) { err << e << '\n'; return 2; }
            return cmd_reduce(args, out, err);
        }
        if (cmd == "gen") {
            std::string e = args.scan(argv, 1);
            if (!e.empty()) { err << e << '\n'; return 2; }
            return cmd_gen(args, out, err);
        }
        err << "unknown subcommand: " << cmd << '\n';
        err << usage_text();
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        err << "internal check failed: " << e.what() << '\n';
        return 1;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace coatss::cli
