#ifndef SNARKPSI_SYNTHESIS_HPP
#define SNARKPSI_SYNTHESIS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "snarkpsi/coloring.hpp"
#include "snarkpsi/connectivity.hpp"
#include "snarkpsi/constructions.hpp"
#include "snarkpsi/graph.hpp"

namespace snark {

// ---------------------------------------------------------------------------
// Snark validation

enum class Verdict { pass, fail, skipped };

inline const char* verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::skipped: return "SKIPPED";
    }
    return "?";
}

struct SnarkReport {
    bool simple = true;  // Graph rejects loops and parallel edges at construction
    bool cubic = false;
    bool connected = false;
    int girth = 0;       // 0 when the graph has no cycle
    std::optional<std::uint64_t> colorings;
    std::map<int, Verdict> cyclic_connectivity;
    std::optional<CutSet> cyclic_counterexample;
    bool is_snark = false;
};

/// Full structural report. Cyclic connectivity is certified for every k in
/// 4..max(4, max_k) by one exhaustive scan, or SKIPPED when over budget.
inline SnarkReport validate_snark(const Graph& g, int max_k = 5, Budget budget = {}, int threads = 1)
{
    SnarkReport r;
    r.cubic = is_cubic(g);
    r.connected = is_connected(g);
    try {
        r.girth = girth(g);
    } catch (const graph_error&) {
        r.girth = 0;
    }
    const auto profile = valence_profile(g);
    if (profile.empty() || profile.rbegin()->first <= 3)
        r.colorings = count_colorings(g, {threads, false});

    const int top = std::clamp(max_k, 4, 6);
    if (!r.cubic || !r.connected) {
        for (int k = 4; k <= top; ++k)
            r.cyclic_connectivity[k] = Verdict::skipped;
    } else {
        try {
            auto cert = cyclic_connectivity_at_least(g, top, budget, threads);
            int smallest = cert.pass ? top : static_cast<int>(cert.counterexample->edge_ids.size());
            for (int k = 4; k <= top; ++k)
                r.cyclic_connectivity[k] = k <= smallest ? Verdict::pass : Verdict::fail;
            r.cyclic_counterexample = cert.counterexample;
        } catch (const connectivity_error&) {
            for (int k = 4; k <= top; ++k)
                r.cyclic_connectivity[k] = Verdict::skipped;
        }
    }
    r.is_snark = r.simple && r.cubic && r.connected && r.girth >= 5 && r.colorings == 0u &&
                 r.cyclic_connectivity[4] == Verdict::pass;
    return r;
}

// ---------------------------------------------------------------------------
// Reading of the d1 product formula

/// Which pair of edges the factors of psi(G, d1) are taken at.
/// adjacent: psi(G', (U,U1)) * psi(G-hat, (u,u1)).
/// subtracted: psi(G', E) * psi(G-hat, epsilon).
enum class D1Reading { adjacent, subtracted };

inline const char* reading_name(D1Reading r)
{
    return r == D1Reading::adjacent ? "adjacent" : "subtracted";
}

struct D1ReadingReport {
    std::string instance;
    std::uint64_t lhs = 0;
    std::uint64_t adjacent = 0;
    std::uint64_t subtracted = 0;
    std::optional<D1Reading> holds;  // set when exactly one reading matches
};

inline std::uint64_t d1_prediction(const DotProductSpec& s, D1Reading r, PsiSession& session)
{
    const auto& a = s.ends1;
    const auto& b = s.ends2;
    if (r == D1Reading::adjacent)
        return 3 * session.psi(s.g1, s.g1.edge_between(a.U, a.U1).id) *
               session.psi(s.g2, s.g2.edge_between(b.U, b.U1).id);
    return 3 * session.psi(s.g1, s.g1.edge_between(a.U, a.V).id) *
           session.psi(s.g2, s.g2.edge_between(b.U, b.V).id);
}

// ---------------------------------------------------------------------------
// Synthesis

enum class SynthesisMode { cyclic5, cyclic4 };

enum class synthesis_errc { invalid_target, no_valid_choice, verification_mismatch, budget_exceeded };

class synthesis_error : public std::runtime_error {
public:
    synthesis_error(synthesis_errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    synthesis_errc code() const noexcept { return code_; }

private:
    synthesis_errc code_;
};

struct PsiTarget {
    int two = 0, three = 0, five = 0, seven = 0;
    SynthesisMode mode = SynthesisMode::cyclic5;
    bool verify = false;
    Budget budget;
    int verify_max_vertices = 64;
    int threads = 1;

    std::uint64_t value() const
    {
        std::uint64_t v = 1;
        for (auto [p, e] : std::array<std::pair<int, int>, 4>{{{2, two}, {3, three}, {5, five}, {7, seven}}})
            for (int i = 0; i < e; ++i)
                v = detail::mul_checked(v, static_cast<std::uint64_t>(p));
        return v;
    }
};

/// Parses "2^i*3^j*5^k*7^l" (any subset of factors, "p" meaning "p^1") or a
/// plain integer whose prime factors are all in {2,3,5,7}.
inline PsiTarget parse_target(const std::string& text)
{
    auto fail = [&](const std::string& why) {
        throw synthesis_error(synthesis_errc::invalid_target, "bad target '" + text + "': " + why);
    };
    auto parse_uint = [&](const std::string& s) -> std::uint64_t {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
            fail("expected a non-negative integer, got '" + s + "'");
        try {
            return std::stoull(s);
        } catch (const std::out_of_range&) {
            fail("number too large");
        }
        return 0;
    };
    PsiTarget t;
    auto add = [&](std::uint64_t n, std::uint64_t e) {
        if (e > 64)
            fail("exponent too large");
        if (n == 0)
            fail("target must be positive");
        const int k = static_cast<int>(e);
        for (auto [q, slot] : std::array<std::pair<std::uint64_t, int*>, 4>{
                 {{2, &t.two}, {3, &t.three}, {5, &t.five}, {7, &t.seven}}})
            while (n % q == 0) {
                n /= q;
                *slot += k;
            }
        if (n != 1 && k > 0)
            fail("only prime factors 2, 3, 5, 7 are reachable");
    };
    std::string compact;
    for (char c : text)
        if (c != ' ')
            compact += c;
    if (compact.empty())
        fail("empty");
    std::stringstream ss(compact);
    std::string term;
    while (std::getline(ss, term, '*')) {
        auto caret = term.find('^');
        if (caret == std::string::npos)
            add(parse_uint(term), 1);
        else
            add(parse_uint(term.substr(0, caret)), parse_uint(term.substr(caret + 1)));
    }
    return t;
}

struct TraceStep {
    std::string kind;  // superpose_x7, superpose_x5, dot_x3, dot_x2
    int factor = 1;
    std::optional<std::array<VertexId, 5>> path;        // superposition steps
    std::optional<DotEnds> ends1, ends2;                 // dot steps
    std::string partner;                                 // "petersen" for dot steps
    std::optional<D1Reading> reading;                    // dot_x3 steps
    EdgeRef tracked_before;
    EdgeRef tracked_after;
    int vertex_count = 0;
    int edge_count = 0;
    std::uint64_t graph_fingerprint = 0;
    std::uint64_t predicted_psi = 1;
};

struct ConstructionTrace {
    std::uint64_t target = 1;
    SynthesisMode mode = SynthesisMode::cyclic5;
    EdgeRef initial_edge;
    std::vector<TraceStep> steps;
    std::uint64_t predicted_psi = 1;
    std::optional<std::uint64_t> verified_psi;  // unset means UNVERIFIED
};

struct SynthesisResult {
    Graph graph;
    EdgeRef tracked;
    ConstructionTrace trace;
    std::optional<SnarkReport> report;
};

namespace detail {

// First 4-edge path (lexicographic in u1..u5) that supports superposition and
// satisfies the predicate.
inline std::optional<std::array<VertexId, 5>> find_superposition_path(
    const Graph& g, const std::function<bool(const std::array<VertexId, 5>&)>& accept)
{
    const auto cycles = find_cycles(g, 5);
    auto has_disjoint_cycle = [&](const std::array<VertexId, 5>& u) {
        for (const auto& c : cycles)
            if (c.size() == 5 &&
                std::none_of(c.begin(), c.end(), [&](VertexId x) { return x == u[1] || x == u[2] || x == u[3]; }))
                return true;
        return false;
    };
    auto sorted_neighbors = [&](VertexId v) {
        std::vector<VertexId> r;
        for (const auto& inc : g.incident(v))
            r.push_back(inc.neighbor);
        std::sort(r.begin(), r.end());
        return r;
    };
    std::array<VertexId, 5> u{};
    std::optional<std::array<VertexId, 5>> best;
    std::function<bool(int)> extend = [&](int depth) -> bool {
        if (depth == 5) {
            try {
                superposition_pendants(g, u);
            } catch (const construction_error&) {
                return false;
            }
            if (accept(u) && has_disjoint_cycle(u)) {
                best = u;
                return true;
            }
            return false;
        }
        for (VertexId w : sorted_neighbors(u[depth - 1])) {
            if (std::find(u.begin(), u.begin() + depth, w) != u.begin() + depth)
                continue;
            u[depth] = w;
            if (extend(depth + 1))
                return true;
        }
        return false;
    };
    for (VertexId start = 0; start < g.vertex_count(); ++start) {
        u[0] = start;
        if (extend(1))
            break;
    }
    return best;
}

inline bool same_edge(const Graph& g, EdgeId e, VertexId x, VertexId y)
{
    auto [a, b] = g.endpoints(e);
    return (a == x && b == y) || (a == y && b == x);
}

}  // namespace detail

/// The asymmetric instance that tells the two readings of the d1 formula apart:
/// G' = Petersen joined along edge 0, G-hat = the superposition of Petersen, and
/// epsilon the first edge of G-hat for which the two readings predict differently.
inline D1ReadingReport resolve_d1_reading(PsiSession& session)
{
    const Graph p = petersen();
    auto path = detail::find_superposition_path(p, [&](const std::array<VertexId, 5>& u) {
        return detail::same_edge(p, 0, u[2], superposition_pendants(p, u).v3);
    });
    const Construction hat = superpose({p, *path});
    D1ReadingReport r;
    for (EdgeId eps = 0; eps < hat.graph.edge_count(); ++eps) {
        DotProductSpec spec = make_dot_spec(p, 0, hat.graph, eps);
        auto adjacent = d1_prediction(spec, D1Reading::adjacent, session);
        auto subtracted = d1_prediction(spec, D1Reading::subtracted, session);
        if (adjacent == subtracted)
            continue;
        const Construction dot = dot_product(spec);
        r.instance = "G' = petersen, E = edge 0; G-hat = superposition of petersen (" +
                     std::to_string(hat.graph.vertex_count()) + " vertices), epsilon = edge " +
                     std::to_string(eps);
        r.lhs = session.psi(dot.graph, dot.map.named("d1"));
        r.adjacent = adjacent;
        r.subtracted = subtracted;
        if (r.lhs == adjacent)
            r.holds = D1Reading::adjacent;
        else if (r.lhs == subtracted)
            r.holds = D1Reading::subtracted;
        return r;
    }
    r.instance = "no discriminating edge found";
    return r;
}

inline D1Reading resolved_d1_reading()
{
    static const D1Reading reading = [] {
        PsiSession session;
        auto r = resolve_d1_reading(session);
        if (!r.holds)
            throw synthesis_error(synthesis_errc::verification_mismatch,
                                  "neither reading of the d1 formula matches " + r.instance);
        return *r.holds;
    }();
    return reading;
}

/// Builds a snark with an edge whose psi is the target: superposition steps
/// (x7, then x5) starting from Petersen, then dot products (x3, then x2).
inline SynthesisResult synthesize(const PsiTarget& target)
{
    if (target.two < 0 || target.three < 0 || target.five < 0 || target.seven < 0)
        throw synthesis_error(synthesis_errc::invalid_target, "exponents must be non-negative");
    if (target.mode == SynthesisMode::cyclic5 && (target.two > 0 || target.three > 0))
        throw synthesis_error(synthesis_errc::invalid_target,
                              "factors 2 and 3 need dot products, which only guarantee cyclic "
                              "4-edge-connectivity; use the 4cc mode");
    const Graph base = petersen();
    SynthesisResult res;
    res.graph = base;
    EdgeId tracked = 0;
    res.trace.target = target.value();
    res.trace.mode = target.mode;
    res.trace.initial_edge = base.edge(0);
    std::uint64_t predicted = 1;

    auto record = [&](TraceStep step, const Graph& next, EdgeId next_tracked) {
        predicted = detail::mul_checked(predicted, static_cast<std::uint64_t>(step.factor));
        step.tracked_after = next.edge(next_tracked);
        step.vertex_count = next.vertex_count();
        step.edge_count = next.edge_count();
        step.graph_fingerprint = fingerprint(next);
        step.predicted_psi = predicted;
        res.trace.steps.push_back(std::move(step));
        res.graph = next;
        tracked = next_tracked;
    };

    auto superposition_step = [&](int factor) {
        const Graph& g = res.graph;
        const EdgeId t = tracked;
        std::optional<std::array<VertexId, 5>> path;
        if (factor == 7) {
            path = detail::find_superposition_path(g, [&](const std::array<VertexId, 5>& u) {
                return detail::same_edge(g, t, u[2], superposition_pendants(g, u).v3);
            });
        } else {
            path = detail::find_superposition_path(g, [&](const std::array<VertexId, 5>& u) {
                auto consumed = superposition_consumed_edges(g, u);
                return !std::binary_search(consumed.begin(), consumed.end(), t);
            });
        }
        if (!path)
            throw synthesis_error(synthesis_errc::no_valid_choice,
                                  "no superposition path for the x" + std::to_string(factor) + " step on a " +
                                      std::to_string(g.vertex_count()) + "-vertex graph");
        SuperpositionSpec spec{g, *path};
        Construction built = superpose(spec);
        EdgeId next = factor == 7 ? built.map.named("v3_c") : built.map.edge(0, t);
        TraceStep step;
        step.kind = factor == 7 ? "superpose_x7" : "superpose_x5";
        step.factor = factor;
        step.path = *path;
        step.tracked_before = g.edge(t);
        record(std::move(step), built.graph, next);
    };

    auto dot_step = [&](int factor) {
        const Graph& g = res.graph;
        const EdgeId t = tracked;
        DotProductSpec spec;
        std::optional<D1Reading> reading;
        if (factor == 3) {
            reading = g == base ? D1Reading::adjacent : resolved_d1_reading();
            if (*reading == D1Reading::adjacent) {
                // (U, U1) is the tracked edge; U's smaller remaining neighbour becomes V.
                auto [x, y] = g.endpoints(t);
                VertexId U = std::min(x, y), U1 = std::max(x, y);
                auto rest = detail::other_neighbors(g, U, U1);
                VertexId V = rest[0], U2 = rest[1];
                auto vn = detail::other_neighbors(g, V, U);
                spec = {g, DotEnds{U, V, U1, U2, vn[0], vn[1]}, base, default_dot_ends(base, 0)};
            } else {
                spec = make_dot_spec(g, t, base, 0);
            }
        } else {
            auto [x, y] = g.endpoints(t);
            std::optional<EdgeId> eps;
            for (EdgeId e = 0; e < g.edge_count() && !eps; ++e) {
                auto [a, b] = g.endpoints(e);
                if (a != x && a != y && b != x && b != y)
                    eps = e;
            }
            if (!eps)
                throw synthesis_error(synthesis_errc::no_valid_choice, "no edge away from the tracked edge");
            spec = make_dot_spec(base, 0, g, *eps);
        }
        Construction built = dot_product(spec);
        EdgeId next = factor == 3 ? built.map.named("d1") : built.map.edge(1, t);
        TraceStep step;
        step.kind = factor == 3 ? "dot_x3" : "dot_x2";
        step.factor = factor;
        step.ends1 = spec.ends1;
        step.ends2 = spec.ends2;
        step.partner = factor == 3 ? "g2=petersen" : "g1=petersen";
        step.reading = reading;
        step.tracked_before = g.edge(t);
        record(std::move(step), built.graph, next);
    };

    for (int i = 0; i < target.seven; ++i)
        superposition_step(7);
    for (int i = 0; i < target.five; ++i)
        superposition_step(5);
    for (int i = 0; i < target.three; ++i)
        dot_step(3);
    for (int i = 0; i < target.two; ++i)
        dot_step(2);

    res.trace.predicted_psi = predicted;
    res.tracked = res.graph.edge(tracked);
    if (target.verify && res.graph.vertex_count() <= target.verify_max_vertices) {
        std::uint64_t actual = psi(res.graph, tracked, {target.threads, false});
        if (actual != predicted)
            throw synthesis_error(synthesis_errc::verification_mismatch,
                                  "predicted psi " + std::to_string(predicted) + " but counted " +
                                      std::to_string(actual));
        res.trace.verified_psi = actual;
        const int level = target.mode == SynthesisMode::cyclic5 ? 5 : 4;
        res.report = validate_snark(res.graph, level, target.budget, target.threads);
        if (res.report->cyclic_connectivity.at(level) == Verdict::fail || !res.report->is_snark)
            throw synthesis_error(synthesis_errc::verification_mismatch,
                                  "output is not a cyclically " + std::to_string(level) +
                                      "-edge-connected snark");
    }
    return res;
}

// ---------------------------------------------------------------------------
// Brute-force checks of the product formulas

struct TheoremCheck {
    std::string suite;
    std::string instance;
    std::uint64_t lhs = 0;
    std::uint64_t rhs = 0;
    bool pass = false;
    std::string detail;
};

struct TheoremReport {
    std::vector<TheoremCheck> checks;
    std::optional<D1ReadingReport> d1_reading;
    bool pass() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const TheoremCheck& c) { return c.pass; });
    }
};

inline const std::vector<std::string>& theorem_suites()
{
    static const std::vector<std::string> names{
        "dot-edge", "dot-d1", "dot-d1-reading", "superpose-e", "superpose-f", "divisibility",
    };
    return names;
}

/// Brute-force checks of the multiplicative formulas on Petersen-based
/// instances. Selection is a list of suite names, or {"all"}.
inline TheoremReport verify_theorems(const std::vector<std::string>& selection = {"all"}, int threads = 1)
{
    std::set<std::string> chosen;
    for (const auto& s : selection) {
        if (s == "all") {
            chosen.insert(theorem_suites().begin(), theorem_suites().end());
        } else if (std::find(theorem_suites().begin(), theorem_suites().end(), s) == theorem_suites().end()) {
            throw std::invalid_argument("unknown theorem suite '" + s + "'");
        } else {
            chosen.insert(s);
        }
    }
    PsiSession session({threads, false});
    TheoremReport report;
    auto add = [&](std::string suite, std::string instance, std::uint64_t lhs, std::uint64_t rhs,
                   std::string detail = {}) {
        report.checks.push_back({std::move(suite), std::move(instance), lhs, rhs, lhs == rhs, std::move(detail)});
    };

    const Graph p = petersen();
    const DotProductSpec pp = make_dot_spec(p, 0, p, 0);
    const Construction dot = dot_product(pp);
    auto seven_path = detail::find_superposition_path(p, [&](const std::array<VertexId, 5>& u) {
        return detail::same_edge(p, 0, u[2], superposition_pendants(p, u).v3);
    });
    const SuperpositionSpec sp{p, *seven_path};
    const Construction sup = superpose(sp);
    const std::uint64_t psi_p = session.psi(p, 0);

    if (chosen.count("dot-edge")) {
        for (EdgeId e = 0; e < p.edge_count(); ++e) {
            EdgeId out = dot.map.edge(1, e);
            if (out == kRemoved)
                continue;
            add("dot-edge", "petersen . petersen, G-hat edge " + std::to_string(e),
                session.psi(dot.graph, out), 2 * session.psi(p, e) * psi_p);
        }
    }
    if (chosen.count("dot-d1"))
        add("dot-d1", "petersen . petersen, edge d1", session.psi(dot.graph, dot.map.named("d1")),
            d1_prediction(pp, D1Reading::adjacent, session));
    if (chosen.count("dot-d1-reading")) {
        auto r = resolve_d1_reading(session);
        std::string detail = std::string("adjacent reading predicts ") + std::to_string(r.adjacent) +
                             ", subtracted reading predicts " + std::to_string(r.subtracted) +
                             "; holds: " + (r.holds ? reading_name(*r.holds) : "neither");
        bool exactly_one = (r.lhs == r.adjacent) != (r.lhs == r.subtracted);
        report.checks.push_back({"dot-d1-reading", r.instance, r.lhs,
                                 r.holds == D1Reading::adjacent ? r.adjacent : r.subtracted, exactly_one,
                                 detail});
        report.d1_reading = r;
    }
    if (chosen.count("superpose-e"))
        add("superpose-e", "superposition of petersen, edge (v3,c)", session.psi(sup.graph, sup.map.named("v3_c")),
            7 * session.psi(p, p.edge_between(sp.path[2], superposition_pendants(p, sp.path).v3).id));
    if (chosen.count("superpose-f"))
        for (auto [src, out] : surviving_edges_for_5x(sp, sup))
            add("superpose-f", "superposition of petersen, surviving edge " + std::to_string(src),
                session.psi(sup.graph, out), 5 * session.psi(p, src));
    if (chosen.count("divisibility")) {
        const std::array<std::pair<const char*, const Graph*>, 3> corpus{{
            {"petersen", &p}, {"petersen . petersen", &dot.graph}, {"superposition of petersen", &sup.graph}}};
        for (const auto& [name, g] : corpus) {
            std::uint64_t violations = 0, checked = 0;
            for (EdgeId e = 0; e < g->edge_count(); ++e) {
                std::optional<SubtractResult> sub;
                try {
                    sub = subtract_edge(*g, e);
                } catch (const graph_error&) {
                    continue;
                }
                ++checked;
                if (count_colorings(sub->graph, {threads, false}) % 18 != 0)
                    ++violations;
            }
            add("divisibility", name, violations, 0,
                "lhs counts edges whose G_e coloring count is not a multiple of 18, over " +
                    std::to_string(checked) + " subtractable edges");
        }
    }
    return report;
}

}  // namespace snark

#endif
