#ifndef SNARKPSI_CONNECTIVITY_HPP
#define SNARKPSI_CONNECTIVITY_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "snarkpsi/graph.hpp"

namespace snark {

enum class connectivity_errc { not_a_cut_set, budget_exceeded, overlapping_sets, invalid_argument };

class connectivity_error : public std::runtime_error {
public:
    connectivity_error(connectivity_errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    connectivity_errc code() const noexcept { return code_; }

private:
    connectivity_errc code_;
};

struct CutSet {
    std::vector<EdgeId> edge_ids;  // sorted
    std::uint64_t graph_fingerprint = 0;
    bool minimal = false;
    bool cycle_separating = false;

    bool operator==(const CutSet&) const = default;
};

struct PathSystem {
    std::vector<std::vector<EdgeId>> paths;
    std::vector<VertexId> a_side;
    std::vector<VertexId> b_side;
};

struct Budget {
    std::uint64_t max_subsets = 100'000'000;
};

inline bool is_cut_set(const Graph& g, std::span<const EdgeId> s)
{
    return components(g, s).count > 1;
}

inline bool is_minimal_cut_set(const Graph& g, std::span<const EdgeId> s)
{
    if (!is_cut_set(g, s))
        throw connectivity_error(connectivity_errc::not_a_cut_set, "edge set does not disconnect the graph");
    std::vector<EdgeId> rest(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        bool still_cut = is_cut_set(g, rest);
        rest.insert(rest.begin() + static_cast<std::ptrdiff_t>(i), s[i]);
        if (still_cut)
            return false;
    }
    return true;
}

/// Vertices left after repeatedly trimming vertices of valence <= 1 in G - S.
/// A component of G - S contains a cycle iff it keeps a vertex here.
inline std::vector<char> cyclic_core(const Graph& g, std::span<const EdgeId> removed = {})
{
    std::vector<char> gone(g.edge_count(), 0);
    for (EdgeId e : removed)
        gone[e] = 1;
    std::vector<int> deg(g.vertex_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!gone[e]) {
            ++deg[g.edges()[e].first];
            ++deg[g.edges()[e].second];
        }
    std::vector<char> alive(g.vertex_count(), 1);
    std::vector<VertexId> stack;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (deg[v] <= 1)
            stack.push_back(v);
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        if (!alive[v])
            continue;
        alive[v] = 0;
        for (const auto& inc : g.incident(v))
            if (!gone[inc.edge] && alive[inc.neighbor] && --deg[inc.neighbor] <= 1)
                stack.push_back(inc.neighbor);
    }
    return alive;
}

/// Number of components of G - S that contain a cycle.
inline int cyclic_components(const Graph& g, std::span<const EdgeId> s)
{
    auto comp = components(g, s);
    auto core = cyclic_core(g, s);
    std::vector<char> has_cycle(comp.count, 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (core[v])
            has_cycle[comp.label[v]] = 1;
    return static_cast<int>(std::count(has_cycle.begin(), has_cycle.end(), 1));
}

inline CutSet make_cut_set(const Graph& g, std::span<const EdgeId> s)
{
    CutSet c;
    c.edge_ids.assign(s.begin(), s.end());
    std::sort(c.edge_ids.begin(), c.edge_ids.end());
    c.graph_fingerprint = fingerprint(g);
    c.minimal = is_minimal_cut_set(g, c.edge_ids);
    c.cycle_separating = cyclic_components(g, c.edge_ids) >= 2;
    return c;
}

/// Walks from start without immediate backtracking until a vertex repeats and
/// returns the closed part of the walk. Every vertex reached must have at
/// least two usable edges in G - S.
inline std::vector<VertexId> walk_to_cycle(const Graph& g, VertexId start,
                                           std::span<const EdgeId> removed = {})
{
    std::vector<char> gone(g.edge_count(), 0);
    for (EdgeId e : removed)
        gone[e] = 1;
    std::vector<int> pos(g.vertex_count(), -1);
    std::vector<VertexId> walk{start};
    pos[start] = 0;
    EdgeId came_by = kRemoved;
    VertexId x = start;
    for (;;) {
        std::optional<Incidence> step;
        for (const auto& inc : g.incident(x))
            if (!gone[inc.edge] && inc.edge != came_by) {
                step = inc;
                break;
            }
        if (!step)
            throw connectivity_error(connectivity_errc::invalid_argument,
                                     "walk reached vertex " + std::to_string(x) + " with no way forward");
        x = step->neighbor;
        came_by = step->edge;
        if (pos[x] != -1)
            return {walk.begin() + pos[x], walk.end()};
        pos[x] = static_cast<int>(walk.size());
        walk.push_back(x);
    }
}

inline std::uint64_t binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(r);
}

struct CyclicCertificate {
    int k = 0;
    bool pass = false;
    std::uint64_t subsets_examined = 0;
    std::optional<CutSet> counterexample;  // smallest size, lexicographically first
};

namespace detail {

// Counts components of G - S with at least as many edges as vertices.
class CycleSeparationTester {
public:
    explicit CycleSeparationTester(const Graph& g)
        : g_(&g), parent_(g.vertex_count()), verts_(g.vertex_count()), edges_(g.vertex_count()),
          removed_(g.edge_count(), 0) {}

    bool separates(std::span<const int> subset)
    {
        for (int e : subset)
            removed_[e] = 1;
        const int n = g_->vertex_count();
        std::iota(parent_.begin(), parent_.end(), 0);
        std::fill(verts_.begin(), verts_.end(), 1);
        std::fill(edges_.begin(), edges_.end(), 0);
        for (EdgeId e = 0; e < g_->edge_count(); ++e) {
            if (removed_[e])
                continue;
            int a = find(g_->edges()[e].first), b = find(g_->edges()[e].second);
            if (a == b) {
                ++edges_[a];
            } else {
                parent_[b] = a;
                verts_[a] += verts_[b];
                edges_[a] += edges_[b] + 1;
            }
        }
        int cyclic = 0;
        for (int v = 0; v < n; ++v)
            if (parent_[v] == v && edges_[v] >= verts_[v])
                ++cyclic;
        for (int e : subset)
            removed_[e] = 0;
        return cyclic >= 2;
    }

private:
    int find(int x)
    {
        while (parent_[x] != x)
            x = parent_[x] = parent_[parent_[x]];
        return x;
    }

    const Graph* g_;
    std::vector<int> parent_, verts_, edges_;
    std::vector<char> removed_;
};

// Visits all size-k subsets of 0..m-1 whose smallest element is first, in lexicographic order.
template <class Visit>
bool for_each_subset_starting_with(int m, int k, int first, Visit&& visit)
{
    std::vector<int> idx(k);
    idx[0] = first;
    for (int i = 1; i < k; ++i)
        idx[i] = first + i;
    if (k > 0 && idx[k - 1] >= m)
        return true;
    for (;;) {
        if (!visit(std::span<const int>(idx)))
            return false;
        int i = k - 1;
        while (i >= 1 && idx[i] == m - k + i)
            --i;
        if (i < 1)
            return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

/// Exhaustively checks every edge subset of size < k for a cut of G that
/// leaves cycles on two sides. PASS means G is cyclically k-edge-connected.
inline CyclicCertificate cyclic_connectivity_at_least(const Graph& g, int k, Budget budget = {},
                                                      int threads = 1)
{
    if (k < 1 || k > 6)
        throw connectivity_error(connectivity_errc::invalid_argument, "k must be in 1..6");
    const int m = g.edge_count();
    std::uint64_t total = 0;
    for (int j = 1; j < k; ++j)
        total += binomial(m, j);
    if (total > budget.max_subsets)
        throw connectivity_error(connectivity_errc::budget_exceeded,
                                 std::to_string(total) + " subsets exceed the budget of " +
                                     std::to_string(budget.max_subsets));
    threads = std::max(1, threads);

    CyclicCertificate cert;
    cert.k = k;
    for (int size = 1; size < k; ++size) {
        // Per first element, the lexicographically first separating subset (if any).
        std::vector<std::optional<std::vector<int>>> found(m);
        std::atomic<int> next{0};
        std::vector<std::exception_ptr> errors(threads);
        auto work = [&](int t) {
            try {
                detail::CycleSeparationTester tester(g);
                for (int first = next++; first < m; first = next++) {
                    detail::for_each_subset_starting_with(m, size, first, [&](std::span<const int> s) {
                        if (tester.separates(s)) {
                            found[first] = std::vector<int>(s.begin(), s.end());
                            return false;
                        }
                        return true;
                    });
                }
            } catch (...) {
                errors[t] = std::current_exception();
            }
        };
        if (threads == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t)
                pool.emplace_back(work, t);
            for (auto& th : pool)
                th.join();
        }
        for (auto& err : errors)
            if (err)
                std::rethrow_exception(err);
        cert.subsets_examined += binomial(m, size);
        for (const auto& hit : found)
            if (hit) {
                cert.counterexample = make_cut_set(g, std::vector<EdgeId>(hit->begin(), hit->end()));
                cert.pass = false;
                return cert;
            }
    }
    cert.pass = true;
    return cert;
}

/// Either k edge-disjoint A-B paths, or a cut of fewer than k edges
/// separating A from B (unit-capacity max flow with A and B contracted).
inline std::variant<PathSystem, CutSet> edge_disjoint_paths(const Graph& g, std::span<const VertexId> a,
                                                            std::span<const VertexId> b, int k)
{
    const int n = g.vertex_count();
    const int source = n, sink = n + 1;
    std::vector<int> node(n);
    std::iota(node.begin(), node.end(), 0);
    if (a.empty() || b.empty())
        throw connectivity_error(connectivity_errc::invalid_argument, "vertex sets must be nonempty");
    for (VertexId v : a)
        node.at(v) = source;
    for (VertexId v : b) {
        if (node.at(v) == source)
            throw connectivity_error(connectivity_errc::overlapping_sets,
                                     "vertex " + std::to_string(v) + " is in both sets");
        node[v] = sink;
    }

    // Arc 2e runs first->second endpoint of edge e, arc 2e+1 the reverse.
    const int m = g.edge_count();
    std::vector<int> flow(2 * m, 0);
    std::vector<std::vector<int>> out(n + 2);
    for (EdgeId e = 0; e < m; ++e) {
        int x = node[g.edges()[e].first], y = node[g.edges()[e].second];
        if (x == y)
            continue;
        out[x].push_back(2 * e);
        out[y].push_back(2 * e + 1);
    }
    auto head = [&](int arc) {
        auto [p, q] = g.edges()[arc / 2];
        return node[arc % 2 == 0 ? q : p];
    };

    int value = 0;
    std::vector<int> via(n + 2);
    for (; value < k; ++value) {
        std::fill(via.begin(), via.end(), -1);
        std::vector<int> queue{source};
        via[source] = -2;
        for (std::size_t i = 0; i < queue.size() && via[sink] == -1; ++i)
            for (int arc : out[queue[i]]) {
                int y = head(arc);
                if (via[y] == -1 && flow[arc] < 1) {
                    via[y] = arc;
                    queue.push_back(y);
                }
            }
        if (via[sink] == -1)
            break;
        for (int y = sink; y != source;) {
            int arc = via[y];
            ++flow[arc];
            --flow[arc ^ 1];
            y = head(arc ^ 1);
        }
    }

    if (value < k) {
        std::vector<char> reach(n + 2, 0);
        std::vector<int> stack{source};
        reach[source] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int arc : out[x]) {
                int y = head(arc);
                if (!reach[y] && flow[arc] < 1) {
                    reach[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        std::vector<EdgeId> cut;
        for (EdgeId e = 0; e < m; ++e) {
            int x = node[g.edges()[e].first], y = node[g.edges()[e].second];
            if (x != y && reach[x] != reach[y])
                cut.push_back(e);
        }
        return make_cut_set(g, cut);
    }

    PathSystem ps;
    ps.a_side.assign(a.begin(), a.end());
    ps.b_side.assign(b.begin(), b.end());
    std::vector<char> used(2 * m, 0);
    for (int p = 0; p < k; ++p) {
        std::vector<int> nodes{source};
        std::vector<int> arcs;
        int x = source;
        while (x != sink) {
            int next_arc = -1;
            for (int arc : out[x])
                if (flow[arc] == 1 && !used[arc]) {
                    next_arc = arc;
                    break;
                }
            used[next_arc] = 1;
            x = head(next_arc);
            auto seen = std::find(nodes.begin(), nodes.end(), x);
            if (seen != nodes.end()) {
                auto cut_at = seen - nodes.begin();
                nodes.resize(cut_at + 1);
                arcs.resize(cut_at);
            } else {
                nodes.push_back(x);
                arcs.push_back(next_arc);
            }
        }
        std::vector<EdgeId> path;
        for (int arc : arcs)
            path.push_back(arc / 2);
        ps.paths.push_back(std::move(path));
    }
    return ps;
}

/// Seeded sample of the minimal cut sets with exactly `size` edges, found by
/// exhaustive enumeration. Returned in lexicographic order.
inline std::vector<CutSet> sample_minimal_cut_sets(const Graph& g, int size, std::size_t count,
                                                   std::uint64_t seed, Budget budget = {})
{
    if (size < 1)
        throw connectivity_error(connectivity_errc::invalid_argument, "cut size must be positive");
    const int m = g.edge_count();
    if (binomial(m, size) > budget.max_subsets)
        throw connectivity_error(connectivity_errc::budget_exceeded, "too many subsets to enumerate");
    std::vector<std::vector<EdgeId>> all;
    for (int first = 0; first < m; ++first)
        detail::for_each_subset_starting_with(m, size, first, [&](std::span<const int> s) {
            std::vector<EdgeId> ids(s.begin(), s.end());
            if (is_cut_set(g, ids) && is_minimal_cut_set(g, ids))
                all.push_back(std::move(ids));
            return true;
        });
    if (all.size() > count) {
        std::mt19937_64 rng(seed);
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(count);
        std::sort(all.begin(), all.end());
    }
    std::vector<CutSet> out;
    for (const auto& ids : all)
        out.push_back(make_cut_set(g, ids));
    return out;
}

}  // namespace snark

#endif
