#ifndef SNARKPSI_GRAPH_HPP
#define SNARKPSI_GRAPH_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace snark {

using VertexId = int;
using EdgeId = int;

/// Sentinel used in relabeling maps for vertices and edges that did not survive a surgery.
inline constexpr int kRemoved = -1;

enum class graph_errc {
    loop,
    duplicate_edge,
    vertex_out_of_range,
    unknown_edge,
    would_create_loop,
    would_create_parallel_edge,
    not_cubic,
    acyclic,
};

class graph_error : public std::runtime_error {
public:
    graph_error(graph_errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    graph_errc code() const noexcept { return code_; }

private:
    graph_errc code_;
};

struct EdgeRef {
    EdgeId id = kRemoved;
    VertexId u = kRemoved;
    VertexId v = kRemoved;

    bool operator==(const EdgeRef&) const = default;
};

struct Incidence {
    VertexId neighbor;
    EdgeId edge;
};

/// valence -> number of vertices with that valence
using ValenceProfile = std::map<int, int>;

/// Undirected simple graph on vertices 0..n-1 with edges numbered in insertion
/// order. Immutable once built; every surgery returns a new Graph.
///
/// Loops and parallel edges are rejected at construction. Connectivity is not
/// enforced here, see is_connected().
class Graph {
public:
    Graph() = default;

    Graph(int vertex_count, std::vector<std::pair<VertexId, VertexId>> pairs)
        : n_(vertex_count), edges_(std::move(pairs))
    {
        if (n_ < 0)
            throw graph_error(graph_errc::vertex_out_of_range, "negative vertex count");
        std::vector<int> degree(n_, 0);
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            auto [u, v] = edges_[i];
            if (u < 0 || v < 0 || u >= n_ || v >= n_)
                throw graph_error(graph_errc::vertex_out_of_range,
                                  "edge " + std::to_string(i) + " (" + std::to_string(u) + "," +
                                      std::to_string(v) + ") has an endpoint outside 0.." +
                                      std::to_string(n_ - 1));
            if (u == v)
                throw graph_error(graph_errc::loop,
                                  "edge " + std::to_string(i) + " is a loop at vertex " + std::to_string(u));
            ++degree[u];
            ++degree[v];
        }
        offsets_.assign(n_ + 1, 0);
        for (int v = 0; v < n_; ++v)
            offsets_[v + 1] = offsets_[v] + degree[v];
        incidence_.resize(offsets_[n_]);
        std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
        for (EdgeId e = 0; e < edge_count(); ++e) {
            auto [u, v] = edges_[e];
            incidence_[fill[u]++] = {v, e};
            incidence_[fill[v]++] = {u, e};
        }
        for (VertexId v = 0; v < n_; ++v) {
            std::vector<VertexId> seen;
            for (const auto& inc : incident(v))
                seen.push_back(inc.neighbor);
            std::sort(seen.begin(), seen.end());
            if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
                throw graph_error(graph_errc::duplicate_edge,
                                  "duplicate edge at vertex " + std::to_string(v));
        }
    }

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<VertexId, VertexId>>& edges() const noexcept { return edges_; }

    bool has_edge_id(EdgeId e) const noexcept { return e >= 0 && e < edge_count(); }

    std::pair<VertexId, VertexId> endpoints(EdgeId e) const
    {
        check_edge(e);
        return edges_[e];
    }

    EdgeRef edge(EdgeId e) const
    {
        check_edge(e);
        return {e, edges_[e].first, edges_[e].second};
    }

    std::span<const Incidence> incident(VertexId v) const
    {
        return {incidence_.data() + offsets_[v], incidence_.data() + offsets_[v + 1]};
    }

    int valence(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

    std::optional<EdgeId> find_edge(VertexId u, VertexId v) const
    {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            return std::nullopt;
        for (const auto& inc : incident(u))
            if (inc.neighbor == v)
                return inc.edge;
        return std::nullopt;
    }

    EdgeRef edge_between(VertexId u, VertexId v) const
    {
        auto e = find_edge(u, v);
        if (!e)
            throw graph_error(graph_errc::unknown_edge,
                              "no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        return edge(*e);
    }

    VertexId other_end(EdgeId e, VertexId v) const
    {
        auto [a, b] = endpoints(e);
        return a == v ? b : a;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    void check_edge(EdgeId e) const
    {
        if (!has_edge_id(e))
            throw graph_error(graph_errc::unknown_edge, "unknown edge id " + std::to_string(e));
    }

    int n_ = 0;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<int> offsets_{0};
    std::vector<Incidence> incidence_;
};

inline Graph build_graph(int n, std::vector<std::pair<VertexId, VertexId>> pairs)
{
    return Graph(n, std::move(pairs));
}

/// FNV-1a over the vertex count and the ordered edge table. Label and order sensitive.
inline std::uint64_t fingerprint(const Graph& g)
{
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xffu;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(g.vertex_count()));
    for (auto [u, v] : g.edges()) {
        mix(static_cast<std::uint64_t>(u));
        mix(static_cast<std::uint64_t>(v));
    }
    return h;
}

inline ValenceProfile valence_profile(const Graph& g)
{
    ValenceProfile p;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        ++p[g.valence(v)];
    return p;
}

inline bool is_cubic(const Graph& g)
{
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.valence(v) != 3)
            return false;
    return g.vertex_count() > 0;
}

/// Connected components of G - S. Isolated vertices form their own component.
struct Components {
    std::vector<int> label;  // vertex -> component index, numbered by smallest vertex
    int count = 0;

    std::vector<std::vector<VertexId>> groups() const
    {
        std::vector<std::vector<VertexId>> out(count);
        for (VertexId v = 0; v < static_cast<int>(label.size()); ++v)
            out[label[v]].push_back(v);
        return out;
    }
};

inline Components components(const Graph& g, std::span<const EdgeId> removed_edges = {})
{
    std::vector<char> removed(g.edge_count(), 0);
    for (EdgeId e : removed_edges) {
        if (!g.has_edge_id(e))
            throw graph_error(graph_errc::unknown_edge, "unknown edge id " + std::to_string(e));
        removed[e] = 1;
    }
    Components c;
    c.label.assign(g.vertex_count(), -1);
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (c.label[s] != -1)
            continue;
        c.label[s] = c.count;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            for (const auto& inc : g.incident(x)) {
                if (removed[inc.edge] || c.label[inc.neighbor] != -1)
                    continue;
                c.label[inc.neighbor] = c.count;
                stack.push_back(inc.neighbor);
            }
        }
        ++c.count;
    }
    return c;
}

inline bool is_connected(const Graph& g)
{
    return g.vertex_count() > 0 && components(g).count == 1;
}

/// The Petersen graph: outer 5-cycle on 0..4, inner pentagram on 5..9, spokes (i, 5+i).
/// Edges 0-4 are the outer cycle, 5-9 the pentagram, 10-14 the spokes.
inline Graph petersen()
{
    std::vector<std::pair<VertexId, VertexId>> e;
    for (int i = 0; i < 5; ++i)
        e.emplace_back(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i)
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    for (int i = 0; i < 5; ++i)
        e.emplace_back(i, 5 + i);
    return Graph(10, std::move(e));
}

/// Removes edge e, keeping its endpoints. Edge ids above e shift down by one.
inline Graph eliminate_edge(const Graph& g, EdgeId e)
{
    g.endpoints(e);
    auto pairs = g.edges();
    pairs.erase(pairs.begin() + e);
    return Graph(g.vertex_count(), std::move(pairs));
}

struct SubtractResult {
    Graph graph;
    EdgeRef d1;                      // joins the first endpoint's two other neighbours
    EdgeRef d2;                      // joins the second endpoint's two other neighbours
    std::vector<VertexId> vertex_map;  // old vertex -> new vertex or kRemoved
    std::vector<EdgeId> edge_map;      // old edge -> new edge or kRemoved
};

/// Edge subtraction on a cubic graph: delete e=(u,v) and both endpoints, then
/// join u's two other neighbours (d1) and v's two other neighbours (d2).
/// Vertices are compacted in order; surviving edges keep their relative order
/// and d1, d2 are appended last.
inline SubtractResult subtract_edge(const Graph& g, EdgeId e)
{
    auto [u, v] = g.endpoints(e);
    if (!is_cubic(g))
        throw graph_error(graph_errc::not_cubic, "edge subtraction needs a cubic graph");

    auto others = [&](VertexId x) {
        std::vector<VertexId> r;
        for (const auto& inc : g.incident(x))
            if (inc.edge != e)
                r.push_back(inc.neighbor);
        std::sort(r.begin(), r.end());
        return std::pair{r[0], r[1]};
    };
    auto [u1, u2] = others(u);
    auto [v1, v2] = others(v);

    SubtractResult out;
    out.vertex_map.assign(g.vertex_count(), kRemoved);
    int next = 0;
    for (VertexId x = 0; x < g.vertex_count(); ++x)
        if (x != u && x != v)
            out.vertex_map[x] = next++;

    auto check_new = [&](VertexId a, VertexId b, const char* name) {
        if (a == b || a == u || a == v || b == u || b == v)
            throw graph_error(graph_errc::would_create_loop,
                              std::string("subtracting this edge makes ") + name + " a loop");
    };
    check_new(u1, u2, "d1");
    check_new(v1, v2, "d2");

    std::vector<std::pair<VertexId, VertexId>> pairs;
    out.edge_map.assign(g.edge_count(), kRemoved);
    for (EdgeId f = 0; f < g.edge_count(); ++f) {
        auto [a, b] = g.edges()[f];
        if (a == u || a == v || b == u || b == v)
            continue;
        out.edge_map[f] = static_cast<EdgeId>(pairs.size());
        pairs.emplace_back(out.vertex_map[a], out.vertex_map[b]);
    }
    auto parallel = [&](VertexId a, VertexId b) {
        return g.find_edge(a, b).has_value();
    };
    if (parallel(u1, u2) || parallel(v1, v2) ||
        (std::min(u1, u2) == std::min(v1, v2) && std::max(u1, u2) == std::max(v1, v2)))
        throw graph_error(graph_errc::would_create_parallel_edge,
                          "subtracting edge " + std::to_string(e) + " creates a parallel edge");

    EdgeId d1 = static_cast<EdgeId>(pairs.size());
    pairs.emplace_back(out.vertex_map[u1], out.vertex_map[u2]);
    EdgeId d2 = static_cast<EdgeId>(pairs.size());
    pairs.emplace_back(out.vertex_map[v1], out.vertex_map[v2]);

    out.graph = Graph(next, std::move(pairs));
    out.d1 = out.graph.edge(d1);
    out.d2 = out.graph.edge(d2);
    return out;
}

/// Length of a shortest cycle. Throws graph_errc::acyclic on forests.
inline int girth(const Graph& g)
{
    const int n = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n), parent_edge(n);
    std::queue<VertexId> q;
    for (VertexId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent_edge[s] = kRemoved;
        q.push(s);
        while (!q.empty()) {
            VertexId x = q.front();
            q.pop();
            if (2 * dist[x] + 1 >= best)
                break;
            for (const auto& inc : g.incident(x)) {
                if (inc.edge == parent_edge[x])
                    continue;
                VertexId y = inc.neighbor;
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    parent_edge[y] = inc.edge;
                    q.push(y);
                } else {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
        while (!q.empty())
            q.pop();
    }
    if (best == std::numeric_limits<int>::max())
        throw graph_error(graph_errc::acyclic, "graph has no cycle");
    return best;
}

/// All simple cycles of length <= max_len. Each cycle is reported once as a
/// vertex sequence that starts at its smallest vertex and whose second vertex
/// is smaller than its last.
inline std::vector<std::vector<VertexId>> find_cycles(const Graph& g, int max_len)
{
    std::vector<std::vector<VertexId>> out;
    if (max_len < 3)
        return out;
    const int n = g.vertex_count();
    std::vector<char> on_path(n, 0);
    std::vector<VertexId> path;

    auto dfs = [&](auto&& self, VertexId s, VertexId x) -> void {
        for (const auto& inc : g.incident(x)) {
            VertexId y = inc.neighbor;
            if (y == s && path.size() >= 3) {
                if (path[1] < path.back())
                    out.push_back(path);
                continue;
            }
            if (y <= s || on_path[y] || static_cast<int>(path.size()) >= max_len)
                continue;
            on_path[y] = 1;
            path.push_back(y);
            self(self, s, y);
            path.pop_back();
            on_path[y] = 0;
        }
    };
    for (VertexId s = 0; s < n; ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        dfs(dfs, s, s);
        on_path[s] = 0;
    }
    return out;
}

struct Hinge {
    std::array<VertexId, 3> vertices;  // (v1, v2, v3) with v2 in the middle, v1 < v3
    std::array<EdgeId, 2> edges;       // (v1,v2), (v2,v3)
};

/// Every path of two edges, once up to reversal.
inline std::vector<Hinge> hinges(const Graph& g)
{
    std::vector<Hinge> out;
    for (VertexId mid = 0; mid < g.vertex_count(); ++mid) {
        auto inc = g.incident(mid);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j) {
                auto a = inc[i], b = inc[j];
                if (a.neighbor > b.neighbor)
                    std::swap(a, b);
                out.push_back({{a.neighbor, mid, b.neighbor}, {a.edge, b.edge}});
            }
    }
    return out;
}

}  // namespace snark

#endif
