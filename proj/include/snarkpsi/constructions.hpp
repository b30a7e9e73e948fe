#ifndef SNARKPSI_CONSTRUCTIONS_HPP
#define SNARKPSI_CONSTRUCTIONS_HPP

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "snarkpsi/coloring.hpp"
#include "snarkpsi/graph.hpp"

namespace snark {

enum class construction_errc { invalid_spec, invalid_path, no_disjoint_cycle, not_a_snark };

class construction_error : public std::runtime_error {
public:
    construction_error(construction_errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    construction_errc code() const noexcept { return code_; }

private:
    construction_errc code_;
};

/// Where the vertices and edges of each input graph ended up in an output
/// graph, plus names for the vertices and edges the construction created.
struct EdgeMap {
    std::vector<std::string> sources;
    std::vector<std::vector<EdgeId>> edge_forward;      // per source, kRemoved if deleted
    std::vector<std::vector<VertexId>> vertex_forward;  // per source, kRemoved if deleted
    std::map<std::string, EdgeId> new_edges;
    std::map<std::string, VertexId> new_vertices;

    EdgeId edge(std::size_t source, EdgeId e) const { return edge_forward.at(source).at(e); }
    VertexId vertex(std::size_t source, VertexId v) const { return vertex_forward.at(source).at(v); }
    EdgeId named(const std::string& name) const { return new_edges.at(name); }
};

struct Construction {
    Graph graph;
    EdgeMap map;
};

namespace detail {

// Copies g minus the given vertices into pairs/offset, recording the forward maps.
inline void append_remnant(const Graph& g, const std::set<VertexId>& drop, int offset,
                           std::vector<std::pair<VertexId, VertexId>>& pairs, std::vector<VertexId>& vmap,
                           std::vector<EdgeId>& emap)
{
    vmap.assign(g.vertex_count(), kRemoved);
    int next = offset;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!drop.count(v))
            vmap[v] = next++;
    emap.assign(g.edge_count(), kRemoved);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edges()[e];
        if (vmap[a] == kRemoved || vmap[b] == kRemoved)
            continue;
        emap[e] = static_cast<EdgeId>(pairs.size());
        pairs.emplace_back(vmap[a], vmap[b]);
    }
}

inline std::vector<VertexId> other_neighbors(const Graph& g, VertexId v, VertexId except)
{
    std::vector<VertexId> r;
    for (const auto& inc : g.incident(v))
        if (inc.neighbor != except)
            r.push_back(inc.neighbor);
    std::sort(r.begin(), r.end());
    return r;
}

inline void require_cubic_girth5(const Graph& g, const char* what)
{
    if (!is_cubic(g) || !is_connected(g))
        throw construction_error(construction_errc::invalid_spec,
                                 std::string(what) + " must be a connected cubic graph");
    if (girth(g) < 5)
        throw construction_error(construction_errc::invalid_spec,
                                 std::string(what) + " must have girth at least 5");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Symmetric dot product

/// Roles around the joined edge (U, V): U's other neighbours (U1, U2), V's (V1, V2).
struct DotEnds {
    VertexId U = kRemoved, V = kRemoved;
    VertexId U1 = kRemoved, U2 = kRemoved;
    VertexId V1 = kRemoved, V2 = kRemoved;

    bool operator==(const DotEnds&) const = default;
};

/// Default roles: U is the edge's first endpoint, neighbour pairs ascending.
inline DotEnds default_dot_ends(const Graph& g, EdgeId e)
{
    auto [u, v] = g.endpoints(e);
    auto un = detail::other_neighbors(g, u, v);
    auto vn = detail::other_neighbors(g, v, u);
    if (un.size() != 2 || vn.size() != 2)
        throw construction_error(construction_errc::invalid_spec, "edge endpoints must be trivalent");
    return {u, v, un[0], un[1], vn[0], vn[1]};
}

struct DotProductSpec {
    Graph g1;  // G', joined along E = (U, V)
    DotEnds ends1;
    Graph g2;  // G-hat, joined along epsilon = (u, v)
    DotEnds ends2;
};

inline DotProductSpec make_dot_spec(const Graph& g1, EdgeId e1, const Graph& g2, EdgeId e2)
{
    return {g1, default_dot_ends(g1, e1), g2, default_dot_ends(g2, e2)};
}

inline void validate_dot_ends(const Graph& g, const DotEnds& d, const char* what)
{
    auto bad = [&](const std::string& msg) {
        throw construction_error(construction_errc::invalid_spec, std::string(what) + ": " + msg);
    };
    if (!g.find_edge(d.U, d.V))
        bad("(U,V) is not an edge");
    std::array<VertexId, 6> all{d.U, d.V, d.U1, d.U2, d.V1, d.V2};
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        bad("the six designated vertices are not distinct");
    auto un = detail::other_neighbors(g, d.U, d.V);
    auto vn = detail::other_neighbors(g, d.V, d.U);
    std::array<VertexId, 2> uu{std::min(d.U1, d.U2), std::max(d.U1, d.U2)};
    std::array<VertexId, 2> vv{std::min(d.V1, d.V2), std::max(d.V1, d.V2)};
    if (un.size() != 2 || un[0] != uu[0] || un[1] != uu[1])
        bad("(U1,U2) are not the other neighbours of U");
    if (vn.size() != 2 || vn[0] != vv[0] || vn[1] != vv[1])
        bad("(V1,V2) are not the other neighbours of V");
}

/// Joins G' - {U,V} and G-hat - {u,v} through new vertices T, W and the seven
/// edges omega=(T,W), d1=(U1,u1), d2'=(U2,T), d2^=(T,u2), D1'=(V1,W),
/// D1^=(W,v1), D2=(V2,v2). Output vertices: G' remnant, G-hat remnant, T, W.
inline Construction dot_product(const DotProductSpec& spec)
{
    detail::require_cubic_girth5(spec.g1, "G'");
    detail::require_cubic_girth5(spec.g2, "G-hat");
    validate_dot_ends(spec.g1, spec.ends1, "G'");
    validate_dot_ends(spec.g2, spec.ends2, "G-hat");

    Construction out;
    EdgeMap& map = out.map;
    map.sources = {"g1", "g2"};
    map.edge_forward.resize(2);
    map.vertex_forward.resize(2);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    const auto& a = spec.ends1;
    const auto& b = spec.ends2;
    detail::append_remnant(spec.g1, {a.U, a.V}, 0, pairs, map.vertex_forward[0], map.edge_forward[0]);
    const int n1 = spec.g1.vertex_count() - 2;
    detail::append_remnant(spec.g2, {b.U, b.V}, n1, pairs, map.vertex_forward[1], map.edge_forward[1]);
    const VertexId T = n1 + spec.g2.vertex_count() - 2;
    const VertexId W = T + 1;
    map.new_vertices = {{"T", T}, {"W", W}};

    auto p = [&](VertexId v) { return map.vertex_forward[0][v]; };
    auto h = [&](VertexId v) { return map.vertex_forward[1][v]; };
    const std::array<std::pair<const char*, std::pair<VertexId, VertexId>>, 7> added{{
        {"omega", {T, W}},
        {"d1", {p(a.U1), h(b.U1)}},
        {"d2_prime", {p(a.U2), T}},
        {"d2_hat", {T, h(b.U2)}},
        {"D1_prime", {p(a.V1), W}},
        {"D1_hat", {W, h(b.V1)}},
        {"D2", {p(a.V2), h(b.V2)}},
    }};
    for (const auto& [name, pr] : added) {
        map.new_edges[name] = static_cast<EdgeId>(pairs.size());
        pairs.push_back(pr);
    }
    out.graph = Graph(W + 1, std::move(pairs));
    return out;
}

// ---------------------------------------------------------------------------
// Double-Petersen gadget and superposition

struct Gadget {
    Graph graph;
    std::array<VertexId, 5> boundary;  // the 2-valent vertices a, b, c, d, e
};

/// Two Petersen graphs P1, P2 with 5-cycles p_i = i mod 5 and q_i = 10 + (i mod 5)
/// (i = 1..5, so p2 = 2 and p2' = 7). Delete p2 and q2, add (p1,q1), (p2',q2'),
/// (p3,q3), delete (p4,p5) and (q4,q5), subdivide (p3,q3) by nu. Boundary is
/// (p5, p4, nu, q4, q5).
inline Gadget build_gadget()
{
    const Graph base = petersen();
    auto p = [](int i) { return i % 5; };
    auto q = [](int i) { return 10 + i % 5; };
    const VertexId p2_prime = 7, q2_prime = 17, nu = 20;

    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (int offset : {0, 10})
        for (auto [x, y] : base.edges())
            pairs.emplace_back(x + offset, y + offset);
    auto drop = [&](auto pred) { std::erase_if(pairs, pred); };
    auto touches = [](VertexId v) {
        return [v](const std::pair<VertexId, VertexId>& e) { return e.first == v || e.second == v; };
    };
    auto is_edge = [](VertexId x, VertexId y) {
        return [x, y](const std::pair<VertexId, VertexId>& e) {
            return (e.first == x && e.second == y) || (e.first == y && e.second == x);
        };
    };
    drop(touches(p(2)));
    drop(touches(q(2)));
    pairs.emplace_back(p(1), q(1));
    pairs.emplace_back(p2_prime, q2_prime);
    pairs.emplace_back(p(3), q(3));
    drop(is_edge(p(4), p(5)));
    drop(is_edge(q(4), q(5)));
    drop(is_edge(p(3), q(3)));
    pairs.emplace_back(p(3), nu);
    pairs.emplace_back(nu, q(3));

    std::vector<VertexId> relabel(21, kRemoved);
    int next = 0;
    for (VertexId v = 0; v < 21; ++v)
        if (v != p(2) && v != q(2))
            relabel[v] = next++;
    for (auto& [x, y] : pairs) {
        x = relabel[x];
        y = relabel[y];
    }
    Gadget g{Graph(next, std::move(pairs)),
             {relabel[p(5)], relabel[p(4)], relabel[nu], relabel[q(4)], relabel[q(5)]}};
    return g;
}

struct SuperpositionSpec {
    Graph g0;
    std::array<VertexId, 5> path;  // u1..u5 with (u_i, u_{i+1}) edges
    /// Also check g0 is non-colorable (a full count). Structure is always checked.
    bool check_colorability = true;
};

struct Pendants {
    VertexId v2, v3, v4;  // third neighbours of u2, u3, u4
};

/// Validates the path and returns the third neighbours of u2, u3, u4.
inline Pendants superposition_pendants(const Graph& g0, const std::array<VertexId, 5>& u)
{
    for (VertexId x : u)
        if (x < 0 || x >= g0.vertex_count())
            throw construction_error(construction_errc::invalid_path, "path vertex out of range");
    for (int i = 0; i < 4; ++i)
        if (!g0.find_edge(u[i], u[i + 1]))
            throw construction_error(construction_errc::invalid_path,
                                     "(" + std::to_string(u[i]) + "," + std::to_string(u[i + 1]) +
                                         ") is not an edge");
    auto third = [&](int i) {
        auto r = detail::other_neighbors(g0, u[i], u[i - 1]);
        std::erase(r, u[i + 1]);
        if (r.size() != 1)
            throw construction_error(construction_errc::invalid_path, "path vertices must be trivalent");
        return r[0];
    };
    Pendants pd{third(1), third(2), third(3)};
    std::array<VertexId, 8> all{u[0], u[1], u[2], u[3], u[4], pd.v2, pd.v3, pd.v4};
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw construction_error(construction_errc::invalid_path,
                                 "path and pendant vertices must be eight distinct vertices");
    return pd;
}

/// A 5-cycle of g0 avoiding the hinge (u2, u3, u4), if one exists.
inline std::optional<std::vector<VertexId>> cycle_avoiding_hinge(const Graph& g0,
                                                                 const std::array<VertexId, 5>& u)
{
    for (const auto& c : find_cycles(g0, 5)) {
        if (c.size() != 5)
            continue;
        bool hit = std::any_of(c.begin(), c.end(),
                               [&](VertexId x) { return x == u[1] || x == u[2] || x == u[3]; });
        if (!hit)
            return c;
    }
    return std::nullopt;
}

/// Replaces the hinge (u2, u3, u4) of g0 by the double-Petersen gadget:
/// output = (g0 - {u2,u3,u4}) + gadget + (u1,a), (v2,b), (v3,c), (v4,d), (u5,e).
inline Construction superpose(const SuperpositionSpec& spec)
{
    const Graph& g0 = spec.g0;
    detail::require_cubic_girth5(g0, "G0");
    const auto& u = spec.path;
    auto pd = superposition_pendants(g0, u);
    if (!cycle_avoiding_hinge(g0, u))
        throw construction_error(construction_errc::no_disjoint_cycle,
                                 "no 5-cycle of G0 is disjoint from the hinge (u2,u3,u4)");
    if (spec.check_colorability && is_colorable(g0))
        throw construction_error(construction_errc::not_a_snark, "G0 is 3-edge-colorable");

    Construction out;
    EdgeMap& map = out.map;
    map.sources = {"g0", "gadget"};
    map.edge_forward.resize(2);
    map.vertex_forward.resize(2);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    detail::append_remnant(g0, {u[1], u[2], u[3]}, 0, pairs, map.vertex_forward[0], map.edge_forward[0]);
    const Gadget gadget = build_gadget();
    const int offset = g0.vertex_count() - 3;
    detail::append_remnant(gadget.graph, {}, offset, pairs, map.vertex_forward[1], map.edge_forward[1]);

    const char* names[5] = {"a", "b", "c", "d", "e"};
    for (int i = 0; i < 5; ++i)
        map.new_vertices[names[i]] = gadget.boundary[i] + offset;
    auto g = [&](VertexId v) { return map.vertex_forward[0][v]; };
    const std::array<std::pair<const char*, std::pair<VertexId, VertexId>>, 5> added{{
        {"u1_a", {g(u[0]), map.new_vertices["a"]}},
        {"v2_b", {g(pd.v2), map.new_vertices["b"]}},
        {"v3_c", {g(pd.v3), map.new_vertices["c"]}},
        {"v4_d", {g(pd.v4), map.new_vertices["d"]}},
        {"u5_e", {g(u[4]), map.new_vertices["e"]}},
    }};
    for (const auto& [name, pr] : added) {
        map.new_edges[name] = static_cast<EdgeId>(pairs.size());
        pairs.push_back(pr);
    }
    out.graph = Graph(offset + gadget.graph.vertex_count(), std::move(pairs));
    return out;
}

/// The seven g0 edges consumed by superposition: path edges and (u_i, v_i) for i = 2,3,4.
inline std::vector<EdgeId> superposition_consumed_edges(const Graph& g0, const std::array<VertexId, 5>& u)
{
    auto pd = superposition_pendants(g0, u);
    std::vector<EdgeId> out;
    for (int i = 0; i < 4; ++i)
        out.push_back(g0.edge_between(u[i], u[i + 1]).id);
    out.push_back(g0.edge_between(u[1], pd.v2).id);
    out.push_back(g0.edge_between(u[2], pd.v3).id);
    out.push_back(g0.edge_between(u[3], pd.v4).id);
    std::sort(out.begin(), out.end());
    return out;
}

/// (g0 edge, output edge) for every g0 edge outside the seven consumed ones.
inline std::vector<std::pair<EdgeId, EdgeId>> surviving_edges_for_5x(const SuperpositionSpec& spec,
                                                                     const Construction& built)
{
    auto consumed = superposition_consumed_edges(spec.g0, spec.path);
    std::vector<std::pair<EdgeId, EdgeId>> out;
    for (EdgeId e = 0; e < spec.g0.edge_count(); ++e)
        if (!std::binary_search(consumed.begin(), consumed.end(), e))
            out.emplace_back(e, built.map.edge(0, e));
    return out;
}

inline std::vector<std::pair<EdgeId, EdgeId>> surviving_edges_for_5x(const SuperpositionSpec& spec)
{
    auto unchecked = spec;
    unchecked.check_colorability = false;
    return surviving_edges_for_5x(spec, superpose(unchecked));
}

}  // namespace snark

#endif
