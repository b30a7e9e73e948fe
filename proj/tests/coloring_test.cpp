#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "corpus.hpp"
#include "snarkpsi/coloring.hpp"
#include "snarkpsi/connectivity.hpp"

using namespace snark;

namespace {

const Color a = Color::a, b = Color::b, c = Color::c, zero = Color::zero;

std::vector<Graph> counting_corpus()
{
    std::vector<Graph> out;
    for (const auto& n : corpus::small_graphs())
        out.push_back(n.graph);
    out.push_back(eliminate_edge(corpus::k4(), 0));
    out.push_back(eliminate_edge(corpus::cube(), 3));
    out.push_back(corpus::split_edges(corpus::k33(), {0, 8}));
    out.push_back(corpus::split_edges(corpus::prism(3), {2}));
    out.push_back(subtract_edge(petersen(), 0).graph);
    out.push_back(subtract_edge(petersen(), 12).graph);
    out.push_back(eliminate_edge(subtract_edge(petersen(), 4).graph, 2));
    return out;
}

}  // namespace

TEST(Color, KleinGroup)
{
    EXPECT_EQ(a + b, c);
    EXPECT_EQ(a + c, b);
    EXPECT_EQ(b + c, a);
    for (Color x : {zero, a, b, c}) {
        EXPECT_EQ(x + x, zero);
        EXPECT_EQ(x + zero, x);
    }
    EXPECT_EQ(a + b + c, zero);
    EXPECT_EQ(static_cast<int>(c), 3);
}

TEST(CountColorings, Examples)
{
    EXPECT_EQ(count_colorings(petersen()), 0u);
    EXPECT_EQ(count_colorings(corpus::k4()), 6u);
    EXPECT_EQ(count_colorings(corpus::k33()), 12u);
    EXPECT_EQ(count_colorings(Graph(3, {})), 1u);
    EXPECT_EQ(count_colorings(corpus::path(2)), 3u);
}

TEST(CountColorings, MatchesNaiveEnumerator)
{
    for (const auto& g : counting_corpus()) {
        ASSERT_LE(g.edge_count(), 14);
        EXPECT_EQ(count_colorings(g), corpus::naive_count_colorings(g)) << "m=" << g.edge_count();
    }
}

TEST(CountColorings, RejectsHighValence)
{
    Graph k5(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    try {
        count_colorings(k5);
        FAIL();
    } catch (const coloring_error& e) {
        EXPECT_EQ(e.code(), coloring_errc::valence_too_high);
    }
}

TEST(CountColorings, ParityPruningAndThreadsAgree)
{
    std::vector<Graph> graphs{corpus::dodecahedron(), corpus::mobius_kantor(), corpus::heawood(),
                              corpus::prism(7),       subtract_edge(petersen(), 3).graph,
                              corpus::split_edges(corpus::dodecahedron(), {0, 11, 17}),
                              corpus::random_cubic(24, 5)};
    for (const auto& g : graphs) {
        const auto plain = count_colorings(g);
        EXPECT_EQ(count_colorings(g, {1, true}), plain);
        EXPECT_EQ(count_colorings(g, {4, false}), plain);
        EXPECT_EQ(count_colorings(g, {3, true}), plain);
        EXPECT_EQ(enumerate_colorings(g).size(), plain);
    }
}

TEST(CountColorings, ColoringsOfColorableCubicAreMultipleOfSix)
{
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = corpus::random_cubic(18, seed);
        auto n = count_colorings(g);
        EXPECT_EQ(n % 6, 0u);
    }
}

TEST(EnumerateColorings, DistinctProperComplete)
{
    for (const auto& g : counting_corpus()) {
        auto all = enumerate_colorings(g);
        EXPECT_EQ(all.size(), count_colorings(g));
        std::set<EdgeColoring> distinct(all.begin(), all.end());
        EXPECT_EQ(distinct.size(), all.size());
        for (const auto& f : all)
            EXPECT_TRUE(is_proper(g, f));
        EXPECT_EQ(enumerate_colorings(g), all);  // deterministic order
    }
    EXPECT_TRUE(enumerate_colorings(petersen()).empty());
    EXPECT_EQ(enumerate_colorings(subtract_edge(petersen(), 0).graph).size(), 18u);
    EXPECT_EQ(enumerate_colorings(corpus::k4(), 4).size(), 4u);
}

TEST(CountColoringsWith, FixedEdges)
{
    Graph g = corpus::k33();
    std::array<std::pair<EdgeId, Color>, 1> one{{{0, a}}};
    EXPECT_EQ(count_colorings_with(g, one), 4u);
    std::array<std::pair<EdgeId, Color>, 2> clash{{{0, a}, {1, a}}};  // both at vertex 0
    EXPECT_EQ(count_colorings_with(g, clash), 0u);
}

TEST(Psi, PetersenEveryEdgeIsOne)
{
    Graph p = petersen();
    for (EdgeId e = 0; e < p.edge_count(); ++e) {
        EXPECT_EQ(psi(p, e), 1u);
        EXPECT_EQ(count_colorings(subtract_edge(p, e).graph), 18u);
    }
}

TEST(Psi, Errors)
{
    try {
        psi(corpus::dodecahedron(), 0);
        FAIL();
    } catch (const coloring_error& e) {
        EXPECT_EQ(e.code(), coloring_errc::colorable_input);
    }
    EXPECT_THROW(psi(corpus::k4(), 0), graph_error);
}

TEST(Census, PetersenEdge)
{
    auto cs = census(petersen(), 0);
    EXPECT_EQ(cs.colorings, 0u);
    ASSERT_TRUE(cs.subtracted);
    EXPECT_EQ(cs.subtracted->colorings, 18u);
    EXPECT_EQ(cs.subtracted->decompositions, 3u);
    EXPECT_EQ(cs.subtracted->psi, 1u);
    auto k = census(corpus::k4());
    EXPECT_EQ(k.colorings, 6u);
    EXPECT_EQ(k.decompositions, 1u);
    auto colorable = census(corpus::dodecahedron(), 0);
    EXPECT_FALSE(colorable.subtracted->psi);
}

TEST(PsiSession, CachesAndAgrees)
{
    PsiSession s;
    Graph p = petersen();
    EXPECT_EQ(s.psi(p, 3), 1u);
    EXPECT_EQ(s.psi(petersen(), 3), 1u);
    EXPECT_EQ(s.cached_graphs(), 1u);
    EXPECT_EQ(s.colorings(corpus::k4()), 6u);
    EXPECT_EQ(s.cached_graphs(), 2u);
    EXPECT_THROW(s.psi(corpus::dodecahedron(), 0), coloring_error);
}

TEST(Kempe, CubicChainsAreClosed)
{
    Graph g = corpus::dodecahedron();
    auto colorings = enumerate_colorings(g, 20);
    for (const auto& f : colorings)
        for (EdgeId d = 0; d < g.edge_count(); ++d)
            for (Color y : kColors) {
                if (y == f[d])
                    continue;
                auto chain = kempe_chain(g, f, d, f[d], y);
                EXPECT_TRUE(chain.closed);
                EXPECT_EQ(chain.edges.size() % 2, 0u);
            }
}

TEST(Kempe, SixCycleAndPath)
{
    Graph hex = corpus::lcf(6, {0});
    // lcf with shift 0 yields only the cycle; colour it alternately.
    ASSERT_EQ(hex.edge_count(), 6);
    EdgeColoring f({a, b, a, b, a, b});
    auto chain = kempe_chain(hex, f, 2, a, b);
    EXPECT_TRUE(chain.closed);
    EXPECT_EQ(chain.edges.size(), 6u);

    Graph p4 = corpus::path(4);
    EdgeColoring g({a, b, a});
    auto open = kempe_chain(p4, g, 1, a, b);
    EXPECT_FALSE(open.closed);
    EXPECT_EQ(open.edges, (std::vector<EdgeId>{0, 1, 2}));
    auto partial = kempe_chain(p4, EdgeColoring({a, c, a}), 0, a, b);
    EXPECT_EQ(partial.edges, (std::vector<EdgeId>{0}));
    EXPECT_THROW(kempe_chain(p4, g, 1, a, c), coloring_error);
}

TEST(Kempe, ChainsAlternateAndAreMaximal)
{
    auto sub = subtract_edge(petersen(), 5);
    const Graph& g = sub.graph;
    for (const auto& f : enumerate_colorings(g))
        for (EdgeId d = 0; d < g.edge_count(); ++d)
            for (Color y : kColors) {
                if (y == f[d])
                    continue;
                auto chain = kempe_chain(g, f, d, f[d], y);
                for (std::size_t i = 0; i + 1 < chain.edges.size(); ++i) {
                    EXPECT_NE(f[chain.edges[i]], f[chain.edges[i + 1]]);
                    auto [p, q] = g.endpoints(chain.edges[i]);
                    auto [r, s] = g.endpoints(chain.edges[i + 1]);
                    EXPECT_TRUE(p == r || p == s || q == r || q == s);
                }
                auto swapped = kempe_swap(f, chain);
                EXPECT_TRUE(is_proper(g, swapped));
                EXPECT_EQ(kempe_swap(swapped, chain), f);
            }
}

TEST(Kempe, SubtractedEdgesLieOnDifferentChains)
{
    for (const Graph& g : {petersen()}) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto sub = subtract_edge(g, e);
            for (const auto& f : enumerate_colorings(sub.graph))
                for (Color x : kColors)
                    for (Color y : kColors) {
                        if (x == y || (f[sub.d1.id] != x && f[sub.d1.id] != y))
                            continue;
                        auto chain = kempe_chain(sub.graph, f, sub.d1.id, x, y);
                        EXPECT_EQ(std::count(chain.edges.begin(), chain.edges.end(), sub.d2.id), 0);
                    }
        }
    }
}

TEST(Kempe, SwapMapsClassAToClassB)
{
    auto sub = subtract_edge(petersen(), 0);
    const Graph& g = sub.graph;
    VertexId v = sub.d2.u;
    std::vector<EdgeId> rest;
    for (const auto& inc : g.incident(v))
        if (inc.edge != sub.d2.id)
            rest.push_back(inc.edge);
    std::sort(rest.begin(), rest.end());
    std::array<std::pair<EdgeId, Color>, 3> fixed{{{sub.d2.id, a}, {rest[0], b}, {rest[1], c}}};
    std::set<EdgeColoring> class_a, class_b;
    for_each_coloring(g, [&](const EdgeColoring& f) {
        (f[sub.d1.id] == a ? class_a : class_b).insert(f);
        return true;
    }, fixed);
    std::set<EdgeColoring> image;
    for (const auto& f : class_a) {
        auto swapped = kempe_swap(f, kempe_chain(g, f, sub.d1.id, a, b));
        EXPECT_EQ(swapped[sub.d1.id], b);
        EXPECT_EQ(swapped[sub.d2.id], a);
        image.insert(swapped);
    }
    std::set<EdgeColoring> only_b;
    for (const auto& f : class_b)
        if (f[sub.d1.id] == b)
            only_b.insert(f);
    EXPECT_EQ(image, only_b);
}

TEST(CPrime, PetersenIsOneOneOne)
{
    Graph p = petersen();
    for (EdgeId e = 0; e < p.edge_count(); ++e)
        EXPECT_EQ(c_prime_counts(p, e), (std::array<std::uint64_t, 3>{1, 1, 1}));
    auto sub = subtract_edge(p, 0);
    EXPECT_EQ(c_prime_counts(sub.graph, sub.d1.id, sub.d2.id), (std::array<std::uint64_t, 3>{1, 1, 1}));
    EXPECT_THROW(c_prime_counts(corpus::dodecahedron(), 0), coloring_error);
}

TEST(Parity, VertexBoundarySums)
{
    Graph g = corpus::dodecahedron();
    for (const auto& f : enumerate_colorings(g, 10)) {
        std::vector<VertexId> all(g.vertex_count());
        std::iota(all.begin(), all.end(), 0);
        EXPECT_EQ(vertex_boundary_sum(g, f, all), zero);
        EXPECT_EQ(vertex_sum(g, f, 7), zero);
    }
    Graph pendant = corpus::path(2);
    std::vector<VertexId> one{0};
    EXPECT_EQ(vertex_boundary_sum(pendant, EdgeColoring({a}), one), a);
}

TEST(Parity, QuasiCubicSumOverUnivalentVerticesIsZero)
{
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        Graph base = corpus::random_cubic(20, seed);
        std::mt19937_64 rng(seed * 31);
        std::vector<EdgeId> cut;
        for (EdgeId e = 0; e < base.edge_count(); ++e)
            if (rng() % 5 == 0)
                cut.push_back(e);
        Graph g = corpus::split_edges(base, cut);
        std::vector<VertexId> univalent;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (g.valence(v) == 1)
                univalent.push_back(v);
        for (const auto& f : enumerate_colorings(g, 200)) {
            EXPECT_EQ(vertex_boundary_sum(g, f, univalent), zero);
            for (Color x : kColors)
                EXPECT_TRUE(check_parity(g, f, x));
        }
    }
}

TEST(Parity, CubicGraphsMissNoColor)
{
    Graph k4 = corpus::k4();
    for (const auto& f : enumerate_colorings(k4))
        for (Color x : kColors) {
            EXPECT_EQ(vertices_missing_color(k4, f, x), 0);
            EXPECT_TRUE(check_parity(k4, f, x));
        }
}

TEST(Parity, TwoEdgePathCountedDirectly)
{
    // The path has a divalent middle vertex, so it is outside the quasi-cubic
    // setting. Direct counts: all three vertices miss c, each end misses one of a, b.
    Graph p = corpus::path(3);
    EdgeColoring f({a, b});
    EXPECT_EQ(vertices_missing_color(p, f, c), 3);
    EXPECT_EQ(vertices_missing_color(p, f, a), 1);
    EXPECT_EQ(vertices_missing_color(p, f, b), 1);
    EXPECT_FALSE(check_parity(p, f, c));
    // Restricted to the univalent ends, the number missing c is two.
    int ends_missing_c = 0;
    for (VertexId v : {0, 2})
        ends_missing_c += vertex_sum(p, f, v) != c ? 1 : 0;
    EXPECT_EQ(ends_missing_c, 2);
}

TEST(CutColorSum, MinimalCutsSumToZero)
{
    std::vector<Graph> graphs{corpus::dodecahedron(), subtract_edge(petersen(), 0).graph, corpus::cube()};
    for (const auto& g : graphs) {
        for (int size = 2; size <= 5; ++size) {
            auto cuts = sample_minimal_cut_sets(g, size, 25, 11);
            for (const auto& f : enumerate_colorings(g, 50))
                for (const auto& cut : cuts) {
                    EXPECT_EQ(cut_color_sum(f, cut.edge_ids), zero);
                    std::map<Color, int> hist;
                    for (EdgeId e : cut.edge_ids)
                        ++hist[f[e]];
                    if (size == 2) {
                        EXPECT_EQ(hist.size(), 1u);
                    }
                    if (size == 5) {
                        std::vector<int> counts;
                        for (auto [col, k] : hist)
                            counts.push_back(k);
                        std::sort(counts.begin(), counts.end());
                        EXPECT_EQ(counts, (std::vector<int>{1, 1, 3}));
                    }
                }
        }
    }
}

TEST(Stars, PetersenHasTwelve)
{
    auto stars = find_stars(petersen());
    EXPECT_EQ(stars.size(), 12u);
    for (const auto& s : stars)
        for (int i = 0; i < 5; ++i) {
            EXPECT_TRUE(petersen().find_edge(s.inner[i], s.inner[(i + 2) % 5]));
            EXPECT_TRUE(petersen().find_edge(s.inner[i], s.inner[(i + 3) % 5]));
            EXPECT_EQ(petersen().edge_between(s.inner[i], s.outer[i]).id, s.boundary[i]);
        }
}

TEST(Stars, BoundaryPatternOnEveryColoring)
{
    std::vector<Graph> graphs{corpus::dodecahedron(), subtract_edge(petersen(), 0).graph};
    for (const auto& g : graphs) {
        auto stars = find_stars(g);
        ASSERT_FALSE(stars.empty());
        for (const auto& f : enumerate_colorings(g, 300))
            for (const auto& s : stars) {
                auto pat = star_boundary_pattern(f, std::span<const EdgeId, 5>(s.boundary));
                EXPECT_NE(pat.x, pat.y);
                EXPECT_NE(pat.x, pat.z);
                EXPECT_NE(pat.y, pat.z);
                int r = pat.rotation;
                EXPECT_EQ(f[s.boundary[r]], pat.x);
                EXPECT_EQ(f[s.boundary[(r + 1) % 5]], pat.y);
                EXPECT_EQ(f[s.boundary[(r + 2) % 5]], pat.x);
                EXPECT_EQ(f[s.boundary[(r + 3) % 5]], pat.x);
                EXPECT_EQ(f[s.boundary[(r + 4) % 5]], pat.z);
            }
    }
}

TEST(Stars, ConsecutiveTripleRejected)
{
    EdgeColoring f({a, a, a, b, c});
    std::array<EdgeId, 5> boundary{0, 1, 2, 3, 4};
    EXPECT_THROW(star_boundary_pattern(f, std::span<const EdgeId, 5>(boundary)), coloring_error);
    EdgeColoring g({b, a, a, c, a});  // read from index 4: a,b,a,a,c
    auto pat = star_boundary_pattern(g, std::span<const EdgeId, 5>(boundary));
    EXPECT_EQ(pat.rotation, 4);
    EXPECT_EQ(pat.x, a);
    EXPECT_EQ(pat.y, b);
    EXPECT_EQ(pat.z, c);
}

TEST(Stars, BoundaryDeterminesInnerEdges)
{
    // An isolated star with pendant outer edges: every admissible boundary
    // colouring extends in exactly one way.
    std::vector<std::pair<VertexId, VertexId>> e;
    for (int i = 0; i < 5; ++i)
        e.emplace_back(i, 5 + i);  // outer edges 0..4
    for (int i = 0; i < 5; ++i)
        e.emplace_back(i, (i + 2) % 5);  // pentagram
    Graph star(10, e);
    std::map<std::array<Color, 5>, int> extensions;
    for (const auto& f : enumerate_colorings(star)) {
        std::array<Color, 5> outer{f[0], f[1], f[2], f[3], f[4]};
        ++extensions[outer];
        std::array<EdgeId, 5> boundary{0, 1, 2, 3, 4};
        EXPECT_NO_THROW(star_boundary_pattern(f, std::span<const EdgeId, 5>(boundary)));
    }
    EXPECT_EQ(extensions.size(), 30u);  // 5 rotations x 6 colour choices
    for (const auto& [outer, k] : extensions)
        EXPECT_EQ(k, 1);
}
