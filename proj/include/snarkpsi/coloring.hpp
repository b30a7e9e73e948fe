#ifndef SNARKPSI_COLORING_HPP
#define SNARKPSI_COLORING_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <deque>
#include <exception>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "snarkpsi/graph.hpp"

namespace snark {

/// Element of the Klein four-group {0, a, b, c}. Addition is XOR on the
/// two-bit encoding, so a+b=c and x+x=0. Edge colors are always nonzero.
enum class Color : std::uint8_t { zero = 0, a = 1, b = 2, c = 3 };

constexpr Color operator+(Color x, Color y) noexcept
{
    return static_cast<Color>(static_cast<std::uint8_t>(x) ^ static_cast<std::uint8_t>(y));
}

constexpr Color& operator+=(Color& x, Color y) noexcept { return x = x + y; }

inline constexpr std::array<Color, 3> kColors{Color::a, Color::b, Color::c};

constexpr char color_char(Color c) noexcept { return "0abc"[static_cast<int>(c)]; }

enum class coloring_errc {
    valence_too_high,
    overflow,
    colorable_input,
    divisibility,
    bad_kempe_start,
    no_star_pattern,
};

class coloring_error : public std::runtime_error {
public:
    coloring_error(coloring_errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    coloring_errc code() const noexcept { return code_; }

private:
    coloring_errc code_;
};

/// Total assignment EdgeId -> nonzero Color over a fixed graph.
class EdgeColoring {
public:
    EdgeColoring() = default;
    explicit EdgeColoring(std::vector<Color> colors) : colors_(std::move(colors)) {}

    Color operator[](EdgeId e) const { return colors_.at(e); }
    std::size_t size() const noexcept { return colors_.size(); }
    const std::vector<Color>& colors() const noexcept { return colors_; }

    EdgeColoring with(EdgeId e, Color c) const
    {
        auto copy = colors_;
        copy.at(e) = c;
        return EdgeColoring(std::move(copy));
    }

    bool operator==(const EdgeColoring&) const = default;
    auto operator<=>(const EdgeColoring&) const = default;

    std::string to_string() const
    {
        std::string s;
        for (Color c : colors_)
            s.push_back(color_char(c));
        return s;
    }

private:
    std::vector<Color> colors_;
};

inline bool is_proper(const Graph& g, const EdgeColoring& f)
{
    if (static_cast<int>(f.size()) != g.edge_count())
        return false;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        unsigned seen = 0;
        for (const auto& inc : g.incident(v)) {
            Color c = f[inc.edge];
            if (c == Color::zero)
                return false;
            unsigned bit = 1u << static_cast<int>(c);
            if (seen & bit)
                return false;
            seen |= bit;
        }
    }
    return true;
}

struct ColoringOptions {
    int threads = 1;
    /// Prune branches whose open regions violate the boundary-sum parity
    /// condition. Count-equivalent to the plain search.
    bool parity_pruning = false;
};

namespace detail {

constexpr std::uint8_t bit_of(Color c) noexcept
{
    return static_cast<std::uint8_t>(1u << (static_cast<int>(c) - 1));
}

constexpr Color color_of_bit(std::uint8_t bit) noexcept
{
    return bit == 1 ? Color::a : bit == 2 ? Color::b : Color::c;
}

// Klein-group sum of the colors present in a 3-bit mask.
constexpr std::array<std::uint8_t, 8> kMaskSum{0, 1, 2, 3, 3, 2, 1, 0};

inline void add_checked(std::uint64_t& acc, std::uint64_t x)
{
    if (__builtin_add_overflow(acc, x, &acc))
        throw coloring_error(coloring_errc::overflow, "coloring count overflows 64 bits");
}

inline std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw coloring_error(coloring_errc::overflow, "coloring count overflows 64 bits");
    return r;
}

/// Backtracking over edges in BFS order with forced-move propagation: an
/// uncolored edge whose endpoints leave a single admissible color is colored
/// immediately, and an edge with no admissible color kills the branch.
class ColoringSearch {
public:
    explicit ColoringSearch(const Graph& g, bool parity_pruning = false)
        : g_(&g), parity_(parity_pruning)
    {
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (g.valence(v) > 3)
                throw coloring_error(coloring_errc::valence_too_high,
                                     "vertex " + std::to_string(v) + " has valence " +
                                         std::to_string(g.valence(v)));
        col_.assign(g.edge_count(), 0);
        vmask_.assign(g.vertex_count(), 0);
        build_order();
    }

    /// First vertex of the search order with at least two incident edges, if any.
    std::optional<VertexId> hinge_vertex() const
    {
        for (EdgeId e : order_) {
            for (VertexId w : {g_->edges()[e].first, g_->edges()[e].second})
                if (g_->valence(w) >= 2)
                    return w;
        }
        return std::nullopt;
    }

    /// Pre-colors e with propagation. Returns false (and poisons the search) on contradiction.
    bool fix(EdgeId e, Color c)
    {
        g_->endpoints(e);
        if (dead_)
            return false;
        if (col_[e]) {
            if (col_[e] != bit_of(c))
                dead_ = true;
            return !dead_;
        }
        if (!assign(e, bit_of(c)))
            dead_ = true;
        trail_.clear();
        return !dead_;
    }

    std::uint64_t count(int threads = 1)
    {
        if (dead_)
            return 0;
        if (threads <= 1)
            return count_from(0);
        return count_parallel(threads);
    }

    /// Calls visit(bits) for every completion in deterministic order, where
    /// bits[e] is 1, 2 or 4. Stops early when visit returns false.
    template <class Visit>
    void enumerate(Visit&& visit)
    {
        if (dead_)
            return;
        enumerate_from(0, visit);
    }

private:
    struct Snapshot {
        std::vector<std::uint8_t> col;
        std::vector<std::uint8_t> vmask;
        int cursor;
    };

    void build_order()
    {
        const int n = g_->vertex_count();
        std::vector<char> seen_v(n, 0), seen_e(g_->edge_count(), 0);
        std::vector<VertexId> queue;
        for (VertexId s = 0; s < n; ++s) {
            if (seen_v[s])
                continue;
            seen_v[s] = 1;
            queue.assign(1, s);
            for (std::size_t head = 0; head < queue.size(); ++head) {
                VertexId x = queue[head];
                for (const auto& inc : g_->incident(x)) {
                    if (!seen_e[inc.edge]) {
                        seen_e[inc.edge] = 1;
                        order_.push_back(inc.edge);
                    }
                    if (!seen_v[inc.neighbor]) {
                        seen_v[inc.neighbor] = 1;
                        queue.push_back(inc.neighbor);
                    }
                }
            }
        }
    }

    std::uint8_t allowed(EdgeId e) const
    {
        const auto& [u, v] = g_->edges()[e];
        return static_cast<std::uint8_t>(7u & ~(vmask_[u] | vmask_[v]));
    }

    void set(EdgeId e, std::uint8_t bit)
    {
        const auto& [u, v] = g_->edges()[e];
        col_[e] = bit;
        vmask_[u] |= bit;
        vmask_[v] |= bit;
        trail_.push_back(e);
    }

    void undo_to(std::size_t mark)
    {
        while (trail_.size() > mark) {
            EdgeId e = trail_.back();
            trail_.pop_back();
            const auto& [u, v] = g_->edges()[e];
            vmask_[u] &= static_cast<std::uint8_t>(~col_[e]);
            vmask_[v] &= static_cast<std::uint8_t>(~col_[e]);
            col_[e] = 0;
        }
    }

    bool assign(EdgeId e, std::uint8_t bit)
    {
        if (!(allowed(e) & bit))
            return false;
        set(e, bit);
        work_.clear();
        work_.push_back(e);
        while (!work_.empty()) {
            EdgeId f = work_.back();
            work_.pop_back();
            for (VertexId w : {g_->edges()[f].first, g_->edges()[f].second}) {
                for (const auto& inc : g_->incident(w)) {
                    EdgeId h = inc.edge;
                    if (col_[h])
                        continue;
                    std::uint8_t a = allowed(h);
                    if (a == 0)
                        return false;
                    if ((a & (a - 1)) == 0) {
                        set(h, a);
                        work_.push_back(h);
                    }
                }
            }
        }
        return true;
    }

    // Every region of open vertices (joined by uncolored edges) whose vertices
    // are all trivalent must see a zero sum on its colored boundary.
    bool parity_ok()
    {
        const int n = g_->vertex_count();
        region_.assign(n, -1);
        int regions = 0;
        std::vector<VertexId> stack;
        for (VertexId s = 0; s < n; ++s) {
            if (region_[s] != -1 || !is_open(s))
                continue;
            std::uint8_t sum = 0;
            bool all_trivalent = true;
            region_[s] = regions;
            stack.assign(1, s);
            while (!stack.empty()) {
                VertexId x = stack.back();
                stack.pop_back();
                sum ^= kMaskSum[vmask_[x]];
                all_trivalent = all_trivalent && g_->valence(x) == 3;
                for (const auto& inc : g_->incident(x)) {
                    if (col_[inc.edge] || region_[inc.neighbor] != -1)
                        continue;
                    region_[inc.neighbor] = regions;
                    stack.push_back(inc.neighbor);
                }
            }
            if (all_trivalent && sum != 0)
                return false;
            ++regions;
        }
        return true;
    }

    bool is_open(VertexId v) const
    {
        for (const auto& inc : g_->incident(v))
            if (!col_[inc.edge])
                return true;
        return false;
    }

    int advance(int cursor) const
    {
        const int m = static_cast<int>(order_.size());
        while (cursor < m && col_[order_[cursor]])
            ++cursor;
        return cursor;
    }

    std::uint64_t count_from(int cursor)
    {
        cursor = advance(cursor);
        if (cursor == static_cast<int>(order_.size()))
            return 1;
        if (parity_ && !parity_ok())
            return 0;
        EdgeId e = order_[cursor];
        std::uint8_t a = allowed(e);
        std::uint64_t total = 0;
        for (std::uint8_t bit = 1; bit <= 4; bit <<= 1) {
            if (!(a & bit))
                continue;
            std::size_t mark = trail_.size();
            if (assign(e, bit))
                add_checked(total, count_from(cursor + 1));
            undo_to(mark);
        }
        return total;
    }

    template <class Visit>
    bool enumerate_from(int cursor, Visit& visit)
    {
        cursor = advance(cursor);
        if (cursor == static_cast<int>(order_.size()))
            return visit(std::as_const(col_));
        EdgeId e = order_[cursor];
        std::uint8_t a = allowed(e);
        for (std::uint8_t bit = 1; bit <= 4; bit <<= 1) {
            if (!(a & bit))
                continue;
            std::size_t mark = trail_.size();
            bool keep_going = true;
            if (assign(e, bit))
                keep_going = enumerate_from(cursor + 1, visit);
            undo_to(mark);
            if (!keep_going)
                return false;
        }
        return true;
    }

    void restore(const Snapshot& s)
    {
        col_ = s.col;
        vmask_ = s.vmask;
        trail_.clear();
    }

    // Expands the top of the search tree breadth-first until there are enough
    // independent subtrees, then counts them on worker threads.
    std::uint64_t count_parallel(int threads)
    {
        std::uint64_t leaves = 0;
        std::vector<Snapshot> frontier{{col_, vmask_, 0}};
        const std::size_t wanted = static_cast<std::size_t>(threads) * 8;
        while (!frontier.empty() && frontier.size() < wanted) {
            std::vector<Snapshot> next;
            for (const auto& snap : frontier) {
                restore(snap);
                int cursor = advance(snap.cursor);
                if (cursor == static_cast<int>(order_.size())) {
                    add_checked(leaves, 1);
                    continue;
                }
                if (parity_ && !parity_ok())
                    continue;
                EdgeId e = order_[cursor];
                std::uint8_t a = allowed(e);
                for (std::uint8_t bit = 1; bit <= 4; bit <<= 1) {
                    if (!(a & bit))
                        continue;
                    std::size_t mark = trail_.size();
                    if (assign(e, bit))
                        next.push_back({col_, vmask_, cursor + 1});
                    undo_to(mark);
                }
            }
            frontier = std::move(next);
        }

        std::atomic<std::size_t> next_task{0};
        std::vector<std::uint64_t> partial(threads, 0);
        std::vector<std::exception_ptr> errors(threads);
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    ColoringSearch worker(*this);
                    for (std::size_t i = next_task++; i < frontier.size(); i = next_task++) {
                        worker.restore(frontier[i]);
                        add_checked(partial[t], worker.count_from(frontier[i].cursor));
                    }
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool)
            th.join();
        for (auto& err : errors)
            if (err)
                std::rethrow_exception(err);
        for (auto p : partial)
            add_checked(leaves, p);
        return leaves;
    }

    const Graph* g_;
    bool parity_ = false;
    bool dead_ = false;
    std::vector<EdgeId> order_;
    std::vector<std::uint8_t> col_;
    std::vector<std::uint8_t> vmask_;
    std::vector<EdgeId> trail_;
    std::vector<EdgeId> work_;
    std::vector<int> region_;
};

inline EdgeColoring to_coloring(const std::vector<std::uint8_t>& bits)
{
    std::vector<Color> out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        out[i] = color_of_bit(bits[i]);
    return EdgeColoring(std::move(out));
}

}  // namespace detail

/// Exact number of proper 3-edge-colorings of a graph with valences <= 3.
///
/// The two edges of the first hinge are fixed to (a, b) and the result is
/// multiplied by 6: every coloring gives them distinct colors, and the color
/// permutations act freely and transitively on those pairs.
inline std::uint64_t count_colorings(const Graph& g, const ColoringOptions& opts = {})
{
    detail::ColoringSearch search(g, opts.parity_pruning);
    auto hinge = search.hinge_vertex();
    if (!hinge)
        return search.count(opts.threads);
    auto inc = g.incident(*hinge);
    if (!search.fix(inc[0].edge, Color::a) || !search.fix(inc[1].edge, Color::b))
        return 0;
    return detail::mul_checked(search.count(opts.threads), 6);
}

/// Number of proper colorings that agree with the given pre-colored edges.
inline std::uint64_t count_colorings_with(const Graph& g,
                                          std::span<const std::pair<EdgeId, Color>> fixed,
                                          const ColoringOptions& opts = {})
{
    detail::ColoringSearch search(g, opts.parity_pruning);
    for (auto [e, c] : fixed)
        if (!search.fix(e, c))
            return 0;
    return search.count(opts.threads);
}

/// Visits every proper coloring once, in deterministic order. visit returns
/// false to stop.
template <class Visit>
void for_each_coloring(const Graph& g, Visit&& visit,
                       std::span<const std::pair<EdgeId, Color>> fixed = {})
{
    detail::ColoringSearch search(g);
    for (auto [e, c] : fixed)
        if (!search.fix(e, c))
            return;
    search.enumerate([&](const std::vector<std::uint8_t>& bits) {
        return static_cast<bool>(visit(detail::to_coloring(bits)));
    });
}

inline std::vector<EdgeColoring> enumerate_colorings(const Graph& g,
                                                     std::optional<std::size_t> limit = std::nullopt)
{
    std::vector<EdgeColoring> out;
    if (limit && *limit == 0)
        return out;
    for_each_coloring(g, [&](const EdgeColoring& f) {
        out.push_back(f);
        return !limit || out.size() < *limit;
    });
    return out;
}

inline bool is_colorable(const Graph& g)
{
    return !enumerate_colorings(g, 1).empty();
}

/// psi(G, e): colorings of G_e divided by 18, for non-colorable cubic G.
inline std::uint64_t psi(const Graph& g, EdgeId e, const ColoringOptions& opts = {})
{
    auto sub = subtract_edge(g, e);
    if (is_colorable(g))
        throw coloring_error(coloring_errc::colorable_input,
                             "psi is only defined for non-colorable cubic graphs");
    std::uint64_t n = count_colorings(sub.graph, opts);
    if (n % 18 != 0)
        throw coloring_error(coloring_errc::divisibility,
                             "colorings of G_e = " + std::to_string(n) + " is not a multiple of 18");
    return n / 18;
}

struct Census {
    std::uint64_t colorings = 0;
    std::uint64_t decompositions = 0;

    struct Subtracted {
        EdgeRef edge;
        std::uint64_t colorings = 0;
        std::uint64_t decompositions = 0;
        std::optional<std::uint64_t> psi;  // only when the graph itself is non-colorable
    };
    std::optional<Subtracted> subtracted;
};

inline Census census(const Graph& g, std::optional<EdgeId> e = std::nullopt,
                     const ColoringOptions& opts = {})
{
    Census c;
    c.colorings = count_colorings(g, opts);
    c.decompositions = c.colorings / 6;
    if (e) {
        auto sub = subtract_edge(g, *e);
        Census::Subtracted s;
        s.edge = g.edge(*e);
        s.colorings = count_colorings(sub.graph, opts);
        s.decompositions = s.colorings / 6;
        if (c.colorings == 0) {
            if (s.colorings % 18 != 0)
                throw coloring_error(coloring_errc::divisibility,
                                     "colorings of G_e = " + std::to_string(s.colorings) +
                                         " is not a multiple of 18");
            s.psi = s.colorings / 18;
        }
        c.subtracted = s;
    }
    return c;
}

/// Memoizes colorability and psi per graph within one session. Thread-safe.
class PsiSession {
public:
    explicit PsiSession(ColoringOptions opts = {}) : opts_(opts) {}

    std::uint64_t colorings(const Graph& g)
    {
        Entry& entry = lookup(g);
        std::lock_guard lock(mutex_);
        if (!entry.colorings)
            entry.colorings = count_colorings(g, opts_);
        return *entry.colorings;
    }

    std::uint64_t psi(const Graph& g, EdgeId e)
    {
        auto sub = subtract_edge(g, e);
        if (colorings(g) != 0)
            throw coloring_error(coloring_errc::colorable_input,
                                 "psi is only defined for non-colorable cubic graphs");
        Entry& entry = lookup(g);
        {
            std::lock_guard lock(mutex_);
            if (auto it = entry.psi.find(e); it != entry.psi.end())
                return it->second;
        }
        std::uint64_t n = count_colorings(sub.graph, opts_);
        if (n % 18 != 0)
            throw coloring_error(coloring_errc::divisibility,
                                 "colorings of G_e = " + std::to_string(n) + " is not a multiple of 18");
        std::lock_guard lock(mutex_);
        entry.psi[e] = n / 18;
        return n / 18;
    }

    std::size_t cached_graphs() const
    {
        std::lock_guard lock(mutex_);
        std::size_t total = 0;
        for (const auto& [fp, bucket] : cache_)
            total += bucket.size();
        return total;
    }

private:
    struct Entry {
        Graph graph;
        std::optional<std::uint64_t> colorings;
        std::map<EdgeId, std::uint64_t> psi;
    };

    Entry& lookup(const Graph& g)
    {
        std::lock_guard lock(mutex_);
        auto& bucket = cache_[fingerprint(g)];
        for (auto& entry : bucket)
            if (entry.graph == g)
                return entry;
        bucket.push_back({g, std::nullopt, {}});
        return bucket.back();
    }

    ColoringOptions opts_;
    mutable std::mutex mutex_;
    // deque: references stay valid across push_back
    std::map<std::uint64_t, std::deque<Entry>> cache_;
};

struct KempeChain {
    std::vector<EdgeId> edges;  // consecutive edges share a vertex
    Color x = Color::zero;
    Color y = Color::zero;
    bool closed = false;
};

/// Maximal x/y-alternating walk through d.
inline KempeChain kempe_chain(const Graph& g, const EdgeColoring& f, EdgeId d, Color x, Color y)
{
    auto [du, dv] = g.endpoints(d);
    if (x == y || x == Color::zero || y == Color::zero || (f[d] != x && f[d] != y))
        throw coloring_error(coloring_errc::bad_kempe_start,
                             "edge " + std::to_string(d) + " is not colored with one of the chain colors");
    auto next_at = [&](VertexId w, EdgeId from) -> std::optional<EdgeId> {
        for (const auto& inc : g.incident(w))
            if (inc.edge != from && (f[inc.edge] == x || f[inc.edge] == y))
                return inc.edge;
        return std::nullopt;
    };

    KempeChain chain{{d}, x, y, false};
    EdgeId cur = d;
    VertexId w = dv;
    while (auto nxt = next_at(w, cur)) {
        if (*nxt == d) {
            chain.closed = true;
            return chain;
        }
        chain.edges.push_back(*nxt);
        w = g.other_end(*nxt, w);
        cur = *nxt;
    }
    std::vector<EdgeId> back;
    cur = d;
    w = du;
    while (auto nxt = next_at(w, cur)) {
        back.push_back(*nxt);
        w = g.other_end(*nxt, w);
        cur = *nxt;
    }
    chain.edges.insert(chain.edges.begin(), back.rbegin(), back.rend());
    return chain;
}

inline EdgeColoring kempe_swap(const EdgeColoring& f, const KempeChain& chain)
{
    auto colors = f.colors();
    for (EdgeId e : chain.edges)
        colors.at(e) = colors.at(e) == chain.x ? chain.y : chain.x;
    return EdgeColoring(std::move(colors));
}

/// Sizes of C'_a, C'_b, C'_c on G_e: colorings with (d2, e1, e2) = (a, b, c),
/// split by the color of d1. Here e1 < e2 are the other two edges at d2's first endpoint.
inline std::array<std::uint64_t, 3> c_prime_counts(const Graph& g_e, EdgeId d1, EdgeId d2,
                                                   const ColoringOptions& opts = {})
{
    g_e.endpoints(d1);
    VertexId v = g_e.endpoints(d2).first;
    std::vector<EdgeId> rest;
    for (const auto& inc : g_e.incident(v))
        if (inc.edge != d2)
            rest.push_back(inc.edge);
    std::sort(rest.begin(), rest.end());
    std::array<std::uint64_t, 3> out{};
    for (int i = 0; i < 3; ++i) {
        std::array<std::pair<EdgeId, Color>, 4> fixed{
            {{d2, Color::a}, {rest.at(0), Color::b}, {rest.at(1), Color::c}, {d1, kColors[i]}}};
        out[i] = count_colorings_with(g_e, fixed, opts);
    }
    return out;
}

/// C'-class sizes for (G, e); refuses colorable G.
inline std::array<std::uint64_t, 3> c_prime_counts(const Graph& g, EdgeId e,
                                                   const ColoringOptions& opts = {})
{
    auto sub = subtract_edge(g, e);
    if (is_colorable(g))
        throw coloring_error(coloring_errc::colorable_input,
                             "C' classes are only defined for non-colorable cubic graphs");
    return c_prime_counts(sub.graph, sub.d1.id, sub.d2.id, opts);
}

/// Sum of the colors at v.
inline Color vertex_sum(const Graph& g, const EdgeColoring& f, VertexId v)
{
    Color s = Color::zero;
    for (const auto& inc : g.incident(v))
        s += f[inc.edge];
    return s;
}

inline Color vertex_boundary_sum(const Graph& g, const EdgeColoring& f,
                                 std::span<const VertexId> vertices)
{
    Color s = Color::zero;
    for (VertexId v : vertices)
        s += vertex_sum(g, f, v);
    return s;
}

inline int vertices_missing_color(const Graph& g, const EdgeColoring& f, Color x)
{
    int missing = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        bool has = false;
        for (const auto& inc : g.incident(v))
            has = has || f[inc.edge] == x;
        missing += has ? 0 : 1;
    }
    return missing;
}

/// True iff an even number of vertices have no edge of color x.
inline bool check_parity(const Graph& g, const EdgeColoring& f, Color x)
{
    return vertices_missing_color(g, f, x) % 2 == 0;
}

inline Color cut_color_sum(const EdgeColoring& f, std::span<const EdgeId> cut)
{
    Color s = Color::zero;
    for (EdgeId e : cut)
        s += f[e];
    return s;
}

/// Five vertices u0..u4 with edges (u_i, u_{i+2}) and outer edges (u_i, v_i).
struct Star {
    std::array<VertexId, 5> inner;
    std::array<VertexId, 5> outer;
    std::array<EdgeId, 5> boundary;  // (u_i, v_i)
};

/// Every 5-cycle of trivalent vertices read in pentagram order is a star.
inline std::vector<Star> find_stars(const Graph& g)
{
    std::vector<Star> out;
    for (const auto& c : find_cycles(g, 5)) {
        if (c.size() != 5)
            continue;
        Star s;
        s.inner = {c[0], c[3], c[1], c[4], c[2]};
        bool ok = true;
        for (int i = 0; i < 5 && ok; ++i) {
            VertexId u = s.inner[i];
            ok = g.valence(u) == 3;
            if (!ok)
                break;
            VertexId a = s.inner[(i + 2) % 5], b = s.inner[(i + 3) % 5];
            for (const auto& inc : g.incident(u))
                if (inc.neighbor != a && inc.neighbor != b) {
                    s.outer[i] = inc.neighbor;
                    s.boundary[i] = inc.edge;
                }
            ok = std::find(c.begin(), c.end(), s.outer[i]) == c.end();
        }
        if (ok)
            out.push_back(s);
    }
    return out;
}

struct StarPattern {
    int rotation = 0;  // boundary reads x,y,x,x,z starting at this index
    Color x = Color::zero;
    Color y = Color::zero;
    Color z = Color::zero;
};

inline StarPattern star_boundary_pattern(const EdgeColoring& f, std::span<const EdgeId, 5> boundary)
{
    for (int r = 0; r < 5; ++r) {
        std::array<Color, 5> s;
        for (int k = 0; k < 5; ++k)
            s[k] = f[boundary[(r + k) % 5]];
        if (s[0] == Color::zero || s[1] == Color::zero || s[4] == Color::zero)
            continue;
        if (s[0] == s[2] && s[0] == s[3] && s[1] != s[0] && s[4] != s[0] && s[1] != s[4])
            return {r, s[0], s[1], s[4]};
    }
    throw coloring_error(coloring_errc::no_star_pattern,
                         "star boundary does not read x,y,x,x,z in any rotation");
}

}  // namespace snark

#endif
