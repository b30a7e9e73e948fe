#ifndef SNARKPSI_GRAPH6_HPP
#define SNARKPSI_GRAPH6_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "snarkpsi/graph.hpp"

namespace snark {

class graph6_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

/// graph6 text for g (no header, no newline). Vertex labels are preserved;
/// edge ids are not, since the format stores only adjacency.
inline std::string encode_graph6(const Graph& g)
{
    const std::uint64_t n = static_cast<std::uint64_t>(g.vertex_count());
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else if (n <= 258047) {
        out += static_cast<char>(126);
        for (int shift : {12, 6, 0})
            out += static_cast<char>(((n >> shift) & 63) + 63);
    } else {
        out += static_cast<char>(126);
        out += static_cast<char>(126);
        for (int shift : {30, 24, 18, 12, 6, 0})
            out += static_cast<char>(((n >> shift) & 63) + 63);
    }
    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    std::vector<std::uint8_t> packed((bits + 5) / 6, 0);
    for (auto [u, v] : g.edges()) {
        std::uint64_t i = static_cast<std::uint64_t>(std::min(u, v));
        std::uint64_t j = static_cast<std::uint64_t>(std::max(u, v));
        std::uint64_t k = j * (j - 1) / 2 + i;  // column-major over the upper triangle
        packed[k / 6] |= static_cast<std::uint8_t>(1u << (5 - k % 6));
    }
    for (auto b : packed)
        out += static_cast<char>(b + 63);
    return out;
}

/// Parses one graph6 line. An optional ">>graph6<<" header and trailing
/// whitespace are accepted. Edges are numbered in column-major bit order.
inline Graph decode_graph6(std::string_view text)
{
    if (text.starts_with(kGraph6Header))
        text.remove_prefix(kGraph6Header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.empty())
        throw graph6_error("malformed graph6: empty input");
    for (char c : text)
        if (c < 63 || c > 126)
            throw graph6_error("malformed graph6: byte " + std::to_string(static_cast<int>(
                                                              static_cast<unsigned char>(c))) +
                               " outside the printable range 63..126");
    auto value = [](char c) { return static_cast<std::uint64_t>(c - 63); };
    std::uint64_t n = 0;
    std::size_t pos = 0;
    if (text[0] != 126) {
        n = value(text[0]);
        pos = 1;
    } else if (text.size() >= 2 && text[1] == 126) {
        if (text.size() < 8)
            throw graph6_error("malformed graph6: truncated size field");
        for (std::size_t i = 2; i < 8; ++i)
            n = (n << 6) | value(text[i]);
        pos = 8;
    } else {
        if (text.size() < 4)
            throw graph6_error("malformed graph6: truncated size field");
        for (std::size_t i = 1; i < 4; ++i)
            n = (n << 6) | value(text[i]);
        pos = 4;
    }
    if (n > 1'000'000)
        throw graph6_error("malformed graph6: " + std::to_string(n) + " vertices is beyond supported size");
    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t need = (bits + 5) / 6;
    if (text.size() - pos != need)
        throw graph6_error("malformed graph6: expected " + std::to_string(need) + " data bytes for " +
                           std::to_string(n) + " vertices, got " + std::to_string(text.size() - pos));
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::uint64_t k = 0;
    for (std::uint64_t j = 1; j < n; ++j)
        for (std::uint64_t i = 0; i < j; ++i, ++k)
            if ((value(text[pos + k / 6]) >> (5 - k % 6)) & 1)
                pairs.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
    if (bits % 6 != 0 && (value(text.back()) & ((1u << (6 - bits % 6)) - 1)) != 0)
        throw graph6_error("malformed graph6: nonzero padding bits");
    return Graph(static_cast<int>(n), std::move(pairs));
}

/// g with its edges renumbered in the order decode_graph6 produces, so that
/// decode_graph6(encode_graph6(g)) == graph6_edge_order(g).
inline Graph graph6_edge_order(const Graph& g)
{
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (auto [u, v] : g.edges())
        pairs.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return std::pair(a.second, a.first) < std::pair(b.second, b.first); });
    return Graph(g.vertex_count(), std::move(pairs));
}

/// Reads every non-empty line of a graph6 stream.
inline std::vector<Graph> read_graph6(std::istream& in)
{
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        std::string_view view(line);
        if (view.starts_with(kGraph6Header))
            view.remove_prefix(kGraph6Header.size());
        if (view.find_first_not_of(" \r\n") == std::string_view::npos)
            continue;
        out.push_back(decode_graph6(view));
    }
    return out;
}

}  // namespace snark

#endif
