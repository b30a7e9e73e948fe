#ifndef SNARKPSI_REPORT_JSON_HPP
#define SNARKPSI_REPORT_JSON_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "snarkpsi/coloring.hpp"
#include "snarkpsi/connectivity.hpp"
#include "snarkpsi/constructions.hpp"
#include "snarkpsi/graph.hpp"
#include "snarkpsi/synthesis.hpp"

namespace snark::json_report {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Counts go out as decimal strings so 64-bit values survive JSON readers
// that parse numbers as doubles.
inline json count(std::uint64_t n) { return std::to_string(n); }

inline json edge(const Graph& g, EdgeId e)
{
    if (e == kRemoved)
        return nullptr;
    auto [u, v] = g.endpoints(e);
    return json::array({u, v});
}

inline json edge(const EdgeRef& e) { return json::array({e.u, e.v}); }

inline json document(const std::string& kind, json body)
{
    body["schema_version"] = kSchemaVersion;
    body["kind"] = kind;
    return body;
}

inline json graph_summary(const Graph& g)
{
    json j;
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["fingerprint"] = count(fingerprint(g));
    return j;
}

inline json census(const Graph& g, const Census& c)
{
    json j;
    j["graph"] = graph_summary(g);
    j["colorings"] = count(c.colorings);
    j["decompositions"] = count(c.decompositions);
    if (c.subtracted) {
        const auto& s = *c.subtracted;
        j["edge"] = edge(s.edge);
        j["colorings_of_G_e"] = count(s.colorings);
        j["decompositions_of_G_e"] = count(s.decompositions);
        j["psi"] = s.psi ? count(*s.psi) : json(nullptr);
    }
    return document("census", std::move(j));
}

inline json psi_value(const Graph& g, EdgeId e, std::uint64_t psi)
{
    json j;
    j["graph"] = graph_summary(g);
    j["edge"] = edge(g, e);
    j["psi"] = count(psi);
    return document("psi", std::move(j));
}

inline json cut_set(const Graph& g, const CutSet& c)
{
    json edges = json::array();
    for (EdgeId e : c.edge_ids)
        edges.push_back(edge(g, e));
    return {{"edges", edges}, {"minimal", c.minimal}, {"cycle_separating", c.cycle_separating}};
}

inline json snark_report(const Graph& g, const SnarkReport& r)
{
    json j;
    j["graph"] = graph_summary(g);
    j["simple"] = r.simple;
    j["cubic"] = r.cubic;
    j["connected"] = r.connected;
    j["girth"] = r.girth;
    j["colorings"] = r.colorings ? count(*r.colorings) : json(nullptr);
    json cyc = json::object();
    for (auto [k, v] : r.cyclic_connectivity)
        cyc[std::to_string(k)] = verdict_name(v);
    j["cyclic_connectivity"] = cyc;
    j["cyclic_counterexample"] = r.cyclic_counterexample ? cut_set(g, *r.cyclic_counterexample) : json(nullptr);
    j["is_snark"] = r.is_snark;
    return document("snark_report", std::move(j));
}

/// Edge map with every edge written as its endpoint pair in the relevant graph.
inline json edge_map(const std::vector<const Graph*>& sources, const Construction& c)
{
    json j;
    j["graph"] = graph_summary(c.graph);
    json src = json::array();
    for (std::size_t s = 0; s < sources.size(); ++s) {
        json entry;
        entry["name"] = c.map.sources.at(s);
        json edges = json::array();
        for (EdgeId e = 0; e < sources[s]->edge_count(); ++e)
            edges.push_back({{"from", edge(*sources[s], e)}, {"to", edge(c.graph, c.map.edge(s, e))}});
        entry["edges"] = edges;
        json vertices = json::array();
        for (VertexId v = 0; v < sources[s]->vertex_count(); ++v) {
            VertexId w = c.map.vertex(s, v);
            vertices.push_back(w == kRemoved ? json(nullptr) : json(w));
        }
        entry["vertices"] = vertices;
        src.push_back(entry);
    }
    j["sources"] = src;
    json named_edges = json::object();
    for (const auto& [name, e] : c.map.new_edges)
        named_edges[name] = edge(c.graph, e);
    j["new_edges"] = named_edges;
    j["new_vertices"] = c.map.new_vertices;
    return document("edge_map", std::move(j));
}

inline json dot_ends(const DotEnds& d)
{
    return {{"U", d.U}, {"V", d.V}, {"U1", d.U1}, {"U2", d.U2}, {"V1", d.V1}, {"V2", d.V2}};
}

inline json trace(const SynthesisResult& r)
{
    const auto& t = r.trace;
    json j;
    j["graph"] = graph_summary(r.graph);
    j["target"] = count(t.target);
    j["mode"] = t.mode == SynthesisMode::cyclic5 ? "5cc" : "4cc";
    j["initial"] = {{"graph", "petersen"}, {"edge", edge(t.initial_edge)}, {"psi", count(1)}};
    json steps = json::array();
    for (const auto& s : t.steps) {
        json step;
        step["kind"] = s.kind;
        step["factor"] = s.factor;
        if (s.path)
            step["path"] = *s.path;
        if (s.ends1)
            step["ends1"] = dot_ends(*s.ends1);
        if (s.ends2)
            step["ends2"] = dot_ends(*s.ends2);
        if (!s.partner.empty())
            step["partner"] = s.partner;
        if (s.reading)
            step["reading"] = reading_name(*s.reading);
        step["tracked_before"] = edge(s.tracked_before);
        step["tracked_after"] = edge(s.tracked_after);
        step["vertices"] = s.vertex_count;
        step["edges"] = s.edge_count;
        step["fingerprint"] = count(s.graph_fingerprint);
        step["predicted_psi"] = count(s.predicted_psi);
        steps.push_back(step);
    }
    j["steps"] = steps;
    j["tracked_edge"] = edge(r.tracked);
    j["predicted_psi"] = count(t.predicted_psi);
    j["verified_psi"] = t.verified_psi ? count(*t.verified_psi) : json(nullptr);
    j["status"] = t.verified_psi ? "VERIFIED" : "UNVERIFIED";
    if (r.report)
        j["snark_report"] = snark_report(r.graph, *r.report);
    return document("construction_trace", std::move(j));
}

inline json theorem_report(const TheoremReport& r)
{
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"suite", c.suite},
                          {"instance", c.instance},
                          {"lhs", count(c.lhs)},
                          {"rhs", count(c.rhs)},
                          {"result", c.pass ? "PASS" : "FAIL"},
                          {"detail", c.detail}});
    json j;
    j["checks"] = checks;
    if (r.d1_reading) {
        const auto& d = *r.d1_reading;
        j["d1_reading"] = {{"instance", d.instance},
                           {"lhs", count(d.lhs)},
                           {"adjacent", count(d.adjacent)},
                           {"subtracted", count(d.subtracted)},
                           {"holds", d.holds ? json(reading_name(*d.holds)) : json(nullptr)}};
    }
    j["result"] = r.pass() ? "PASS" : "FAIL";
    return document("theorem_report", std::move(j));
}

}  // namespace snark::json_report

#endif
