#ifndef SNARKPSI_CLI_HPP
#define SNARKPSI_CLI_HPP

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "snarkpsi/coloring.hpp"
#include "snarkpsi/connectivity.hpp"
#include "snarkpsi/constructions.hpp"
#include "snarkpsi/graph.hpp"
#include "snarkpsi/graph6.hpp"
#include "snarkpsi/report_json.hpp"
#include "snarkpsi/synthesis.hpp"

namespace snark::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Input problems the user can fix: reported with exit code 2.
class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Graph load_graph(const std::string& path, std::istream& stdin_stream)
{
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(stdin_stream), {});
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw usage_error("cannot open graph file '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    std::istringstream lines(text);
    std::vector<Graph> graphs;
    try {
        graphs = read_graph6(lines);
    } catch (const graph6_error& e) {
        throw usage_error(std::string(e.what()) + " (in '" + path + "')");
    } catch (const graph_error& e) {
        throw usage_error("malformed graph6 in '" + path + "': " + e.what());
    }
    if (graphs.empty())
        throw usage_error("malformed graph6: '" + path + "' contains no graph");
    return graphs.front();
}

inline std::vector<int> parse_int_list(const std::string& text, std::size_t expected, const std::string& what)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size())
            throw usage_error("bad " + what + " '" + text + "': '" + item + "' is not an integer");
        out.push_back(value);
    }
    if (out.size() != expected)
        throw usage_error("bad " + what + " '" + text + "': expected " + std::to_string(expected) +
                          " comma-separated integers");
    return out;
}

inline EdgeId parse_edge(const Graph& g, const std::string& text)
{
    auto uv = parse_int_list(text, 2, "edge spec");
    for (int x : uv)
        if (x < 0 || x >= g.vertex_count())
            throw usage_error("bad edge spec '" + text + "': vertex " + std::to_string(x) + " not in 0.." +
                              std::to_string(g.vertex_count() - 1));
    auto e = g.find_edge(uv[0], uv[1]);
    if (!e)
        throw usage_error("bad edge spec '" + text + "': no such edge in the graph");
    return *e;
}

inline void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

/// Runs the command line. Returns 0 on success or PASS, 1 on a failed
/// verification, 2 on a usage or input error.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                   std::istream& in = std::cin)
{
    CLI::App app{"Edge-coloring census, psi(G,e) and snark constructions for cubic graphs", "snarkpsi"};
    app.require_subcommand(1);
    std::uint64_t budget = Budget{}.max_subsets;
    int threads = 1;
    app.add_option("--budget", budget, "Maximum edge subsets examined by connectivity scans")
        ->capture_default_str();
    app.add_option("--threads", threads, "Worker threads for counting and scans")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();

    std::string file, edge_text;
    auto* census_cmd = app.add_subcommand("census", "Coloring and decomposition counts, psi with --edge");
    census_cmd->add_option("file", file, "graph6 file ('-' for stdin)")->required();
    census_cmd->add_option("--edge", edge_text, "Edge U,V to subtract");

    auto* psi_cmd = app.add_subcommand("psi", "Print psi(G,e) for a non-colorable cubic graph");
    psi_cmd->add_option("file", file, "graph6 file ('-' for stdin)")->required();
    psi_cmd->add_option("--edge", edge_text, "Edge U,V")->required();

    int max_k = 5;
    auto* validate_cmd = app.add_subcommand("validate", "Snark report as JSON; exit 1 if not a snark");
    validate_cmd->add_option("file", file, "graph6 file ('-' for stdin)")->required();
    validate_cmd->add_option("--max-k", max_k, "Highest cyclic connectivity to certify")
        ->check(CLI::Range(4, 6))
        ->capture_default_str();

    auto* construct_cmd = app.add_subcommand("construct", "Build a graph; prints graph6 then the edge map");
    construct_cmd->require_subcommand(1);
    std::string g1_file, e1_text, g2_file, e2_text, order_text;
    auto* dot_cmd = construct_cmd->add_subcommand("dot", "Symmetric dot product of two snarks");
    dot_cmd->add_option("--g1", g1_file, "G' graph6 file")->required();
    dot_cmd->add_option("--e1", e1_text, "Edge U,V of G'")->required();
    dot_cmd->add_option("--g2", g2_file, "G-hat graph6 file")->required();
    dot_cmd->add_option("--e2", e2_text, "Edge u,v of G-hat")->required();
    dot_cmd->add_option("--order", order_text,
                        "U1,U2,V1,V2,u1,u2,v1,v2 (default: neighbours ascending)");
    std::string g0_file, path_text;
    auto* sup_cmd = construct_cmd->add_subcommand("superpose", "Replace a hinge by the double-Petersen gadget");
    sup_cmd->add_option("--g0", g0_file, "G0 graph6 file")->required();
    sup_cmd->add_option("--path", path_text, "Path u1,u2,u3,u4,u5")->required();

    std::string target_text, mode_text = "5cc";
    bool verify = false;
    auto* synth_cmd = app.add_subcommand("synthesize", "Build a snark with an edge of the given psi");
    synth_cmd->add_option("--target", target_text, "e.g. \"5^1*7^1\" or 35")->required();
    synth_cmd->add_option("--mode", mode_text, "5cc (factors 5, 7) or 4cc (factors 2, 3, 5, 7)")
        ->check(CLI::IsMember({"5cc", "4cc"}))
        ->capture_default_str();
    synth_cmd->add_flag("--verify", verify, "Count psi by brute force and validate the output");

    std::vector<std::string> suites{"all"};
    auto* theorems_cmd = app.add_subcommand("check-theorems", "Brute-force checks of the product formulas");
    theorems_cmd->add_option("--suite", suites, "all, or any of: dot-edge dot-d1 dot-d1-reading superpose-e "
                                                "superpose-f divisibility")
        ->delimiter(',')
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const Budget limits{budget};
    try {
        if (census_cmd->parsed()) {
            Graph g = load_graph(file, in);
            std::optional<EdgeId> e;
            if (!edge_text.empty())
                e = parse_edge(g, edge_text);
            emit(out, json_report::census(g, census(g, e, {threads, false})));
            return kExitOk;
        }
        if (psi_cmd->parsed()) {
            Graph g = load_graph(file, in);
            EdgeId e = parse_edge(g, edge_text);
            out << psi(g, e, {threads, false}) << '\n';
            return kExitOk;
        }
        if (validate_cmd->parsed()) {
            Graph g = load_graph(file, in);
            SnarkReport r = validate_snark(g, max_k, limits, threads);
            emit(out, json_report::snark_report(g, r));
            return r.is_snark ? kExitOk : kExitFailure;
        }
        if (dot_cmd->parsed()) {
            Graph g1 = load_graph(g1_file, in);
            Graph g2 = load_graph(g2_file, in);
            DotProductSpec spec = make_dot_spec(g1, parse_edge(g1, e1_text), g2, parse_edge(g2, e2_text));
            if (!order_text.empty()) {
                auto o = parse_int_list(order_text, 8, "order");
                spec.ends1 = {spec.ends1.U, spec.ends1.V, o[0], o[1], o[2], o[3]};
                spec.ends2 = {spec.ends2.U, spec.ends2.V, o[4], o[5], o[6], o[7]};
            }
            Construction c = dot_product(spec);
            out << encode_graph6(c.graph) << '\n';
            emit(out, json_report::edge_map({&spec.g1, &spec.g2}, c));
            return kExitOk;
        }
        if (sup_cmd->parsed()) {
            Graph g0 = load_graph(g0_file, in);
            auto p = parse_int_list(path_text, 5, "path");
            SuperpositionSpec spec{g0, {p[0], p[1], p[2], p[3], p[4]}};
            Construction c = superpose(spec);
            Gadget gadget = build_gadget();
            out << encode_graph6(c.graph) << '\n';
            emit(out, json_report::edge_map({&spec.g0, &gadget.graph}, c));
            return kExitOk;
        }
        if (synth_cmd->parsed()) {
            PsiTarget t = parse_target(target_text);
            t.mode = mode_text == "4cc" ? SynthesisMode::cyclic4 : SynthesisMode::cyclic5;
            t.verify = verify;
            t.budget = limits;
            t.threads = threads;
            SynthesisResult r = synthesize(t);
            out << encode_graph6(r.graph) << '\n';
            emit(out, json_report::trace(r));
            return kExitOk;
        }
        if (theorems_cmd->parsed()) {
            TheoremReport r = verify_theorems(suites, threads);
            emit(out, json_report::theorem_report(r));
            return r.pass() ? kExitOk : kExitFailure;
        }
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const synthesis_error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == synthesis_errc::invalid_target ? kExitUsage : kExitFailure;
    } catch (const construction_error& e) {
        err << "error: invalid construction: " << e.what() << '\n';
        return kExitUsage;
    } catch (const coloring_error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == coloring_errc::colorable_input ? kExitUsage : kExitFailure;
    } catch (const graph_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace snark::cli

#endif
