#include "hadwiger/coloring.hpp"
#include "hadwiger/error.hpp"
#include "hadwiger/generators.hpp"
#include "hadwiger/graph6.hpp"
#include "hadwiger/harness.hpp"
#include "hadwiger/minors.hpp"
#include "hadwiger/serialize.hpp"
#include "hadwiger/td_format.hpp"
#include "hadwiger/tree_decomposition.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace hadwiger;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitCounterexample = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "gen:NAME:K", "gen:petersen", or a graph6 string.
Graph parse_graph(const std::string& arg)
{
    if (arg.rfind("gen:", 0) != 0)
        return from_graph6(arg);

    const std::string rest = arg.substr(4);
    const auto colon = rest.find(':');
    const std::string name = rest.substr(0, colon);
    const auto family = parse_family(name);
    if (!family)
        throw UsageError("unknown generator '" + name + "' (complete, cycle, path, empty, petersen)");
    int k = 0;
    if (colon != std::string::npos) {
        try {
            k = std::stoi(rest.substr(colon + 1));
        } catch (const std::exception&) {
            throw UsageError("generator size must be an integer");
        }
    } else if (*family != Family::petersen) {
        throw UsageError("generator '" + name + "' needs a size, e.g. gen:" + name + ":5");
    }
    return generate(*family, k);
}

Strategy parse_strategy_or_throw(const std::string& name)
{
    const auto s = parse_strategy(name);
    if (!s)
        throw UsageError("unknown strategy '" + name + "' (exact, min-fill, min-degree)");
    return *s;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::io_error, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out)
        throw Error(Errc::io_error, "cannot write " + path);
}

Json axiom_json(const AxiomVerdict& v)
{
    Json j{{"holds", v.holds}};
    if (!v.holds)
        j["witness"] = v.witness;
    return j;
}

int exit_code_for(const Error& e)
{
    switch (e.code()) {
    case Errc::io_error:
    case Errc::malformed_graph6:
    case Errc::malformed_td:
        return kExitIo;
    default:
        return kExitUsage;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Clique minors, tree decompositions and Hadwiger-conjecture scans on small graphs"};
    app.require_subcommand(1);

    std::string graph_arg;
    std::string strategy_name = "exact";
    std::string emit_td;
    auto* color = app.add_subcommand("color", "Color a graph from one of its tree decompositions");
    color->add_option("graph", graph_arg, "graph6 string or gen:NAME:K")->required();
    color->add_option("--strategy", strategy_name, "exact | min-fill | min-degree");
    color->add_option("--emit-td", emit_td, "also write the decomposition as PACE .td");

    std::string out_path;
    auto* decompose_cmd = app.add_subcommand("decompose", "Write a tree decomposition in PACE .td format");
    decompose_cmd->add_option("graph", graph_arg, "graph6 string or gen:NAME:K")->required();
    decompose_cmd->add_option("--strategy", strategy_name, "exact | min-fill | min-degree")->required();
    decompose_cmd->add_option("--out", out_path, "output file (default: stdout)");

    std::string td_path;
    auto* verify_td = app.add_subcommand("verify-td", "Check W1/W2/W3 for a .td file and report its widths");
    verify_td->add_option("--graph", graph_arg, "graph6 string or gen:NAME:K")->required();
    verify_td->add_option("--td", td_path, "PACE .td file")->required();

    int k = 0;
    bool subdivision = false;
    auto* minor = app.add_subcommand("minor", "Search for a K_k minor (or subdivision) and print its certificate");
    minor->add_option("graph", graph_arg, "graph6 string or gen:NAME:K")->required();
    minor->add_option("-k", k, "clique size")->required();
    minor->add_flag("--subdivision", subdivision, "search for a topological K_k instead");

    auto* chi = app.add_subcommand("chi", "Exact chromatic number with a witness coloring");
    chi->add_option("graph", graph_arg, "graph6 string or gen:NAME:K")->required();

    int hunt_n = 0;
    int hunt_min_n = 1;
    std::string input_path;
    std::string mode_name = "both";
    std::string jsonl_path;
    bool resume = false;
    int workers = 1;
    std::uint64_t budget = 0;
    bool timings = false;
    auto* hunt = app.add_subcommand("hunt", "Scan graphs for Hadwiger / weak Hadwiger counterexamples");
    auto* n_opt = hunt->add_option("--n", hunt_n, "scan every graph with min-n..N vertices (N <= 7)");
    auto* input_opt = hunt->add_option("--input", input_path, "graph6 file, one graph per line");
    n_opt->excludes(input_opt);
    hunt->add_option("--min-n", hunt_min_n, "smallest order scanned with --n")->needs(n_opt);
    hunt->add_option("--mode", mode_name, "weak | full | both")->required();
    hunt->add_option("--out", jsonl_path, "JSONL record file")->required();
    hunt->add_flag("--resume", resume, "keep complete records already in --out and continue after them");
    hunt->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    hunt->add_option("--budget", budget, "node cap per minor search (default: uncapped up to 10 vertices, 1e7 above)");
    hunt->add_flag("--timings", timings, "include elapsed_ms in records (breaks byte-identical reruns)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (color->parsed()) {
            const Graph g = parse_graph(graph_arg);
            const auto td = decompose(g, parse_strategy_or_throw(strategy_name));
            if (!emit_td.empty())
                write_file(emit_td, write_td(td));
            const Coloring c = color_by_decomposition(g, td);
            Json out = to_json(c);
            out["colors_used"] = c.color_count();
            out["bag_width"] = width(td).bag_width;
            out["proper"] = verify_proper(g, c);
            std::cout << out.dump() << '\n';
        } else if (decompose_cmd->parsed()) {
            const Graph g = parse_graph(graph_arg);
            const std::string text = write_td(decompose(g, parse_strategy_or_throw(strategy_name)));
            if (out_path.empty())
                std::cout << text;
            else
                write_file(out_path, text);
        } else if (verify_td->parsed()) {
            const Graph g = parse_graph(graph_arg);
            const auto td = read_td(read_file(td_path));
            const auto report = verify_decomposition(g, td);
            const auto w = width(td);
            Json out{{"w1", axiom_json(report.w1)},
                     {"w2", axiom_json(report.w2)},
                     {"w3", axiom_json(report.w3)},
                     {"bag_width", w.bag_width},
                     {"chain_width", w.chain_width},
                     {"chain_width_exact", w.chain_width_exact}};
            std::cout << out.dump() << '\n';
        } else if (minor->parsed()) {
            const Graph g = parse_graph(graph_arg);
            if (subdivision) {
                const auto result = find_subdivision(g, k);
                std::cout << (result.found() ? to_json(*result.certificate) : Json(nullptr)).dump() << '\n';
                if (result.outcome == SearchOutcome::exhausted)
                    std::cerr << "search budget exhausted; absence not established\n";
            } else {
                const auto result = find_clique_minor(g, k);
                std::cout << (result.found() ? to_json(*result.certificate) : Json(nullptr)).dump() << '\n';
                if (result.outcome == SearchOutcome::exhausted)
                    std::cerr << "search budget exhausted; absence not established\n";
            }
        } else if (chi->parsed()) {
            const Graph g = parse_graph(graph_arg);
            const auto result = chromatic_number(g);
            Json out{{"chi", result.chi}};
            out["colors"] = result.witness.colors;
            std::cout << out.dump() << '\n';
        } else if (hunt->parsed()) {
            if (n_opt->count() == 0 && input_opt->count() == 0)
                throw UsageError("hunt needs --n N or --input FILE");
            const auto mode = parse_mode(mode_name);
            if (!mode)
                throw UsageError("unknown mode '" + mode_name + "' (weak, full, both)");

            ScanSource source = FileSource{input_path};
            if (n_opt->count() != 0)
                source = BuiltinSource{hunt_min_n, hunt_n};

            ScanOptions options;
            options.mode = *mode;
            options.output = jsonl_path;
            options.workers = workers;
            options.with_timing = timings;
            options.log = &std::cerr;
            if (budget > 0)
                options.node_limit = budget;
            if (resume)
                options.resume_offset = count_complete_lines(jsonl_path);

            const ScanReport report = scan(source, options);
            std::cout << to_json(report).dump(2) << '\n';
            if (report.counterexample_found())
                return kExitCounterexample;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}
