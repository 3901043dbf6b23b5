#pragma once

#include "hadwiger/graph.hpp"
#include "hadwiger/minors.hpp"
#include "hadwiger/serialize.hpp"
#include "hadwiger/tree_decomposition.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hadwiger {

/// Which conjecture a scan is hunting for: K_{chi-1} minors, K_chi minors, or both.
enum class Mode { weak, full, both };

std::optional<Mode> parse_mode(std::string_view name);
std::string_view to_string(Mode mode);

/// Per-graph result. Verdicts are tri-state: nullopt means a minor search ran out
/// of budget and nothing is claimed either way.
struct VerdictRecord {
    std::string graph6;
    int n = 0;
    int m = 0;
    int chi = 0;
    std::optional<int> hadwiger;
    std::optional<bool> weak_holds;
    std::optional<bool> full_holds;
    /// Size of the clique minor that minor_cert witnesses.
    std::optional<int> minor_k;
    std::optional<MinorCertificate> minor_cert;
    Strategy td_strategy = Strategy::exact;
    int bag_width = 0;
    /// Colors used by color_by_decomposition on the decomposition above.
    int td_colors = 0;
    double elapsed_ms = 0.0;

    bool weak_counterexample() const { return weak_holds == false; }
    bool full_counterexample() const { return full_holds == false; }
    bool unknown_for(Mode mode) const;
};

/// chi, Hadwiger number, both verdicts, and the decomposition coloring for g.
/// The attached certificate is for K_{chi-1} (weak), K_chi (full), or the larger
/// of the two that exists (both). A null node limit means default_node_limit(g).
VerdictRecord check_graph(const Graph& g, Mode mode, NodeLimit limit = std::nullopt);

/// Throws EmptyGraph for n = 0.
inline VerdictRecord check_weak_hadwiger(const Graph& g, NodeLimit limit = std::nullopt)
{
    return check_graph(g, Mode::weak, limit);
}
inline VerdictRecord check_hadwiger(const Graph& g, NodeLimit limit = std::nullopt)
{
    return check_graph(g, Mode::full, limit);
}

/// One JSONL object with a fixed key order. elapsed_ms is only written when
/// `with_timing` is set, so default output is reproducible byte for byte.
Json to_json(const VerdictRecord& record, bool with_timing = false);
VerdictRecord verdict_record_from_json(const Json& j);

/// Re-derives every record invariant from the graph itself; returns the violations.
std::vector<std::string> validate_record(const VerdictRecord& record);

struct BuiltinSource {
    int min_n = 1;
    int max_n = 1;
};

struct FileSource {
    std::filesystem::path path;
};

using ScanSource = std::variant<BuiltinSource, FileSource>;

struct ScanOptions {
    Mode mode = Mode::both;
    std::filesystem::path output;
    /// Records already present in `output`; they are kept and skipped. Without it
    /// the output is truncated.
    std::optional<std::size_t> resume_offset;
    int workers = 1;
    /// Per-search node cap; nullopt picks default_node_limit per graph.
    NodeLimit node_limit;
    bool with_timing = false;
    /// Summary CSV path; empty means `output` with a .csv extension.
    std::filesystem::path summary_csv;
    std::ostream* log = nullptr;
};

struct OrderTally {
    std::size_t scanned = 0;
    std::size_t weak_counterexamples = 0;
    std::size_t full_counterexamples = 0;
    std::size_t unknown = 0;
    int max_chi = 0;
    int max_hadwiger = 0;
    double elapsed_ms = 0.0;
};

struct ScanReport {
    Mode mode = Mode::both;
    std::map<int, OrderTally> by_order;
    std::vector<VerdictRecord> weak_counterexamples;
    std::vector<VerdictRecord> full_counterexamples;
    std::size_t records = 0;
    std::size_t resumed = 0;
    std::size_t malformed_lines = 0;
    double wall_ms = 0.0;

    std::size_t unknown() const;
    bool counterexample_found() const { return !weak_counterexamples.empty() || !full_counterexamples.empty(); }
};

Json to_json(const ScanReport& report);
std::string summary_csv(const ScanReport& report);

/// Number of newline-terminated lines in a file (0 if it does not exist).
std::size_t count_complete_lines(const std::filesystem::path& path);

/// Streams one record per graph to options.output (appended, flushed per record,
/// in input order whatever the worker count), then writes the summary CSV.
/// Malformed graph6 lines are logged with their line number and skipped.
/// Throws IoError when the source or output cannot be used.
ScanReport scan(const ScanSource& source, const ScanOptions& options);

} // namespace hadwiger
