#include "hadwiger/enumerate.hpp"
#include "hadwiger/error.hpp"
#include "hadwiger/graph6.hpp"
#include "hadwiger/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace hadwiger {

std::size_t ScanReport::unknown() const
{
    std::size_t total = 0;
    for (const auto& [n, tally] : by_order)
        total += tally.unknown;
    return total;
}

Json to_json(const ScanReport& report)
{
    Json orders = Json::array();
    for (const auto& [n, t] : report.by_order)
        orders.push_back(Json{{"n", n},
                              {"scanned", t.scanned},
                              {"weak_counterexamples", t.weak_counterexamples},
                              {"full_counterexamples", t.full_counterexamples},
                              {"unknown", t.unknown},
                              {"max_chi", t.max_chi},
                              {"max_hadwiger", t.max_hadwiger},
                              {"elapsed_ms", t.elapsed_ms}});
    Json weak = Json::array();
    for (const auto& r : report.weak_counterexamples)
        weak.push_back(to_json(r, true));
    Json full = Json::array();
    for (const auto& r : report.full_counterexamples)
        full.push_back(to_json(r, true));
    return Json{{"mode", std::string(to_string(report.mode))},
                {"records", report.records},
                {"resumed", report.resumed},
                {"malformed_lines", report.malformed_lines},
                {"unknown", report.unknown()},
                {"wall_ms", report.wall_ms},
                {"by_order", std::move(orders)},
                {"weak_counterexamples", std::move(weak)},
                {"full_counterexamples", std::move(full)}};
}

std::string summary_csv(const ScanReport& report)
{
    std::ostringstream out;
    out << "n,scanned,weak_counterexamples,full_counterexamples,unknown,max_chi,max_hadwiger,elapsed_ms\n";
    for (const auto& [n, t] : report.by_order)
        out << n << ',' << t.scanned << ',' << t.weak_counterexamples << ',' << t.full_counterexamples << ','
            << t.unknown << ',' << t.max_chi << ',' << t.max_hadwiger << ',' << t.elapsed_ms << '\n';
    return out.str();
}

std::size_t count_complete_lines(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return 0;
    return static_cast<std::size_t>(std::count(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>(), '\n'));
}

namespace {

std::vector<Graph> load_graphs(const ScanSource& source, ScanReport& report, std::ostream* log)
{
    std::vector<Graph> graphs;
    if (const auto* builtin = std::get_if<BuiltinSource>(&source)) {
        if (builtin->min_n < 1 || builtin->max_n < builtin->min_n)
            throw Error(Errc::bad_parameter, "builtin source needs 1 <= min_n <= max_n");
        for (int n = builtin->min_n; n <= builtin->max_n; ++n) {
            auto batch = enumerate_graphs(n);
            graphs.insert(graphs.end(), batch.begin(), batch.end());
        }
        return graphs;
    }

    const auto& path = std::get<FileSource>(source).path;
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::io_error, "cannot open " + path.string());
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        try {
            Graph g = from_graph6(line);
            if (g.order() == 0)
                throw Error(Errc::malformed_graph6, "the empty graph has no verdict");
            graphs.push_back(std::move(g));
        } catch (const Error& e) {
            ++report.malformed_lines;
            if (log)
                *log << path.string() << ":" << number << ": skipped: " << e.what() << '\n';
        }
    }
    return graphs;
}

// Keeps the first `keep` lines of the file and drops anything after them.
std::vector<std::string> truncate_to_lines(const std::filesystem::path& path, std::size_t keep)
{
    std::vector<std::string> lines;
    {
        std::ifstream in(path, std::ios::binary);
        std::string line;
        while (lines.size() < keep && std::getline(in, line)) {
            if (in.eof())
                break; // no trailing newline: a partial record
            lines.push_back(line);
        }
    }
    if (lines.size() < keep)
        throw Error(Errc::io_error, path.string() + " holds " + std::to_string(lines.size()) + " complete records, cannot resume at " +
                                        std::to_string(keep));
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    for (const auto& line : lines)
        out << line << '\n';
    if (!out)
        throw Error(Errc::io_error, "cannot rewrite " + path.string());
    return lines;
}

void tally(ScanReport& report, const VerdictRecord& r)
{
    auto& t = report.by_order[r.n];
    ++t.scanned;
    ++report.records;
    t.max_chi = std::max(t.max_chi, r.chi);
    if (r.hadwiger)
        t.max_hadwiger = std::max(t.max_hadwiger, *r.hadwiger);
    t.elapsed_ms += r.elapsed_ms;
    if (r.unknown_for(report.mode))
        ++t.unknown;
    if (report.mode != Mode::full && r.weak_counterexample()) {
        ++t.weak_counterexamples;
        report.weak_counterexamples.push_back(r);
    }
    if (report.mode != Mode::weak && r.full_counterexample()) {
        ++t.full_counterexamples;
        report.full_counterexamples.push_back(r);
    }
}

// Workers compute records out of order; the caller consumes them strictly in index order.
class Sequencer {
public:
    Sequencer(const std::vector<Graph>& graphs, std::size_t first, const ScanOptions& options)
        : graphs_(graphs), next_(first), slots_(graphs.size())
    {
        const int workers = std::max(1, options.workers);
        for (int w = 0; w < workers; ++w)
            threads_.emplace_back([this, &options] { work(options); });
    }

    ~Sequencer()
    {
        stop_ = true;
        for (auto& t : threads_)
            t.join();
    }

    VerdictRecord take(std::size_t index)
    {
        std::unique_lock lock(mutex_);
        ready_.wait(lock, [&] { return slots_[index].has_value() || failure_; });
        if (failure_)
            std::rethrow_exception(failure_);
        VerdictRecord r = std::move(*slots_[index]);
        slots_[index].reset();
        return r;
    }

private:
    void work(const ScanOptions& options)
    {
        for (;;) {
            const std::size_t index = next_.fetch_add(1);
            if (index >= graphs_.size() || stop_)
                return;
            try {
                VerdictRecord r = check_graph(graphs_[index], options.mode, options.node_limit);
                std::lock_guard lock(mutex_);
                slots_[index] = std::move(r);
            } catch (...) {
                std::lock_guard lock(mutex_);
                if (!failure_)
                    failure_ = std::current_exception();
            }
            ready_.notify_all();
        }
    }

    const std::vector<Graph>& graphs_;
    std::atomic<std::size_t> next_;
    std::atomic<bool> stop_{false};
    std::vector<std::optional<VerdictRecord>> slots_;
    std::mutex mutex_;
    std::condition_variable ready_;
    std::exception_ptr failure_;
    std::vector<std::thread> threads_;
};

} // namespace

ScanReport scan(const ScanSource& source, const ScanOptions& options)
{
    const auto started = std::chrono::steady_clock::now();
    ScanReport report;
    report.mode = options.mode;
    std::ostream* log = options.log;

    const std::vector<Graph> graphs = load_graphs(source, report, log);

    std::size_t first = 0;
    if (options.resume_offset) {
        first = *options.resume_offset;
        if (first > graphs.size())
            throw Error(Errc::io_error, "resume offset " + std::to_string(first) + " exceeds the " + std::to_string(graphs.size()) +
                                            " graphs in the source");
        for (const auto& line : truncate_to_lines(options.output, first))
            tally(report, verdict_record_from_json(Json::parse(line)));
        report.resumed = first;
    }

    std::ofstream out(options.output, std::ios::binary | (options.resume_offset ? std::ios::app : std::ios::trunc));
    if (!out)
        throw Error(Errc::io_error, "cannot open " + options.output.string() + " for writing");

    if (first < graphs.size()) {
        Sequencer sequencer(graphs, first, options);
        for (std::size_t i = first; i < graphs.size(); ++i) {
            const VerdictRecord r = sequencer.take(i);
            out << to_json(r, options.with_timing).dump() << '\n';
            out.flush();
            if (!out)
                throw Error(Errc::io_error, "write to " + options.output.string() + " failed");
            tally(report, r);
            if (log && (i + 1 == graphs.size() || graphs[i + 1].order() != r.n))
                *log << "n=" << r.n << ": " << report.by_order[r.n].scanned << " graphs\n";
        }
    }

    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();

    std::filesystem::path csv = options.summary_csv;
    if (csv.empty())
        csv = std::filesystem::path(options.output).replace_extension(".csv");
    std::ofstream summary(csv, std::ios::trunc);
    summary << summary_csv(report);
    if (!summary)
        throw Error(Errc::io_error, "cannot write " + csv.string());
    return report;
}

} // namespace hadwiger
