// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "support.hpp"

#include "hadwiger/enumerate.hpp"
#include "hadwiger/generators.hpp"
#include "hadwiger/graph6.hpp"
#include "hadwiger/harness.hpp"
#include "hadwiger/minors.hpp"
#include "hadwiger/serialize.hpp"
#include "hadwiger/td_format.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <sys/wait.h>

using namespace hadwiger;
using namespace hadwiger::testing;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

fs::path workdir()
{
    const fs::path dir = fs::temp_directory_path() / "hadwiger_acceptance";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::string> lines_of(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

int run_cli(const std::string& args, const fs::path& stdout_file)
{
    const std::string command =
        std::string("'") + HADWIGER_CLI + "' " + args + " >'" + stdout_file.string() + "' 2>/dev/null";
    const int raw = std::system(command.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

Outcome coloring_on_random_graphs()
{
    const auto start = Clock::now();
    Rng rng(1001);
    const double densities[] = {0.2, 0.5, 0.8};
    int colorings = 0;
    int bad = 0;
    for (int i = 0; i < 1000; ++i) {
        const int n = std::uniform_int_distribution<int>(1, 12)(rng);
        const Graph g = random_graph(rng, n, densities[i % 3]);
        for (const Strategy s : {Strategy::exact, Strategy::min_fill, Strategy::min_degree}) {
            const auto td = decompose(g, s);
            const Coloring c = color_by_decomposition(g, td);
            ++colorings;
            const bool ok = oracle_valid_decomposition(g, td) && verify_proper(g, c) && injective_on_bags(td, c) &&
                            c.color_count() <= width(td).bag_width;
            bad += ok ? 0 : 1;
        }
    }
    const double elapsed = seconds_since(start);
    return {bad == 0 && elapsed < 60.0,
            std::to_string(colorings) + " colorings, " + std::to_string(bad) + " violations, " + std::to_string(elapsed) + "s"};
}

Outcome exhaustive_hunt()
{
    const fs::path out = workdir() / "hunt7.jsonl";
    const fs::path report_file = workdir() / "hunt7.report.json";
    const auto start = Clock::now();
    const int status = run_cli("hunt --n 7 --mode both --out '" + out.string() + "'", report_file);
    const double elapsed = seconds_since(start);
    if (status != 0)
        return {false, "hunt exited with " + std::to_string(status)};

    std::map<int, std::size_t> per_n;
    std::map<int, std::set<std::uint64_t>> codes;
    std::size_t weak_cex = 0, full_cex = 0, unknown = 0, invalid = 0;
    for (const auto& line : lines_of(slurp(out))) {
        const VerdictRecord r = verdict_record_from_json(Json::parse(line));
        ++per_n[r.n];
        if (r.n <= 5)
            codes[r.n].insert(brute_canonical_code(matrix(from_graph6(r.graph6))));
        weak_cex += r.weak_counterexample() ? 1 : 0;
        full_cex += r.full_counterexample() ? 1 : 0;
        unknown += r.unknown_for(Mode::both) ? 1 : 0;
        if (r.minor_cert && !verify_clique_minor(from_graph6(r.graph6), *r.minor_cert))
            ++invalid;
    }
    const std::map<int, std::size_t> expected{{1, 1}, {2, 2}, {3, 4}, {4, 11}, {5, 34}, {6, 156}, {7, 1044}};
    bool classes_ok = true;
    for (int n = 1; n <= 5; ++n)
        classes_ok = classes_ok && codes[n] == brute_force_classes(n);
    const Json report = Json::parse(slurp(report_file));

    std::ostringstream detail;
    detail << "counts";
    for (const auto& [n, c] : per_n)
        detail << ' ' << c;
    detail << ", brute-force classes n<=5 " << (classes_ok ? "match" : "DIFFER") << ", weak cex " << weak_cex << ", full cex "
           << full_cex << ", unknown " << unknown << ", bad certs " << invalid << ", " << elapsed << "s";
    const bool pass = per_n == expected && classes_ok && weak_cex == 0 && full_cex == 0 && unknown == 0 && invalid == 0 &&
                      report.at("unknown") == 0 && elapsed < 300.0;
    return {pass, detail.str()};
}

Outcome minor_oracle_equivalence()
{
    int cases = 0;
    int mismatches = 0;
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n))
            for (int k = 1; k <= 4; ++k) {
                const auto result = find_clique_minor(g, k);
                const bool found = result.found() && verify_clique_minor(g, *result.certificate).valid();
                ++cases;
                if (found != naive_has_clique_minor(g, k) || result.outcome == SearchOutcome::exhausted)
                    ++mismatches;
            }
    return {mismatches == 0, std::to_string(cases) + " (graph, k) pairs, " + std::to_string(mismatches) + " mismatches"};
}

Outcome petersen_facts()
{
    const Graph p = generate(Family::petersen, 0);
    const int chi = chromatic_number(p).chi;
    const int h = hadwiger_number(p);
    const int tw = exact_treewidth(p);
    const auto sub = find_subdivision(p, 5);
    const auto k6 = find_clique_minor(p, 6);
    const auto k5 = find_clique_minor(p, 5);
    const bool pass = chi == 3 && brute_force_chromatic(p) == 3 && h == 5 && k5.found() &&
                      verify_clique_minor(p, *k5.certificate).valid() && tw == 4 &&
                      sub.outcome == SearchOutcome::absent && k6.outcome == SearchOutcome::absent;
    std::ostringstream detail;
    detail << "chi " << chi << ", hadwiger " << h << ", treewidth " << tw << ", K5 subdivision "
           << (sub.found() ? "present" : sub.outcome == SearchOutcome::absent ? "absent" : "unknown") << ", K6 minor "
           << (k6.found() ? "present" : k6.outcome == SearchOutcome::absent ? "absent" : "unknown");
    return {pass, detail.str()};
}

Outcome chain_width_matches()
{
    Rng rng(505);
    int mismatches = 0;
    int w3_failures = 0;
    int checked = 0;
    while (checked < 200) {
        const int n = std::uniform_int_distribution<int>(1, 12)(rng);
        const Graph g = random_graph(rng, n, std::uniform_real_distribution<double>(0.1, 0.8)(rng));
        const auto td = random_decomposition(rng, g, 20);
        if (td.node_count() > 20 || !oracle_valid_decomposition(g, td))
            continue;
        ++checked;
        const auto w = width(td);
        if (!w.chain_width_exact || w.chain_width != w.bag_width)
            ++mismatches;
        if (!verify_decomposition(g, td).w3.holds)
            ++w3_failures;
    }
    return {mismatches == 0 && w3_failures == 0, std::to_string(checked) + " decompositions, " + std::to_string(mismatches) +
                                                     " width mismatches, " + std::to_string(w3_failures) + " W3 failures"};
}

Outcome mutation_sensitivity()
{
    Rng rng(606);
    int mutations = 0, invalid = 0, flagged_with_witness = 0, valid_misflagged = 0;
    while (mutations < 500) {
        const int n = std::uniform_int_distribution<int>(3, 10)(rng);
        const Graph base = random_graph(rng, n, 0.35);
        const auto td = compact(random_decomposition(rng, base, 14));
        const Graph g = bag_closure(td);
        if (!verify_decomposition(g, td).valid())
            return {false, "unmutated decomposition rejected"};
        const int t = std::uniform_int_distribution<int>(0, td.node_count() - 1)(rng);
        const auto members = td.bag(t).to_vector();
        const int v = members[std::uniform_int_distribution<std::size_t>(0, members.size() - 1)(rng)];
        const auto mutated = td.with_bag(t, td.bag(t) - VertexSet{v});
        ++mutations;

        const auto report = verify_decomposition(g, mutated);
        const bool truly_valid = oracle_valid_decomposition(g, mutated);
        if (truly_valid) {
            valid_misflagged += report.valid() ? 0 : 1;
            continue;
        }
        ++invalid;
        const AxiomVerdict& failed = !report.w1.holds ? report.w1 : !report.w2.holds ? report.w2 : report.w3;
        if (!report.valid() && !failed.witness.empty())
            ++flagged_with_witness;
    }
    const double rate = invalid == 0 ? 0.0 : static_cast<double>(flagged_with_witness) / invalid;
    std::ostringstream detail;
    detail << mutations << " deletions, " << invalid << " invalid, " << flagged_with_witness << " flagged with witness ("
           << rate * 100 << "%), " << valid_misflagged << " valid misflagged";
    return {rate >= 0.99 && valid_misflagged == 0 && invalid > 0, detail.str()};
}

Outcome determinism_and_resume()
{
    const fs::path a = workdir() / "det_a.jsonl";
    const fs::path b = workdir() / "det_b.jsonl";
    const fs::path sink = workdir() / "det.report.json";
    if (run_cli("hunt --n 6 --mode both --out '" + a.string() + "'", sink) != 0 ||
        run_cli("hunt --n 6 --mode both --workers 4 --out '" + b.string() + "'", sink) != 0)
        return {false, "hunt failed"};
    const std::string reference = slurp(a);
    if (reference.empty() || reference != slurp(b))
        return {false, "two runs differ"};

    const auto lines = lines_of(reference);
    Rng rng(707);
    std::vector<std::size_t> offsets{0, 1, lines.size() - 1, lines.size()};
    for (int i = 0; i < 6; ++i)
        offsets.push_back(std::uniform_int_distribution<std::size_t>(0, lines.size())(rng));

    const fs::path partial = workdir() / "det_resume.jsonl";
    int failures = 0;
    for (std::size_t offset : offsets) {
        {
            std::ofstream out(partial, std::ios::binary | std::ios::trunc);
            for (std::size_t i = 0; i < offset; ++i)
                out << lines[i] << '\n';
            if (offset < lines.size())
                out << lines[offset].substr(0, lines[offset].size() / 2); // torn record
        }
        const int status = run_cli("hunt --n 6 --mode both --resume --out '" + partial.string() + "'", sink);
        if (status != 0 || slurp(partial) != reference || Json::parse(slurp(sink)).at("records") != lines.size())
            ++failures;
    }
    return {failures == 0, "2 runs identical (" + std::to_string(lines.size()) + " records), " + std::to_string(offsets.size()) +
                               " resume offsets, " + std::to_string(failures) + " failures"};
}

Outcome round_trips()
{
    Rng rng(808);
    int graph6_failures = 0;
    for (int i = 0; i < 1000; ++i) {
        const int n = std::uniform_int_distribution<int>(0, 20)(rng);
        const Graph g = random_graph(rng, n, std::uniform_real_distribution<double>(0, 1)(rng));
        if (!(from_graph6(to_graph6(g)) == g))
            ++graph6_failures;
    }
    int td_failures = 0;
    for (int i = 0; i < 200; ++i) {
        const int n = std::uniform_int_distribution<int>(1, 14)(rng);
        const Graph g = random_graph(rng, n, 0.4);
        const auto td = random_decomposition(rng, g, 18);
        const auto back = read_td(write_td(td));
        // the format roots at bag 1; everything else must survive unchanged
        if (!(back == td.rerooted(0)) || back.tree().edges() != td.tree().edges() ||
            verify_decomposition(g, back).valid() != verify_decomposition(g, td).valid())
            ++td_failures;
    }
    return {graph6_failures == 0 && td_failures == 0,
            "graph6 1000 graphs, " + std::to_string(graph6_failures) + " failures; .td 200 decompositions, " +
                std::to_string(td_failures) + " failures"};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"decomposition coloring on 1000 random graphs", coloring_on_random_graphs},
        {"exhaustive hunt through n = 7", exhaustive_hunt},
        {"minor search vs exhaustive oracle (n <= 6, k <= 4)", minor_oracle_equivalence},
        {"Petersen graph facts", petersen_facts},
        {"chain width equals bag width", chain_width_matches},
        {"axiom verifier catches single-vertex deletions", mutation_sensitivity},
        {"byte-identical reruns and resume", determinism_and_resume},
        {"graph6 and .td round trips", round_trips},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        failed += outcome.pass ? 0 : 1;
        std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " -- "
                  << outcome.detail << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
