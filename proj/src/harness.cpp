#include "hadwiger/harness.hpp"

#include "hadwiger/coloring.hpp"
#include "hadwiger/error.hpp"
#include "hadwiger/graph6.hpp"

#include <algorithm>
#include <chrono>

namespace hadwiger {

std::optional<Mode> parse_mode(std::string_view name)
{
    if (name == "weak")
        return Mode::weak;
    if (name == "full")
        return Mode::full;
    if (name == "both")
        return Mode::both;
    return std::nullopt;
}

std::string_view to_string(Mode mode)
{
    switch (mode) {
    case Mode::weak: return "weak";
    case Mode::full: return "full";
    case Mode::both: return "both";
    }
    return "?";
}

bool VerdictRecord::unknown_for(Mode mode) const
{
    switch (mode) {
    case Mode::weak: return !weak_holds.has_value();
    case Mode::full: return !full_holds.has_value();
    case Mode::both: return !weak_holds.has_value() || !full_holds.has_value();
    }
    return true;
}

namespace {

// Outcome of the increasing-k minor searches: K_k is present for k <= largest_found;
// above that it is absent, or unknown if the climb ran out of budget.
struct MinorLadder {
    std::vector<std::optional<MinorCertificate>> certificates; // index k
    int largest_found = 0;
    bool exhausted = false;

    std::optional<bool> has(int k) const
    {
        if (k <= largest_found)
            return true;
        if (exhausted)
            return std::nullopt;
        return false;
    }
};

MinorLadder climb(const Graph& g, NodeLimit limit)
{
    MinorLadder ladder;
    ladder.certificates.emplace_back(); // K_0 is never searched
    for (int k = 1;; ++k) {
        auto result = find_clique_minor(g, k, limit);
        if (result.outcome == SearchOutcome::exhausted) {
            ladder.exhausted = true;
            return ladder;
        }
        if (!result.found())
            return ladder;
        ladder.certificates.push_back(std::move(result.certificate));
        ladder.largest_found = k;
    }
}

} // namespace

VerdictRecord check_graph(const Graph& g, Mode mode, NodeLimit limit)
{
    if (g.order() == 0)
        throw Error(Errc::empty_graph, "verdicts need at least one vertex");
    const auto started = std::chrono::steady_clock::now();
    if (!limit)
        limit = default_node_limit(g);

    VerdictRecord r;
    r.graph6 = to_graph6(g);
    r.n = g.order();
    r.m = g.size();
    r.chi = chromatic_number(g).chi;

    const MinorLadder ladder = climb(g, limit);
    if (!ladder.exhausted)
        r.hadwiger = ladder.largest_found;
    // With chi <= 1 there is no color count to rule out, so the weak form holds vacuously.
    r.weak_holds = r.chi <= 1 ? std::optional<bool>(true) : ladder.has(r.chi - 1);
    r.full_holds = ladder.has(r.chi);

    auto attach = [&](int k) {
        if (k >= 1 && ladder.has(k) == true) {
            r.minor_k = k;
            r.minor_cert = ladder.certificates[k];
            return true;
        }
        return false;
    };
    switch (mode) {
    case Mode::weak: attach(r.chi - 1); break;
    case Mode::full: attach(r.chi); break;
    case Mode::both:
        if (!attach(r.chi))
            attach(r.chi - 1);
        break;
    }

    r.td_strategy = g.order() <= kMaxExactOrder ? Strategy::exact : Strategy::min_fill;
    const auto td = decompose(g, r.td_strategy);
    for (VertexSet bag : td.bags())
        r.bag_width = std::max(r.bag_width, bag.size());
    r.td_colors = color_by_decomposition(g, td).color_count();

    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return r;
}

namespace {

template <typename T>
Json nullable(const std::optional<T>& value)
{
    return value ? Json(*value) : Json(nullptr);
}

template <typename T>
std::optional<T> read_nullable(const Json& j, const char* key)
{
    const auto& v = j.at(key);
    if (v.is_null())
        return std::nullopt;
    return v.get<T>();
}

} // namespace

Json to_json(const VerdictRecord& r, bool with_timing)
{
    Json j;
    j["graph6"] = r.graph6;
    j["n"] = r.n;
    j["m"] = r.m;
    j["chi"] = r.chi;
    j["hadwiger"] = nullable(r.hadwiger);
    j["weak_holds"] = nullable(r.weak_holds);
    j["full_holds"] = nullable(r.full_holds);
    j["minor_k"] = nullable(r.minor_k);
    j["minor_cert"] = r.minor_cert ? to_json(*r.minor_cert) : Json(nullptr);
    j["td_strategy"] = std::string(to_string(r.td_strategy));
    j["bag_width"] = r.bag_width;
    j["td_colors"] = r.td_colors;
    if (with_timing)
        j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

VerdictRecord verdict_record_from_json(const Json& j)
{
    VerdictRecord r;
    r.graph6 = j.at("graph6").get<std::string>();
    r.n = j.at("n").get<int>();
    r.m = j.at("m").get<int>();
    r.chi = j.at("chi").get<int>();
    r.hadwiger = read_nullable<int>(j, "hadwiger");
    r.weak_holds = read_nullable<bool>(j, "weak_holds");
    r.full_holds = read_nullable<bool>(j, "full_holds");
    r.minor_k = read_nullable<int>(j, "minor_k");
    if (!j.at("minor_cert").is_null())
        r.minor_cert = minor_certificate_from_json(j.at("minor_cert"));
    const auto strategy = parse_strategy(j.at("td_strategy").get<std::string>());
    if (!strategy)
        throw Error(Errc::bad_parameter, "unknown td_strategy in record");
    r.td_strategy = *strategy;
    r.bag_width = j.at("bag_width").get<int>();
    r.td_colors = j.at("td_colors").get<int>();
    if (j.contains("elapsed_ms"))
        r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
}

std::vector<std::string> validate_record(const VerdictRecord& r)
{
    std::vector<std::string> problems;
    Graph g;
    try {
        g = from_graph6(r.graph6);
    } catch (const Error& e) {
        return {e.what()};
    }
    if (g.order() != r.n || g.size() != r.m)
        problems.push_back("n/m do not match the graph6 string");
    if (g.order() == 0)
        return problems;

    const int chi = chromatic_number(g).chi;
    if (chi != r.chi)
        problems.push_back("chi is " + std::to_string(chi) + ", record says " + std::to_string(r.chi));

    if (r.weak_holds) {
        const bool expected = r.chi <= 1 || find_clique_minor(g, r.chi - 1).found();
        if (*r.weak_holds != expected)
            problems.push_back("weak_holds disagrees with a fresh K_{chi-1} search");
    }
    if (r.full_holds) {
        const bool expected = find_clique_minor(g, r.chi).found();
        if (*r.full_holds != expected)
            problems.push_back("full_holds disagrees with a fresh K_chi search");
    }
    if (r.full_holds == true && r.weak_holds == false)
        problems.push_back("full_holds without weak_holds");
    if (r.hadwiger) {
        if (r.full_holds && *r.full_holds != (*r.hadwiger >= r.chi))
            problems.push_back("hadwiger number inconsistent with full_holds");
        if (r.weak_holds && r.chi > 1 && *r.weak_holds != (*r.hadwiger >= r.chi - 1))
            problems.push_back("hadwiger number inconsistent with weak_holds");
    }

    if (r.minor_cert.has_value() != r.minor_k.has_value()) {
        problems.push_back("minor_k and minor_cert must appear together");
    } else if (r.minor_cert) {
        if (static_cast<int>(r.minor_cert->parts.size()) != *r.minor_k)
            problems.push_back("certificate size differs from minor_k");
        if (const auto verdict = verify_clique_minor(g, *r.minor_cert); !verdict)
            problems.push_back("certificate rejected: " + verdict.reason);
    }

    if (r.td_colors < r.chi || r.td_colors > r.bag_width)
        problems.push_back("decomposition coloring uses " + std::to_string(r.td_colors) + " colors, outside [chi, bag_width]");
    return problems;
}

} // namespace hadwiger
