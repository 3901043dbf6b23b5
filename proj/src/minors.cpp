#include "hadwiger/minors.hpp"

#include "hadwiger/error.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace hadwiger {

namespace {

std::string part_label(int i) { return "part " + std::to_string(i); }

struct Exhausted {};

class NodeCounter {
public:
    explicit NodeCounter(NodeLimit limit) : limit_(limit) {}

    void tick()
    {
        ++nodes_;
        if (limit_ && nodes_ > *limit_)
            throw Exhausted{};
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    NodeLimit limit_;
    std::uint64_t nodes_ = 0;
};

class CliqueMinorSearch {
public:
    CliqueMinorSearch(const Graph& g, int k, NodeLimit limit)
        : g_(g), k_(k), pair_edges_(k * (k - 1) / 2), counter_(limit), parts_(static_cast<std::size_t>(k))
    {
    }

    bool run() { return place(0, 0, 0); }

    MinorCertificate certificate() const { return {std::vector<VertexSet>(parts_.begin(), parts_.begin() + opened_final_)}; }

    std::uint64_t nodes() const { return counter_.nodes(); }

private:
    // All opened parts connected and pairwise adjacent.
    bool complete(int opened) const
    {
        if (opened != k_)
            return false;
        for (int i = 0; i < k_; ++i) {
            if (!is_connected_subset(g_, parts_[i]))
                return false;
            const VertexSet reach = g_.neighborhood(parts_[i]);
            for (int j = i + 1; j < k_; ++j)
                if (!reach.intersects(parts_[j]))
                    return false;
        }
        return true;
    }

    bool feasible(int pos, int opened, int assigned) const
    {
        const VertexSet undecided = g_.vertices() - VertexSet::prefix(pos);
        if (opened + undecided.size() < k_)
            return false;
        // Each part spans a tree and every pair of parts needs its own edge.
        if (pair_edges_ + assigned - opened > g_.size())
            return false;

        // Region each part can still grow into; a part split across regions can never reconnect.
        std::array<VertexSet, kMaxVertices> region;
        for (int i = 0; i < opened; ++i) {
            region[i] = component_of(g_, parts_[i] | undecided, parts_[i].first());
            if (!parts_[i].is_subset_of(region[i]))
                return false;
        }
        for (int i = 0; i < opened; ++i) {
            const VertexSet reach = g_.neighborhood(region[i]) | region[i];
            for (int j = i + 1; j < opened; ++j)
                if (!reach.intersects(region[j]))
                    return false;
        }
        return true;
    }

    bool place(int pos, int opened, int assigned)
    {
        counter_.tick();
        if (complete(opened)) {
            opened_final_ = opened;
            return true;
        }
        if (pos == g_.order() || !feasible(pos, opened, assigned))
            return false;

        for (int i = 0; i < opened; ++i) {
            parts_[i].insert(pos);
            if (place(pos + 1, opened, assigned + 1))
                return true;
            parts_[i].erase(pos);
        }
        if (opened < k_) {
            parts_[opened] = VertexSet::single(pos);
            if (place(pos + 1, opened + 1, assigned + 1))
                return true;
            parts_[opened] = VertexSet{};
        }
        return place(pos + 1, opened, assigned);
    }

    const Graph& g_;
    int k_;
    int pair_edges_;
    NodeCounter counter_;
    std::vector<VertexSet> parts_;
    int opened_final_ = 0;
};

class SubdivisionSearcher {
public:
    SubdivisionSearcher(const Graph& g, int k, NodeLimit limit) : g_(g), k_(k), counter_(limit) {}

    bool run()
    {
        for (int v : g_.vertices())
            if (g_.degree(v) >= k_ - 1)
                candidates_.push_back(v);
        return choose(0, 0);
    }

    SubdivisionCertificate certificate() const
    {
        SubdivisionCertificate cert;
        cert.branch_vertices = branch_;
        for (std::size_t p = 0; p < pairs_.size(); ++p)
            cert.paths[pairs_[p]] = paths_[p];
        return cert;
    }

    std::uint64_t nodes() const { return counter_.nodes(); }

private:
    bool choose(std::size_t from, int chosen)
    {
        if (chosen == k_) {
            pairs_.clear();
            for (int i = 0; i < k_; ++i)
                for (int j = i + 1; j < k_; ++j)
                    pairs_.emplace_back(branch_[i], branch_[j]);
            paths_.assign(pairs_.size(), {});
            const VertexSet branch_set = VertexSet::of(branch_);
            return route(0, g_.vertices() - branch_set);
        }
        for (std::size_t i = from; i + static_cast<std::size_t>(k_ - chosen) <= candidates_.size(); ++i) {
            counter_.tick();
            branch_.push_back(candidates_[i]);
            if (choose(i + 1, chosen + 1))
                return true;
            branch_.pop_back();
        }
        return false;
    }

    // Routes pairs p.. through vertices in `free`.
    bool route(std::size_t p, VertexSet free)
    {
        counter_.tick();
        if (p == pairs_.size())
            return true;
        for (std::size_t q = p; q < pairs_.size(); ++q) {
            const auto [a, b] = pairs_[q];
            const VertexSet allowed = free | VertexSet{a, b};
            if (!component_of(g_, allowed, a).contains(b))
                return false;
        }
        const auto [a, b] = pairs_[p];
        paths_[p] = {a};
        return extend(p, free, a, b, VertexSet::single(a));
    }

    bool extend(std::size_t p, VertexSet free, int at, int target, VertexSet visited)
    {
        counter_.tick();
        if (g_.adjacent(at, target)) {
            paths_[p].push_back(target);
            if (route(p + 1, free - visited))
                return true;
            paths_[p].pop_back();
        }
        for (int next : g_.neighbors(at) & (free - visited)) {
            paths_[p].push_back(next);
            VertexSet seen = visited;
            seen.insert(next);
            if (extend(p, free, next, target, seen))
                return true;
            paths_[p].pop_back();
        }
        return false;
    }

    const Graph& g_;
    int k_;
    NodeCounter counter_;
    std::vector<int> candidates_;
    std::vector<int> branch_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<std::vector<int>> paths_;
};

} // namespace

MinorVerdict verify_clique_minor(const Graph& g, const MinorCertificate& cert)
{
    const auto& parts = cert.parts;
    const int k = static_cast<int>(parts.size());
    for (int i = 0; i < k; ++i)
        if (!parts[i].is_subset_of(g.vertices()))
            return {MinorClause::out_of_range, i, -1, part_label(i) + " has a vertex outside the graph"};
    for (int i = 0; i < k; ++i)
        if (parts[i].empty())
            return {MinorClause::empty_part, i, -1, part_label(i) + " is empty"};
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (parts[i].intersects(parts[j]))
                return {MinorClause::overlapping_parts, i, j, "parts " + std::to_string(i) + "," + std::to_string(j) + " overlap"};
    for (int i = 0; i < k; ++i)
        if (!is_connected_subset(g, parts[i]))
            return {MinorClause::disconnected_part, i, -1, part_label(i) + " does not induce a connected subgraph"};
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (!connected_to_each_other(g, parts[i], parts[j]))
                return {MinorClause::parts_not_adjacent, i, j,
                        "parts " + std::to_string(i) + "," + std::to_string(j) + " not connected to each other"};
    return {};
}

SubdivisionVerdict verify_subdivision(const Graph& g, const SubdivisionCertificate& cert)
{
    const auto& branch = cert.branch_vertices;
    VertexSet used;
    for (int v : branch) {
        if (v < 0 || v >= g.order())
            return {false, "branch vertex " + std::to_string(v) + " out of range"};
        if (used.contains(v))
            return {false, "branch vertex " + std::to_string(v) + " repeated"};
        used.insert(v);
    }
    const std::size_t k = branch.size();
    if (cert.paths.size() != k * (k - 1) / 2)
        return {false, "expected one path per branch pair"};

    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            const auto key = std::minmax(branch[i], branch[j]);
            const auto it = cert.paths.find({key.first, key.second});
            const std::string label = std::to_string(key.first) + "-" + std::to_string(key.second);
            if (it == cert.paths.end())
                return {false, "missing path " + label};
            const auto& path = it->second;
            if (path.size() < 2 || path.front() != key.first || path.back() != key.second)
                return {false, "path " + label + " has wrong endpoints"};
            for (std::size_t s = 0; s + 1 < path.size(); ++s) {
                if (path[s + 1] < 0 || path[s + 1] >= g.order() || !g.adjacent(path[s], path[s + 1]))
                    return {false, "path " + label + " uses a non-edge"};
            }
            for (std::size_t s = 1; s + 1 < path.size(); ++s) {
                if (used.contains(path[s]))
                    return {false, "path " + label + " reuses vertex " + std::to_string(path[s])};
                used.insert(path[s]);
            }
        }
    return {};
}

NodeLimit default_node_limit(const Graph& g)
{
    if (g.order() <= 10)
        return std::nullopt;
    return 10'000'000;
}

MinorSearch find_clique_minor(const Graph& g, int k, NodeLimit limit)
{
    if (k < 1)
        throw Error(Errc::bad_parameter, "clique minor size must be at least 1");
    MinorSearch result;
    if (k > g.order() || k * (k - 1) / 2 > g.size()) {
        result.outcome = SearchOutcome::absent;
        return result;
    }
    CliqueMinorSearch search(g, k, limit);
    try {
        if (search.run()) {
            result.outcome = SearchOutcome::found;
            result.certificate = search.certificate();
        } else {
            result.outcome = SearchOutcome::absent;
        }
    } catch (const Exhausted&) {
        result.outcome = SearchOutcome::exhausted;
    }
    result.nodes = search.nodes();
    return result;
}

int hadwiger_number(const Graph& g, NodeLimit limit)
{
    if (g.order() == 0)
        throw Error(Errc::empty_graph, "the Hadwiger number of the empty graph is undefined");
    int k = 1;
    for (;;) {
        const auto next = find_clique_minor(g, k + 1, limit);
        if (next.outcome == SearchOutcome::exhausted)
            throw Error(Errc::search_exhausted, "node budget exhausted while testing K_" + std::to_string(k + 1));
        if (!next.found())
            return k;
        ++k;
    }
}

SubdivisionSearch find_subdivision(const Graph& g, int k, NodeLimit limit)
{
    if (k < 1 || k > kMaxSubdivisionOrder)
        throw Error(Errc::bad_parameter, "subdivision search supports 1 <= k <= " + std::to_string(kMaxSubdivisionOrder));
    SubdivisionSearch result;
    SubdivisionSearcher search(g, k, limit);
    try {
        if (search.run()) {
            result.outcome = SearchOutcome::found;
            result.certificate = search.certificate();
        }
    } catch (const Exhausted&) {
        result.outcome = SearchOutcome::exhausted;
    }
    result.nodes = search.nodes();
    return result;
}

MinorCertificate minor_from_subdivision(const SubdivisionCertificate& cert)
{
    MinorCertificate minor;
    for (int v : cert.branch_vertices) {
        VertexSet part = VertexSet::single(v);
        for (const auto& [key, path] : cert.paths)
            if (key.first == v)
                for (std::size_t s = 1; s + 1 < path.size(); ++s)
                    part.insert(path[s]);
        minor.parts.push_back(part);
    }
    return minor;
}

} // namespace hadwiger
