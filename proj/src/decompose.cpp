#include "hadwiger/error.hpp"
#include "hadwiger/tree_decomposition.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

namespace hadwiger {

namespace {

// Vertices outside `eliminated` that v reaches through paths whose interior lies
// in `eliminated`: v's later neighbors in the filled graph.
VertexSet later_neighbors(const Graph& g, VertexSet eliminated, int v)
{
    const VertexSet reach = component_of(g, eliminated | VertexSet::single(v), v);
    return g.neighborhood(reach) - eliminated;
}

class SubsetTable {
public:
    explicit SubsetTable(const Graph& g)
        : g_(g), width_(std::size_t{1} << g.order(), std::numeric_limits<std::int8_t>::max())
    {
        // width_[S] = best width for eliminating exactly S first. Masks ascend, so
        // S is final before any S + {v} is relaxed from it.
        width_[0] = -1;
        std::array<VertexSet, kMaxVertices> component{};
        std::array<VertexSet, kMaxVertices> boundary{};
        for (std::uint64_t bits = 0; bits < width_.size(); ++bits) {
            const VertexSet s(bits);
            int count = 0;
            for (VertexSet rest = s; !rest.empty(); ++count) {
                component[count] = component_of(g_, s, rest.first());
                boundary[count] = g_.neighborhood(component[count]);
                rest -= component[count];
            }
            for (int v : g_.vertices() - s) {
                const VertexSet direct = g_.neighbors(v);
                VertexSet later = direct - s;
                for (int c = 0; c < count; ++c)
                    if (direct.intersects(component[c]))
                        later |= boundary[c];
                later.erase(v);
                const auto cost = static_cast<std::int8_t>(std::max<int>(width_[bits], later.size()));
                auto& next = width_[(s | VertexSet::single(v)).bits()];
                next = std::min(next, cost);
            }
        }
    }

    int treewidth() const { return width_.back(); }

    std::vector<int> order() const
    {
        std::vector<int> reversed;
        VertexSet s = g_.vertices();
        while (!s.empty()) {
            for (int v : s) {
                const VertexSet before = s - VertexSet::single(v);
                const int cost = std::max<int>(width_[before.bits()], later_neighbors(g_, before, v).size());
                if (cost == width_[s.bits()]) {
                    reversed.push_back(v);
                    s = before;
                    break;
                }
            }
        }
        return {reversed.rbegin(), reversed.rend()};
    }

private:
    const Graph& g_;
    std::vector<std::int8_t> width_;
};

std::vector<int> greedy_order(const Graph& g, Strategy strategy)
{
    std::array<VertexSet, kMaxVertices> adj{};
    for (int v : g.vertices())
        adj[v] = g.neighbors(v);

    auto fill_in = [&](int v, VertexSet remaining) {
        const VertexSet nb = adj[v] & remaining;
        int missing = 0;
        for (int a : nb)
            missing += (nb - adj[a] - VertexSet::single(a)).size();
        return missing / 2;
    };

    std::vector<int> order;
    VertexSet remaining = g.vertices();
    while (!remaining.empty()) {
        int pick = -1;
        int best = std::numeric_limits<int>::max();
        for (int v : remaining) {
            const int score = strategy == Strategy::min_fill ? fill_in(v, remaining) : (adj[v] & remaining).size();
            if (score < best) {
                best = score;
                pick = v;
            }
        }
        const VertexSet nb = adj[pick] & remaining;
        for (int a : nb)
            adj[a] |= nb - VertexSet::single(a);
        remaining.erase(pick);
        order.push_back(pick);
    }
    return order;
}

} // namespace

std::optional<Strategy> parse_strategy(std::string_view name)
{
    if (name == "exact")
        return Strategy::exact;
    if (name == "min-fill" || name == "min_fill")
        return Strategy::min_fill;
    if (name == "min-degree" || name == "min_degree")
        return Strategy::min_degree;
    return std::nullopt;
}

std::string_view to_string(Strategy strategy)
{
    switch (strategy) {
    case Strategy::exact: return "exact";
    case Strategy::min_fill: return "min-fill";
    case Strategy::min_degree: return "min-degree";
    }
    return "?";
}

int exact_treewidth(const Graph& g)
{
    if (g.order() > kMaxExactOrder)
        throw Error(Errc::too_large_for_exact, "exact treewidth is limited to " + std::to_string(kMaxExactOrder) + " vertices");
    return SubsetTable(g).treewidth();
}

std::vector<int> elimination_order(const Graph& g, Strategy strategy)
{
    if (strategy == Strategy::exact) {
        if (g.order() > kMaxExactOrder)
            throw Error(Errc::too_large_for_exact, "exact decomposition is limited to " + std::to_string(kMaxExactOrder) + " vertices");
        return SubsetTable(g).order();
    }
    return greedy_order(g, strategy);
}

TreeDecomposition decomposition_from_order(const Graph& g, std::span<const int> order)
{
    const int n = g.order();
    if (static_cast<int>(order.size()) != n || VertexSet::of(order) != g.vertices())
        throw Error(Errc::bad_parameter, "elimination order must be a permutation of the vertices");
    if (n == 0)
        return {RootedTree(), {VertexSet{}}, 0};

    std::vector<int> position(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        position[static_cast<std::size_t>(order[i])] = i;
    auto node_of = [&](int i) { return n - 1 - i; };

    std::vector<int> parent(static_cast<std::size_t>(n), RootedTree::kNoParent);
    std::vector<VertexSet> bags(static_cast<std::size_t>(n));
    VertexSet eliminated;
    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        const VertexSet later = later_neighbors(g, eliminated, v);
        bags[node_of(i)] = later | VertexSet::single(v);
        if (i != n - 1) {
            // Attach to the earliest-eliminated later neighbor; its bag holds the rest
            // of `later`. Components without one hang off the root.
            int next = order[n - 1];
            for (int u : later)
                if (position[u] < position[next])
                    next = u;
            parent[node_of(i)] = node_of(position[next]);
        }
        eliminated.insert(v);
    }
    return {RootedTree(std::move(parent)), std::move(bags), n};
}

TreeDecomposition decompose(const Graph& g, Strategy strategy)
{
    const auto order = elimination_order(g, strategy);
    return decomposition_from_order(g, order);
}

} // namespace hadwiger
