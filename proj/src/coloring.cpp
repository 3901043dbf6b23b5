#include "hadwiger/coloring.hpp"

#include "hadwiger/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace hadwiger {

int Coloring::color_count() const
{
    if (colors.empty())
        return 0;
    return *std::max_element(colors.begin(), colors.end()) + 1;
}

int VertexOrder::bag_rank(const TreeDecomposition& td, int t, int v)
{
    const VertexSet bag = td.bag(t);
    return bag.contains(v) ? bag.rank(v) : -1;
}

VertexOrder order_vertices(const Graph& g, const TreeDecomposition& td)
{
    const auto& tree = td.tree();
    VertexOrder order;

    std::deque<int> queue{tree.root()};
    while (!queue.empty()) {
        const int t = queue.front();
        queue.pop_front();
        order.node_sequence.push_back(t);
        auto kids = tree.children(t);
        std::sort(kids.begin(), kids.end());
        queue.insert(queue.end(), kids.begin(), kids.end());
    }
    order.node_position.assign(order.node_sequence.size(), 0);
    for (std::size_t i = 0; i < order.node_sequence.size(); ++i)
        order.node_position[order.node_sequence[i]] = static_cast<int>(i);

    const int n = g.order();
    order.first_node.assign(static_cast<std::size_t>(n), -1);
    VertexSet pending = g.vertices();
    for (int t : order.node_sequence) {
        for (int v : td.bag(t) & pending)
            order.first_node[v] = t;
        pending -= td.bag(t);
    }
    if (!pending.empty())
        throw Error(Errc::uncovered_vertex, "vertex " + std::to_string(pending.first()) + " is in no bag");

    order.sequence.resize(static_cast<std::size_t>(n));
    std::iota(order.sequence.begin(), order.sequence.end(), 0);
    auto key = [&](int x) {
        const int t = order.first_node[x];
        return std::pair{order.node_position[t], VertexOrder::bag_rank(td, t, x)};
    };
    std::sort(order.sequence.begin(), order.sequence.end(), [&](int a, int b) { return key(a) < key(b); });
    return order;
}

Coloring color_by_decomposition(const Graph& g, const TreeDecomposition& td)
{
    const VertexOrder order = order_vertices(g, td);

#ifndef NDEBUG
    const auto report = verify_decomposition(g, td);
    if (!report.w1.holds || !report.w2.holds)
        throw Error(Errc::improper_decomposition, report.w1.holds ? report.w2.witness : report.w1.witness);
#endif
    for (const Edge& e : g.edges()) {
        const VertexSet ends{e.u, e.v};
        if (std::none_of(td.bags().begin(), td.bags().end(), [&](VertexSet b) { return ends.is_subset_of(b); }))
            throw Error(Errc::improper_decomposition,
                        "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is in no bag");
    }

    Coloring c;
    c.colors.assign(static_cast<std::size_t>(g.order()), -1);
    VertexSet done;
    for (int x : order.sequence) {
        const VertexSet earlier = td.bag(order.first_node[x]) & done;
        std::uint64_t taken = 0;
        for (int z : earlier)
            taken |= std::uint64_t{1} << c.colors[z];
        c.colors[x] = std::countr_one(taken);
        done.insert(x);
    }
    return c;
}

int clique_number(const Graph& g)
{
    int best = 0;
    // Bron-Kerbosch style expansion with a size bound.
    auto expand = [&](auto& self, int size, VertexSet candidates) -> void {
        if (candidates.empty()) {
            best = std::max(best, size);
            return;
        }
        while (!candidates.empty()) {
            if (size + candidates.size() <= best)
                return;
            const int v = candidates.first();
            candidates.erase(v);
            self(self, size + 1, candidates & g.neighbors(v));
        }
        best = std::max(best, size);
    };
    expand(expand, 0, g.vertices());
    return best;
}

namespace {

class ExactColorer {
public:
    explicit ExactColorer(const Graph& g) : g_(g)
    {
        order_.resize(static_cast<std::size_t>(g.order()));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    }

    Coloring greedy() const
    {
        Coloring c;
        c.colors.assign(order_.size(), -1);
        for (int v : order_) {
            std::uint64_t taken = 0;
            for (int u : g_.neighbors(v))
                if (c.colors[u] >= 0)
                    taken |= std::uint64_t{1} << c.colors[u];
            c.colors[v] = std::countr_one(taken);
        }
        return c;
    }

    bool try_colors(int k, Coloring& out)
    {
        k_ = k;
        classes_.assign(static_cast<std::size_t>(k), VertexSet{});
        colors_.assign(order_.size(), -1);
        if (!assign(0, 0))
            return false;
        out.colors = colors_;
        return true;
    }

private:
    bool assign(std::size_t index, int used)
    {
        if (index == order_.size())
            return true;
        const int v = order_[index];
        // A color beyond `used` is interchangeable with any other fresh one.
        const int limit = std::min(k_, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (classes_[c].intersects(g_.neighbors(v)))
                continue;
            classes_[c].insert(v);
            colors_[v] = c;
            if (assign(index + 1, std::max(used, c + 1)))
                return true;
            classes_[c].erase(v);
            colors_[v] = -1;
        }
        return false;
    }

    const Graph& g_;
    std::vector<int> order_;
    int k_ = 0;
    std::vector<VertexSet> classes_;
    std::vector<int> colors_;
};

} // namespace

ChromaticResult chromatic_number(const Graph& g)
{
    if (g.order() == 0)
        throw Error(Errc::empty_graph, "the chromatic number of the empty graph is undefined");
    ExactColorer colorer(g);
    Coloring upper = colorer.greedy();
    const int high = upper.color_count();
    for (int k = clique_number(g); k < high; ++k) {
        Coloring c;
        if (colorer.try_colors(k, c))
            return {k, std::move(c)};
    }
    return {high, std::move(upper)};
}

bool verify_proper(const Graph& g, const Coloring& c)
{
    if (static_cast<int>(c.colors.size()) != g.order())
        throw Error(Errc::partial_coloring, "coloring has " + std::to_string(c.colors.size()) + " entries for " +
                                                std::to_string(g.order()) + " vertices");
    for (std::size_t v = 0; v < c.colors.size(); ++v)
        if (c.colors[v] < 0)
            throw Error(Errc::partial_coloring, "vertex " + std::to_string(v) + " is uncolored");
    for (const Edge& e : g.edges())
        if (c.colors[e.u] == c.colors[e.v])
            return false;
    return true;
}

} // namespace hadwiger
