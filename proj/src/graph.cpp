#include "hadwiger/graph.hpp"

#include "hadwiger/error.hpp"

#include <string>

namespace hadwiger {

Graph::Graph(int n)
{
    if (n < 0)
        throw Error(Errc::bad_parameter, "negative vertex count");
    if (n > kMaxVertices)
        throw Error(Errc::too_large, "graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
    adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges)
{
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(Errc::out_of_range,
                        "edge {" + std::to_string(u) + "," + std::to_string(v) + "} outside [0," + std::to_string(n) + ")");
        if (u == v)
            throw Error(Errc::self_loop, "self-loop at vertex " + std::to_string(u));
        if (!g.adj_[u].contains(v)) {
            g.adj_[u].insert(v);
            g.adj_[v].insert(u);
            ++g.edge_count_;
        }
    }
    return g;
}

VertexSet Graph::neighborhood(VertexSet s) const
{
    VertexSet out;
    for (int v : s)
        out |= adj_[v];
    return out - s;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < order(); ++u)
        for (int v : adj_[u] - VertexSet::prefix(u + 1))
            out.push_back({u, v});
    return out;
}

Graph Graph::without_edge(int u, int v) const
{
    Graph g = *this;
    if (g.adj_[u].contains(v)) {
        g.adj_[u].erase(v);
        g.adj_[v].erase(u);
        --g.edge_count_;
    }
    return g;
}

Graph Graph::induced(VertexSet keep) const
{
    std::vector<Edge> kept;
    for (const auto& e : edges())
        if (keep.contains(e.u) && keep.contains(e.v))
            kept.push_back({keep.rank(e.u), keep.rank(e.v)});
    return from_edge_list(keep.size(), kept);
}

VertexSet component_of(const Graph& g, VertexSet within, int start)
{
    VertexSet reached = VertexSet::single(start);
    VertexSet frontier = reached;
    while (!frontier.empty()) {
        VertexSet next = g.neighborhood(frontier) & within;
        next -= reached;
        reached |= next;
        frontier = next;
    }
    return reached;
}

bool is_connected_subset(const Graph& g, VertexSet s)
{
    if (s.empty())
        throw Error(Errc::empty_set, "connectivity of an empty vertex set is undefined");
    return component_of(g, s, s.first()) == s;
}

bool connected_to_each_other(const Graph& g, VertexSet s, VertexSet t)
{
    if (s.empty() || t.empty())
        throw Error(Errc::empty_set, "both sets must be nonempty");
    if (s.intersects(t))
        throw Error(Errc::overlap, "sets must be disjoint");
    return g.neighborhood(s).intersects(t);
}

} // namespace hadwiger
