#include "hadwiger/tree_decomposition.hpp"

#include "hadwiger/error.hpp"

#include <algorithm>
#include <string>

namespace hadwiger {

RootedTree::RootedTree(std::vector<int> parent) : parent_(std::move(parent))
{
    const int n = size();
    if (n == 0)
        throw Error(Errc::bad_parameter, "a tree needs at least one node");

    int roots = 0;
    for (int t = 0; t < n; ++t) {
        const int p = parent_[t];
        if (p == kNoParent) {
            root_ = t;
            ++roots;
        } else if (p < 0 || p >= n || p == t) {
            throw Error(Errc::bad_parameter, "node " + std::to_string(t) + " has an invalid parent");
        }
    }
    if (roots != 1)
        throw Error(Errc::bad_parameter, "expected exactly one root, found " + std::to_string(roots));

    // Depth by walking up; -2 marks nodes on the current walk so cycles are caught.
    depth_.assign(static_cast<std::size_t>(n), -1);
    depth_[root_] = 0;
    std::vector<int> walk;
    for (int t = 0; t < n; ++t) {
        int at = t;
        while (depth_[at] == -1) {
            depth_[at] = -2;
            walk.push_back(at);
            at = parent_[at];
        }
        if (depth_[at] == -2)
            throw Error(Errc::bad_parameter, "parent links contain a cycle through node " + std::to_string(at));
        int d = depth_[at];
        while (!walk.empty()) {
            depth_[walk.back()] = ++d;
            walk.pop_back();
        }
    }

    children_.resize(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t)
        if (parent_[t] != kNoParent)
            children_[parent_[t]].push_back(t);
}

void RootedTree::check_node(int t) const
{
    if (t < 0 || t >= size())
        throw Error(Errc::bad_node, "node " + std::to_string(t) + " not in tree of size " + std::to_string(size()));
}

bool RootedTree::precedes(int a, int t) const
{
    check_node(a);
    check_node(t);
    while (depth_[t] > depth_[a])
        t = parent_[t];
    return t == a;
}

int RootedTree::lca(int a, int b) const
{
    check_node(a);
    check_node(b);
    while (depth_[a] > depth_[b])
        a = parent_[a];
    while (depth_[b] > depth_[a])
        b = parent_[b];
    while (a != b) {
        a = parent_[a];
        b = parent_[b];
    }
    return a;
}

std::vector<int> RootedTree::root_path(int t) const
{
    check_node(t);
    std::vector<int> path;
    for (int at = t; at != kNoParent; at = parent_[at])
        path.push_back(at);
    std::reverse(path.begin(), path.end());
    return path;
}

RootedTree RootedTree::rerooted(int new_root) const
{
    check_node(new_root);
    std::vector<int> parent = parent_;
    // Reverse the links on the path from new_root up to the old root.
    int prev = kNoParent;
    for (int at = new_root; at != kNoParent;) {
        const int up = parent_[at];
        parent[at] = prev;
        prev = at;
        at = up;
    }
    return RootedTree(std::move(parent));
}

std::vector<std::pair<int, int>> RootedTree::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int t = 0; t < size(); ++t)
        if (parent_[t] != kNoParent)
            out.push_back(std::minmax(t, parent_[t]));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> tree_path_set(const RootedTree& tree, int t1, int t2)
{
    const int meet = tree.lca(t1, t2);
    std::vector<int> out{meet};
    for (int start : {t1, t2})
        for (int at = start; at != meet; at = tree.parent(at))
            out.push_back(at);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

TreeDecomposition::TreeDecomposition(RootedTree tree, std::vector<VertexSet> bags, int vertex_count)
    : tree_(std::move(tree)), bags_(std::move(bags)), vertex_count_(vertex_count)
{
    if (vertex_count_ < 0 || vertex_count_ > kMaxVertices)
        throw Error(Errc::bad_parameter, "vertex count out of range");
    if (static_cast<int>(bags_.size()) != tree_.size())
        throw Error(Errc::bad_parameter, "need exactly one bag per tree node");
    const VertexSet all = VertexSet::prefix(vertex_count_);
    for (std::size_t t = 0; t < bags_.size(); ++t)
        if (!bags_[t].is_subset_of(all))
            throw Error(Errc::bad_parameter, "bag " + std::to_string(t) + " names a vertex outside [0, " +
                                                 std::to_string(vertex_count_) + ")");
}

TreeDecomposition TreeDecomposition::with_bag(int t, VertexSet bag) const
{
    auto bags = bags_;
    bags.at(static_cast<std::size_t>(t)) = bag;
    return {tree_, std::move(bags), vertex_count_};
}

namespace {

AxiomVerdict check_coverage(const Graph& g, const TreeDecomposition& td)
{
    AxiomVerdict out;
    VertexSet covered;
    for (VertexSet bag : td.bags())
        covered |= bag;

    if (const VertexSet missing = g.vertices() - covered; !missing.empty()) {
        out.holds = false;
        out.vertex = missing.first();
        out.witness = "vertex " + std::to_string(missing.first()) + " is in no bag";
        return out;
    }
    if (const VertexSet extra = covered - g.vertices(); !extra.empty()) {
        out.holds = false;
        out.vertex = extra.first();
        out.witness = "bags name vertex " + std::to_string(extra.first()) + " which is not in the graph";
        return out;
    }
    for (const Edge& e : g.edges()) {
        const VertexSet ends{e.u, e.v};
        const bool inside = std::any_of(td.bags().begin(), td.bags().end(), [&](VertexSet b) { return ends.is_subset_of(b); });
        if (!inside) {
            out.holds = false;
            out.edge = e;
            out.witness = "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is in no bag";
            return out;
        }
    }
    return out;
}

AxiomVerdict check_path_intersections(const TreeDecomposition& td)
{
    AxiomVerdict out;
    const auto& tree = td.tree();
    for (int t1 = 0; t1 < td.node_count(); ++t1)
        for (int t2 = t1 + 1; t2 < td.node_count(); ++t2) {
            const VertexSet shared = td.bag(t1) & td.bag(t2);
            if (shared.empty())
                continue;
            for (int mid : tree_path_set(tree, t1, t2)) {
                const VertexSet lost = shared - td.bag(mid);
                if (lost.empty())
                    continue;
                out.holds = false;
                out.vertex = lost.first();
                out.nodes = {t1, t2, mid};
                out.witness = "vertex " + std::to_string(lost.first()) + " is in W(" + std::to_string(t1) + ") and W(" +
                              std::to_string(t2) + ") but not in W(" + std::to_string(mid) + ")";
                return out;
            }
        }
    return out;
}

// Downward-closed chains of a finite tree are exactly the root paths.
AxiomVerdict check_chain_suprema(const TreeDecomposition& td)
{
    AxiomVerdict out;
    const auto& tree = td.tree();
    for (int t = 0; t < td.node_count(); ++t) {
        const auto chain = tree.root_path(t);
        const auto sup = std::find_if(chain.begin(), chain.end(), [&](int c) {
            return std::all_of(chain.begin(), chain.end(), [&](int other) { return tree.precedes(other, c); });
        });
        if (sup == chain.end())
            continue;
        VertexSet common = td.bag(chain.front());
        for (int c : chain)
            common &= td.bag(c);
        if (const VertexSet lost = common - td.bag(*sup); !lost.empty()) {
            out.holds = false;
            out.vertex = lost.first();
            out.nodes = chain;
            out.witness = "chain ending at node " + std::to_string(t) + " loses vertex " + std::to_string(lost.first());
            return out;
        }
    }
    return out;
}

// Chain given root-most first.
int ordered_chain_value(const TreeDecomposition& td, std::span<const int> chain)
{
    VertexSet uni;
    VertexSet suffix = VertexSet::prefix(kMaxVertices);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        suffix &= td.bag(*it);
        uni |= suffix;
    }
    return uni.size();
}

} // namespace

DecompositionReport verify_decomposition(const Graph& g, const TreeDecomposition& td)
{
    return {check_coverage(g, td), check_path_intersections(td), check_chain_suprema(td)};
}

int chain_value(const TreeDecomposition& td, std::span<const int> chain)
{
    const auto& tree = td.tree();
    for (int a : chain)
        for (int b : chain)
            if (!tree.precedes(a, b) && !tree.precedes(b, a))
                throw Error(Errc::bad_parameter, "nodes " + std::to_string(a) + " and " + std::to_string(b) + " are incomparable");

    VertexSet uni;
    for (int t : chain) {
        VertexSet above = VertexSet::prefix(kMaxVertices);
        for (int other : chain)
            if (tree.precedes(t, other))
                above &= td.bag(other);
        uni |= above;
    }
    return chain.empty() ? 0 : uni.size();
}

WidthReport width(const TreeDecomposition& td, WidthOptions options)
{
    WidthReport report;
    for (VertexSet bag : td.bags())
        report.bag_width = std::max(report.bag_width, bag.size());

    const auto& tree = td.tree();
    auto consider = [&](std::span<const int> chain) {
        report.chain_width = std::max(report.chain_width, ordered_chain_value(td, chain));
        ++report.chains_evaluated;
    };

    if (td.node_count() <= options.exhaustive_node_limit) {
        // Every finite chain is a subset of the root path of its maximum.
        std::vector<int> chain;
        for (int top = 0; top < td.node_count(); ++top) {
            const auto path = tree.root_path(top);
            const int below = static_cast<int>(path.size()) - 1;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << below); ++mask) {
                chain.clear();
                for (int i = 0; i < below; ++i)
                    if ((mask >> i) & 1U)
                        chain.push_back(path[static_cast<std::size_t>(i)]);
                chain.push_back(top);
                consider(chain);
            }
        }
    } else {
        report.chain_width_exact = false;
        for (int t = 0; t < td.node_count(); ++t) {
            const int single[] = {t};
            consider(single);
            if (tree.children(t).empty())
                consider(tree.root_path(t));
        }
    }
    return report;
}

} // namespace hadwiger
