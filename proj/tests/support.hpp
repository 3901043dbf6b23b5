#pragma once

// Test-only generators and brute-force oracles. Nothing here calls into the
// library's search, canonization, or decomposition code paths it is used to check.

#include "hadwiger/coloring.hpp"
#include "hadwiger/graph.hpp"
#include "hadwiger/tree_decomposition.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace hadwiger::testing {

using Rng = std::mt19937_64;

inline Graph random_graph(Rng& rng, int n, double p)
{
    std::bernoulli_distribution edge(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng))
                edges.push_back({u, v});
    return Graph::from_edge_list(n, edges);
}

inline Graph star(int leaves)
{
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i)
        edges.push_back({0, i});
    return Graph::from_edge_list(leaves + 1, edges);
}

// Plain adjacency-matrix view so oracles do not lean on VertexSet helpers.
inline std::vector<std::vector<bool>> matrix(const Graph& g)
{
    std::vector<std::vector<bool>> m(g.order(), std::vector<bool>(g.order(), false));
    for (const auto& e : g.edges())
        m[e.u][e.v] = m[e.v][e.u] = true;
    return m;
}

inline bool bfs_connected(const std::vector<std::vector<bool>>& adj, const std::vector<int>& members)
{
    if (members.empty())
        return false;
    std::set<int> inside(members.begin(), members.end());
    std::set<int> seen{members.front()};
    std::vector<int> queue{members.front()};
    while (!queue.empty()) {
        const int x = queue.back();
        queue.pop_back();
        for (int y : inside)
            if (adj[x][y] && seen.insert(y).second)
                queue.push_back(y);
    }
    return seen.size() == inside.size();
}

/// Tries all (k+1)^n maps vertex -> {unused, part 0..k-1}.
inline bool naive_has_clique_minor(const Graph& g, int k)
{
    const int n = g.order();
    const auto adj = matrix(g);
    std::vector<int> label(n, 0); // 0 = unused, i+1 = part i
    for (;;) {
        std::vector<std::vector<int>> parts(k);
        for (int v = 0; v < n; ++v)
            if (label[v] > 0)
                parts[label[v] - 1].push_back(v);
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
            ok = bfs_connected(adj, parts[i]);
        for (int i = 0; i < k && ok; ++i)
            for (int j = i + 1; j < k && ok; ++j) {
                bool touch = false;
                for (int a : parts[i])
                    for (int b : parts[j])
                        touch = touch || adj[a][b];
                ok = touch;
            }
        if (ok)
            return true;
        int v = 0;
        while (v < n && label[v] == k)
            label[v++] = 0;
        if (v == n)
            return false;
        ++label[v];
    }
}

/// Full-permutation canonical code (column-order upper triangle, MSB first).
inline std::uint64_t brute_canonical_code(const std::vector<std::vector<bool>>& adj)
{
    const int n = static_cast<int>(adj.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                code = (code << 1) | (adj[perm[i]][perm[j]] ? 1U : 0U);
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// Isomorphism classes of all 2^C(n,2) labeled graphs.
inline std::set<std::uint64_t> brute_force_classes(int n)
{
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            pairs.emplace_back(i, j);
    std::set<std::uint64_t> classes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
        for (std::size_t p = 0; p < pairs.size(); ++p)
            if ((mask >> p) & 1U)
                adj[pairs[p].first][pairs[p].second] = adj[pairs[p].second][pairs[p].first] = true;
        classes.insert(brute_canonical_code(adj));
    }
    return classes;
}

/// Treewidth as the best elimination order over all n! orders.
inline int brute_force_treewidth(const Graph& g)
{
    const int n = g.order();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    int best = n == 0 ? -1 : n - 1;
    do {
        auto adj = matrix(g);
        std::vector<bool> gone(n, false);
        int w = -1;
        for (int v : order) {
            std::vector<int> later;
            for (int u = 0; u < n; ++u)
                if (!gone[u] && u != v && adj[v][u])
                    later.push_back(u);
            w = std::max(w, static_cast<int>(later.size()));
            for (int a : later)
                for (int b : later)
                    if (a != b)
                        adj[a][b] = true;
            gone[v] = true;
            if (w >= best)
                break;
        }
        best = std::min(best, w);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

/// Smallest k with a proper k-coloring, trying all k^n assignments.
inline int brute_force_chromatic(const Graph& g)
{
    const int n = g.order();
    const auto edges = g.edges();
    for (int k = 1;; ++k) {
        std::vector<int> c(n, 0);
        for (;;) {
            if (std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return c[e.u] != c[e.v]; }))
                return k;
            int v = 0;
            while (v < n && c[v] == k - 1)
                c[v++] = 0;
            if (v == n)
                break;
            ++c[v];
        }
    }
}

inline bool literal_ancestor(const RootedTree& tree, int a, int t)
{
    for (int at = t; at != RootedTree::kNoParent; at = tree.parent(at))
        if (at == a)
            return true;
    return false;
}

/// T[t1,t2] straight from its definition: infimum is the deepest common lower bound.
inline std::vector<int> literal_path_set(const RootedTree& tree, int t1, int t2)
{
    int inf = -1;
    for (int t = 0; t < tree.size(); ++t)
        if (literal_ancestor(tree, t, t1) && literal_ancestor(tree, t, t2))
            if (inf == -1 || literal_ancestor(tree, inf, t))
                inf = t;
    std::vector<int> out;
    for (int t = 0; t < tree.size(); ++t)
        if (literal_ancestor(tree, inf, t) && (literal_ancestor(tree, t, t1) || literal_ancestor(tree, t, t2)))
            out.push_back(t);
    return out;
}

/// Validity via the classic characterization: coverage, plus the nodes holding each
/// vertex form a connected subtree.
inline bool oracle_valid_decomposition(const Graph& g, const TreeDecomposition& td)
{
    const auto& tree = td.tree();
    for (int v = 0; v < td.vertex_count(); ++v) {
        std::vector<int> holders;
        for (int t = 0; t < td.node_count(); ++t)
            if (td.bag(t).contains(v))
                holders.push_back(t);
        if (v < g.order() && holders.empty())
            return false;
        if (v >= g.order() && !holders.empty())
            return false;
        // A node set is a connected subtree iff exactly one holder has a non-holder parent.
        int tops = 0;
        for (int t : holders)
            if (tree.parent(t) == RootedTree::kNoParent || !td.bag(tree.parent(t)).contains(v))
                ++tops;
        if (!holders.empty() && tops != 1)
            return false;
    }
    for (const auto& e : g.edges()) {
        bool covered = false;
        for (int t = 0; t < td.node_count(); ++t)
            covered = covered || (td.bag(t).contains(e.u) && td.bag(t).contains(e.v));
        if (!covered)
            return false;
    }
    return true;
}

inline RootedTree random_tree(Rng& rng, int nodes)
{
    std::vector<int> parent(nodes, RootedTree::kNoParent);
    std::vector<int> label(nodes);
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);
    for (int i = 1; i < nodes; ++i)
        parent[label[i]] = label[std::uniform_int_distribution<int>(0, i - 1)(rng)];
    return RootedTree(parent);
}

/// Valid decomposition of g with a random shape: a random elimination order,
/// then extra nodes whose bags are random subsets of an existing bag, hung off
/// that bag's node, then a random relabeling and re-rooting.
inline TreeDecomposition random_decomposition(Rng& rng, const Graph& g, int max_nodes)
{
    std::vector<int> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const TreeDecomposition base = decomposition_from_order(g, order);

    std::vector<int> parent = base.tree().parents();
    std::vector<VertexSet> bags = base.bags();
    const int target = std::uniform_int_distribution<int>(static_cast<int>(parent.size()), std::max<int>(max_nodes, parent.size()))(rng);
    while (static_cast<int>(parent.size()) < target) {
        const int host = std::uniform_int_distribution<int>(0, static_cast<int>(parent.size()) - 1)(rng);
        VertexSet sub;
        for (int v : bags[host])
            if (rng() & 1U)
                sub.insert(v);
        parent.push_back(host);
        bags.push_back(sub);
    }

    const int count = static_cast<int>(parent.size());
    std::vector<int> relabel(count);
    std::iota(relabel.begin(), relabel.end(), 0);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    std::vector<int> new_parent(count);
    std::vector<VertexSet> new_bags(count);
    for (int t = 0; t < count; ++t) {
        new_parent[relabel[t]] = parent[t] == RootedTree::kNoParent ? RootedTree::kNoParent : relabel[parent[t]];
        new_bags[relabel[t]] = bags[t];
    }
    TreeDecomposition td(RootedTree(new_parent), new_bags, g.order());
    return td.rerooted(std::uniform_int_distribution<int>(0, count - 1)(rng));
}

/// Removes nodes whose bag is contained in a neighbor's bag, contracting them into it.
inline TreeDecomposition compact(const TreeDecomposition& td)
{
    std::vector<int> parent = td.tree().parents();
    std::vector<VertexSet> bags = td.bags();
    std::vector<bool> alive(parent.size(), true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t t = 0; t < parent.size(); ++t) {
            if (!alive[t])
                continue;
            const int up = parent[t];
            if (up != RootedTree::kNoParent && bags[t].is_subset_of(bags[up])) {
                // merge t into its parent
                for (std::size_t c = 0; c < parent.size(); ++c)
                    if (alive[c] && parent[c] == static_cast<int>(t))
                        parent[c] = up;
                alive[t] = false;
                changed = true;
            } else if (up != RootedTree::kNoParent && bags[up].is_subset_of(bags[t])) {
                // parent absorbed by t: t takes the parent's place
                for (std::size_t c = 0; c < parent.size(); ++c)
                    if (alive[c] && parent[c] == up && c != t)
                        parent[c] = static_cast<int>(t);
                parent[t] = parent[up];
                alive[up] = false;
                changed = true;
            }
        }
    }
    std::vector<int> id(parent.size(), -1);
    int next = 0;
    for (std::size_t t = 0; t < parent.size(); ++t)
        if (alive[t])
            id[t] = next++;
    std::vector<int> out_parent;
    std::vector<VertexSet> out_bags;
    for (std::size_t t = 0; t < parent.size(); ++t)
        if (alive[t]) {
            out_parent.push_back(parent[t] == RootedTree::kNoParent ? RootedTree::kNoParent : id[parent[t]]);
            out_bags.push_back(bags[t]);
        }
    return {RootedTree(out_parent), out_bags, td.vertex_count()};
}

/// Graph whose edges are all pairs sharing a bag.
inline Graph bag_closure(const TreeDecomposition& td)
{
    std::vector<Edge> edges;
    for (VertexSet bag : td.bags())
        for (int u : bag)
            for (int v : bag)
                if (u < v)
                    edges.push_back({u, v});
    return Graph::from_edge_list(td.vertex_count(), edges);
}

inline bool injective_on_bags(const TreeDecomposition& td, const Coloring& c)
{
    for (VertexSet bag : td.bags()) {
        std::set<int> seen;
        for (int v : bag)
            if (!seen.insert(c.colors[v]).second)
                return false;
    }
    return true;
}

} // namespace hadwiger::testing
