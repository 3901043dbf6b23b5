#pragma once

#include "hadwiger/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hadwiger {

/// Finite well-founded tree: a rooted tree ordered by ancestry, so t' <= t iff
/// t' lies on the root path of t. Pairwise infima are lowest common ancestors.
class RootedTree {
public:
    static constexpr int kNoParent = -1;

    /// parent[t] is t's parent or kNoParent for the root. Throws BadParameter
    /// unless there is exactly one root and every node reaches it.
    explicit RootedTree(std::vector<int> parent);

    /// One-node tree.
    RootedTree() : RootedTree(std::vector<int>{kNoParent}) {}

    int size() const { return static_cast<int>(parent_.size()); }
    int root() const { return root_; }
    int parent(int t) const { return parent_[t]; }
    const std::vector<int>& parents() const { return parent_; }
    const std::vector<int>& children(int t) const { return children_[t]; }
    int depth(int t) const { return depth_[t]; }

    /// a <= t in the tree order (a is t or one of its ancestors).
    bool precedes(int a, int t) const;

    /// Infimum of a and b.
    int lca(int a, int b) const;

    /// Root path of t, root first, t last.
    std::vector<int> root_path(int t) const;

    /// Same underlying tree hung from `new_root`.
    RootedTree rerooted(int new_root) const;

    /// Undirected edges as (min, max) pairs, sorted.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const RootedTree& a, const RootedTree& b) { return a.parent_ == b.parent_; }

private:
    void check_node(int t) const;

    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;
    std::vector<int> depth_;
    int root_ = 0;
};

/// T[t1, t2]: nodes above inf{t1, t2} that lie below t1 or t2, ascending.
/// Throws BadNode for ids outside the tree.
std::vector<int> tree_path_set(const RootedTree& tree, int t1, int t2);

/// Tree plus one bag per node over a graph with `vertex_count` vertices.
/// Only structural checks happen here; the axioms are checked by verify_decomposition.
class TreeDecomposition {
public:
    /// Throws BadParameter if bags.size() != tree.size() or a bag member is >= vertex_count.
    TreeDecomposition(RootedTree tree, std::vector<VertexSet> bags, int vertex_count);

    const RootedTree& tree() const { return tree_; }
    const std::vector<VertexSet>& bags() const { return bags_; }
    VertexSet bag(int t) const { return bags_[t]; }
    int node_count() const { return tree_.size(); }
    int vertex_count() const { return vertex_count_; }

    TreeDecomposition rerooted(int new_root) const { return {tree_.rerooted(new_root), bags_, vertex_count_}; }
    TreeDecomposition with_bag(int t, VertexSet bag) const;

    friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;

private:
    RootedTree tree_;
    std::vector<VertexSet> bags_;
    int vertex_count_;
};

struct AxiomVerdict {
    bool holds = true;
    std::string witness;
    std::optional<int> vertex;
    std::optional<Edge> edge;
    std::vector<int> nodes;

    explicit operator bool() const { return holds; }
};

struct DecompositionReport {
    AxiomVerdict w1;
    AxiomVerdict w2;
    AxiomVerdict w3;

    bool valid() const { return w1.holds && w2.holds && w3.holds; }
};

/// W1: every vertex and every edge lies in some bag.
/// W2: W(t1) & W(t2) is contained in W(t') for all t' in T[t1, t2].
/// W3: for every downward-closed chain, the intersection of its bags lies in the
/// bag of its supremum. On finite trees the supremum is the chain's own maximum,
/// so W3 always holds; the check is kept literal.
DecompositionReport verify_decomposition(const Graph& g, const TreeDecomposition& td);

struct WidthOptions {
    /// Trees up to this many nodes have every chain enumerated; larger trees only
    /// get singletons and full root-to-leaf chains and the result is a lower bound.
    int exhaustive_node_limit = 20;
};

struct WidthReport {
    int bag_width = 0;
    int chain_width = 0;
    /// False when the chain budget was exceeded and chain_width is a lower bound.
    bool chain_width_exact = true;
    std::uint64_t chains_evaluated = 0;
};

/// |U_{t in C} n{W(t') : t' in C, t' >= t}| for a chain C (any order; must be a chain).
int chain_value(const TreeDecomposition& td, std::span<const int> chain);

WidthReport width(const TreeDecomposition& td, WidthOptions options = {});

enum class Strategy { exact, min_fill, min_degree };

std::optional<Strategy> parse_strategy(std::string_view name);
std::string_view to_string(Strategy strategy);

inline constexpr int kMaxExactOrder = 13;

/// Treewidth by dynamic programming over vertex subsets. Throws TooLargeForExact for n > 13.
int exact_treewidth(const Graph& g);

/// Elimination order for the strategy; exact returns an optimal one.
std::vector<int> elimination_order(const Graph& g, Strategy strategy);

/// One bag per eliminated vertex ({v} plus its later neighbors in the filled graph).
/// The last eliminated vertex becomes node 0 and the root; node i holds the bag of
/// the vertex eliminated (n-1-i)-th.
TreeDecomposition decomposition_from_order(const Graph& g, std::span<const int> order);

TreeDecomposition decompose(const Graph& g, Strategy strategy);

} // namespace hadwiger
