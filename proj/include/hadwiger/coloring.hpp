#pragma once

#include "hadwiger/graph.hpp"
#include "hadwiger/tree_decomposition.hpp"

#include <vector>

namespace hadwiger {

/// colors[v] is the color of vertex v; colors are 0, 1, 2, ...
struct Coloring {
    std::vector<int> colors;

    /// 1 + the largest color, 0 for an empty coloring.
    int color_count() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// The vertex order that drives color_by_decomposition.
///
/// Tree nodes are linearly ordered breadth-first from the root, children by
/// ascending id; this extends the ancestry order. Each vertex x is charged to
/// first_node[x], the earliest node in that order whose bag holds x. Vertices
/// are then sorted by (position of first_node, rank of x inside that bag), where
/// a bag ranks its members by ascending id.
struct VertexOrder {
    std::vector<int> node_sequence;   ///< tree nodes in linear-extension order
    std::vector<int> node_position;   ///< inverse of node_sequence
    std::vector<int> first_node;      ///< per vertex
    std::vector<int> sequence;        ///< vertices in processing order

    /// Index of v within the bag of node t (ascending-id ranking); -1 if v is not in it.
    static int bag_rank(const TreeDecomposition& td, int t, int v);
};

/// Throws UncoveredVertex if some vertex of g is in no bag.
VertexOrder order_vertices(const Graph& g, const TreeDecomposition& td);

/// Walks the vertices in VertexOrder::sequence and gives each one the least color
/// not already taken inside the bag of its first node. The result is injective on
/// every bag of a valid decomposition, hence proper, and uses fewer colors than the
/// largest bag. Throws UncoveredVertex or ImproperDecomposition (an edge in no bag,
/// or, in builds without NDEBUG, any W1/W2 failure).
Coloring color_by_decomposition(const Graph& g, const TreeDecomposition& td);

struct ChromaticResult {
    int chi = 0;
    Coloring witness;
};

/// Exact chromatic number with a witness coloring. Throws EmptyGraph for n = 0.
ChromaticResult chromatic_number(const Graph& g);

/// Size of a largest clique.
int clique_number(const Graph& g);

/// True iff every edge has differently colored ends. Throws PartialColoring if the
/// coloring does not assign a nonnegative color to every vertex.
bool verify_proper(const Graph& g, const Coloring& c);

} // namespace hadwiger
