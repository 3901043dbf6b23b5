#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace hadwiger {

/// Largest vertex count a Graph can hold; adjacency rows are single 64-bit words.
inline constexpr int kMaxVertices = 64;

/// Set of vertex ids in [0, 64), stored as a bitmask.
class VertexSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        iterator() = default;
        explicit iterator(std::uint64_t rest) : rest_(rest) {}

        int operator*() const { return std::countr_zero(rest_); }
        iterator& operator++()
        {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int)
        {
            auto old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> members)
    {
        for (int v : members)
            insert(v);
    }

    static VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    /// {0, ..., n-1}
    static VertexSet prefix(int n)
    {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    template <typename Range>
    static VertexSet of(const Range& members)
    {
        VertexSet s;
        for (int v : members)
            s.insert(v);
        return s;
    }

    std::uint64_t bits() const { return bits_; }
    bool empty() const { return bits_ == 0; }
    int size() const { return std::popcount(bits_); }
    bool contains(int v) const { return (bits_ >> v) & 1U; }
    int first() const { return std::countr_zero(bits_); }
    int last() const { return 63 - std::countl_zero(bits_); }

    void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    /// Number of members strictly below v.
    int rank(int v) const { return std::popcount(bits_ & ((std::uint64_t{1} << v) - 1)); }

    std::vector<int> to_vector() const { return {begin(), end()}; }

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    VertexSet& operator|=(VertexSet o)
    {
        bits_ |= o.bits_;
        return *this;
    }
    VertexSet& operator&=(VertexSet o)
    {
        bits_ &= o.bits_;
        return *this;
    }
    VertexSet& operator-=(VertexSet o)
    {
        bits_ &= ~o.bits_;
        return *this;
    }

    friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend bool operator==(VertexSet a, VertexSet b) = default;

private:
    std::uint64_t bits_ = 0;
};

struct Edge {
    int u = 0;
    int v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Throws SelfLoop for {v,v}, OutOfRange for ids outside [0, n), TooLarge for n > 64.
    /// Duplicate pairs are dropped.
    static Graph from_edge_list(int n, std::span<const Edge> edges);
    static Graph from_edge_list(int n, std::initializer_list<Edge> edges)
    {
        return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const { return edge_count_; }

    VertexSet vertices() const { return VertexSet::prefix(order()); }
    VertexSet neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].size(); }
    bool adjacent(int u, int v) const { return adj_[u].contains(v); }

    /// All neighbors of members of s, s itself excluded.
    VertexSet neighborhood(VertexSet s) const;

    /// Edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    Graph without_edge(int u, int v) const;
    Graph induced(VertexSet keep) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<VertexSet> adj_;
    int edge_count_ = 0;
};

/// Vertices reachable from `start` inside G[within]; `start` must be in `within`.
VertexSet component_of(const Graph& g, VertexSet within, int start);

/// True iff G[s] is connected. Throws EmptySet for s = {}.
bool is_connected_subset(const Graph& g, VertexSet s);

/// True iff some edge joins s and t. Throws Overlap if they share a vertex, EmptySet if either is empty.
bool connected_to_each_other(const Graph& g, VertexSet s, VertexSet t);

} // namespace hadwiger
