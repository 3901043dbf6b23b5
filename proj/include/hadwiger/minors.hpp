#pragma once

#include "hadwiger/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hadwiger {

/// Branch sets witnessing a K_k minor: nonempty, connected, pairwise disjoint,
/// and pairwise joined by an edge.
struct MinorCertificate {
    std::vector<VertexSet> parts;

    friend bool operator==(const MinorCertificate&, const MinorCertificate&) = default;
};

/// Branch vertices plus one path per branch-vertex pair. Paths are keyed by
/// (u, v) with u < v and run from u to v inclusive.
struct SubdivisionCertificate {
    std::vector<int> branch_vertices;
    std::map<std::pair<int, int>, std::vector<int>> paths;

    friend bool operator==(const SubdivisionCertificate&, const SubdivisionCertificate&) = default;
};

enum class MinorClause { valid, out_of_range, empty_part, overlapping_parts, disconnected_part, parts_not_adjacent };

struct MinorVerdict {
    MinorClause clause = MinorClause::valid;
    int part_a = -1;
    int part_b = -1;
    std::string reason;

    bool valid() const { return clause == MinorClause::valid; }
    explicit operator bool() const { return valid(); }
};

/// Checks the four branch-set conditions in order and reports the first failure.
MinorVerdict verify_clique_minor(const Graph& g, const MinorCertificate& cert);

struct SubdivisionVerdict {
    bool valid = true;
    std::string reason;

    explicit operator bool() const { return valid; }
};

/// Checks path endpoints, path edges, and internal disjointness.
SubdivisionVerdict verify_subdivision(const Graph& g, const SubdivisionCertificate& cert);

enum class SearchOutcome { found, absent, exhausted };

template <typename Certificate>
struct SearchResult {
    SearchOutcome outcome = SearchOutcome::absent;
    std::optional<Certificate> certificate;
    std::uint64_t nodes = 0;

    bool found() const { return outcome == SearchOutcome::found; }
};

using MinorSearch = SearchResult<MinorCertificate>;
using SubdivisionSearch = SearchResult<SubdivisionCertificate>;

/// Node cap for a search; nullopt means uncapped.
using NodeLimit = std::optional<std::uint64_t>;

/// Uncapped for n <= 10, 10^7 search nodes above.
NodeLimit default_node_limit(const Graph& g);

/// Exact K_k minor search. Vertices are taken in ascending order and placed in
/// an existing part, a new part, or left unused; parts are numbered by their
/// smallest vertex so each family of branch sets is visited once.
/// Throws BadParameter for k < 1.
MinorSearch find_clique_minor(const Graph& g, int k, NodeLimit limit);
inline MinorSearch find_clique_minor(const Graph& g, int k) { return find_clique_minor(g, k, default_node_limit(g)); }

/// Largest k with a K_k minor. Throws EmptyGraph for n = 0 and SearchExhausted
/// if any of the underlying searches runs out of budget.
int hadwiger_number(const Graph& g, NodeLimit limit);
inline int hadwiger_number(const Graph& g) { return hadwiger_number(g, default_node_limit(g)); }

inline constexpr int kMaxSubdivisionOrder = 6;

/// Exact topological K_k search for 1 <= k <= 6; throws BadParameter otherwise.
SubdivisionSearch find_subdivision(const Graph& g, int k, NodeLimit limit);
inline SubdivisionSearch find_subdivision(const Graph& g, int k) { return find_subdivision(g, k, default_node_limit(g)); }

/// Contracts each path onto one of its ends, giving the K_k minor the subdivision implies.
MinorCertificate minor_from_subdivision(const SubdivisionCertificate& cert);

} // namespace hadwiger
