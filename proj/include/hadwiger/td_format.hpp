#pragma once

#include "hadwiger/tree_decomposition.hpp"

#include <string>
#include <string_view>

namespace hadwiger {

/// PACE 2017 .td text: "s td <bags> <max-bag> <n>", then "b <id> <v...>" lines
/// and one "<i> <j>" line per tree edge, all 1-indexed. Bags are written in node
/// order and edges lexicographically.
std::string write_td(const TreeDecomposition& td);

/// Parses .td text, rooting the tree at bag 1. "c" lines are comments.
/// Throws MalformedTd carrying the offending line number.
TreeDecomposition read_td(std::string_view text);

} // namespace hadwiger
