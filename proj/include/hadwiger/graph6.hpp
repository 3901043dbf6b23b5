#pragma once

#include "hadwiger/graph.hpp"

#include <string>
#include <string_view>

namespace hadwiger {

/// Largest order representable with the single-byte graph6 size prefix.
inline constexpr int kMaxGraph6Order = 62;

/// Encodes g as one graph6 line (no newline). Throws TooLarge for n > 62.
std::string to_graph6(const Graph& g);

/// Decodes one graph6 line; a trailing newline is ignored. Rejects multi-byte size
/// prefixes, bytes outside 63..126, wrong lengths and nonzero padding bits.
Graph from_graph6(std::string_view line);

} // namespace hadwiger
