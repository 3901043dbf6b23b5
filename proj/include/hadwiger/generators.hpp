#pragma once

#include "hadwiger/graph.hpp"

#include <optional>
#include <string_view>

namespace hadwiger {

enum class Family { complete, cycle, path, empty, petersen };

std::optional<Family> parse_family(std::string_view name);
std::string_view to_string(Family family);

/// Named fixture graph on k vertices. Petersen ignores k and numbers the outer
/// cycle 0-4, the inner pentagram 5-9 (i ~ i+2 mod 5) and spokes i ~ i+5.
/// Throws BadParameter for k = 0 (and for cycles shorter than 3).
Graph generate(Family family, int k = 0);

} // namespace hadwiger
