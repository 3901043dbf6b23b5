#include "hadwiger/generators.hpp"

#include "hadwiger/error.hpp"

#include <array>
#include <string>

namespace hadwiger {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 5> kNames{{
    {Family::complete, "complete"},
    {Family::cycle, "cycle"},
    {Family::path, "path"},
    {Family::empty, "empty"},
    {Family::petersen, "petersen"},
}};

} // namespace

std::optional<Family> parse_family(std::string_view name)
{
    for (const auto& [family, text] : kNames)
        if (text == name)
            return family;
    return std::nullopt;
}

std::string_view to_string(Family family)
{
    for (const auto& [f, text] : kNames)
        if (f == family)
            return text;
    return "?";
}

Graph generate(Family family, int k)
{
    std::vector<Edge> edges;
    if (family == Family::petersen) {
        for (int i = 0; i < 5; ++i) {
            edges.push_back({i, (i + 1) % 5});
            edges.push_back({5 + i, 5 + (i + 2) % 5});
            edges.push_back({i, i + 5});
        }
        return Graph::from_edge_list(10, edges);
    }

    if (k <= 0)
        throw Error(Errc::bad_parameter, std::string(to_string(family)) + " needs a positive size");

    switch (family) {
    case Family::complete:
        for (int u = 0; u < k; ++u)
            for (int v = u + 1; v < k; ++v)
                edges.push_back({u, v});
        break;
    case Family::cycle:
        if (k < 3)
            throw Error(Errc::bad_parameter, "a simple cycle needs at least 3 vertices");
        for (int i = 0; i < k; ++i)
            edges.push_back({i, (i + 1) % k});
        break;
    case Family::path:
        for (int i = 0; i + 1 < k; ++i)
            edges.push_back({i, i + 1});
        break;
    case Family::empty:
    case Family::petersen:
        break;
    }
    return Graph::from_edge_list(k, edges);
}

} // namespace hadwiger
