#include "hadwiger/graph6.hpp"

#include "hadwiger/error.hpp"

namespace hadwiger {

namespace {

constexpr int kBias = 63;

std::size_t payload_bytes(int n)
{
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    return (bits + 5) / 6;
}

} // namespace

std::string to_graph6(const Graph& g)
{
    const int n = g.order();
    if (n > kMaxGraph6Order)
        throw Error(Errc::too_large, "graph6 encoding supports at most 62 vertices");

    std::vector<int> sextets(payload_bytes(n), 0);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.adjacent(i, j))
                sextets[k / 6] |= 1 << (5 - k % 6);

    std::string out(1, static_cast<char>(kBias + n));
    for (int s : sextets)
        out.push_back(static_cast<char>(kBias + s));
    return out;
}

Graph from_graph6(std::string_view line)
{
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty())
        throw Error(Errc::malformed_graph6, "empty line");

    for (char c : line) {
        const int b = static_cast<unsigned char>(c);
        if (b < kBias || b > 126)
            throw Error(Errc::malformed_graph6, "byte " + std::to_string(b) + " outside 63..126");
    }
    const int n = static_cast<unsigned char>(line[0]) - kBias;
    if (n > kMaxGraph6Order)
        throw Error(Errc::malformed_graph6, "multi-byte size prefix (n > 62) is not supported");
    if (line.size() != 1 + payload_bytes(n))
        throw Error(Errc::malformed_graph6,
                    "expected " + std::to_string(1 + payload_bytes(n)) + " bytes for n=" + std::to_string(n) +
                        ", got " + std::to_string(line.size()));

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = static_cast<unsigned char>(line[1 + k / 6]) - kBias;
            if ((byte >> (5 - k % 6)) & 1)
                edges.push_back({i, j});
        }
    for (; k % 6 != 0; ++k) {
        const int byte = static_cast<unsigned char>(line[1 + k / 6]) - kBias;
        if ((byte >> (5 - k % 6)) & 1)
            throw Error(Errc::malformed_graph6, "nonzero padding bits");
    }
    return Graph::from_edge_list(n, edges);
}

} // namespace hadwiger
