#include "hadwiger/error.hpp"

namespace hadwiger {

std::string_view to_string(Errc code)
{
    switch (code) {
    case Errc::bad_parameter: return "BadParameter";
    case Errc::self_loop: return "SelfLoop";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::too_large: return "TooLarge";
    case Errc::malformed_graph6: return "MalformedGraph6";
    case Errc::empty_set: return "EmptySet";
    case Errc::overlap: return "Overlap";
    case Errc::empty_graph: return "EmptyGraph";
    case Errc::bad_node: return "BadNode";
    case Errc::too_large_for_exact: return "TooLargeForExact";
    case Errc::malformed_td: return "MalformedTd";
    case Errc::uncovered_vertex: return "UncoveredVertex";
    case Errc::improper_decomposition: return "ImproperDecomposition";
    case Errc::partial_coloring: return "PartialColoring";
    case Errc::search_exhausted: return "SearchExhausted";
    case Errc::io_error: return "IoError";
    }
    return "Unknown";
}

namespace {

std::string format_message(Errc code, const std::string& message, int line)
{
    std::string out(to_string(code));
    if (line > 0)
        out += " (line " + std::to_string(line) + ")";
    out += ": ";
    out += message;
    return out;
}

} // namespace

Error::Error(Errc code, const std::string& message, int line)
    : std::runtime_error(format_message(code, message, line)), code_(code), line_(line)
{
}

} // namespace hadwiger
