#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hadwiger {

enum class Errc {
    bad_parameter,
    self_loop,
    out_of_range,
    too_large,
    malformed_graph6,
    empty_set,
    overlap,
    empty_graph,
    bad_node,
    too_large_for_exact,
    malformed_td,
    uncovered_vertex,
    improper_decomposition,
    partial_coloring,
    search_exhausted,
    io_error,
};

std::string_view to_string(Errc code);

/// Single exception type for the library; the code tells callers what went wrong.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message, int line = 0);

    Errc code() const noexcept { return code_; }

    /// 1-based input line for parse errors, 0 otherwise.
    int line() const noexcept { return line_; }

private:
    Errc code_;
    int line_;
};

} // namespace hadwiger
