#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

#include "bifurc/graphs.hpp"

namespace bifurc::cli {

/// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;      // I/O or unexpected errors
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumeric = 3;      // more than half the cells failed

/// "start:stop:count" (inclusive), "a,b,c", or a single number.
std::vector<double> parse_grid(std::string_view text);

struct GraphSpec {
    GraphModel model;
    int n = 0;
};

/// "kind:n[:param[:param]]" with kind in er, ba, ws, rr, grid, path, cycle, complete, star.
/// grid:n:rows needs rows | n.
GraphSpec parse_graph_spec(std::string_view text);

/// Like parse_graph_spec + generate, but also accepts "edges:<path>" for an edge-list file.
Graph load_graph(std::string_view text, std::uint64_t seed);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bifurc::cli
