#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "bifurc/graphs.hpp"

namespace bifurc {

void write_edge_list(std::ostream& out, const Graph& g) {
    const MatrixXd& a = g.adjacency();
    out << g.size() << ' ' << g.edge_count() << '\n';
    for (Eigen::Index i = 0; i < g.size(); ++i)
        for (Eigen::Index j = i + 1; j < g.size(); ++j)
            if (a(i, j) > 0.0) out << i << ' ' << j << '\n';
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    auto next_line = [&](const char* what) {
        while (std::getline(in, line))
            if (line.find_first_not_of(" \t\r") != std::string::npos) return;
        throw Error(ErrorCode::IoError, std::string("edge list truncated: missing ") + what);
    };

    next_line("header");
    long n = -1, m = -1;
    {
        std::istringstream header(line);
        require(static_cast<bool>(header >> n >> m) && n >= 0 && m >= 0, ErrorCode::IoError,
                "edge list header must be \"n m\"");
    }
    MatrixXd adjacency = MatrixXd::Zero(n, n);
    for (long e = 0; e < m; ++e) {
        next_line("edge");
        std::istringstream row(line);
        long i = -1, j = -1;
        require(static_cast<bool>(row >> i >> j), ErrorCode::IoError, "malformed edge line: " + line);
        require(i >= 0 && j >= 0 && i < n && j < n, ErrorCode::IoError, "edge endpoint out of range: " + line);
        require(i != j, ErrorCode::IoError, "self loop in edge list: " + line);
        require(adjacency(i, j) == 0.0, ErrorCode::IoError, "duplicate edge: " + line);
        adjacency(i, j) = adjacency(j, i) = 1.0;
    }
    return Graph(std::move(adjacency));
}

}  // namespace bifurc
