#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "bifurc/linalg.hpp"

namespace bifurc {

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Gap below which the leading eigenvalue is treated as degenerate.
inline constexpr double kSimpleGapTol = 1e-6;

namespace model {
struct ErdosRenyi { double p; };
struct BarabasiAlbert { int m; };
struct WattsStrogatz { int k; double beta; };
struct RandomRegular { int degree; };
struct Grid { int rows; int cols; };
struct Path {};
struct Cycle {};
struct Complete {};
struct Star {};
}  // namespace model

using GraphModel = std::variant<model::ErdosRenyi, model::BarabasiAlbert, model::WattsStrogatz,
                                model::RandomRegular, model::Grid, model::Path, model::Cycle,
                                model::Complete, model::Star>;

std::string describe(const GraphModel& model);

/// Undirected graph with its symmetric normalization and full spectrum.
///
/// Immutable after construction. Holds A, D^-1/2 A D^-1/2, I - that, the eigenpairs of the
/// normalized adjacency (descending), and per-mode quartic sums kappa_r = sum_i u_{r,i}^4.
class Graph {
public:
    /// Validates and decomposes a symmetric, zero-diagonal, nonnegative adjacency matrix.
    /// Every node must have positive degree. `sampled_size` records the node count drawn
    /// before reduction to the largest component (defaults to the realized size).
    explicit Graph(MatrixXd adjacency, Eigen::Index sampled_size = 0);

    Eigen::Index size() const { return adjacency_.rows(); }
    std::size_t edge_count() const;

    const MatrixXd& adjacency() const { return adjacency_; }
    const MatrixXd& norm_adjacency() const { return norm_adjacency_; }
    const MatrixXd& norm_laplacian() const { return norm_laplacian_; }
    const VectorXd& degrees() const { return degrees_; }
    const VectorXd& eigenvalues() const { return eigenvalues_; }
    const MatrixXd& eigenvectors() const { return eigenvectors_; }
    const VectorXd& kappa() const { return kappa_; }

    double eigenvalue(Eigen::Index r) const { return eigenvalues_(r); }
    auto eigenvector(Eigen::Index r) const { return eigenvectors_.col(r); }

    bool top_simple() const { return top_simple_; }
    bool bipartite() const { return bipartite_; }
    bool connected() const { return connected_; }

    /// Realized node count of the generated sample before the largest component was kept.
    Eigen::Index sampled_size() const { return sampled_size_; }

private:
    MatrixXd adjacency_;
    MatrixXd norm_adjacency_;
    MatrixXd norm_laplacian_;
    VectorXd degrees_;
    VectorXd eigenvalues_;
    MatrixXd eigenvectors_;
    VectorXd kappa_;
    bool top_simple_ = false;
    bool bipartite_ = false;
    bool connected_ = false;
    Eigen::Index sampled_size_ = 0;
};

/// Samples a graph from `model` on n nodes. Disconnected samples are reduced to their
/// largest connected component (ties: the one containing the lowest node index).
Graph generate(const GraphModel& model, int n, std::uint64_t seed);

/// Eigenpairs of a symmetric matrix via cyclic Jacobi.
SymmetricSpectrum<double> spectrum(const MatrixXd& symmetric);

/// Connected components as sorted node lists, largest first.
std::vector<std::vector<int>> connected_components(const MatrixXd& adjacency);
bool is_bipartite(const MatrixXd& adjacency);

/// Edge-list text format: "n m" then m lines "i j" (0-based, i < j).
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);

}  // namespace bifurc
