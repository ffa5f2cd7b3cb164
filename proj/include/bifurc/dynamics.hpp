#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "bifurc/activations.hpp"
#include "bifurc/fixed_point.hpp"
#include "bifurc/graphs.hpp"
#include "bifurc/polynomial_filter.hpp"

namespace bifurc {

namespace op {
struct NormAdjacency {};
struct NormLaplacian {};
struct Filtered { PolynomialFilter filter; };
}  // namespace op

/// Which graph operator M drives x <- phi(w M x).
using OperatorMode = std::variant<op::NormAdjacency, op::NormLaplacian, op::Filtered>;

std::string describe(const OperatorMode& mode);

/// Eigen-structure of the chosen operator. All three modes share the eigenvectors of A_hat;
/// columns are reordered so `values` is descending for the operator itself. Mode index k
/// (0-based) always refers to this ordering.
struct OperatorSpectrum {
    MatrixXd op;
    VectorXd values;            // eigenvalues of op, descending
    MatrixXd vectors;           // matching eigenvectors
    VectorXd kappa;             // quartic sums of those eigenvectors
    VectorXd adjacency_values;  // A_hat eigenvalue of each column (energy uses 1 - this)
    std::vector<Eigen::Index> graph_index;  // column of g.eigenvectors() each mode came from
};

OperatorSpectrum operator_spectrum(const Graph& g, const OperatorMode& mode);

struct MapConfig {
    OperatorMode mode = op::NormAdjacency{};
    Activation activation = Activation::sine();
    double w = 1.0;
    double tol = 1e-10;
    long max_iter = 200000;
    double init_scale = 1e-3;
    std::uint64_t seed = 0;
};

void validate(const MapConfig& cfg);

using FixedPointResult = BasicFixedPoint<VectorXd>;

/// Iterates x <- phi(w M x) from init_scale * N(0, I) drawn from `seed`, or from `start`.
FixedPointResult iterate(const Graph& g, const MapConfig& cfg, const VectorXd* start = nullptr,
                         std::vector<double>* step_norms = nullptr);

/// Same, on a precomputed operator matrix.
FixedPointResult iterate_operator(const MatrixXd& op, const MapConfig& cfg, const VectorXd& start,
                                  std::vector<double>* step_norms = nullptr);

/// Signed projection <u_k, x> on the graph's k-th eigenvector (descending A_hat order).
double amplitude(const Graph& g, Eigen::Index k, const VectorXd& x);

/// x^T L x with L = I - A_hat; Tr(X^T L X) for a feature matrix.
template <typename Derived>
double dirichlet_energy(const Graph& g, const Eigen::MatrixBase<Derived>& x) {
    require(x.rows() == g.size(), ErrorCode::InvalidParams, "state has wrong row count");
    return (x.transpose() * (g.norm_laplacian() * x)).trace();
}

/// J = diag(phi'(w M x)) w M.
MatrixXd jacobian(const MatrixXd& op, const Activation& a, double w, const VectorXd& x);

/// Gelfand estimate (m = 200, 5 starts) of rho(J) at x_star. Disagreement between starts is
/// flagged in `agreed`, not thrown.
RadiusEstimate jacobian_radius(const Graph& g, const MapConfig& cfg, const VectorXd& x_star);

/// <u_k, J u_k> for the operator's k-th mode; approximately 1 - 2 mu on the branch.
double critical_multiplier(const Graph& g, const MapConfig& cfg, Eigen::Index k, const VectorXd& x_star);

struct TheoryPrediction {
    double w_k = 0.0;
    double mu = 0.0;
    double a_star = 0.0;
    double ed_star = 0.0;
    double energy_constant = 0.0;  // C_k, so that ed_star = C_k mu
    double landau_quadratic = 0.0;
    double landau_quartic = 0.0;
};

/// Closed-form onset, amplitude and energy for mode k of the operator picked by `mode`.
/// Throws UnsupportedActivation (gamma <= 0), InvalidParams (lambda_k <= 0), NonSimpleMode.
TheoryPrediction theory_predictions(const Graph& g, const Activation& a, Eigen::Index k, double w,
                                    const OperatorMode& mode = op::NormAdjacency{});

/// F(a) = landau_quadratic a^2 + landau_quartic a^4.
inline double landau_energy(const TheoryPrediction& t, double a) {
    const double a2 = a * a;
    return t.landau_quadratic * a2 + t.landau_quartic * a2 * a2;
}

struct SweepRecord {
    double control = 0.0;
    double mu = 0.0;
    double amplitude_measured = 0.0;
    double amplitude_signed = 0.0;
    double amplitude_theory = 0.0;
    double dirichlet_measured = 0.0;
    double dirichlet_theory = 0.0;
    double jacobian_radius = 0.0;
    FixedPointStatus status = FixedPointStatus::budget_exhausted;
    long iterations = 0;
};

/// One record per w, solved in order with warm starts (previous solution plus fresh
/// init_scale noise) so the tracked branch is continued. `controls` optionally overrides
/// the reported control column (e.g. w / w_k). Theory columns are NaN when the predictor
/// refuses the input.
std::vector<SweepRecord> sweep_coupling(const Graph& g, const MapConfig& base, Eigen::Index k,
                                        const std::vector<double>& w_values,
                                        const std::vector<double>& controls = {});

struct PhaseCell {
    double alpha = 0.0;
    double w = 0.0;
    double alpha_w_lambda = 0.0;
    double ed = 0.0;
    FixedPointStatus status = FixedPointStatus::budget_exhausted;
};

/// E_D(alpha, w) for phi = cubic(alpha, 1) in Laplacian-operator mode, row-major in alpha.
/// Each cell starts cold from its own (seed, cell) stream.
std::vector<PhaseCell> phase_diagram(const Graph& g, const std::vector<double>& alpha_values,
                                     const std::vector<double>& w_values, const MapConfig& base,
                                     unsigned threads = 0);

struct PatternResult {
    FixedPointResult fixed_point;
    std::optional<Eigen::Index> selected_mode;  // graph mode index (descending A_hat)
    double alignment = 0.0;
    double filtered_gap = 0.0;                  // alpha w (P_max - P_next)
};

/// Filtered map x <- phi(w P(A_hat) x). Subcritical input returns without a selected mode.
/// Throws MultiModeRegime if another mode also has alpha w |P| >= 1, NonSimpleMode on ties.
PatternResult pattern_select(const Graph& g, const MapConfig& base, const PolynomialFilter& f);

}  // namespace bifurc
