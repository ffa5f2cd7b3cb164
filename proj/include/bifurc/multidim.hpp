#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "bifurc/activations.hpp"
#include "bifurc/dynamics.hpp"
#include "bifurc/fixed_point.hpp"
#include "bifurc/graphs.hpp"

namespace bifurc {

enum class EnsembleKind { ginibre, wigner };

std::string_view to_string(EnsembleKind k);
EnsembleKind parse_ensemble(std::string_view name);

/// d x d feature-mixing matrix law. Wigner: (G + G^T) / sqrt(2) with G ~ N(0, v), so the
/// off-diagonal variance is v and the diagonal variance 2v.
struct WeightEnsemble {
    EnsembleKind kind = EnsembleKind::ginibre;
    int d = 1;
    double v = 1.0;
    std::uint64_t seed = 0;
};

MatrixXd sample(const WeightEnsemble& ens);

/// Unit-variance draw for `ens`; sample(ens) == sqrt(v) * standard_sample(ens).
MatrixXd standard_sample(EnsembleKind kind, int d, Rng& rng);

/// Gelfand estimate (m = 300, 5 starts).
RadiusEstimate spectral_radius(const MatrixXd& w);

struct KronCheck {
    bool match = false;
    double max_error = 0.0;
    VectorXd products;  // sorted lambda_r * sigma_m
    VectorXd direct;    // sorted eigenvalues of W^T (x) A_hat
};

/// Compares the product spectrum {lambda_r sigma_m} with a brute-force eigensolve of the
/// Kronecker operator. TooLarge when n d > 400.
KronCheck kron_spectrum_check(const Graph& g, const MatrixXd& w, double tol = 1e-6);

struct MatrixMapConfig {
    OperatorMode mode = op::NormAdjacency{};
    Activation activation = Activation::sine();
    double s = 1.0;
    double tol = 1e-10;
    long max_iter = 200000;
    double init_scale = 1e-3;
    std::uint64_t seed = 0;
};

using MatrixFixedPoint = BasicFixedPoint<MatrixXd>;

/// X <- phi(s M X W) from init_scale * Gaussian (or `start`), Frobenius-norm contract.
MatrixFixedPoint iterate_matrix(const Graph& g, const MatrixXd& w, const MatrixMapConfig& cfg,
                                const MatrixXd* start = nullptr);

struct RankOnePattern {
    double amplitude = 0.0;   // sigma_1 with the sign that makes u's largest entry positive
    VectorXd graph_mode;      // u
    VectorXd feature_mode;    // v
    double residual_ratio = 0.0;  // sigma_2 / sigma_1
};

/// Leading singular triple by alternating power iteration, then sigma_2 from the deflated
/// matrix. Throws ZeroMatrix.
RankOnePattern rank_one_decompose(const MatrixXd& x, double tol = 1e-10);

/// sqrt(6 (alpha lambda_k |sigma_j| s - 1) / (gamma (s lambda_k sigma_j)^3 kappa_k xi_j)); 0 below onset.
double rank_one_amplitude(const Activation& a, double s, double lambda_k, double kappa_k, double sigma_j,
                          double xi_j);

/// Ginibre: (1 + delta) / (d lambda^2 alpha^2); Wigner: the same over 4.
double critical_variance(int d, double lambda_k, double alpha, EnsembleKind kind, double delta);

struct VarianceSweepConfig {
    EnsembleKind kind = EnsembleKind::ginibre;
    OperatorMode mode = op::NormLaplacian{};
    int d = 64;
    int trials = 10;
    double tol = 1e-10;
    long max_iter = 3000;
    double init_scale = 1e-3;
    std::uint64_t seed = 0;
    unsigned threads = 0;
};

struct VarianceRecord {
    double v = 0.0;
    double v_over_vc = 0.0;
    double mean_ed = 0.0;
    double std_ed = 0.0;
    int n_converged = 0;
    std::vector<FixedPointStatus> statuses;
};

/// Critical variance used by variance_sweep: v_c with the operator's leading eigenvalue.
double sweep_critical_variance(const Graph& g, const Activation& a, const VarianceSweepConfig& cfg);

/// Mean Tr(X*^T L X*) over trials for each v. Trial t draws one standard matrix G_t and one
/// start X_t, reused across v (W = sqrt(v) G_t), so the curve is smooth in v.
std::vector<VarianceRecord> variance_sweep(const Graph& g, const Activation& a,
                                           const std::vector<double>& v_values,
                                           const VarianceSweepConfig& cfg);

struct DepthConfig {
    EnsembleKind kind = EnsembleKind::ginibre;
    OperatorMode mode = op::NormLaplacian{};
    int d = 32;
    int layers = 64;
    double delta = 0.0;
    double collapse_floor = 1e-8;  // ||X^l||_F below this fraction of ||X^0||_F counts as collapsed
    std::uint64_t seed = 0;
};

struct DepthLayer {
    int layer = 0;
    double ed_normalized = 0.0;
    double frobenius_norm = 0.0;
    bool collapsed = false;
    bool non_finite = false;
};

struct DepthProbe {
    std::vector<DepthLayer> layers;
    double variance = 0.0;
    double final_alignment = 0.0;  // |<leading left singular vector of X^L, leading operator mode>|
    bool diverged = false;
};

/// Untrained forward pass X^{l+1} = phi(M X^l W^l) with fresh W^l at variance v_c(delta).
DepthProbe depth_probe(const Graph& g, const Activation& a, const DepthConfig& cfg);

}  // namespace bifurc
