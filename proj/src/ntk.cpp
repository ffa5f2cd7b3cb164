#include "bifurc/ntk.hpp"

#include <algorithm>
#include <cmath>

namespace bifurc {

namespace {

void fill_spectral_summary(KernelReport& r, const VectorXd& mode) {
    r.trace = r.kernel.trace();
    const SymmetricSpectrum<double> eig = symmetric_eigen(r.kernel);
    r.top_eigenvalue = eig.values(0);
    r.alignment = std::abs(eig.vectors.col(0).dot(mode));
}

}  // namespace

KernelReport ntk_supercritical(const Graph& g, const MapConfig& cfg, Eigen::Index k, double h) {
    require(k >= 0 && k < g.size(), ErrorCode::InvalidParams, "mode index out of range");
    MapConfig base = cfg;
    base.mode = op::NormAdjacency{};
    validate(base);
    const double alpha_lambda = base.activation.alpha() * g.eigenvalue(k);
    const double mu = alpha_lambda * base.w - 1.0;
    require(mu > 0.0 && mu <= 0.2, ErrorCode::SubcriticalInput, "ntk_supercritical needs mu in (0, 0.2]");
    if (h <= 0.0) h = std::min(1e-4, mu / 20.0);
    require(alpha_lambda * (base.w - h) > 1.0, ErrorCode::SubcriticalInput, "w - h is not supercritical");

    const MatrixXd& op = g.norm_adjacency();
    const VectorXd u = g.eigenvector(k);
    Rng rng = rng_stream(base.seed);
    const VectorXd noise = base.init_scale * gaussian_vector(g.size(), rng);
    const FixedPointResult centre = iterate_operator(op, base, noise);
    require(centre.converged(), ErrorCode::NoConvergence, "no equilibrium at w");

    auto solve = [&](double w) {
        MapConfig c = base;
        c.w = w;
        const FixedPointResult fp = iterate_operator(op, c, centre.state);
        require(fp.converged(), ErrorCode::NoConvergence, "no equilibrium at w +- h");
        return fp.state;
    };
    const VectorXd plus = solve(base.w + h);
    const VectorXd minus = solve(base.w - h);
    require(std::signbit(u.dot(plus)) == std::signbit(u.dot(minus)), ErrorCode::BranchHop,
            "w + h and w - h solves are on different branches");

    const VectorXd grad = (plus - minus) / (2.0 * h);
    KernelReport r;
    r.regime = KernelRegime::supercritical_fd;
    r.mu = mu;
    r.h = h;
    r.kernel = grad * grad.transpose();
    fill_spectral_summary(r, u);
    return r;
}

KernelReport ntk_subcritical(const Graph& g, const Activation& a, double w) {
    require(std::isfinite(w), ErrorCode::InvalidParams, "w must be finite");
    const VectorXd gain = a.alpha() * w * g.eigenvalues();
    require(gain.maxCoeff() < 1.0, ErrorCode::SupercriticalInput, "alpha w lambda_1 must be < 1");
    const VectorXd weights = (1.0 - gain.array()).square().inverse().matrix();

    KernelReport r;
    r.regime = KernelRegime::subcritical_analytic;
    r.mu = a.alpha() * w * g.eigenvalue(0) - 1.0;
    const MatrixXd& u = g.eigenvectors();
    r.kernel = u * weights.asDiagonal() * u.transpose();
    r.kernel = (r.kernel + r.kernel.transpose()).eval() / 2.0;
    fill_spectral_summary(r, g.eigenvector(0));
    return r;
}

}  // namespace bifurc
