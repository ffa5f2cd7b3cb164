#pragma once

// Shared helpers for the unit tests: random instance generators and independent oracles.

#include <cmath>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "bifurc/graphs.hpp"
#include "bifurc/random.hpp"

namespace testing {

using bifurc::Graph;
using bifurc::GraphModel;
using Eigen::MatrixXd;
using Eigen::VectorXd;
namespace model = bifurc::model;

/// A spread of small models that are always valid at n = 24.
inline std::vector<GraphModel> small_models() {
    return {model::ErdosRenyi{0.3}, model::BarabasiAlbert{2}, model::WattsStrogatz{4, 0.2},
            model::RandomRegular{3}, model::Grid{4, 6},     model::Path{},
            model::Cycle{},          model::Complete{},      model::Star{}};
}

inline MatrixXd random_symmetric(Eigen::Index n, std::uint64_t seed) {
    bifurc::Rng rng = bifurc::rng_stream(seed, 77);
    const MatrixXd g = bifurc::gaussian_matrix(n, n, rng);
    return (g + g.transpose()) / 2.0;
}

/// Eigenvalues from Eigen's own solver, sorted descending. Independent of the Jacobi code.
inline VectorXd oracle_eigenvalues(const MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(m);
    VectorXd v = es.eigenvalues().reverse();
    return v;
}

/// Scalar root of sin(w c) = c with c > 0, by bisection.
inline double sine_root(double w) {
    double lo = 1e-6, hi = 3.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (std::sin(w * mid) - mid > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/// Ordinary least-squares slope and R^2 of y on x.
struct Fit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

inline Fit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) sx += x[i], sy += y[i];
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    Fit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.r2 = syy > 0 ? sxy * sxy / (sxx * syy) : 1.0;
    return f;
}

inline Fit loglog_fit(const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < x.size(); ++i) lx.push_back(std::log(x[i])), ly.push_back(std::log(y[i]));
    return linear_fit(lx, ly);
}

}  // namespace testing
