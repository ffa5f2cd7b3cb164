#pragma once

#include <string_view>

#include <Eigen/Dense>

#include "bifurc/activations.hpp"
#include "bifurc/dynamics.hpp"
#include "bifurc/graphs.hpp"

namespace bifurc {

enum class KernelRegime { subcritical_analytic, supercritical_fd };

constexpr std::string_view to_string(KernelRegime r) {
    return r == KernelRegime::subcritical_analytic ? "subcritical_analytic" : "supercritical_fd";
}

struct KernelReport {
    MatrixXd kernel;
    double trace = 0.0;
    double top_eigenvalue = 0.0;
    double alignment = 0.0;  // |cos(top eigenvector, u_k)|
    KernelRegime regime = KernelRegime::supercritical_fd;
    double mu = 0.0;
    double h = 0.0;
};

/// K = g g^T with g = (x*(w + h) - x*(w - h)) / (2h) on the adjacency-operator map.
/// x*(w) is found from cfg's seed; the w +- h solves are warm-started from it. h <= 0 picks
/// min(1e-4, mu / 20). Throws SubcriticalInput unless mu in (0, 0.2] and w - h is
/// supercritical, BranchHop when the two solves land on opposite branches.
KernelReport ntk_supercritical(const Graph& g, const MapConfig& cfg, Eigen::Index k, double h = 0.0);

/// K = sum_r (1 - alpha w lambda_r)^-2 u_r u_r^T. Throws SupercriticalInput when alpha w lambda_1 >= 1.
KernelReport ntk_subcritical(const Graph& g, const Activation& a, double w);

}  // namespace bifurc
