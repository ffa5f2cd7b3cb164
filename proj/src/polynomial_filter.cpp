#include "bifurc/polynomial_filter.hpp"

#include <cmath>

namespace bifurc {

void validate(const PolynomialFilter& f) {
    require(!f.coeffs.empty(), ErrorCode::InvalidParams, "filter needs at least one coefficient");
    for (double c : f.coeffs) require(std::isfinite(c), ErrorCode::InvalidParams, "filter coefficient not finite");
}

FilteredOperator apply_filter(const Graph& g, const PolynomialFilter& f) {
    FilteredOperator out;
    out.op = matrix_polynomial(f, g.norm_adjacency());
    out.values = g.eigenvalues().unaryExpr([&](double x) { return f(x); });
    require(out.op.allFinite() && out.values.allFinite(), ErrorCode::NonFinite,
            "filtered operator overflowed");
    return out;
}

PolynomialFilter bandpass_filter(double center, double width, int order, int grid_points) {
    require(std::isfinite(center) && std::isfinite(width) && width > 0.0, ErrorCode::InvalidParams,
            "bandpass needs finite center and width > 0");
    require(order >= 2, ErrorCode::InvalidParams, "bandpass needs order >= 2");
    require(grid_points >= 2, ErrorCode::InvalidParams, "bandpass needs at least 2 grid points");

    const VectorXd x = VectorXd::LinSpaced(grid_points, -1.0, 1.0);
    MatrixXd vandermonde(grid_points, order + 1);
    vandermonde.col(0).setOnes();
    for (int j = 1; j <= order; ++j) vandermonde.col(j) = vandermonde.col(j - 1).cwiseProduct(x);
    const VectorXd target =
        ((x.array() - center).square() / (-2.0 * width * width)).exp().matrix();

    const Eigen::ColPivHouseholderQR<MatrixXd> qr(vandermonde);
    require(qr.rank() == order + 1, ErrorCode::IllConditionedFit, "Vandermonde system is rank deficient");
    const VectorXd theta = qr.solve(target);
    require(theta.allFinite(), ErrorCode::IllConditionedFit, "least-squares fit produced non-finite coefficients");
    return PolynomialFilter{std::vector<double>(theta.data(), theta.data() + theta.size())};
}

}  // namespace bifurc
