#pragma once

#include <iterator>
#include <vector>

#include <Eigen/Dense>

#include "bifurc/graphs.hpp"

namespace bifurc {

/// P(x) = sum_j coeffs[j] * x^j, applied to graph operators as a spectral filter.
struct PolynomialFilter {
    std::vector<double> coeffs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }

    template <typename Scalar>
    Scalar operator()(Scalar x) const {
        Scalar acc(0);
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + Scalar(*it);
        return acc;
    }
};

void validate(const PolynomialFilter& f);

/// P(M) by Horner's rule on the matrix.
template <typename Derived>
MatrixX<typename Derived::Scalar> matrix_polynomial(const PolynomialFilter& f,
                                                   const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    validate(f);
    const auto n = m.rows();
    const MatrixX<Scalar> id = MatrixX<Scalar>::Identity(n, n);
    MatrixX<Scalar> acc = Scalar(f.coeffs.back()) * id;
    for (auto it = std::next(f.coeffs.rbegin()); it != f.coeffs.rend(); ++it)
        acc = (acc * m).eval() + Scalar(*it) * id;
    return acc;
}

struct FilteredOperator {
    MatrixXd op;             // P(A_hat)
    VectorXd values;         // P(lambda_r), aligned with the graph's eigenvector order
};

FilteredOperator apply_filter(const Graph& g, const PolynomialFilter& f);

/// Least-squares degree-`order` fit of exp(-(x - center)^2 / (2 width^2)) on a uniform
/// grid over [-1, 1].
PolynomialFilter bandpass_filter(double center, double width, int order, int grid_points = 201);

}  // namespace bifurc
