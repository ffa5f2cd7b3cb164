#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Jacobi>

#include "bifurc/error.hpp"
#include "bifurc/random.hpp"

namespace bifurc {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Eigen-decomposition of a real symmetric matrix: eigenvalues descending, eigenvectors
/// as orthonormal columns with the largest-magnitude entry of each column positive.
template <typename Scalar>
struct SymmetricSpectrum {
    VectorX<Scalar> values;
    MatrixX<Scalar> vectors;
    int sweeps = 0;
};

struct JacobiOptions {
    double off_diagonal_tol = 1e-12;  // relative to the Frobenius norm of the input
    int max_sweeps = 100;
    double symmetry_tol = 1e-10;
};

template <typename Derived>
typename Derived::Scalar max_asymmetry(const Eigen::MatrixBase<Derived>& m) {
    if (m.rows() != m.cols()) return std::numeric_limits<typename Derived::Scalar>::infinity();
    return (m - m.transpose()).cwiseAbs().maxCoeff();
}

/// Flips each column so its largest-magnitude entry is positive (first index wins ties).
template <typename Derived>
void canonicalize_column_signs(Eigen::MatrixBase<Derived>& vectors) {
    for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
        Eigen::Index arg = 0;
        vectors.col(c).cwiseAbs().maxCoeff(&arg);
        if (vectors(arg, c) < 0) vectors.col(c) *= -1;
    }
}

/// Cyclic Jacobi eigensolver for dense symmetric matrices.
template <typename Derived>
SymmetricSpectrum<typename Derived::Scalar> symmetric_eigen(const Eigen::MatrixBase<Derived>& input,
                                                            const JacobiOptions& opts = {}) {
    using Scalar = typename Derived::Scalar;
    require(input.rows() == input.cols(), ErrorCode::NotSymmetric, "matrix is not square");
    require(input.allFinite(), ErrorCode::NonFinite, "matrix has non-finite entries");
    require(max_asymmetry(input) <= Scalar(opts.symmetry_tol), ErrorCode::NotSymmetric,
            "matrix is not symmetric within tolerance");

    const Eigen::Index n = input.rows();
    MatrixX<Scalar> a = (input + input.transpose()) / Scalar(2);
    MatrixX<Scalar> v = MatrixX<Scalar>::Identity(n, n);
    const Scalar scale = a.norm();
    const Scalar target = Scalar(opts.off_diagonal_tol) * scale;

    auto off_norm = [&] {
        Scalar s(0);
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index i = 0; i < j; ++i) s += a(i, j) * a(i, j);
        return std::sqrt(Scalar(2) * s);
    };

    int sweep = 0;
    for (; off_norm() > target; ++sweep) {
        if (sweep >= opts.max_sweeps)
            throw Error(ErrorCode::NoConvergence, "Jacobi sweep budget exhausted");
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                if (a(p, q) == Scalar(0)) continue;
                Eigen::JacobiRotation<Scalar> rot;
                if (!rot.makeJacobi(a, p, q)) continue;
                a.applyOnTheLeft(p, q, rot.adjoint());
                a.applyOnTheRight(p, q, rot);
                v.applyOnTheRight(p, q, rot);
                a(p, q) = a(q, p) = Scalar(0);
            }
        }
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index(0));
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index l, Eigen::Index r) { return a(l, l) > a(r, r); });

    SymmetricSpectrum<Scalar> out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        const Eigen::Index src = order[static_cast<std::size_t>(c)];
        out.values(c) = a(src, src);
        out.vectors.col(c) = v.col(src);
    }
    canonicalize_column_signs(out.vectors);
    out.sweeps = sweep;
    return out;
}

/// Spectral radius estimate from the Gelfand formula rho = lim ||M^m x||^(1/m).
struct RadiusEstimate {
    double value = 0.0;
    double spread = 0.0;  // (max - min) / max over starts
    bool agreed = true;   // false when starts disagree by more than the agreement tolerance
};

struct GelfandOptions {
    int power = 300;
    int starts = 5;
    std::uint64_t seed = 0x5eed;
    double agreement = 0.10;
};

template <typename Derived>
RadiusEstimate gelfand_radius(const Eigen::MatrixBase<Derived>& m, const GelfandOptions& opts = {}) {
    using Scalar = typename Derived::Scalar;
    require(m.rows() == m.cols(), ErrorCode::InvalidParams, "spectral radius needs a square matrix");
    require(m.allFinite(), ErrorCode::NonFinite, "matrix has non-finite entries");
    require(opts.power >= 1 && opts.starts >= 1, ErrorCode::InvalidParams, "power and starts must be >= 1");

    const MatrixX<Scalar> mat = m;
    std::vector<double> estimates;
    for (int s = 0; s < opts.starts; ++s) {
        Rng rng = rng_stream(opts.seed, static_cast<std::uint64_t>(s));
        VectorX<Scalar> x = gaussian_vector<Scalar>(mat.rows(), rng);
        x.normalize();
        double log_growth = 0.0;
        bool annihilated = false;
        for (int k = 0; k < opts.power; ++k) {
            x = mat * x;
            const double norm = static_cast<double>(x.norm());
            if (norm == 0.0) {
                annihilated = true;
                break;
            }
            log_growth += std::log(norm);
            x /= static_cast<Scalar>(norm);
        }
        estimates.push_back(annihilated ? 0.0 : std::exp(log_growth / opts.power));
    }
    const auto [lo, hi] = std::minmax_element(estimates.begin(), estimates.end());
    RadiusEstimate out;
    out.value = *hi;
    out.spread = *hi > 0.0 ? (*hi - *lo) / *hi : 0.0;
    out.agreed = out.spread <= opts.agreement;
    return out;
}

/// Dense Kronecker product: result(i*rb + k, j*cb + l) = a(i, j) * b(k, l).
template <typename DerivedA, typename DerivedB>
MatrixX<typename DerivedA::Scalar> kronecker(const Eigen::MatrixBase<DerivedA>& a,
                                             const Eigen::MatrixBase<DerivedB>& b) {
    const Eigen::Index rb = b.rows(), cb = b.cols();
    MatrixX<typename DerivedA::Scalar> out(a.rows() * rb, a.cols() * cb);
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i) out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
    return out;
}

/// Sum of fourth powers; the localization measure of a unit vector.
template <typename Derived>
typename Derived::Scalar quartic_sum(const Eigen::MatrixBase<Derived>& v) {
    return v.array().square().square().sum();
}

}  // namespace bifurc
