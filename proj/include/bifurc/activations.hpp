#pragma once

#include <functional>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "bifurc/error.hpp"

namespace bifurc {

enum class ActivationKind { sine, tanh, relu, fisher_tanh, cubic, quadratic, custom };

enum class BifurcationClass { supercritical_pitchfork, transcritical, none_contractive, unbounded };

std::string_view to_string(BifurcationClass c);

/// Taylor data at the origin: alpha = phi'(0), beta = phi''(0), gamma = -phi'''(0).
struct Taylor {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

/// Pointwise nonlinearity with phi(0) = 0.
///
/// Built-in kinds:
///   sine            sin(z)                       alpha=1, beta=0, gamma=1
///   tanh            tanh(z)                      alpha=1, beta=0, gamma=2
///   relu            max(z, 0), phi'(0) := 1      alpha=1, beta=0, gamma=0
///   fisher_tanh(a)  tanh(a z) / a                alpha=1, beta=0, gamma=2a^2
///   cubic(al, ga)   al z - ga z^3 / 6            alpha=al, beta=0, gamma=ga
///   quadratic(al,b) al z + b z^2 / 2             alpha=al, beta=b, gamma=0
/// Custom activations wrap callbacks; their Taylor data is always measured numerically.
class Activation {
public:
    using Fn = std::function<double(double)>;

    static Activation sine();
    static Activation tanh();
    static Activation relu();
    static Activation fisher_tanh(double a);
    static Activation cubic(double alpha, double gamma);
    static Activation quadratic(double alpha, double beta);
    /// `derivative` may be empty, in which case a central difference is used.
    static Activation custom(std::string name, Fn value, Fn derivative, bool odd);

    /// Names accepted by the command line: "sine" | "tanh" | "relu" | "fisher_tanh:a" |
    /// "cubic:alpha,gamma" | "quadratic:alpha,beta".
    static Activation parse(std::string_view spec);

    ActivationKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    const Taylor& taylor() const { return taylor_; }
    double alpha() const { return taylor_.alpha; }
    double beta() const { return taylor_.beta; }
    double gamma() const { return taylor_.gamma; }
    bool odd() const { return odd_; }

    double operator()(double z) const;
    double derivative(double z) const;

    /// Elementwise phi over any dense expression; no finiteness check.
    template <typename Derived>
    typename Derived::PlainObject apply(const Eigen::MatrixBase<Derived>& z) const {
        switch (kind_) {
        case ActivationKind::sine: return z.array().sin().matrix();
        case ActivationKind::tanh: return z.array().tanh().matrix();
        case ActivationKind::relu: return z.array().max(0.0).matrix();
        case ActivationKind::fisher_tanh: return ((p0_ * z.array()).tanh() / p0_).matrix();
        case ActivationKind::cubic: return (p0_ * z.array() - p1_ / 6.0 * z.array().cube()).matrix();
        case ActivationKind::quadratic: return (p0_ * z.array() + p1_ / 2.0 * z.array().square()).matrix();
        case ActivationKind::custom: break;
        }
        return z.unaryExpr([this](double v) { return value_(v); });
    }

    template <typename Derived>
    typename Derived::PlainObject apply_derivative(const Eigen::MatrixBase<Derived>& z) const {
        return z.unaryExpr([this](double v) { return derivative(v); });
    }

private:
    Activation(ActivationKind kind, std::string name, double p0, double p1, bool odd);

    ActivationKind kind_;
    std::string name_;
    double p0_ = 0.0;
    double p1_ = 0.0;
    bool odd_ = false;
    Taylor taylor_;
    Fn value_;
    Fn derivative_;
};

/// Elementwise evaluation; throws NonFinite on non-finite input.
template <typename Derived>
typename Derived::PlainObject eval(const Activation& a, const Eigen::MatrixBase<Derived>& z) {
    require(z.allFinite(), ErrorCode::NonFinite, "activation input is not finite");
    return a.apply(z);
}

template <typename Derived>
typename Derived::PlainObject deriv(const Activation& a, const Eigen::MatrixBase<Derived>& z) {
    require(z.allFinite(), ErrorCode::NonFinite, "activation input is not finite");
    return a.apply_derivative(z);
}

/// Taylor coefficients at 0 from central finite differences of `f`.
Taylor numeric_taylor(const Activation::Fn& f);

BifurcationClass classify(const Taylor& t);
inline BifurcationClass classify(const Activation& a) { return classify(a.taylor()); }

/// V(x) = integral_0^x [s - phi(w s)] ds (composite Simpson, 1024 panels).
double effective_potential_1d(const Activation& a, double w, double x);

}  // namespace bifurc
