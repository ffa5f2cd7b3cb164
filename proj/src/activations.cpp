#include "bifurc/activations.hpp"

#include <charconv>
#include <cmath>
#include <vector>

namespace bifurc {

namespace {

constexpr double kZeroTol = 1e-8;

std::vector<double> parse_numbers(std::string_view text, std::string_view spec) {
    std::vector<double> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view item = text.substr(0, comma);
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        require(ec == std::errc() && ptr == item.data() + item.size(), ErrorCode::ConfigError,
                "bad number in activation spec '" + std::string(spec) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

}  // namespace

std::string_view to_string(BifurcationClass c) {
    switch (c) {
    case BifurcationClass::supercritical_pitchfork: return "supercritical_pitchfork";
    case BifurcationClass::transcritical: return "transcritical";
    case BifurcationClass::none_contractive: return "none_contractive";
    case BifurcationClass::unbounded: return "unbounded";
    }
    return "unknown";
}

Activation::Activation(ActivationKind kind, std::string name, double p0, double p1, bool odd)
    : kind_(kind), name_(std::move(name)), p0_(p0), p1_(p1), odd_(odd) {}

Activation Activation::sine() {
    Activation a(ActivationKind::sine, "sine", 0.0, 0.0, true);
    a.taylor_ = {1.0, 0.0, 1.0};
    return a;
}

Activation Activation::tanh() {
    Activation a(ActivationKind::tanh, "tanh", 0.0, 0.0, true);
    a.taylor_ = {1.0, 0.0, 2.0};
    return a;
}

Activation Activation::relu() {
    Activation a(ActivationKind::relu, "relu", 0.0, 0.0, false);
    a.taylor_ = {1.0, 0.0, 0.0};
    return a;
}

Activation Activation::fisher_tanh(double scale) {
    require(std::isfinite(scale) && scale > 0.0, ErrorCode::InvalidParams, "fisher_tanh needs a > 0");
    Activation a(ActivationKind::fisher_tanh, "fisher_tanh:" + std::to_string(scale), scale, 0.0, true);
    a.taylor_ = {1.0, 0.0, 2.0 * scale * scale};
    return a;
}

Activation Activation::cubic(double alpha, double gamma) {
    require(std::isfinite(alpha) && std::isfinite(gamma), ErrorCode::InvalidParams,
            "cubic coefficients must be finite");
    Activation a(ActivationKind::cubic, "cubic:" + std::to_string(alpha) + "," + std::to_string(gamma),
                 alpha, gamma, true);
    a.taylor_ = {alpha, 0.0, gamma};
    return a;
}

Activation Activation::quadratic(double alpha, double beta) {
    require(std::isfinite(alpha) && std::isfinite(beta), ErrorCode::InvalidParams,
            "quadratic coefficients must be finite");
    Activation a(ActivationKind::quadratic,
                 "quadratic:" + std::to_string(alpha) + "," + std::to_string(beta), alpha, beta, beta == 0.0);
    a.taylor_ = {alpha, beta, 0.0};
    return a;
}

Activation Activation::custom(std::string name, Fn value, Fn derivative, bool odd) {
    require(static_cast<bool>(value), ErrorCode::InvalidParams, "custom activation needs a value callback");
    require(std::abs(value(0.0)) <= kZeroTol, ErrorCode::InvalidParams, "custom activation must vanish at 0");
    Activation a(ActivationKind::custom, std::move(name), 0.0, 0.0, odd);
    a.value_ = std::move(value);
    a.derivative_ = std::move(derivative);
    a.taylor_ = numeric_taylor(a.value_);
    if (odd) a.taylor_.beta = 0.0;
    return a;
}

Activation Activation::parse(std::string_view spec) {
    const auto colon = spec.find(':');
    const std::string_view head = spec.substr(0, colon);
    const std::vector<double> args =
        colon == std::string_view::npos ? std::vector<double>{} : parse_numbers(spec.substr(colon + 1), spec);
    auto expect = [&](std::size_t count) {
        require(args.size() == count, ErrorCode::ConfigError,
                "activation '" + std::string(head) + "' takes " + std::to_string(count) + " parameter(s)");
    };
    try {
        if (head == "sine" || head == "sin") return expect(0), sine();
        if (head == "tanh") return expect(0), tanh();
        if (head == "relu") return expect(0), relu();
        if (head == "fisher_tanh") return expect(1), fisher_tanh(args[0]);
        if (head == "cubic") return expect(2), cubic(args[0], args[1]);
        if (head == "quadratic") return expect(2), quadratic(args[0], args[1]);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ConfigError) throw;
        throw Error(ErrorCode::ConfigError, e.what());
    }
    throw Error(ErrorCode::ConfigError, "unknown activation '" + std::string(spec) + "'");
}

double Activation::operator()(double z) const {
    switch (kind_) {
    case ActivationKind::sine: return std::sin(z);
    case ActivationKind::tanh: return std::tanh(z);
    case ActivationKind::relu: return z > 0.0 ? z : 0.0;
    case ActivationKind::fisher_tanh: return std::tanh(p0_ * z) / p0_;
    case ActivationKind::cubic: return p0_ * z - p1_ / 6.0 * z * z * z;
    case ActivationKind::quadratic: return p0_ * z + p1_ / 2.0 * z * z;
    case ActivationKind::custom: break;
    }
    return value_(z);
}

double Activation::derivative(double z) const {
    switch (kind_) {
    case ActivationKind::sine: return std::cos(z);
    case ActivationKind::tanh: {
        const double t = std::tanh(z);
        return 1.0 - t * t;
    }
    case ActivationKind::relu: return z >= 0.0 ? 1.0 : 0.0;
    case ActivationKind::fisher_tanh: {
        const double t = std::tanh(p0_ * z);
        return 1.0 - t * t;
    }
    case ActivationKind::cubic: return p0_ - p1_ / 2.0 * z * z;
    case ActivationKind::quadratic: return p0_ + p1_ * z;
    case ActivationKind::custom: break;
    }
    if (derivative_) return derivative_(z);
    const double h = 1e-6 * std::max(1.0, std::abs(z));
    return (value_(z + h) - value_(z - h)) / (2.0 * h);
}

Taylor numeric_taylor(const Activation::Fn& f) {
    // Steps balance truncation against cancellation for each derivative order.
    const double h1 = 1e-5, h2 = 1e-4, h3 = 1e-2;
    Taylor t;
    t.alpha = (f(h1) - f(-h1)) / (2.0 * h1);
    t.beta = (f(h2) - 2.0 * f(0.0) + f(-h2)) / (h2 * h2);
    // Five-point stencil for the third derivative, O(h^2), then one Richardson step.
    auto third = [&](double h) { return (f(2 * h) - 2.0 * f(h) + 2.0 * f(-h) - f(-2 * h)) / (2.0 * h * h * h); };
    t.gamma = -(4.0 * third(h3 / 2) - third(h3)) / 3.0;
    auto snap = [](double& v) {
        if (std::abs(v) < 1e-6) v = 0.0;
    };
    snap(t.beta);
    snap(t.gamma);
    return t;
}

BifurcationClass classify(const Taylor& t) {
    const bool beta_zero = std::abs(t.beta) <= kZeroTol;
    const bool gamma_zero = std::abs(t.gamma) <= kZeroTol;
    if (t.alpha <= 0.0) return BifurcationClass::none_contractive;
    if (beta_zero && t.gamma > kZeroTol) return BifurcationClass::supercritical_pitchfork;
    if (!beta_zero && gamma_zero) return BifurcationClass::transcritical;
    if (beta_zero && gamma_zero) return BifurcationClass::unbounded;
    return BifurcationClass::none_contractive;
}

double effective_potential_1d(const Activation& a, double w, double x) {
    require(std::isfinite(w) && std::isfinite(x), ErrorCode::InvalidParams, "potential needs finite w and x");
    if (x == 0.0) return 0.0;
    constexpr int panels = 1024;
    const double h = x / panels;
    auto integrand = [&](double s) { return s - a(w * s); };
    double sum = integrand(0.0) + integrand(x);
    for (int i = 1; i < panels; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * integrand(i * h);
    return sum * h / 3.0;
}

}  // namespace bifurc
