#include <doctest.h>

#include <cmath>

#include "bifurc/ntk.hpp"
#include "support.hpp"

using namespace bifurc;

namespace {

const Graph& triangle() {
    static const Graph g = generate(model::Complete{}, 3, 0);
    return g;
}

MapConfig tight(double w) {
    MapConfig c;
    c.w = w;
    c.tol = 1e-13;
    c.seed = 2;
    return c;
}

}  // namespace

TEST_CASE("supercritical kernel on the triangle") {
    const KernelReport r = ntk_supercritical(triangle(), tight(1.02), 0);
    CHECK(r.regime == KernelRegime::supercritical_fd);
    CHECK(r.mu == doctest::Approx(0.02));
    CHECK(r.h == doctest::Approx(1e-4));
    CHECK(r.alignment >= 0.999);
    CHECK(max_asymmetry(r.kernel) <= 1e-10);
    CHECK(std::abs(r.top_eigenvalue - r.trace) <= 1e-8 * r.trace);
    const auto s = symmetric_eigen(r.kernel);
    CHECK(s.values.minCoeff() >= -1e-8 * r.trace);
    CHECK(std::abs(s.values(1)) <= 1e-10 * s.values(0));
}

TEST_CASE("finite-difference step robustness") {
    const Graph g = generate(model::WattsStrogatz{4, 0.1}, 30, 3);
    for (double mu : {0.02, 0.05}) {
        const MapConfig c = tight((1 + mu) / g.eigenvalue(0));
        const double full = ntk_supercritical(g, c, 0, 1e-4).trace;
        const double half = ntk_supercritical(g, c, 0, 5e-5).trace;
        CHECK(std::abs(full - half) <= 0.01 * full);
    }
}

TEST_CASE("ntk_supercritical preconditions") {
    auto code_of = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::NumericFailure;
    };
    CHECK(code_of([] { ntk_supercritical(triangle(), tight(0.99), 0); }) == ErrorCode::SubcriticalInput);
    CHECK(code_of([] { ntk_supercritical(triangle(), tight(1.3), 0); }) == ErrorCode::SubcriticalInput);
    CHECK(code_of([] { ntk_supercritical(triangle(), tight(1.001), 0, 0.01); }) == ErrorCode::SubcriticalInput);
}

TEST_CASE("subcritical kernel") {
    const KernelReport zero = ntk_subcritical(triangle(), Activation::sine(), 0.0);
    CHECK((zero.kernel - MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-12);

    const KernelReport half = ntk_subcritical(triangle(), Activation::sine(), 0.5);
    const auto s = symmetric_eigen(half.kernel);
    CHECK(s.values(0) == doctest::Approx(4.0));
    CHECK(s.values(1) == doctest::Approx(0.64));
    CHECK(s.values(2) == doctest::Approx(0.64));
    CHECK(half.regime == KernelRegime::subcritical_analytic);

    // Dense oracle: (I - alpha w A_hat)^-2.
    for (const GraphModel& m : testing::small_models()) {
        const Graph g = generate(m, 24, 4);
        for (double w : {0.3, 0.7, 0.95}) {
            const Activation a = Activation::tanh();
            const KernelReport r = ntk_subcritical(g, a, w);
            const MatrixXd resolvent =
                (MatrixXd::Identity(24, 24) - a.alpha() * w * g.norm_adjacency()).inverse();
            CHECK((r.kernel - resolvent * resolvent).cwiseAbs().maxCoeff() <= 1e-8);
            CHECK(max_asymmetry(r.kernel) <= 1e-10);
            CHECK(r.top_eigenvalue <= 1.0 / std::pow(1 - a.alpha() * w * g.eigenvalue(0), 2) + 1e-8);
            CHECK(symmetric_eigen(r.kernel).values.minCoeff() >= -1e-8 * r.trace);
        }
    }

    try {
        ntk_subcritical(triangle(), Activation::sine(), 1.0);
        FAIL("expected SupercriticalInput");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SupercriticalInput);
    }
}
