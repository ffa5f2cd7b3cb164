#pragma once

#include <cmath>
#include <limits>
#include <string_view>
#include <vector>

#include "bifurc/error.hpp"

namespace bifurc {

enum class FixedPointStatus { converged, oscillating, diverged, budget_exhausted };

constexpr std::string_view to_string(FixedPointStatus s) {
    switch (s) {
    case FixedPointStatus::converged: return "converged";
    case FixedPointStatus::oscillating: return "oscillating";
    case FixedPointStatus::diverged: return "diverged";
    case FixedPointStatus::budget_exhausted: return "budget_exhausted";
    }
    return "unknown";
}

/// Outcome of a fixed-point iteration. `state` is the last finite iterate; `residual` is
/// ||F(state) - state|| (infinite when the run blew up).
template <typename State>
struct BasicFixedPoint {
    State state;
    FixedPointStatus status = FixedPointStatus::budget_exhausted;
    long iterations = 0;
    double residual = std::numeric_limits<double>::infinity();
    bool non_finite = false;

    bool converged() const { return status == FixedPointStatus::converged; }
};

struct IterationControl {
    double tol = 1e-10;
    long max_iter = 200000;
    double divergence = 1e6;
    double cycle_tol = 1e-8;        // ||x_{n+1} - x_{n-1}|| for a period-2 cycle, relative
    double cycle_min_step = 1e-6;   // a cycle must actually move
    std::vector<double>* step_norms = nullptr;  // optional trace of ||x_{n+1} - x_n||
};

inline void validate(const IterationControl& c) {
    require(c.tol > 0.0 && std::isfinite(c.tol), ErrorCode::InvalidParams, "tol must be > 0");
    require(c.max_iter >= 1, ErrorCode::InvalidParams, "max_iter must be >= 1");
}

/// Iterates x <- step(x) from `x` until the relative step drops below tol, the norm passes
/// the divergence threshold, a period-2 cycle appears, or the budget runs out.
/// Works for any Eigen dense state (vector or matrix); norms are Euclidean / Frobenius.
template <typename State, typename Step>
BasicFixedPoint<State> run_fixed_point(State x, Step&& step, const IterationControl& ctl) {
    validate(ctl);
    BasicFixedPoint<State> out;
    require(x.allFinite(), ErrorCode::NonFinite, "initial state is not finite");
    State previous;
    bool have_previous = false;

    for (long it = 1; it <= ctl.max_iter; ++it) {
        State next = step(x);
        out.iterations = it;
        if (!next.allFinite()) {
            out.state = std::move(x);
            out.status = FixedPointStatus::diverged;
            out.non_finite = true;
            return out;
        }
        const double next_norm = next.norm();
        if (next_norm > ctl.divergence) {
            out.state = std::move(next);
            out.status = FixedPointStatus::diverged;
            return out;
        }
        const double step_norm = (next - x).norm();
        if (ctl.step_norms) ctl.step_norms->push_back(step_norm);
        if (step_norm <= ctl.tol * (1.0 + x.norm())) {
            out.state = std::move(next);
            out.status = FixedPointStatus::converged;
            out.residual = (step(out.state) - out.state).norm();
            return out;
        }
        const double scale = 1.0 + next_norm;
        if (have_previous && step_norm > ctl.cycle_min_step * scale &&
            (next - previous).norm() <= ctl.cycle_tol * scale) {
            out.state = std::move(next);
            out.status = FixedPointStatus::oscillating;
            out.residual = (step(out.state) - out.state).norm();
            return out;
        }
        previous = std::move(x);
        have_previous = true;
        x = std::move(next);
    }
    out.state = std::move(x);
    out.status = FixedPointStatus::budget_exhausted;
    out.residual = (step(out.state) - out.state).norm();
    return out;
}

}  // namespace bifurc
