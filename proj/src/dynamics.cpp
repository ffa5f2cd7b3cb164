#include "bifurc/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "bifurc/parallel.hpp"
#include "bifurc/random.hpp"

namespace bifurc {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

IterationControl control_of(const MapConfig& cfg, std::vector<double>* step_norms) {
    IterationControl c;
    c.tol = cfg.tol;
    c.max_iter = cfg.max_iter;
    c.step_norms = step_norms;
    return c;
}

void require_mode(const OperatorSpectrum& spec, Eigen::Index k) {
    require(k >= 0 && k < spec.values.size(), ErrorCode::InvalidParams,
            "mode index " + std::to_string(k) + " out of range");
}

TheoryPrediction theory_from_spectrum(const OperatorSpectrum& spec, const Activation& a, Eigen::Index k,
                                      double w) {
    require_mode(spec, k);
    require(std::isfinite(w), ErrorCode::InvalidParams, "coupling must be finite");
    require(a.gamma() > 0.0, ErrorCode::UnsupportedActivation,
            "theory needs gamma > 0 (activation '" + a.name() + "')");
    require(a.alpha() > 0.0, ErrorCode::UnsupportedActivation, "theory needs alpha > 0");
    const double lambda = spec.values(k);
    const Eigen::Index n = spec.values.size();
    const bool simple = (k == 0 || spec.values(k - 1) - lambda > kSimpleGapTol) &&
                        (k == n - 1 || lambda - spec.values(k + 1) > kSimpleGapTol);
    require(simple, ErrorCode::NonSimpleMode, "mode " + std::to_string(k) + " is not simple");
    require(lambda > 0.0, ErrorCode::InvalidParams, "theory needs a positive operator eigenvalue");

    const double kappa = spec.kappa(k);
    const double wl3 = std::pow(w * lambda, 3);
    TheoryPrediction t;
    t.w_k = 1.0 / (a.alpha() * lambda);
    t.mu = a.alpha() * w * lambda - 1.0;
    // L is PSD; clamp the roundoff in 1 - lambda_1 for connected graphs.
    t.energy_constant = 6.0 * std::max(0.0, 1.0 - spec.adjacency_values(k)) / (a.gamma() * wl3 * kappa);
    t.landau_quadratic = (1.0 - a.alpha() * w * lambda) / 2.0;
    t.landau_quartic = a.gamma() * wl3 * kappa / 24.0;
    if (t.mu > 0.0) {
        t.a_star = std::sqrt(6.0 * t.mu / (a.gamma() * wl3 * kappa));
        t.ed_star = t.energy_constant * t.mu;
    }
    return t;
}

}  // namespace

std::string describe(const OperatorMode& mode) {
    if (std::holds_alternative<op::NormAdjacency>(mode)) return "norm_adjacency";
    if (std::holds_alternative<op::NormLaplacian>(mode)) return "norm_laplacian";
    return "filtered(order " + std::to_string(std::get<op::Filtered>(mode).filter.order()) + ")";
}

OperatorSpectrum operator_spectrum(const Graph& g, const OperatorMode& mode) {
    const Eigen::Index n = g.size();
    OperatorSpectrum spec;
    VectorXd raw;
    if (std::holds_alternative<op::NormAdjacency>(mode)) {
        spec.op = g.norm_adjacency();
        raw = g.eigenvalues();
    } else if (std::holds_alternative<op::NormLaplacian>(mode)) {
        spec.op = g.norm_laplacian();
        raw = (1.0 - g.eigenvalues().array()).matrix();
    } else {
        FilteredOperator filtered = apply_filter(g, std::get<op::Filtered>(mode).filter);
        spec.op = std::move(filtered.op);
        raw = std::move(filtered.values);
    }
    spec.graph_index.resize(static_cast<std::size_t>(n));
    std::iota(spec.graph_index.begin(), spec.graph_index.end(), Eigen::Index(0));
    std::stable_sort(spec.graph_index.begin(), spec.graph_index.end(),
                     [&](Eigen::Index l, Eigen::Index r) { return raw(l) > raw(r); });
    spec.values.resize(n);
    spec.vectors.resize(n, n);
    spec.kappa.resize(n);
    spec.adjacency_values.resize(n);
    for (Eigen::Index c = 0; c < n; ++c) {
        const Eigen::Index src = spec.graph_index[static_cast<std::size_t>(c)];
        spec.values(c) = raw(src);
        spec.vectors.col(c) = g.eigenvector(src);
        spec.kappa(c) = g.kappa()(src);
        spec.adjacency_values(c) = g.eigenvalue(src);
    }
    return spec;
}

void validate(const MapConfig& cfg) {
    require(std::isfinite(cfg.w), ErrorCode::InvalidParams, "w must be finite");
    require(cfg.tol > 0.0 && std::isfinite(cfg.tol), ErrorCode::InvalidParams, "tol must be > 0");
    require(cfg.max_iter >= 1, ErrorCode::InvalidParams, "max_iter must be >= 1");
    require(cfg.init_scale > 0.0 && std::isfinite(cfg.init_scale), ErrorCode::InvalidParams,
            "init_scale must be > 0");
    if (const auto* f = std::get_if<op::Filtered>(&cfg.mode)) validate(f->filter);
}

FixedPointResult iterate_operator(const MatrixXd& op, const MapConfig& cfg, const VectorXd& start,
                                  std::vector<double>* step_norms) {
    validate(cfg);
    require(op.rows() == op.cols() && op.rows() == start.size(), ErrorCode::InvalidParams,
            "operator and state dimensions differ");
    const MatrixXd scaled = cfg.w * op;
    const Activation& a = cfg.activation;
    VectorXd pre(start.size());
    return run_fixed_point(
        VectorXd(start),
        [&](const VectorXd& x) {
            pre.noalias() = scaled * x;
            return a.apply(pre);
        },
        control_of(cfg, step_norms));
}

FixedPointResult iterate(const Graph& g, const MapConfig& cfg, const VectorXd* start,
                         std::vector<double>* step_norms) {
    validate(cfg);
    VectorXd x0;
    if (start) {
        require(start->size() == g.size(), ErrorCode::InvalidParams, "start vector has wrong size");
        x0 = *start;
    } else {
        Rng rng = rng_stream(cfg.seed);
        x0 = cfg.init_scale * gaussian_vector(g.size(), rng);
    }
    return iterate_operator(operator_spectrum(g, cfg.mode).op, cfg, x0, step_norms);
}

double amplitude(const Graph& g, Eigen::Index k, const VectorXd& x) {
    require(k >= 0 && k < g.size(), ErrorCode::InvalidParams, "mode index out of range");
    require(x.size() == g.size(), ErrorCode::InvalidParams, "state has wrong size");
    return g.eigenvector(k).dot(x);
}

MatrixXd jacobian(const MatrixXd& op, const Activation& a, double w, const VectorXd& x) {
    require(x.allFinite(), ErrorCode::NonFinite, "state is not finite");
    const VectorXd slope = a.apply_derivative((w * op * x).eval());
    return ((w * op).array().colwise() * slope.array()).matrix();
}

RadiusEstimate jacobian_radius(const Graph& g, const MapConfig& cfg, const VectorXd& x_star) {
    GelfandOptions opts;
    opts.power = 200;
    opts.starts = 5;
    opts.seed = cfg.seed;
    return gelfand_radius(jacobian(operator_spectrum(g, cfg.mode).op, cfg.activation, cfg.w, x_star), opts);
}

double critical_multiplier(const Graph& g, const MapConfig& cfg, Eigen::Index k, const VectorXd& x_star) {
    const OperatorSpectrum spec = operator_spectrum(g, cfg.mode);
    require_mode(spec, k);
    const VectorXd u = spec.vectors.col(k);
    return u.dot(jacobian(spec.op, cfg.activation, cfg.w, x_star) * u);
}

TheoryPrediction theory_predictions(const Graph& g, const Activation& a, Eigen::Index k, double w,
                                    const OperatorMode& mode) {
    return theory_from_spectrum(operator_spectrum(g, mode), a, k, w);
}

std::vector<SweepRecord> sweep_coupling(const Graph& g, const MapConfig& base, Eigen::Index k,
                                        const std::vector<double>& w_values,
                                        const std::vector<double>& controls) {
    validate(base);
    require(controls.empty() || controls.size() == w_values.size(), ErrorCode::InvalidParams,
            "controls and w_values differ in length");
    for (std::size_t i = 0; i < w_values.size(); ++i) {
        require(std::isfinite(w_values[i]), ErrorCode::InvalidParams, "w values must be finite");
        require(i == 0 || w_values[i - 1] <= w_values[i], ErrorCode::InvalidParams, "w values must be sorted");
    }
    const OperatorSpectrum spec = operator_spectrum(g, base.mode);
    require_mode(spec, k);
    const VectorXd u = spec.vectors.col(k);
    GelfandOptions radius_opts;
    radius_opts.power = 200;
    radius_opts.seed = base.seed;

    std::vector<SweepRecord> out;
    out.reserve(w_values.size());
    VectorXd previous = VectorXd::Zero(g.size());
    for (std::size_t i = 0; i < w_values.size(); ++i) {
        MapConfig cfg = base;
        cfg.w = w_values[i];
        Rng rng = rng_stream(base.seed, i);
        const VectorXd start = previous + cfg.init_scale * gaussian_vector(g.size(), rng);
        FixedPointResult fp = iterate_operator(spec.op, cfg, start);

        SweepRecord rec;
        rec.control = controls.empty() ? cfg.w : controls[i];
        rec.mu = cfg.activation.alpha() * cfg.w * spec.values(k) - 1.0;
        rec.status = fp.status;
        rec.iterations = fp.iterations;
        rec.amplitude_signed = u.dot(fp.state);
        rec.amplitude_measured = std::abs(rec.amplitude_signed);
        rec.dirichlet_measured = dirichlet_energy(g, fp.state);
        rec.jacobian_radius =
            fp.non_finite ? kNaN
                          : gelfand_radius(jacobian(spec.op, cfg.activation, cfg.w, fp.state), radius_opts).value;
        try {
            const TheoryPrediction t = theory_from_spectrum(spec, cfg.activation, k, cfg.w);
            rec.amplitude_theory = t.a_star;
            rec.dirichlet_theory = t.ed_star;
        } catch (const Error&) {
            rec.amplitude_theory = rec.dirichlet_theory = kNaN;
        }
        out.push_back(rec);
        if (!fp.non_finite && fp.status != FixedPointStatus::diverged) previous = fp.state;
    }
    return out;
}

std::vector<PhaseCell> phase_diagram(const Graph& g, const std::vector<double>& alpha_values,
                                     const std::vector<double>& w_values, const MapConfig& base,
                                     unsigned threads) {
    require(!alpha_values.empty() && !w_values.empty(), ErrorCode::InvalidParams, "grids must be nonempty");
    validate(base);
    const OperatorSpectrum spec = operator_spectrum(g, op::NormLaplacian{});
    const double lambda = spec.values(0);
    const std::size_t nw = w_values.size();
    std::vector<PhaseCell> cells(alpha_values.size() * nw);

    parallel_for(
        cells.size(),
        [&](std::size_t idx) {
            MapConfig cfg = base;
            cfg.mode = op::NormLaplacian{};
            cfg.activation = Activation::cubic(alpha_values[idx / nw], 1.0);
            cfg.w = w_values[idx % nw];
            Rng rng = rng_stream(base.seed, idx);
            const VectorXd start = cfg.init_scale * gaussian_vector(g.size(), rng);
            const FixedPointResult fp = iterate_operator(spec.op, cfg, start);
            PhaseCell& cell = cells[idx];
            cell.alpha = alpha_values[idx / nw];
            cell.w = cfg.w;
            cell.alpha_w_lambda = cell.alpha * cell.w * lambda;
            cell.status = fp.status;
            cell.ed = fp.non_finite ? kNaN : dirichlet_energy(g, fp.state);
        },
        threads);
    return cells;
}

PatternResult pattern_select(const Graph& g, const MapConfig& base, const PolynomialFilter& f) {
    MapConfig cfg = base;
    cfg.mode = op::Filtered{f};
    validate(cfg);
    require(cfg.activation.alpha() > 0.0, ErrorCode::UnsupportedActivation, "pattern selection needs alpha > 0");
    const OperatorSpectrum spec = operator_spectrum(g, cfg.mode);
    const double gain = cfg.activation.alpha() * cfg.w;
    Rng rng = rng_stream(cfg.seed);
    const VectorXd start = cfg.init_scale * gaussian_vector(g.size(), rng);

    PatternResult out;
    const Eigen::Index n = spec.values.size();
    if (n > 1) out.filtered_gap = gain * (spec.values(0) - spec.values(1));
    if (gain * spec.values(0) <= 1.0) {
        out.fixed_point = iterate_operator(spec.op, cfg, start);
        return out;
    }
    require(n == 1 || spec.values(0) - spec.values(1) > kSimpleGapTol, ErrorCode::NonSimpleMode,
            "largest filtered eigenvalue is degenerate");
    const double runner_up = n > 1 ? spec.values.tail(n - 1).cwiseAbs().maxCoeff() : 0.0;
    require(gain * runner_up < 1.0, ErrorCode::MultiModeRegime,
            "more than one mode is unstable at this coupling");

    out.fixed_point = iterate_operator(spec.op, cfg, start);
    out.selected_mode = spec.graph_index.front();
    const VectorXd& x = out.fixed_point.state;
    const double norm = x.norm();
    out.alignment = norm > 0.0 ? std::abs(spec.vectors.col(0).dot(x)) / norm : 0.0;
    return out;
}

}  // namespace bifurc
