#include "bifurc/multidim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bifurc/parallel.hpp"
#include "bifurc/random.hpp"

namespace bifurc {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct SingularTriple {
    double sigma = 0.0;
    VectorXd u;
    VectorXd v;
};

/// Leading singular triple by alternating power iteration. Starts from the row of largest
/// norm, so the result is deterministic.
SingularTriple power_svd(const MatrixXd& x, double tol) {
    SingularTriple t;
    Eigen::Index row = 0;
    x.rowwise().norm().maxCoeff(&row);
    t.v = x.row(row).transpose();
    t.v.normalize();
    double previous = 0.0;
    for (int it = 0; it < 100000; ++it) {
        t.u = x * t.v;
        const double un = t.u.norm();
        if (un == 0.0) break;
        t.u /= un;
        VectorXd v_next = x.transpose() * t.u;
        t.sigma = v_next.norm();
        if (t.sigma == 0.0) break;
        v_next /= t.sigma;
        const double change = (v_next - t.v).norm();
        t.v = std::move(v_next);
        if (std::abs(t.sigma - previous) <= tol * t.sigma && change <= std::sqrt(tol)) break;
        previous = t.sigma;
    }
    return t;
}

double finite_mean(const std::vector<double>& xs, double* stddev) {
    double sum = 0.0;
    int count = 0;
    for (double x : xs)
        if (std::isfinite(x)) sum += x, ++count;
    if (count == 0) {
        if (stddev) *stddev = kNaN;
        return kNaN;
    }
    const double mean = sum / count;
    if (stddev) {
        double sq = 0.0;
        for (double x : xs)
            if (std::isfinite(x)) sq += (x - mean) * (x - mean);
        *stddev = count > 1 ? std::sqrt(sq / (count - 1)) : 0.0;
    }
    return mean;
}

}  // namespace

std::string_view to_string(EnsembleKind k) { return k == EnsembleKind::ginibre ? "ginibre" : "wigner"; }

EnsembleKind parse_ensemble(std::string_view name) {
    if (name == "ginibre") return EnsembleKind::ginibre;
    if (name == "wigner") return EnsembleKind::wigner;
    throw Error(ErrorCode::ConfigError, "unknown ensemble '" + std::string(name) + "'");
}

MatrixXd standard_sample(EnsembleKind kind, int d, Rng& rng) {
    require(d >= 1, ErrorCode::InvalidParams, "ensemble dimension must be >= 1");
    MatrixXd g = gaussian_matrix(d, d, rng);
    if (kind == EnsembleKind::wigner) g = (g + g.transpose()).eval() / std::sqrt(2.0);
    return g;
}

MatrixXd sample(const WeightEnsemble& ens) {
    require(ens.v > 0.0 && std::isfinite(ens.v), ErrorCode::InvalidParams, "ensemble variance must be > 0");
    Rng rng = rng_stream(ens.seed);
    return std::sqrt(ens.v) * standard_sample(ens.kind, ens.d, rng);
}

RadiusEstimate spectral_radius(const MatrixXd& w) {
    GelfandOptions opts;
    opts.power = 300;
    opts.starts = 5;
    return gelfand_radius(w, opts);
}

KronCheck kron_spectrum_check(const Graph& g, const MatrixXd& w, double tol) {
    require(w.rows() == w.cols(), ErrorCode::InvalidParams, "W must be square");
    require(g.size() * w.rows() <= 400, ErrorCode::TooLarge, "n * d exceeds 400");
    require(max_asymmetry(w) <= 1e-10, ErrorCode::NotSymmetric, "W must be symmetric");
    const VectorXd sigma = symmetric_eigen(w).values;
    const Eigen::Index n = g.size(), d = w.rows();

    KronCheck out;
    out.products.resize(n * d);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index m = 0; m < d; ++m) out.products(r * d + m) = g.eigenvalue(r) * sigma(m);
    std::sort(out.products.begin(), out.products.end());
    out.direct = symmetric_eigen(kronecker(w.transpose(), g.norm_adjacency())).values;
    std::sort(out.direct.begin(), out.direct.end());
    out.max_error = (out.products - out.direct).cwiseAbs().maxCoeff();
    out.match = out.max_error <= tol;
    return out;
}

MatrixFixedPoint iterate_matrix(const Graph& g, const MatrixXd& w, const MatrixMapConfig& cfg,
                                const MatrixXd* start) {
    require(w.rows() == w.cols(), ErrorCode::InvalidParams, "W must be square");
    require(std::isfinite(cfg.s), ErrorCode::InvalidParams, "scale must be finite");
    require(cfg.init_scale > 0.0, ErrorCode::InvalidParams, "init_scale must be > 0");
    MatrixXd x0;
    if (start) {
        require(start->rows() == g.size() && start->cols() == w.rows(), ErrorCode::InvalidParams,
                "start matrix has wrong shape");
        x0 = *start;
    } else {
        Rng rng = rng_stream(cfg.seed);
        x0 = cfg.init_scale * gaussian_matrix(g.size(), w.rows(), rng);
    }
    const MatrixXd scaled = cfg.s * operator_spectrum(g, cfg.mode).op;
    const Activation& a = cfg.activation;
    MatrixXd mixed(x0.rows(), x0.cols());
    IterationControl ctl;
    ctl.tol = cfg.tol;
    ctl.max_iter = cfg.max_iter;
    return run_fixed_point(
        std::move(x0),
        [&](const MatrixXd& x) {
            mixed.noalias() = x * w;
            return a.apply((scaled * mixed).eval());
        },
        ctl);
}

RankOnePattern rank_one_decompose(const MatrixXd& x, double tol) {
    require(x.allFinite(), ErrorCode::NonFinite, "matrix is not finite");
    require(x.size() > 0 && x.cwiseAbs().maxCoeff() > 0.0, ErrorCode::ZeroMatrix, "matrix is zero");
    SingularTriple lead = power_svd(x, tol);

    RankOnePattern out;
    Eigen::Index iu = 0, iv = 0;
    lead.u.cwiseAbs().maxCoeff(&iu);
    lead.v.cwiseAbs().maxCoeff(&iv);
    const double su = lead.u(iu) < 0 ? -1.0 : 1.0;
    const double sv = lead.v(iv) < 0 ? -1.0 : 1.0;
    out.graph_mode = su * lead.u;
    out.feature_mode = sv * lead.v;
    out.amplitude = su * sv * lead.sigma;

    const MatrixXd rest = x - lead.sigma * lead.u * lead.v.transpose();
    if (rest.norm() > 1e-14 * lead.sigma) {
        const SingularTriple second = power_svd(rest, tol);
        out.residual_ratio = std::min(1.0, second.sigma / lead.sigma);
    }
    return out;
}

double rank_one_amplitude(const Activation& a, double s, double lambda_k, double kappa_k, double sigma_j,
                          double xi_j) {
    require(a.gamma() > 0.0, ErrorCode::UnsupportedActivation, "amplitude formula needs gamma > 0");
    const double mu = a.alpha() * lambda_k * std::abs(sigma_j) * s - 1.0;
    if (mu <= 0.0) return 0.0;
    const double cube = std::pow(std::abs(s * lambda_k * sigma_j), 3);
    return std::sqrt(6.0 * mu / (a.gamma() * cube * kappa_k * xi_j));
}

double critical_variance(int d, double lambda_k, double alpha, EnsembleKind kind, double delta) {
    require(d >= 1, ErrorCode::InvalidParams, "d must be >= 1");
    require(lambda_k > 0.0 && std::isfinite(lambda_k), ErrorCode::InvalidParams, "lambda_k must be > 0");
    require(alpha > 0.0 && std::isfinite(alpha), ErrorCode::InvalidParams, "alpha must be > 0");
    require(delta > -1.0 && std::isfinite(delta), ErrorCode::InvalidParams, "delta must be > -1");
    const double base = (1.0 + delta) / (d * lambda_k * lambda_k * alpha * alpha);
    return kind == EnsembleKind::wigner ? base / 4.0 : base;
}

double sweep_critical_variance(const Graph& g, const Activation& a, const VarianceSweepConfig& cfg) {
    return critical_variance(cfg.d, operator_spectrum(g, cfg.mode).values(0), a.alpha(), cfg.kind, 0.0);
}

std::vector<VarianceRecord> variance_sweep(const Graph& g, const Activation& a,
                                           const std::vector<double>& v_values,
                                           const VarianceSweepConfig& cfg) {
    require(cfg.trials >= 1, ErrorCode::InvalidParams, "trials must be >= 1");
    require(!v_values.empty(), ErrorCode::InvalidParams, "variance grid must be nonempty");
    for (double v : v_values) require(v > 0.0 && std::isfinite(v), ErrorCode::InvalidParams, "variances must be > 0");
    const double vc = sweep_critical_variance(g, a, cfg);
    const std::size_t trials = static_cast<std::size_t>(cfg.trials);

    std::vector<MatrixXd> bases(trials), starts(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = rng_stream(cfg.seed, t);
        bases[t] = standard_sample(cfg.kind, cfg.d, rng);
        starts[t] = cfg.init_scale * gaussian_matrix(g.size(), cfg.d, rng);
    }

    std::vector<double> energies(v_values.size() * trials);
    std::vector<FixedPointStatus> statuses(energies.size());
    parallel_for(
        energies.size(),
        [&](std::size_t idx) {
            const std::size_t vi = idx / trials, t = idx % trials;
            MatrixMapConfig mc;
            mc.mode = cfg.mode;
            mc.activation = a;
            mc.s = 1.0;
            mc.tol = cfg.tol;
            mc.max_iter = cfg.max_iter;
            const MatrixXd w = std::sqrt(v_values[vi]) * bases[t];
            const MatrixFixedPoint fp = iterate_matrix(g, w, mc, &starts[t]);
            statuses[idx] = fp.status;
            energies[idx] = fp.non_finite ? kNaN : dirichlet_energy(g, fp.state);
        },
        cfg.threads);

    std::vector<VarianceRecord> out(v_values.size());
    for (std::size_t vi = 0; vi < v_values.size(); ++vi) {
        VarianceRecord& rec = out[vi];
        rec.v = v_values[vi];
        rec.v_over_vc = rec.v / vc;
        const std::vector<double> slice(energies.begin() + vi * trials, energies.begin() + (vi + 1) * trials);
        rec.mean_ed = finite_mean(slice, &rec.std_ed);
        rec.statuses.assign(statuses.begin() + vi * trials, statuses.begin() + (vi + 1) * trials);
        rec.n_converged = static_cast<int>(
            std::count(rec.statuses.begin(), rec.statuses.end(), FixedPointStatus::converged));
    }
    return out;
}

DepthProbe depth_probe(const Graph& g, const Activation& a, const DepthConfig& cfg) {
    require(cfg.layers >= 0, ErrorCode::InvalidParams, "layers must be >= 0");
    require(cfg.d >= 1, ErrorCode::InvalidParams, "d must be >= 1");
    const OperatorSpectrum spec = operator_spectrum(g, cfg.mode);
    DepthProbe out;
    out.variance = critical_variance(cfg.d, spec.values(0), a.alpha(), cfg.kind, cfg.delta);
    const double scale = std::sqrt(out.variance);

    Rng input_rng = rng_stream(cfg.seed, 0);
    MatrixXd x = gaussian_matrix(g.size(), cfg.d, input_rng);
    const double norm0 = x.norm();
    auto record = [&](int layer) {
        DepthLayer rec;
        rec.layer = layer;
        rec.non_finite = !x.allFinite();
        rec.frobenius_norm = rec.non_finite ? kNaN : x.norm();
        rec.collapsed = !rec.non_finite && rec.frobenius_norm <= cfg.collapse_floor * norm0;
        if (rec.non_finite)
            rec.ed_normalized = kNaN;
        else if (!rec.collapsed)
            rec.ed_normalized = dirichlet_energy(g, x) / (rec.frobenius_norm * rec.frobenius_norm);
        out.layers.push_back(rec);
        return rec;
    };
    record(0);
    for (int layer = 1; layer <= cfg.layers; ++layer) {
        Rng rng = rng_stream(cfg.seed, static_cast<std::uint64_t>(layer));
        const MatrixXd w = scale * standard_sample(cfg.kind, cfg.d, rng);
        x = a.apply((spec.op * x * w).eval());
        const DepthLayer rec = record(layer);
        if (rec.non_finite || rec.frobenius_norm > 1e6 * norm0) {
            out.diverged = true;
            return out;
        }
    }
    if (x.cwiseAbs().maxCoeff() > 0.0) {
        const RankOnePattern p = rank_one_decompose(x);
        out.final_alignment = std::abs(p.graph_mode.dot(spec.vectors.col(0)));
    }
    return out;
}

}  // namespace bifurc
