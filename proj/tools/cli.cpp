#include "cli.hpp"

#include <chrono>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "bifurc/bifurc.hpp"

#ifndef BIFURC_VERSION
#define BIFURC_VERSION "unknown"
#endif

namespace bifurc::cli {

namespace {

using nlohmann::json;

double parse_number(std::string_view text, std::string_view what) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    require(ec == std::errc() && ptr == text.data() + text.size() && !text.empty(), ErrorCode::ConfigError,
            "bad number '" + std::string(text) + "' in " + std::string(what));
    return value;
}

int parse_int(std::string_view text, std::string_view what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    require(ec == std::errc() && ptr == text.data() + text.size() && !text.empty(), ErrorCode::ConfigError,
            "bad integer '" + std::string(text) + "' in " + std::string(what));
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    for (;;) {
        const auto pos = text.find(sep);
        parts.push_back(text.substr(0, pos));
        if (pos == std::string_view::npos) return parts;
        text.remove_prefix(pos + 1);
    }
}

// A result table that can be written as CSV or JSON.
using Cell = std::variant<double, long, std::string>;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
    std::size_t failed = 0;  // cells counted toward the numeric-failure exit code

    void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

void write_csv(std::ostream& os, const Table& t) {
    CsvWriter w(os, t.header);
    for (const auto& row : t.rows) {
        for (const Cell& c : row) std::visit([&](const auto& v) { w << v; }, c);
        w.end_row();
    }
}

json number_json(double x) {
    if (std::isfinite(x)) return x;
    return format_number(x);
}

void write_json(std::ostream& os, const Table& t) {
    json rows = json::array();
    for (const auto& row : t.rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::visit(
                [&](const auto& v) {
                    using V = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<V, double>)
                        obj[t.header[i]] = number_json(v);
                    else
                        obj[t.header[i]] = v;
                },
                row[i]);
        }
        rows.push_back(std::move(obj));
    }
    os << rows.dump(2) << '\n';
}

struct Common {
    std::string graph = "ba:100:3";
    std::string activation = "sine";
    std::uint64_t seed = 42;
    std::string out;
    std::string format = "csv";
    unsigned threads = 0;
};

void add_common(CLI::App* app, Common& c, bool with_graph = true, bool with_activation = true) {
    if (with_graph) app->add_option("--graph", c.graph, "graph spec kind:n:params, or edges:<file>")->capture_default_str();
    if (with_activation)
        app->add_option("--activation", c.activation, "sine | tanh | relu | fisher_tanh:a | cubic:alpha,gamma")
            ->capture_default_str();
    app->add_option("--seed", c.seed, "master seed")->capture_default_str();
    app->add_option("--out", c.out, "output file (metadata goes to <out>.meta.json)");
    app->add_option("--format", c.format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app->add_option("--threads", c.threads, "worker threads (BIFURC_THREADS overrides)");
}

OperatorMode parse_mode(const std::string& name) {
    if (name == "adjacency") return op::NormAdjacency{};
    if (name == "laplacian") return op::NormLaplacian{};
    throw Error(ErrorCode::ConfigError, "unknown operator mode '" + name + "' (adjacency | laplacian)");
}

json graph_stats(const Graph& g) {
    return json{{"n", g.size()},
                {"sampled_n", g.sampled_size()},
                {"edges", g.edge_count()},
                {"lambda_1", g.eigenvalue(0)},
                {"lambda_2", g.size() > 1 ? g.eigenvalue(1) : 0.0},
                {"kappa_1", g.kappa()(0)},
                {"top_simple", g.top_simple()},
                {"bipartite", g.bipartite()}};
}

struct Outcome {
    Table table;
    json meta = json::object();
};

int emit(const Common& c, const std::string& command, const Outcome& o, json config,
         std::chrono::steady_clock::time_point start, std::ostream& out, std::ostream& err) {
    auto write = [&](std::ostream& os) {
        if (c.format == "json")
            write_json(os, o.table);
        else
            write_csv(os, o.table);
    };
    if (c.out.empty()) {
        write(out);
    } else {
        std::ofstream file(c.out, std::ios::binary);
        require(static_cast<bool>(file), ErrorCode::IoError, "cannot open '" + c.out + "'");
        write(file);
        require(static_cast<bool>(file), ErrorCode::IoError, "write to '" + c.out + "' failed");

        json meta = o.meta;
        meta["command"] = command;
        meta["config"] = std::move(config);
        meta["version"] = BIFURC_VERSION;
        meta["rows"] = o.table.rows.size();
        meta["failed_cells"] = o.table.failed;
        meta["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ofstream side(c.out + ".meta.json", std::ios::binary);
        require(static_cast<bool>(side), ErrorCode::IoError, "cannot open metadata sidecar");
        side << meta.dump(2) << '\n';
        out << "wrote " << o.table.rows.size() << " rows to " << c.out << '\n';
    }
    if (!o.table.rows.empty() && 2 * o.table.failed > o.table.rows.size()) {
        err << "numeric failure in " << o.table.failed << " of " << o.table.rows.size() << " cells\n";
        return kExitNumeric;
    }
    return kExitOk;
}

json common_json(const Common& c) {
    return json{{"graph", c.graph}, {"activation", c.activation}, {"seed", c.seed},
                {"out", c.out},     {"format", c.format},         {"threads", resolve_threads(c.threads)}};
}

}  // namespace

std::vector<double> parse_grid(std::string_view text) {
    require(!text.empty(), ErrorCode::ConfigError, "empty grid");
    if (text.find(':') != std::string_view::npos) {
        const auto parts = split(text, ':');
        require(parts.size() == 3, ErrorCode::ConfigError, "grid must be start:stop:count");
        const double start = parse_number(parts[0], "grid start");
        const double stop = parse_number(parts[1], "grid stop");
        const int count = parse_int(parts[2], "grid count");
        require(count >= 1, ErrorCode::ConfigError, "grid count must be >= 1");
        require(std::isfinite(start) && std::isfinite(stop), ErrorCode::ConfigError, "grid ends must be finite");
        if (count == 1) return {start};
        std::vector<double> out(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = start + (stop - start) * i / (count - 1);
        out.back() = stop;
        return out;
    }
    std::vector<double> out;
    for (std::string_view part : split(text, ',')) out.push_back(parse_number(part, "grid"));
    return out;
}

GraphSpec parse_graph_spec(std::string_view text) {
    const auto parts = split(text, ':');
    require(parts.size() >= 2, ErrorCode::ConfigError, "graph spec must be kind:n[:params]");
    const std::string_view kind = parts[0];
    GraphSpec spec;
    spec.n = parse_int(parts[1], "graph size");
    auto params = [&](std::size_t count) {
        require(parts.size() == 2 + count, ErrorCode::ConfigError,
                "graph kind '" + std::string(kind) + "' takes " + std::to_string(count) + " parameter(s)");
    };
    if (kind == "er") {
        params(1);
        spec.model = model::ErdosRenyi{parse_number(parts[2], "er p")};
    } else if (kind == "ba") {
        params(1);
        spec.model = model::BarabasiAlbert{parse_int(parts[2], "ba m")};
    } else if (kind == "ws") {
        params(2);
        spec.model = model::WattsStrogatz{parse_int(parts[2], "ws k"), parse_number(parts[3], "ws beta")};
    } else if (kind == "rr") {
        params(1);
        spec.model = model::RandomRegular{parse_int(parts[2], "rr degree")};
    } else if (kind == "grid") {
        params(1);
        const int rows = parse_int(parts[2], "grid rows");
        require(rows > 0 && spec.n % rows == 0, ErrorCode::ConfigError, "grid rows must divide n");
        spec.model = model::Grid{rows, spec.n / rows};
    } else if (kind == "path") {
        params(0);
        spec.model = model::Path{};
    } else if (kind == "cycle") {
        params(0);
        spec.model = model::Cycle{};
    } else if (kind == "complete") {
        params(0);
        spec.model = model::Complete{};
    } else if (kind == "star") {
        params(0);
        spec.model = model::Star{};
    } else {
        throw Error(ErrorCode::ConfigError, "unknown graph kind '" + std::string(kind) + "'");
    }
    return spec;
}

Graph load_graph(std::string_view text, std::uint64_t seed) {
    if (text.substr(0, 6) == "edges:") {
        const std::string path(text.substr(6));
        std::ifstream in(path);
        require(static_cast<bool>(in), ErrorCode::IoError, "cannot open edge list '" + path + "'");
        return read_edge_list(in);
    }
    const GraphSpec spec = parse_graph_spec(text);
    try {
        return generate(spec.model, spec.n, seed);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::InvalidParams) throw Error(ErrorCode::ConfigError, e.what());
        throw;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bifurcation experiments on graph fixed-point maps"};
    app.set_version_flag("--version", std::string(BIFURC_VERSION));
    app.require_subcommand(1);

    // sweep_coupling
    Common sweep_c;
    std::string sweep_w_over, sweep_w, sweep_mode = "adjacency";
    long sweep_k = 0, sweep_iter = 200000;
    double sweep_tol = 1e-10;
    auto* sweep = app.add_subcommand("sweep_coupling", "fixed points across a coupling grid");
    add_common(sweep, sweep_c);
    auto* w_over_opt = sweep->add_option("--w-over-wk", sweep_w_over, "grid of w / w_k");
    sweep->add_option("--w", sweep_w, "grid of raw w")->excludes(w_over_opt);
    sweep->add_option("--mode", sweep_mode, "adjacency | laplacian")->capture_default_str();
    sweep->add_option("--k", sweep_k, "mode index (0-based)")->capture_default_str();
    sweep->add_option("--tol", sweep_tol)->capture_default_str();
    sweep->add_option("--max-iter", sweep_iter)->capture_default_str();

    // phase_diagram
    Common phase_c;
    std::string phase_alpha = "0.2:2.0:19", phase_w = "0.2:2.0:19";
    long phase_iter = 200000;
    auto* phase = app.add_subcommand("phase_diagram", "E_D over an (alpha, w) grid, cubic activation");
    add_common(phase, phase_c, true, false);
    phase->add_option("--alpha", phase_alpha, "alpha grid")->capture_default_str();
    phase->add_option("--w", phase_w, "w grid")->capture_default_str();
    phase->add_option("--max-iter", phase_iter)->capture_default_str();

    // pattern
    Common pattern_c;
    pattern_c.graph = "grid:100:10";
    double pattern_center = 1.0, pattern_width = 0.1, pattern_mu = 0.05;
    int pattern_order = 8;
    std::optional<double> pattern_w;
    auto* pattern = app.add_subcommand("pattern", "filtered-map pattern selection");
    add_common(pattern, pattern_c);
    pattern->add_option("--center", pattern_center, "bandpass centre")->capture_default_str();
    pattern->add_option("--width", pattern_width, "bandpass width")->capture_default_str();
    pattern->add_option("--order", pattern_order, "polynomial order")->capture_default_str();
    auto* pw = pattern->add_option("--w", pattern_w, "coupling");
    pattern->add_option("--mu", pattern_mu, "distance past onset, used when --w is absent")
        ->capture_default_str()
        ->excludes(pw);

    // variance_sweep
    Common var_c;
    std::string var_grid = "0.5:1.5:11", var_ensemble = "ginibre", var_mode = "laplacian";
    int var_d = 64, var_trials = 10;
    long var_iter = 3000;
    auto* var = app.add_subcommand("variance_sweep", "mean Dirichlet energy against weight variance");
    add_common(var, var_c);
    var->add_option("--v-over-vc", var_grid, "grid of v / v_c")->capture_default_str();
    var->add_option("--d", var_d)->capture_default_str();
    var->add_option("--trials", var_trials)->capture_default_str();
    var->add_option("--ensemble", var_ensemble, "ginibre | wigner")->capture_default_str();
    var->add_option("--mode", var_mode, "adjacency | laplacian")->capture_default_str();
    var->add_option("--max-iter", var_iter)->capture_default_str();

    // depth_probe
    Common depth_c;
    depth_c.graph = "ba:200:3";
    std::string depth_ensemble = "ginibre", depth_mode = "laplacian";
    int depth_d = 32, depth_layers = 64;
    double depth_delta = 0.1;
    auto* depth = app.add_subcommand("depth_probe", "normalized energy through an untrained deep stack");
    add_common(depth, depth_c);
    depth->add_option("--d", depth_d)->capture_default_str();
    depth->add_option("--layers", depth_layers)->capture_default_str();
    depth->add_option("--delta", depth_delta)->capture_default_str();
    depth->add_option("--ensemble", depth_ensemble)->capture_default_str();
    depth->add_option("--mode", depth_mode)->capture_default_str();

    // ntk
    Common ntk_c;
    std::string ntk_mu = "0.01,0.02,0.04,0.08";
    long ntk_k = 0;
    auto* ntk = app.add_subcommand("ntk", "node kernel across mu (negative mu: analytic subcritical kernel)");
    add_common(ntk, ntk_c);
    ntk->add_option("--mu", ntk_mu, "mu grid")->capture_default_str();
    ntk->add_option("--k", ntk_k, "mode index (0-based)")->capture_default_str();

    // init_variance
    Common init_c;
    int init_d = 64;
    double init_lambda = 1.0, init_alpha = 1.0, init_delta = 0.0;
    std::string init_ensemble = "ginibre";
    auto* init = app.add_subcommand("init_variance", "critical weight variance v_c(delta)");
    init->add_option("--d", init_d)->capture_default_str();
    init->add_option("--lambda", init_lambda)->capture_default_str();
    init->add_option("--alpha", init_alpha)->capture_default_str();
    init->add_option("--ensemble", init_ensemble)->capture_default_str();
    init->add_option("--delta", init_delta)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        if (init->parsed()) {
            out << format_number(critical_variance(init_d, init_lambda, init_alpha, parse_ensemble(init_ensemble),
                                                   init_delta))
                << '\n';
            return kExitOk;
        }

        if (sweep->parsed()) {
            const Graph g = load_graph(sweep_c.graph, sweep_c.seed);
            MapConfig cfg;
            cfg.mode = parse_mode(sweep_mode);
            cfg.activation = Activation::parse(sweep_c.activation);
            cfg.tol = sweep_tol;
            cfg.max_iter = sweep_iter;
            cfg.seed = sweep_c.seed;
            const OperatorSpectrum spec = operator_spectrum(g, cfg.mode);
            require(sweep_k >= 0 && sweep_k < g.size(), ErrorCode::ConfigError, "--k out of range");
            const double wk = 1.0 / (cfg.activation.alpha() * spec.values(sweep_k));
            std::vector<double> controls, ws;
            if (!sweep_w.empty()) {
                ws = parse_grid(sweep_w);
                controls = ws;
            } else {
                controls = parse_grid(sweep_w_over.empty() ? "0.8:1.2:41" : sweep_w_over);
                for (double c : controls) ws.push_back(c * wk);
            }
            Outcome o;
            o.table.header = {"control", "mu", "amp_measured", "amp_theory", "ed_measured",
                              "ed_theory", "jac_radius", "status", "iterations"};
            for (const SweepRecord& r : sweep_coupling(g, cfg, sweep_k, ws, controls)) {
                o.table.add({r.control, r.mu, r.amplitude_measured, r.amplitude_theory, r.dirichlet_measured,
                             r.dirichlet_theory, r.jacobian_radius, std::string(to_string(r.status)), r.iterations});
                if (r.status != FixedPointStatus::converged) ++o.table.failed;
            }
            o.meta["graph"] = graph_stats(g);
            o.meta["w_k"] = wk;
            json config = common_json(sweep_c);
            config.update({{"mode", sweep_mode}, {"k", sweep_k}, {"tol", sweep_tol}, {"max_iter", sweep_iter},
                           {"w_over_wk", sweep_w_over}, {"w", sweep_w}});
            return emit(sweep_c, "sweep_coupling", o, config, start, out, err);
        }

        if (phase->parsed()) {
            const Graph g = load_graph(phase_c.graph, phase_c.seed);
            MapConfig cfg;
            cfg.max_iter = phase_iter;
            cfg.seed = phase_c.seed;
            Outcome o;
            o.table.header = {"alpha", "w", "ed", "status"};
            for (const PhaseCell& cell :
                 phase_diagram(g, parse_grid(phase_alpha), parse_grid(phase_w), cfg, phase_c.threads)) {
                o.table.add({cell.alpha, cell.w, cell.ed, std::string(to_string(cell.status))});
                if (cell.status != FixedPointStatus::converged) ++o.table.failed;
            }
            o.meta["graph"] = graph_stats(g);
            o.meta["lambda_laplacian_max"] = operator_spectrum(g, op::NormLaplacian{}).values(0);
            json config = common_json(phase_c);
            config.update({{"alpha", phase_alpha}, {"w", phase_w}, {"max_iter", phase_iter},
                           {"mode", "laplacian"}, {"activation", "cubic:alpha,1"}});
            return emit(phase_c, "phase_diagram", o, config, start, out, err);
        }

        if (pattern->parsed()) {
            const Graph g = load_graph(pattern_c.graph, pattern_c.seed);
            const PolynomialFilter f = bandpass_filter(pattern_center, pattern_width, pattern_order);
            MapConfig cfg;
            cfg.activation = Activation::parse(pattern_c.activation);
            cfg.seed = pattern_c.seed;
            const OperatorSpectrum spec = operator_spectrum(g, op::Filtered{f});
            cfg.w = pattern_w ? *pattern_w : (1.0 + pattern_mu) / (cfg.activation.alpha() * spec.values(0));
            const PatternResult p = pattern_select(g, cfg, f);
            Outcome o;
            o.table.header = {"node", "x_star", "selected_mode_vector"};
            for (Eigen::Index i = 0; i < g.size(); ++i) {
                const double mode_entry = p.selected_mode ? g.eigenvector(*p.selected_mode)(i) : 0.0;
                o.table.add({static_cast<long>(i), p.fixed_point.state(i), mode_entry});
            }
            if (!p.fixed_point.converged()) o.table.failed = o.table.rows.size();
            o.meta["graph"] = graph_stats(g);
            o.meta["w"] = cfg.w;
            o.meta["status"] = to_string(p.fixed_point.status);
            o.meta["selected_mode"] = p.selected_mode ? json(*p.selected_mode) : json(nullptr);
            o.meta["alignment"] = p.alignment;
            o.meta["filter"] = f.coeffs;
            json config = common_json(pattern_c);
            config.update({{"center", pattern_center}, {"width", pattern_width}, {"order", pattern_order},
                           {"mu", pattern_mu}});
            return emit(pattern_c, "pattern", o, config, start, out, err);
        }

        if (var->parsed()) {
            const Graph g = load_graph(var_c.graph, var_c.seed);
            const Activation a = Activation::parse(var_c.activation);
            VarianceSweepConfig cfg;
            cfg.kind = parse_ensemble(var_ensemble);
            cfg.mode = parse_mode(var_mode);
            cfg.d = var_d;
            cfg.trials = var_trials;
            cfg.max_iter = var_iter;
            cfg.seed = var_c.seed;
            cfg.threads = var_c.threads;
            const double vc = sweep_critical_variance(g, a, cfg);
            std::vector<double> vs;
            for (double r : parse_grid(var_grid)) vs.push_back(r * vc);
            Outcome o;
            o.table.header = {"v", "v_over_vc", "mean_ed", "std_ed", "n_converged"};
            std::size_t trials_failed = 0, trials_total = 0;
            for (const VarianceRecord& r : variance_sweep(g, a, vs, cfg)) {
                o.table.add({r.v, r.v_over_vc, r.mean_ed, r.std_ed, static_cast<long>(r.n_converged)});
                trials_failed += r.statuses.size() - static_cast<std::size_t>(r.n_converged);
                trials_total += r.statuses.size();
            }
            if (2 * trials_failed > trials_total) o.table.failed = o.table.rows.size();
            o.meta["graph"] = graph_stats(g);
            o.meta["v_c"] = vc;
            json config = common_json(var_c);
            config.update({{"v_over_vc", var_grid}, {"d", var_d}, {"trials", var_trials},
                           {"ensemble", var_ensemble}, {"mode", var_mode}, {"max_iter", var_iter}});
            return emit(var_c, "variance_sweep", o, config, start, out, err);
        }

        if (depth->parsed()) {
            const Graph g = load_graph(depth_c.graph, depth_c.seed);
            DepthConfig cfg;
            cfg.kind = parse_ensemble(depth_ensemble);
            cfg.mode = parse_mode(depth_mode);
            cfg.d = depth_d;
            cfg.layers = depth_layers;
            cfg.delta = depth_delta;
            cfg.seed = depth_c.seed;
            const DepthProbe probe = depth_probe(g, Activation::parse(depth_c.activation), cfg);
            Outcome o;
            o.table.header = {"layer", "ed_normalized", "frobenius_norm", "collapsed"};
            for (const DepthLayer& l : probe.layers)
                o.table.add({static_cast<long>(l.layer), l.ed_normalized, l.frobenius_norm,
                             static_cast<long>(l.collapsed)});
            if (probe.diverged) o.table.failed = o.table.rows.size();
            o.meta["graph"] = graph_stats(g);
            o.meta["variance"] = probe.variance;
            o.meta["final_alignment"] = probe.final_alignment;
            o.meta["diverged"] = probe.diverged;
            o.meta["weights_shared_across_layers"] = false;
            json config = common_json(depth_c);
            config.update({{"d", depth_d}, {"layers", depth_layers}, {"delta", depth_delta},
                           {"ensemble", depth_ensemble}, {"mode", depth_mode}});
            return emit(depth_c, "depth_probe", o, config, start, out, err);
        }

        if (ntk->parsed()) {
            const Graph g = load_graph(ntk_c.graph, ntk_c.seed);
            require(ntk_k >= 0 && ntk_k < g.size(), ErrorCode::ConfigError, "--k out of range");
            const Activation a = Activation::parse(ntk_c.activation);
            Outcome o;
            o.table.header = {"mu", "trace", "top_eig", "alignment", "regime"};
            for (double mu : parse_grid(ntk_mu)) {
                const double w = (1.0 + mu) / (a.alpha() * g.eigenvalue(ntk_k));
                try {
                    KernelReport r;
                    if (mu < 0.0) {
                        r = ntk_subcritical(g, a, (1.0 + mu) / (a.alpha() * g.eigenvalue(0)));
                    } else {
                        MapConfig cfg;
                        cfg.activation = a;
                        cfg.w = w;
                        cfg.tol = 1e-13;
                        cfg.seed = ntk_c.seed;
                        r = ntk_supercritical(g, cfg, ntk_k);
                    }
                    o.table.add({mu, r.trace, r.top_eigenvalue, r.alignment, std::string(to_string(r.regime))});
                } catch (const Error& e) {
                    if (e.code() == ErrorCode::InvalidParams) throw;
                    err << "mu=" << mu << ": " << e.what() << '\n';
                    const double nan = std::numeric_limits<double>::quiet_NaN();
                    o.table.add({mu, nan, nan, nan, std::string(to_string(e.code()))});
                    ++o.table.failed;
                }
            }
            o.meta["graph"] = graph_stats(g);
            json config = common_json(ntk_c);
            config.update({{"mu", ntk_mu}, {"k", ntk_k}});
            return emit(ntk_c, "ntk", o, config, start, out, err);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        switch (e.code()) {
        case ErrorCode::ConfigError:
        case ErrorCode::InvalidParams: return kExitConfig;
        case ErrorCode::NumericFailure: return kExitNumeric;
        default: return kExitFailure;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitConfig;
}

}  // namespace bifurc::cli
