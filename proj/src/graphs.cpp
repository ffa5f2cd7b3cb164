#include "bifurc/graphs.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "bifurc/random.hpp"

namespace bifurc {

namespace {

using EdgeSet = std::set<std::pair<int, int>>;

void add_edge(EdgeSet& edges, int a, int b) {
    if (a > b) std::swap(a, b);
    edges.emplace(a, b);
}

bool has_edge(const EdgeSet& edges, int a, int b) {
    if (a > b) std::swap(a, b);
    return edges.count({a, b}) > 0;
}

MatrixXd to_adjacency(int n, const EdgeSet& edges) {
    MatrixXd a = MatrixXd::Zero(n, n);
    for (const auto& [i, j] : edges) a(i, j) = a(j, i) = 1.0;
    return a;
}

EdgeSet erdos_renyi(int n, double p, Rng& rng) {
    require(p > 0.0 && p <= 1.0, ErrorCode::InvalidParams, "erdos_renyi needs 0 < p <= 1");
    std::bernoulli_distribution coin(p);
    EdgeSet edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace(i, j);
    return edges;
}

// Preferential attachment via the repeated-nodes list; m isolated seed nodes.
EdgeSet barabasi_albert(int n, int m, Rng& rng) {
    require(m >= 1 && m < n, ErrorCode::InvalidParams, "barabasi_albert needs 1 <= m < n");
    EdgeSet edges;
    std::vector<int> targets(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) targets[static_cast<std::size_t>(i)] = i;
    std::vector<int> repeated;
    for (int source = m; source < n; ++source) {
        for (int t : targets) add_edge(edges, source, t);
        repeated.insert(repeated.end(), targets.begin(), targets.end());
        repeated.insert(repeated.end(), static_cast<std::size_t>(m), source);
        std::set<int> chosen;
        std::uniform_int_distribution<std::size_t> pick(0, repeated.size() - 1);
        while (static_cast<int>(chosen.size()) < m) chosen.insert(repeated[pick(rng)]);
        targets.assign(chosen.begin(), chosen.end());
    }
    return edges;
}

EdgeSet watts_strogatz(int n, int k, double beta, Rng& rng) {
    require(k >= 2 && k % 2 == 0 && k < n, ErrorCode::InvalidParams,
            "watts_strogatz needs even k with 2 <= k < n");
    require(beta >= 0.0 && beta <= 1.0, ErrorCode::InvalidParams, "watts_strogatz needs 0 <= beta <= 1");
    EdgeSet edges;
    for (int j = 1; j <= k / 2; ++j)
        for (int u = 0; u < n; ++u) add_edge(edges, u, (u + j) % n);

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> node(0, n - 1);
    std::vector<int> degree(static_cast<std::size_t>(n), k);
    for (int j = 1; j <= k / 2; ++j) {
        for (int u = 0; u < n; ++u) {
            if (unit(rng) >= beta) continue;
            const int v = (u + j) % n;
            if (!has_edge(edges, u, v)) continue;
            if (degree[static_cast<std::size_t>(u)] >= n - 1) continue;
            int w = node(rng);
            while (w == u || has_edge(edges, u, w)) w = node(rng);
            edges.erase({std::min(u, v), std::max(u, v)});
            add_edge(edges, u, w);
            --degree[static_cast<std::size_t>(v)];
            ++degree[static_cast<std::size_t>(w)];
        }
    }
    return edges;
}

// Pairing model with restarts: pair shuffled stubs, keep valid pairs, retry the rest.
EdgeSet random_regular(int n, int degree, Rng& rng) {
    require(degree >= 1 && degree < n, ErrorCode::InvalidParams, "random_regular needs 1 <= deg < n");
    require((static_cast<long>(degree) * n) % 2 == 0, ErrorCode::InvalidParams,
            "random_regular needs deg * n even");
    for (int attempt = 0; attempt < 1000; ++attempt) {
        EdgeSet edges;
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v) stubs.insert(stubs.end(), static_cast<std::size_t>(degree), v);
        bool stuck = false;
        while (!stubs.empty() && !stuck) {
            std::map<int, int> leftover;
            std::shuffle(stubs.begin(), stubs.end(), rng);
            for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
                const int a = stubs[i], b = stubs[i + 1];
                if (a != b && !has_edge(edges, a, b)) {
                    add_edge(edges, a, b);
                } else {
                    ++leftover[a];
                    ++leftover[b];
                }
            }
            bool suitable = leftover.empty();
            for (auto it = leftover.begin(); !suitable && it != leftover.end(); ++it)
                for (auto jt = std::next(it); jt != leftover.end(); ++jt)
                    if (!has_edge(edges, it->first, jt->first)) {
                        suitable = true;
                        break;
                    }
            stuck = !suitable;
            stubs.clear();
            for (const auto& [v, count] : leftover) stubs.insert(stubs.end(), static_cast<std::size_t>(count), v);
        }
        if (!stuck) return edges;
    }
    throw Error(ErrorCode::InvalidParams, "random_regular pairing failed after 1000 restarts");
}

EdgeSet grid(int n, int rows, int cols) {
    require(rows >= 1 && cols >= 1 && rows * cols == n, ErrorCode::InvalidParams,
            "grid needs rows * cols == n");
    EdgeSet edges;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            const int id = r * cols + c;
            if (c + 1 < cols) edges.emplace(id, id + 1);
            if (r + 1 < rows) edges.emplace(id, id + cols);
        }
    return edges;
}

struct Sampler {
    int n;
    Rng& rng;

    EdgeSet operator()(const model::ErdosRenyi& m) const { return erdos_renyi(n, m.p, rng); }
    EdgeSet operator()(const model::BarabasiAlbert& m) const { return barabasi_albert(n, m.m, rng); }
    EdgeSet operator()(const model::WattsStrogatz& m) const { return watts_strogatz(n, m.k, m.beta, rng); }
    EdgeSet operator()(const model::RandomRegular& m) const { return random_regular(n, m.degree, rng); }
    EdgeSet operator()(const model::Grid& m) const { return grid(n, m.rows, m.cols); }
    EdgeSet operator()(const model::Path&) const {
        EdgeSet e;
        for (int i = 0; i + 1 < n; ++i) e.emplace(i, i + 1);
        return e;
    }
    EdgeSet operator()(const model::Cycle&) const {
        require(n >= 3, ErrorCode::InvalidParams, "cycle needs n >= 3");
        EdgeSet e = (*this)(model::Path{});
        e.emplace(0, n - 1);
        return e;
    }
    EdgeSet operator()(const model::Complete&) const {
        EdgeSet e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) e.emplace(i, j);
        return e;
    }
    EdgeSet operator()(const model::Star&) const {
        EdgeSet e;
        for (int i = 1; i < n; ++i) e.emplace(0, i);
        return e;
    }
};

}  // namespace

std::string describe(const GraphModel& model) {
    std::ostringstream os;
    std::visit(
        [&](const auto& m) {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, model::ErdosRenyi>) os << "erdos_renyi(p=" << m.p << ")";
            else if constexpr (std::is_same_v<M, model::BarabasiAlbert>) os << "barabasi_albert(m=" << m.m << ")";
            else if constexpr (std::is_same_v<M, model::WattsStrogatz>)
                os << "watts_strogatz(k=" << m.k << ",beta=" << m.beta << ")";
            else if constexpr (std::is_same_v<M, model::RandomRegular>) os << "random_regular(deg=" << m.degree << ")";
            else if constexpr (std::is_same_v<M, model::Grid>) os << "grid(" << m.rows << "x" << m.cols << ")";
            else if constexpr (std::is_same_v<M, model::Path>) os << "path";
            else if constexpr (std::is_same_v<M, model::Cycle>) os << "cycle";
            else if constexpr (std::is_same_v<M, model::Complete>) os << "complete";
            else os << "star";
        },
        model);
    return os.str();
}

std::vector<std::vector<int>> connected_components(const MatrixXd& adjacency) {
    const int n = static_cast<int>(adjacency.rows());
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> components;
    for (int s = 0; s < n; ++s) {
        if (label[static_cast<std::size_t>(s)] >= 0) continue;
        const int id = static_cast<int>(components.size());
        components.emplace_back();
        std::queue<int> frontier;
        frontier.push(s);
        label[static_cast<std::size_t>(s)] = id;
        while (!frontier.empty()) {
            const int u = frontier.front();
            frontier.pop();
            components.back().push_back(u);
            for (int v = 0; v < n; ++v)
                if (adjacency(u, v) > 0.0 && label[static_cast<std::size_t>(v)] < 0) {
                    label[static_cast<std::size_t>(v)] = id;
                    frontier.push(v);
                }
        }
        std::sort(components.back().begin(), components.back().end());
    }
    std::stable_sort(components.begin(), components.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    return components;
}

bool is_bipartite(const MatrixXd& adjacency) {
    const int n = static_cast<int>(adjacency.rows());
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] >= 0) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::queue<int> frontier;
        frontier.push(s);
        while (!frontier.empty()) {
            const int u = frontier.front();
            frontier.pop();
            for (int v = 0; v < n; ++v) {
                if (adjacency(u, v) <= 0.0) continue;
                auto& cv = color[static_cast<std::size_t>(v)];
                if (cv < 0) {
                    cv = 1 - color[static_cast<std::size_t>(u)];
                    frontier.push(v);
                } else if (cv == color[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

SymmetricSpectrum<double> spectrum(const MatrixXd& symmetric) { return symmetric_eigen(symmetric); }

Graph::Graph(MatrixXd adjacency, Eigen::Index sampled_size) : adjacency_(std::move(adjacency)) {
    const Eigen::Index n = adjacency_.rows();
    require(n == adjacency_.cols(), ErrorCode::InvalidParams, "adjacency must be square");
    require(n >= 2, ErrorCode::DegenerateGraph, "graph needs at least 2 nodes");
    require(adjacency_.allFinite(), ErrorCode::NonFinite, "adjacency has non-finite entries");
    require((adjacency_.array() >= 0.0).all(), ErrorCode::InvalidParams, "adjacency must be nonnegative");
    require(adjacency_.diagonal().isZero(0.0), ErrorCode::InvalidParams, "adjacency must have zero diagonal");
    require(max_asymmetry(adjacency_) == 0.0, ErrorCode::NotSymmetric, "adjacency must be symmetric");

    degrees_ = adjacency_.rowwise().sum();
    require((degrees_.array() > 0.0).all(), ErrorCode::DegenerateGraph, "graph has an isolated node");

    const VectorXd inv_sqrt = degrees_.array().rsqrt();
    norm_adjacency_ = inv_sqrt.asDiagonal() * adjacency_ * inv_sqrt.asDiagonal();
    norm_adjacency_ = ((norm_adjacency_ + norm_adjacency_.transpose()) / 2.0).eval();
    norm_laplacian_ = MatrixXd::Identity(n, n) - norm_adjacency_;

    auto spec = symmetric_eigen(norm_adjacency_);
    eigenvalues_ = std::move(spec.values);
    eigenvectors_ = std::move(spec.vectors);
    kappa_.resize(n);
    for (Eigen::Index r = 0; r < n; ++r) kappa_(r) = quartic_sum(eigenvectors_.col(r));

    top_simple_ = eigenvalues_(0) - eigenvalues_(1) > kSimpleGapTol;
    bipartite_ = is_bipartite(adjacency_);
    connected_ = connected_components(adjacency_).size() == 1;
    sampled_size_ = sampled_size > 0 ? sampled_size : n;
}

std::size_t Graph::edge_count() const {
    std::size_t m = 0;
    for (Eigen::Index j = 0; j < size(); ++j)
        for (Eigen::Index i = 0; i < j; ++i)
            if (adjacency_(i, j) > 0.0) ++m;
    return m;
}

Graph generate(const GraphModel& model, int n, std::uint64_t seed) {
    require(n >= 2, ErrorCode::InvalidParams, "graph needs n >= 2");
    Rng rng = rng_stream(seed);
    const EdgeSet edges = std::visit(Sampler{n, rng}, model);
    const MatrixXd full = to_adjacency(n, edges);

    const auto components = connected_components(full);
    const auto& keep = components.front();
    require(keep.size() >= 2, ErrorCode::DegenerateGraph, "fewer than 2 nodes in the largest component");
    if (keep.size() == static_cast<std::size_t>(n)) return Graph(full);

    const auto k = static_cast<Eigen::Index>(keep.size());
    MatrixXd reduced(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j)
            reduced(i, j) = full(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)]);
    return Graph(std::move(reduced), n);
}

}  // namespace bifurc
