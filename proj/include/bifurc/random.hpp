#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace bifurc {

using Rng = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Independent generator for work item `index` of a run seeded with `seed`.
/// Results depend only on (seed, index), never on scheduling.
inline Rng rng_stream(std::uint64_t seed, std::uint64_t index = 0) {
    return Rng(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
}

template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> gaussian_matrix(Eigen::Index rows,
                                                                      Eigen::Index cols, Rng& rng,
                                                                      Scalar stddev = Scalar(1)) {
    std::normal_distribution<Scalar> normal(Scalar(0), stddev);
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m(rows, cols);
    // Column-major fill order is part of the reproducibility contract.
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = normal(rng);
    return m;
}

template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> gaussian_vector(Eigen::Index size, Rng& rng,
                                                         Scalar stddev = Scalar(1)) {
    std::normal_distribution<Scalar> normal(Scalar(0), stddev);
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> v(size);
    for (Eigen::Index i = 0; i < size; ++i) v(i) = normal(rng);
    return v;
}

}  // namespace bifurc
