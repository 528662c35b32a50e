#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace rmt {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Thrown when an iterative numeric routine fails to reach its tolerance.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on malformed run configurations (maps to CLI exit code 2).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Seeded generator with an explicit normal transform so streams are
/// bit-reproducible across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1).
    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi].
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Standard normal via Box-Muller; the second draw of each pair is cached.
    double normal();

    /// Uniform integer in [0, n).
    int uniform_int(int n) {
        return static_cast<int>(gen_() % static_cast<std::uint64_t>(n));
    }

private:
    std::mt19937_64 gen_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

/// N x M matrix with i.i.d. N(0, stddev^2) entries.
Matrix gaussian_matrix(int rows, int cols, double stddev, Rng& rng);

/// Largest singular value by power iteration on A^T A.
double spectral_norm(const Matrix& a, double tol = 1e-11, int max_iter = 2000);

/// Max absolute column sum (operator 1-norm).
double max_abs_col_sum(const Matrix& a);

struct TopSvd {
    Matrix u;  // rows x k
    Vector s;  // descending
    Matrix v;  // cols x k
};

/// Leading k singular triplets by subspace iteration; intended for spectra
/// with a clear gap after the k-th value (spiked matrices).
TopSvd top_singular_triplets(const Matrix& a, int k, double tol = 1e-12,
                             int max_iter = 1000);

}  // namespace rmt
