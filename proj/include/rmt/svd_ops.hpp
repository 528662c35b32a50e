#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rmt/common.hpp"

namespace rmt {

/// Thin SVD with a fixed sign convention (largest-magnitude entry of each
/// left singular vector is nonnegative) so split factors are reproducible.
struct SvdFactors {
    Matrix u;         // rows x k, orthonormal columns
    Vector singulars; // length k, descending, >= 0
    Matrix vt;        // k x cols, orthonormal rows

    int rows() const { return static_cast<int>(u.rows()); }
    int cols() const { return static_cast<int>(vt.cols()); }
    int rank() const { return static_cast<int>(singulars.size()); }
    Matrix reconstruct() const { return u * singulars.asDiagonal() * vt; }
};

struct TruncationReport {
    double threshold = 0.0;
    int kept_above = 0;   // singulars strictly above threshold (always kept)
    int kept_below = 0;   // retained from the at-or-below-threshold group
    int removed = 0;
    std::int64_t params_before = 0;  // rows * cols
    std::int64_t params_after = 0;   // k (rows + cols) if split pays, else rows * cols
};

SvdFactors svd(const Matrix& w);

/// Keeps every singular value > threshold; of those <= threshold, retains the
/// largest ceil(keep_fraction * count_below) and drops the rest from the
/// factors entirely.
std::pair<SvdFactors, TruncationReport> truncate(const SvdFactors& factors,
                                                 double threshold,
                                                 double keep_fraction);

/// True iff a rank-k split strictly reduces parameters: k (n + m) < n m.
bool should_split(int n, int m, int k);

/// W1 = U sqrt(S), W2 = sqrt(S) V^T. Throws std::invalid_argument on empty rank.
std::pair<Matrix, Matrix> split(const SvdFactors& factors);

Matrix recombine(const Matrix& w1, const Matrix& w2);

/// Zeroes entries with |w| < xi (strict); returns the new matrix and count.
std::pair<Matrix, std::int64_t> sparsify(const Matrix& w, double xi);

/// Dense 4-D kernel stack: out_channels x in_channels x kh x kw, row-major
/// over (in_channels, kh, kw) within each output channel.
struct ConvTensor {
    int m = 0, n = 0, p = 0, q = 0;
    std::vector<double> data;  // size m*n*p*q

    double& at(int i, int j, int r, int s) {
        return data[((static_cast<std::size_t>(i) * n + j) * p + r) * q + s];
    }
    double at(int i, int j, int r, int s) const {
        return data[((static_cast<std::size_t>(i) * n + j) * p + r) * q + s];
    }
};

/// m x n x p x q -> m x (n p q), row-major over (n, p, q).
Matrix flatten_conv(const ConvTensor& t);
ConvTensor unflatten_conv(const Matrix& w, int n, int p, int q);

}  // namespace rmt
