#include "rmt/svd_ops.hpp"

#include <algorithm>
#include <cmath>

namespace rmt {

SvdFactors svd(const Matrix& w) {
    if (!w.allFinite()) throw std::invalid_argument("svd: non-finite entries");
    Eigen::BDCSVD<Matrix> dec(w, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (dec.info() != Eigen::Success)
        throw NumericalError("svd: decomposition failed (cond estimate " +
                             std::to_string(w.norm()) + ")");
    SvdFactors f;
    f.u = dec.matrixU();
    f.singulars = dec.singularValues();
    f.vt = dec.matrixV().transpose();
    // Fix signs: largest-|entry| of each U column made nonnegative.
    for (int j = 0; j < f.u.cols(); ++j) {
        int idx;
        f.u.col(j).cwiseAbs().maxCoeff(&idx);
        if (f.u(idx, j) < 0.0) {
            f.u.col(j) = -f.u.col(j);
            f.vt.row(j) = -f.vt.row(j);
        }
    }
    return f;
}

std::pair<SvdFactors, TruncationReport> truncate(const SvdFactors& factors,
                                                 double threshold,
                                                 double keep_fraction) {
    if (threshold < 0.0)
        throw std::invalid_argument("truncate: threshold must be >= 0");
    keep_fraction = std::clamp(keep_fraction, 0.0, 1.0);

    const int k_total = factors.rank();
    int above = 0;
    while (above < k_total && factors.singulars[above] > threshold) ++above;
    const int below = k_total - above;
    // Singulars are descending, so "the largest below threshold" are the ones
    // right after the above-threshold block.
    const int kept_below =
        (below == 0) ? 0
                     : static_cast<int>(std::ceil(keep_fraction * below));
    const int k = above + kept_below;

    SvdFactors out;
    out.u = factors.u.leftCols(k);
    out.singulars = factors.singulars.head(k);
    out.vt = factors.vt.topRows(k);

    TruncationReport rep;
    rep.threshold = threshold;
    rep.kept_above = above;
    rep.kept_below = kept_below;
    rep.removed = k_total - k;
    const std::int64_t n = factors.rows(), m = factors.cols();
    rep.params_before = n * m;
    rep.params_after = should_split(static_cast<int>(n), static_cast<int>(m), k)
                           ? static_cast<std::int64_t>(k) * (n + m)
                           : n * m;
    return {std::move(out), rep};
}

bool should_split(int n, int m, int k) {
    if (n <= 0 || m <= 0 || k <= 0)
        throw std::invalid_argument("should_split: dimensions must be positive");
    return static_cast<std::int64_t>(k) * (n + m) <
           static_cast<std::int64_t>(n) * m;
}

std::pair<Matrix, Matrix> split(const SvdFactors& factors) {
    if (factors.rank() == 0)
        throw std::invalid_argument("split: empty rank; keep the layer unsplit");
    Vector root = factors.singulars.cwiseSqrt();
    Matrix w1 = factors.u * root.asDiagonal();
    Matrix w2 = root.asDiagonal() * factors.vt;
    return {std::move(w1), std::move(w2)};
}

Matrix recombine(const Matrix& w1, const Matrix& w2) {
    if (w1.cols() != w2.rows())
        throw std::invalid_argument("recombine: inner dimensions disagree");
    return w1 * w2;
}

std::pair<Matrix, std::int64_t> sparsify(const Matrix& w, double xi) {
    if (xi < 0.0) throw std::invalid_argument("sparsify: xi must be >= 0");
    Matrix out = w;
    std::int64_t zeroed = 0;
    for (int j = 0; j < out.cols(); ++j)
        for (int i = 0; i < out.rows(); ++i)
            if (std::abs(out(i, j)) < xi && out(i, j) != 0.0) {
                out(i, j) = 0.0;
                ++zeroed;
            }
    return {std::move(out), zeroed};
}

Matrix flatten_conv(const ConvTensor& t) {
    if (t.m <= 0 || t.n <= 0 || t.p <= 0 || t.q <= 0)
        throw std::invalid_argument("flatten_conv: dimensions must be positive");
    const int cols = t.n * t.p * t.q;
    Matrix w(t.m, cols);
    for (int i = 0; i < t.m; ++i)
        for (int c = 0; c < cols; ++c)
            w(i, c) = t.data[static_cast<std::size_t>(i) * cols + c];
    return w;
}

ConvTensor unflatten_conv(const Matrix& w, int n, int p, int q) {
    if (n <= 0 || p <= 0 || q <= 0)
        throw std::invalid_argument("unflatten_conv: dimensions must be positive");
    if (w.cols() != static_cast<std::int64_t>(n) * p * q)
        throw std::invalid_argument("unflatten_conv: column count != n*p*q");
    ConvTensor t;
    t.m = static_cast<int>(w.rows());
    t.n = n;
    t.p = p;
    t.q = q;
    t.data.resize(static_cast<std::size_t>(t.m) * n * p * q);
    const int cols = n * p * q;
    for (int i = 0; i < t.m; ++i)
        for (int c = 0; c < cols; ++c)
            t.data[static_cast<std::size_t>(i) * cols + c] = w(i, c);
    return t;
}

}  // namespace rmt
