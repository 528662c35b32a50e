#include "rmt/common.hpp"

#include <cmath>

namespace rmt {

double Rng::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    // Box-Muller on (0,1] x [0,1).
    double u1 = 1.0 - uniform01();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
}

Matrix gaussian_matrix(int rows, int cols, double stddev, Rng& rng) {
    Matrix m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) m(i, j) = stddev * rng.normal();
    return m;
}

double spectral_norm(const Matrix& a, double tol, int max_iter) {
    if (a.size() == 0) return 0.0;
    const Matrix& m = a;
    Vector v = Vector::Ones(m.cols());
    // Slight tilt so v is not orthogonal to the top singular direction.
    for (int i = 0; i < v.size(); ++i) v[i] += 1e-3 * (i % 7);
    v.normalize();
    double sigma = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        Vector av = m * v;
        double s = av.norm();
        if (s == 0.0) return 0.0;
        Vector w = m.transpose() * av;
        v = w / w.norm();
        if (std::abs(s - sigma) <= tol * std::max(1.0, s)) return s;
        sigma = s;
    }
    return sigma;
}

double max_abs_col_sum(const Matrix& a) {
    return a.cwiseAbs().colwise().sum().maxCoeff();
}

TopSvd top_singular_triplets(const Matrix& a, int k, double tol, int max_iter) {
    const int n = static_cast<int>(a.rows());
    const int m = static_cast<int>(a.cols());
    const int kk = std::min({k, n, m});
    if (kk <= 0) return {Matrix(n, 0), Vector(0), Matrix(m, 0)};
    const int block = std::min(std::min(n, m), kk + 6);  // oversampling

    Rng rng(0x5eed5eedULL);
    Matrix q = gaussian_matrix(m, block, 1.0, rng);
    {
        Eigen::HouseholderQR<Matrix> qr(q);
        q = qr.householderQ() * Matrix::Identity(m, block);
    }
    Vector prev = Vector::Zero(kk);
    for (int it = 0; it < max_iter; ++it) {
        Matrix z = a.transpose() * (a * q);
        Eigen::HouseholderQR<Matrix> qr(z);
        q = qr.householderQ() * Matrix::Identity(m, block);
        // Rayleigh-Ritz every few sweeps to test convergence.
        if (it % 5 == 4 || it == max_iter - 1) {
            Matrix b = a * q;  // n x block
            Eigen::BDCSVD<Matrix> svd(b, Eigen::ComputeThinU | Eigen::ComputeThinV);
            Vector s = svd.singularValues().head(kk);
            if ((s - prev).cwiseAbs().maxCoeff() <= tol * std::max(1.0, s[0])) {
                TopSvd out;
                out.u = svd.matrixU().leftCols(kk);
                out.s = s;
                out.v = q * svd.matrixV().leftCols(kk);
                return out;
            }
            prev = s;
        }
    }
    Matrix b = a * q;
    Eigen::BDCSVD<Matrix> svd(b, Eigen::ComputeThinU | Eigen::ComputeThinV);
    TopSvd out;
    out.u = svd.matrixU().leftCols(kk);
    out.s = svd.singularValues().head(kk);
    out.v = q * svd.matrixV().leftCols(kk);
    return out;
}

}  // namespace rmt
