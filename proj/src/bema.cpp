#include "rmt/bema.hpp"

#include <cmath>

#include "rmt/tracy_widom.hpp"

namespace rmt {

BemaResult bema_lambda_plus(const Spectrum& spectrum, double alpha, double beta,
                            int rows) {
    if (!(alpha > 0.0 && alpha < 0.5))
        throw std::invalid_argument("bema: alpha must lie in (0, 1/2)");
    if (!(beta > 0.0 && beta < 1.0))
        throw std::invalid_argument("bema: beta must lie in (0, 1)");
    const int m = spectrum.count();
    if (m < 10) throw std::invalid_argument("bema: spectrum too short (< 10)");
    const int n = (rows <= 0) ? m : rows;
    if (n < m)
        throw std::invalid_argument("bema: rows must be >= spectrum length");
    const double c = static_cast<double>(m) / n;

    // q_k solves mp_cdf(q_k) = k/m for MP(1, c); paired with the k-th smallest
    // eigenvalue this makes sigma_hat^2 the least-squares slope through the
    // bulk of the quantile-quantile plot.
    const int k_lo = static_cast<int>(std::ceil(alpha * m));
    const int k_hi = static_cast<int>(std::floor((1.0 - alpha) * m));
    if (k_lo < 1 || k_hi < k_lo)
        throw std::invalid_argument("bema: trimmed index range is empty");

    const MPParams unit{1.0, c};
    double num = 0.0, den = 0.0;
    const auto& vals = spectrum.values();
    for (int k = k_lo; k <= k_hi; ++k) {
        double q = mp_quantile(static_cast<double>(k) / m, unit);
        num += q * vals[k - 1];
        den += q * q;
    }
    double sigma_hat_sq = num / den;
    if (!(sigma_hat_sq > 0.0))
        throw NumericalError("bema: degenerate spectrum, sigma_hat^2 <= 0");

    const double t = tracy_widom_quantile(1.0 - beta);
    const double sc = std::sqrt(c);
    const double edge = (1.0 + sc) * (1.0 + sc);
    const double tw_scale =
        (1.0 + sc) * std::cbrt(1.0 / sc + 1.0);  // = 2^(4/3) at c = 1
    const double lambda_plus =
        sigma_hat_sq * (edge + tw_scale * t * std::pow(n, -2.0 / 3.0));

    return {sigma_hat_sq, lambda_plus, alpha, beta, c};
}

GofResult mp_fit_test(const Spectrum& spectrum, double alpha, double beta,
                      double gamma, int rows) {
    if (!(gamma > 0.0 && gamma <= 1.0))
        throw std::invalid_argument("mp_fit_test: gamma must lie in (0, 1]");
    if (spectrum.empty())
        throw std::invalid_argument("mp_fit_test: empty spectrum");

    BemaResult fit = bema_lambda_plus(spectrum, alpha, beta, rows);
    const MPParams mp{fit.sigma_hat_sq, fit.c};

    const int m = spectrum.count();
    int i_lo = static_cast<int>(std::ceil(alpha * m));
    i_lo = std::max(i_lo, 1);
    const int i_hi = static_cast<int>(std::floor((1.0 - alpha) * m));

    const auto& vals = spectrum.values();
    double s = 0.0;
    for (int i = i_lo; i <= i_hi; ++i) {
        double emp = spectrum.cdf(vals[i - 1]);
        double theo = mp_cdf(vals[i - 1], mp);
        s = std::max(s, std::abs(emp - theo));
    }
    return {s, s <= gamma, gamma, fit};
}

}  // namespace rmt
