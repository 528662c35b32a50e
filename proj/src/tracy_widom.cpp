#include "rmt/tracy_widom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace rmt {

namespace {

// Fritsch-Carlson monotone cubic slopes; keeps the interpolant strictly
// increasing wherever the data is.
std::vector<double> fritsch_carlson_slopes(const double* x, const double* y, int n) {
    std::vector<double> d(n - 1), m(n);
    for (int i = 0; i < n - 1; ++i) d[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
    m[0] = d[0];
    m[n - 1] = d[n - 2];
    for (int i = 1; i < n - 1; ++i)
        m[i] = (d[i - 1] * d[i] <= 0.0) ? 0.0 : 0.5 * (d[i - 1] + d[i]);
    for (int i = 0; i < n - 1; ++i) {
        if (d[i] == 0.0) {
            m[i] = m[i + 1] = 0.0;
            continue;
        }
        double a = m[i] / d[i], b = m[i + 1] / d[i];
        double s = a * a + b * b;
        if (s > 9.0) {
            double t = 3.0 / std::sqrt(s);
            m[i] = t * a * d[i];
            m[i + 1] = t * b * d[i];
        }
    }
    return m;
}

}  // namespace

double tracy_widom_quantile(double p) {
    const int n = detail::kTw1TableSize;
    const double* px = detail::kTw1P;
    const double* ty = detail::kTw1T;
    if (!(p >= px[0] && p <= px[n - 1]))
        throw std::domain_error(
            "tracy_widom_quantile: p outside table coverage [" +
            std::to_string(px[0]) + ", " + std::to_string(px[n - 1]) + "]");

    static const std::vector<double> slopes = fritsch_carlson_slopes(px, ty, n);

    auto it = std::upper_bound(px, px + n, p);
    int i = std::max(0, static_cast<int>(it - px) - 1);
    if (i >= n - 1) i = n - 2;
    double h = px[i + 1] - px[i];
    double t = (p - px[i]) / h;
    double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
    double h10 = t * (1 - t) * (1 - t);
    double h01 = t * t * (3 - 2 * t);
    double h11 = t * t * (t - 1);
    return h00 * ty[i] + h10 * h * slopes[i] + h01 * ty[i + 1] +
           h11 * h * slopes[i + 1];
}

}  // namespace rmt
