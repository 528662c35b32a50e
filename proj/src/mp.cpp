#include "rmt/mp.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace rmt {

namespace {

// Gauss-Kronrod 7-15 pair on [-1, 1].
constexpr double kKronrodNodes[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769,
    -0.741531185599394, -0.586087235467691, -0.405845151377397,
    -0.207784955007898, 0.0,                0.207784955007898,
    0.405845151377397,  0.586087235467691,  0.741531185599394,
    0.864864423359769,  0.949107912342759,  0.991455371120813};
constexpr double kKronrodWeights[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728, 0.204432940075298,
    0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529};
constexpr double kGaussWeights[7] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469, 0.381830050505119, 0.279705391489277,
    0.129484966168870};

struct Interval {
    double a, b, value, error;
};

template <typename F>
Interval gk15(const F& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double kron = 0.0, gauss = 0.0;
    for (int i = 0; i < 15; ++i) {
        double fx = f(mid + half * kKronrodNodes[i]);
        kron += kKronrodWeights[i] * fx;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * fx;
    }
    kron *= half;
    gauss *= half;
    return {a, b, kron, std::abs(kron - gauss)};
}

// Adaptive bisection with an absolute tolerance target.
template <typename F>
double adaptive_quadrature(const F& f, double a, double b, double abs_tol) {
    std::vector<Interval> stack{gk15(f, a, b)};
    double total_err = stack.front().error;
    int splits = 0;
    const int max_splits = 2000;
    while (total_err > abs_tol && splits < max_splits) {
        auto worst = std::max_element(
            stack.begin(), stack.end(),
            [](const Interval& x, const Interval& y) { return x.error < y.error; });
        Interval iv = *worst;
        stack.erase(worst);
        double m = 0.5 * (iv.a + iv.b);
        stack.push_back(gk15(f, iv.a, m));
        stack.push_back(gk15(f, m, iv.b));
        total_err = 0.0;
        for (const auto& s : stack) total_err += s.error;
        ++splits;
    }
    if (total_err > abs_tol)
        throw NumericalError("adaptive quadrature stalled; achieved abs error " +
                             std::to_string(total_err) + " > " +
                             std::to_string(abs_tol));
    double sum = 0.0;
    for (const auto& s : stack) sum += s.value;
    return sum;
}

}  // namespace

void MPParams::validate() const {
    if (!(sigma_sq > 0.0) || !std::isfinite(sigma_sq))
        throw std::invalid_argument("MPParams: sigma_sq must be positive and finite");
    if (!(c > 0.0) || !std::isfinite(c))
        throw std::invalid_argument("MPParams: c must be positive and finite");
    if (c < 1e-9)
        throw std::invalid_argument("MPParams: c too small; degenerate aspect ratio");
}

std::pair<double, double> mp_support(const MPParams& params) {
    params.validate();
    const double s = std::sqrt(params.c);
    return {params.sigma_sq * (1.0 - s) * (1.0 - s),
            params.sigma_sq * (1.0 + s) * (1.0 + s)};
}

double mp_pdf(double x, const MPParams& params) {
    auto [lm, lp] = mp_support(params);
    if (!(x > lm) || !(x < lp)) return 0.0;
    return std::sqrt((lp - x) * (x - lm)) /
           (2.0 * M_PI * params.sigma_sq * params.c * x);
}

double mp_point_mass(const MPParams& params) {
    params.validate();
    return std::max(0.0, 1.0 - 1.0 / params.c);
}

// Continuous-part mass on [lambda_minus, x]. Substituting
// x = lm + (lp - lm) sin^2(u) removes both square-root edge singularities and
// the 1/x pole at a zero left edge; the integrand in u is smooth.
static double mp_bulk_cdf(double x, const MPParams& params) {
    auto [lm, lp] = mp_support(params);
    if (x <= lm) return 0.0;
    x = std::min(x, lp);
    const double delta = lp - lm;
    const double scale = 1.0 / (M_PI * params.sigma_sq * params.c);
    auto integrand = [&](double u) {
        double su = std::sin(u), cu = std::cos(u);
        if (lm == 0.0) return scale * delta * cu * cu;  // exact cancellation
        double xx = lm + delta * su * su;
        return scale * delta * delta * su * su * cu * cu / xx;
    };
    double arg = std::clamp((x - lm) / delta, 0.0, 1.0);
    double u_hi = std::asin(std::sqrt(arg));
    if (u_hi <= 0.0) return 0.0;
    return adaptive_quadrature(integrand, 0.0, u_hi, 1e-10);
}

double mp_cdf(double x, const MPParams& params) {
    const double pm = mp_point_mass(params);
    double acc = (x >= 0.0) ? pm : 0.0;
    acc += mp_bulk_cdf(x, params);
    return std::min(acc, 1.0);
}

double mp_integrate(const std::function<double(double)>& f,
                    const MPParams& params, double abs_tol) {
    auto [lm, lp] = mp_support(params);
    const double delta = lp - lm;
    const double scale = 1.0 / (M_PI * params.sigma_sq * params.c);
    auto integrand = [&](double u) {
        double su = std::sin(u), cu = std::cos(u);
        double xx = lm + delta * su * su;
        double density_part = (lm == 0.0)
                                  ? scale * delta * cu * cu
                                  : scale * delta * delta * su * su * cu * cu / xx;
        return f(xx) * density_part;
    };
    return adaptive_quadrature(integrand, 0.0, 0.5 * M_PI, abs_tol);
}

double mp_quantile(double p, const MPParams& params, QuantileTail tail) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("mp_quantile: p must lie in [0,1]");
    const double target = (tail == QuantileTail::upper) ? 1.0 - p : p;
    auto [lm, lp] = mp_support(params);
    const double pm = mp_point_mass(params);
    if (target <= pm) return 0.0;  // atom at 0 when c > 1
    if (target >= 1.0) return lp;

    double lo = lm, hi = lp;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        double f = mp_cdf(mid, params);
        if (std::abs(f - target) <= 1e-9) return mid;
        (f < target ? lo : hi) = mid;
        if (hi - lo <= 1e-15 * std::max(1.0, lp)) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace rmt
