#pragma once

#include <functional>
#include <utility>

#include "rmt/common.hpp"

namespace rmt {

/// Parameters of the Marchenko-Pastur law: entry variance and aspect ratio.
struct MPParams {
    double sigma_sq = 1.0;  // > 0
    double c = 1.0;         // aspect ratio M/N, > 0

    void validate() const;
};

enum class QuantileTail { lower, upper };

/// Support edges (lambda_minus, lambda_plus) = sigma^2 (1 -+ sqrt(c))^2.
std::pair<double, double> mp_support(const MPParams& params);

/// Density of the continuous part; 0 outside the open support interval.
/// For c > 1 the point mass at 0 is reported by mp_point_mass, not here.
double mp_pdf(double x, const MPParams& params);

/// Mass of the atom at 0: max(0, 1 - 1/c).
double mp_point_mass(const MPParams& params);

/// Distribution function, point mass included. Adaptive Gauss-Kronrod on the
/// edge-desingularized variable; absolute tolerance 1e-10.
double mp_cdf(double x, const MPParams& params);

/// Inverse of mp_cdf restricted to the continuous support, by bracketed
/// root finding. tail == upper solves cdf(q) = 1 - p.
double mp_quantile(double p, const MPParams& params,
                   QuantileTail tail = QuantileTail::lower);

/// Integral of f against the continuous part of the MP law (atom excluded).
/// f must be smooth on the closed support interval.
double mp_integrate(const std::function<double(double)>& f,
                    const MPParams& params, double abs_tol = 1e-10);

}  // namespace rmt
