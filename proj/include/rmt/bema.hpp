#pragma once

#include "rmt/mp.hpp"
#include "rmt/spectrum.hpp"

namespace rmt {

/// Output of the bulk-eigenvalue matching analysis.
struct BemaResult {
    double sigma_hat_sq = 0.0;  // estimated entry variance, spectrum units
    double lambda_plus = 0.0;   // estimated right bulk edge
    double alpha = 0.0;         // quantile-trim parameter used
    double beta = 0.0;          // Tracy-Widom confidence parameter used
    double c = 1.0;             // aspect ratio used for the MP quantiles
};

/// Least-squares fit of the trimmed spectrum against MP quantiles, with a
/// Tracy-Widom edge correction. `rows` is the larger matrix dimension (the
/// normalizing N); 0 means square, rows = spectrum count. The square case
/// reduces to lambda_plus = sigma_hat^2 [4 + 2^(4/3) t_{1-beta} N^(-2/3)];
/// for c != 1 the edge and its fluctuation scale follow the Wishart forms
/// (1+sqrt(c))^2 and (1+sqrt(c))(1/sqrt(c)+1)^(1/3).
BemaResult bema_lambda_plus(const Spectrum& spectrum, double alpha, double beta,
                            int rows = 0);

/// Goodness-of-fit verdict for the MP hypothesis.
struct GofResult {
    double statistic = 0.0;  // max CDF deviation over the trimmed index range
    bool pass = false;       // statistic <= gamma
    double gamma = 0.0;
    BemaResult bema;
};

/// Max deviation between the empirical CDF and the fitted MP CDF, compared at
/// the sample points with indices i/M in [alpha, 1-alpha].
GofResult mp_fit_test(const Spectrum& spectrum, double alpha, double beta,
                      double gamma, int rows = 0);

}  // namespace rmt
