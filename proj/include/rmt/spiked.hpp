#pragma once

#include <optional>
#include <vector>

#include "rmt/common.hpp"
#include "rmt/mp.hpp"

namespace rmt {

enum class NoiseModel { gaussian_rect, symmetric_semicircle };
enum class Planting { diagonal, random_rotations };

/// Low-rank signal specification for a deformed matrix W = R + S.
struct SpikeSpec {
    std::vector<double> sigmas;  // descending, distinct, > 0
    int n = 0;                   // rows
    int m = 0;                   // columns
    double noise_var = 0.0;      // entry variance of R; 0 means 1/n

    void validate() const;
    double noise_variance() const { return noise_var > 0.0 ? noise_var : 1.0 / n; }
};

struct DeformedSample {
    Matrix w;  // w = r + s exactly
    Matrix s;
    Matrix r;
    SpikeSpec spec;
    std::uint64_t seed = 0;
};

Matrix sample_gaussian(int n, int m, double var, std::uint64_t seed);

DeformedSample build_deformed(const SpikeSpec& spec, std::uint64_t seed,
                              Planting planting = Planting::diagonal);

/// Limit of the i-th spiked singular value of W.
/// gaussian_rect (square, noise var 1/n): (1 + sigma^2)/sigma above the
/// detection threshold 1, else 2. symmetric_semicircle with noise scale s:
/// sigma + s^2/sigma above s, else 2s.
double predict_spike_singular(double sigma, NoiseModel model,
                              double noise_sigma = 1.0);

/// Limit of |<u_i, u'_i>|^2 (= |<v_i, v'_i>|^2 for these models).
double predict_overlap_sq(double sigma, NoiseModel model,
                          double noise_sigma = 1.0);

/// Limiting spectral-norm error ||W' - S||_2 of MP-threshold truncation; the
/// max over spikes of the per-spike closed form. Every spike must exceed the
/// model's detection threshold.
double f_w(const std::vector<double>& sigmas, NoiseModel model,
           double noise_sigma = 1.0);

/// D-transform of the MP singular-value law at z > sqrt(lambda_plus),
/// by quadrature of the two integral factors.
double d_transform(double z, const MPParams& noise_law);

/// Detection threshold theta_bar = D(sqrt(lambda_plus))^(-1/2), evaluated as
/// the limit from above at sqrt(lambda_plus) (1 + 1e-6).
double theta_bar(const MPParams& noise_law);

/// Spectral norm ||truncated - sample.s||_2, the empirical counterpart of f_W.
double approximation_error(const DeformedSample& sample, const Matrix& truncated);

/// MP-threshold truncation of an arbitrary matrix: keeps singular values
/// strictly above the threshold. Uses subspace iteration, so it assumes few
/// values above threshold relative to the matrix size.
Matrix truncate_above_threshold(const Matrix& w, double threshold,
                                int max_kept = 64);

struct AsymptoticPrediction {
    std::vector<double> predicted_singular;
    std::vector<double> predicted_overlap_sq;
    double theta_bar = 0.0;
};

AsymptoticPrediction predict_deformed(const SpikeSpec& spec);

/// Empirical check of the confidence-change bounds for a single-layer net
/// built from the sample: replacing W by S (bound E = a(N) h + b(N)) and
/// truncating at the MP threshold (bound E').
struct PruningBoundReport {
    double a_n = 0.0;
    double b_n = 0.0;
    double lambda_plus = 0.0;       // noise bulk edge, W units
    double f_w_value = 0.0;         // 0 marks "no spike above threshold"
    double delta_max_replace_s = 0.0;
    double delta_max_truncate = 0.0;
    double bound_e_max = 0.0;
    double bound_e_prime_max = 0.0;
    double violation_fraction_replace_s = 0.0;
    double violation_fraction_truncate = 0.0;
    int probes = 0;
};

PruningBoundReport verify_pruning_bounds(const DeformedSample& sample,
                                         int probe_count = 100,
                                         double epsilon = 0.0,
                                         std::uint64_t probe_seed = 1234);

/// a(N) = 2 / N^0.375 and b(N) = 2 sqrt(2 ln(N^2) / N).
double bound_a(int n);
double bound_b(int n);

}  // namespace rmt
