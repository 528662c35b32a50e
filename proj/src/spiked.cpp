#include "rmt/spiked.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rmt {

void SpikeSpec::validate() const {
    if (n < 1 || m < 1) throw std::invalid_argument("SpikeSpec: dims must be >= 1");
    const int r = static_cast<int>(sigmas.size());
    if (r < 1) throw std::invalid_argument("SpikeSpec: at least one spike");
    if (r > std::min(n, m))
        throw std::invalid_argument("SpikeSpec: r exceeds min(n, m)");
    for (int i = 0; i < r; ++i) {
        if (!(sigmas[i] > 0.0))
            throw std::invalid_argument("SpikeSpec: spikes must be positive");
        if (i > 0 && !(sigmas[i] < sigmas[i - 1]))
            throw std::invalid_argument(
                "SpikeSpec: spikes must be strictly descending (multiplicity 1)");
    }
    if (noise_var < 0.0)
        throw std::invalid_argument("SpikeSpec: noise_var must be >= 0");
}

Matrix sample_gaussian(int n, int m, double var, std::uint64_t seed) {
    if (n < 1 || m < 1)
        throw std::invalid_argument("sample_gaussian: dims must be >= 1");
    if (!(var > 0.0))
        throw std::invalid_argument("sample_gaussian: var must be > 0");
    Rng rng(seed);
    return gaussian_matrix(n, m, std::sqrt(var), rng);
}

DeformedSample build_deformed(const SpikeSpec& spec, std::uint64_t seed,
                              Planting planting) {
    spec.validate();
    const int r = static_cast<int>(spec.sigmas.size());
    Matrix s = Matrix::Zero(spec.n, spec.m);
    if (planting == Planting::diagonal) {
        for (int i = 0; i < r; ++i) s(i, i) = spec.sigmas[i];
    } else {
        Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
        Matrix gu = gaussian_matrix(spec.n, r, 1.0, rng);
        Matrix gv = gaussian_matrix(spec.m, r, 1.0, rng);
        Eigen::HouseholderQR<Matrix> qru(gu), qrv(gv);
        Matrix u = qru.householderQ() * Matrix::Identity(spec.n, r);
        Matrix v = qrv.householderQ() * Matrix::Identity(spec.m, r);
        Vector d = Eigen::Map<const Vector>(spec.sigmas.data(), r);
        s = u * d.asDiagonal() * v.transpose();
    }
    DeformedSample out;
    out.spec = spec;
    out.seed = seed;
    out.s = std::move(s);
    out.r = sample_gaussian(spec.n, spec.m, spec.noise_variance(), seed);
    out.w = out.r + out.s;
    return out;
}

double predict_spike_singular(double sigma, NoiseModel model, double noise_sigma) {
    if (!(sigma > 0.0))
        throw std::invalid_argument("predict_spike_singular: sigma must be > 0");
    if (model == NoiseModel::gaussian_rect)
        return sigma > 1.0 ? (1.0 + sigma * sigma) / sigma : 2.0;
    return sigma > noise_sigma ? sigma + noise_sigma * noise_sigma / sigma
                               : 2.0 * noise_sigma;
}

double predict_overlap_sq(double sigma, NoiseModel model, double noise_sigma) {
    if (!(sigma > 0.0))
        throw std::invalid_argument("predict_overlap_sq: sigma must be > 0");
    if (model == NoiseModel::gaussian_rect)
        return sigma > 1.0 ? 1.0 - 1.0 / (sigma * sigma) : 0.0;
    return sigma > noise_sigma
               ? 1.0 - (noise_sigma * noise_sigma) / (sigma * sigma)
               : 0.0;
}

double f_w(const std::vector<double>& sigmas, NoiseModel model,
           double noise_sigma) {
    if (sigmas.empty()) throw std::invalid_argument("f_w: no spikes");
    const double threshold = (model == NoiseModel::gaussian_rect) ? 1.0 : noise_sigma;
    double worst = 0.0;
    for (double sg : sigmas) {
        if (!(sg > threshold))
            throw std::domain_error(
                "f_w: spike at or below the detection threshold; the formula "
                "is invalid there");
        double sq;
        if (model == NoiseModel::gaussian_rect) {
            const double g_sigma = (1.0 + sg * sg) / sg;
            const double g_v = 1.0 - 1.0 / (sg * sg);
            sq = (sg * sg + g_sigma * g_sigma * g_v) -
                 2.0 * (1.0 + sg * sg) * g_v;
        } else {
            const double nv = noise_sigma * noise_sigma;
            const double g_sigma = sg + nv / sg;
            const double g_v = 1.0 - nv / (sg * sg);
            sq = (sg * sg + g_v * g_sigma * g_sigma) - 2.0 * sg * g_sigma * g_v;
        }
        worst = std::max(worst, std::sqrt(std::max(0.0, sq)));
    }
    return worst;
}

double d_transform(double z, const MPParams& noise_law) {
    auto [lm, lp] = mp_support(noise_law);
    const double edge = std::sqrt(lp);
    if (!(z > edge))
        throw std::domain_error("d_transform: z must exceed sqrt(lambda_plus)");
    // mu_R is the law of sqrt(x) for x ~ MP, so integrals in t^2 reduce to
    // integrals against the MP law itself.
    const double pm = mp_point_mass(noise_law);
    auto kernel = [z](double x) { return z / (z * z - x); };
    const double i1 =
        (1.0 - pm) < 1e-15
            ? 0.0
            : mp_integrate(kernel, noise_law) + pm / z;
    const double c = noise_law.c;
    return i1 * (c * i1 + (1.0 - c) / z);
}

double theta_bar(const MPParams& noise_law) {
    auto [lm, lp] = mp_support(noise_law);
    const double z = std::sqrt(lp) * (1.0 + 1e-6);
    return 1.0 / std::sqrt(d_transform(z, noise_law));
}

double approximation_error(const DeformedSample& sample, const Matrix& truncated) {
    if (truncated.rows() != sample.s.rows() || truncated.cols() != sample.s.cols())
        throw std::invalid_argument("approximation_error: shape mismatch");
    return spectral_norm(truncated - sample.s);
}

Matrix truncate_above_threshold(const Matrix& w, double threshold, int max_kept) {
    int k = 8;
    while (true) {
        k = std::min({k, static_cast<int>(w.rows()), static_cast<int>(w.cols())});
        TopSvd top = top_singular_triplets(w, k);
        int kept = 0;
        while (kept < top.s.size() && top.s[kept] > threshold) ++kept;
        if (kept < top.s.size() || kept == std::min(w.rows(), w.cols())) {
            if (kept == 0) return Matrix::Zero(w.rows(), w.cols());
            return top.u.leftCols(kept) *
                   top.s.head(kept).asDiagonal() *
                   top.v.leftCols(kept).transpose();
        }
        if (k >= max_kept)
            throw NumericalError(
                "truncate_above_threshold: more retained values than max_kept; "
                "use a full SVD instead");
        k *= 2;
    }
}

AsymptoticPrediction predict_deformed(const SpikeSpec& spec) {
    spec.validate();
    if (spec.n != spec.m)
        throw std::invalid_argument(
            "predict_deformed: closed forms require a square matrix");
    if (std::abs(spec.noise_variance() * spec.n - 1.0) > 1e-12)
        throw std::invalid_argument(
            "predict_deformed: closed forms require noise variance 1/n");
    AsymptoticPrediction out;
    out.theta_bar = 1.0;
    for (double sg : spec.sigmas) {
        out.predicted_singular.push_back(
            predict_spike_singular(sg, NoiseModel::gaussian_rect));
        out.predicted_overlap_sq.push_back(
            predict_overlap_sq(sg, NoiseModel::gaussian_rect));
    }
    return out;
}

double bound_a(int n) { return 2.0 / std::pow(n, 1.5 / 4.0); }

double bound_b(int n) {
    return 2.0 * std::sqrt(2.0 * std::log(static_cast<double>(n) * n) / n);
}

namespace {

// Single-layer classification confidence with absolute-value activation.
double single_layer_delta(const Matrix& w, const Vector& s, int true_idx) {
    Vector x = (w * s).cwiseAbs();
    double best_other = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < x.size(); ++j)
        if (j != true_idx) best_other = std::max(best_other, x[j]);
    return x[true_idx] - best_other;
}

}  // namespace

PruningBoundReport verify_pruning_bounds(const DeformedSample& sample,
                                         int probe_count, double epsilon,
                                         std::uint64_t probe_seed) {
    const int n = sample.spec.n, m = sample.spec.m;
    const double v = sample.spec.noise_variance();
    const double sqlp = std::sqrt(v) * (std::sqrt(n) + std::sqrt(m));
    const double lambda_plus = sqlp * sqlp;

    PruningBoundReport rep;
    rep.a_n = bound_a(n);
    rep.b_n = bound_b(n);
    rep.lambda_plus = lambda_plus;
    rep.probes = probe_count;

    // f_W closed form only covers the square, var 1/n case with all spikes
    // above threshold; otherwise the min in E' falls back to sqrt(lambda_plus).
    bool simple_case = (n == m) && std::abs(v * n - 1.0) < 1e-12 &&
                       std::all_of(sample.spec.sigmas.begin(),
                                   sample.spec.sigmas.end(),
                                   [](double sg) { return sg > 1.0; });
    rep.f_w_value =
        simple_case ? f_w(sample.spec.sigmas, NoiseModel::gaussian_rect) : 0.0;
    const double min_term =
        simple_case ? std::min(rep.f_w_value, sqlp) : sqlp;

    Matrix truncated = truncate_above_threshold(sample.w, sqlp);

    Rng rng(probe_seed);
    int viol_s = 0, viol_t = 0;
    for (int pi = 0; pi < probe_count; ++pi) {
        Vector s;
        if (pi % 2 == 0) {
            s = Vector(m);
            for (int i = 0; i < m; ++i) s[i] = rng.normal();
            s.normalize();
        } else {
            s = Vector::Zero(m);
            s[(pi / 2) % m] = 1.0;
        }
        Vector x = (sample.w * s).cwiseAbs();
        int true_idx;
        x.maxCoeff(&true_idx);
        const double d_w = single_layer_delta(sample.w, s, true_idx);
        const double d_s = single_layer_delta(sample.s, s, true_idx);
        const double d_t = single_layer_delta(truncated, s, true_idx);

        const double delta_s = std::abs(d_w - d_s);
        const double delta_t = std::abs(d_w - d_t);
        const double g = s.norm();       // g_phi for the single-layer case
        const double h = s.lpNorm<1>();  // h_phi likewise
        const double e = rep.a_n * h + rep.b_n;
        const double e_prime =
            (1.0 + epsilon) *
            (std::sqrt(2.0) * (1.0 + epsilon) * min_term * g + rep.a_n * h +
             rep.b_n);

        rep.delta_max_replace_s = std::max(rep.delta_max_replace_s, delta_s);
        rep.delta_max_truncate = std::max(rep.delta_max_truncate, delta_t);
        rep.bound_e_max = std::max(rep.bound_e_max, e);
        rep.bound_e_prime_max = std::max(rep.bound_e_prime_max, e_prime);
        if (delta_s > e) ++viol_s;
        if (delta_t > e_prime) ++viol_t;
    }
    rep.violation_fraction_replace_s =
        static_cast<double>(viol_s) / std::max(1, probe_count);
    rep.violation_fraction_truncate =
        static_cast<double>(viol_t) / std::max(1, probe_count);
    return rep;
}

}  // namespace rmt
