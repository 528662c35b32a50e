#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rmt/common.hpp"

namespace rmt {

/// Feature vectors as columns; class labels or real-valued targets.
struct Dataset {
    Matrix inputs;              // dim x count
    std::vector<int> labels;    // classification
    Vector targets;             // regression
    bool regression = false;

    int count() const { return static_cast<int>(inputs.cols()); }
    int dim() const { return static_cast<int>(inputs.rows()); }
    void validate() const;
};

/// IDX image + label pair (gzip transparently decoded). Pixels scaled to
/// [0, 1] and flattened row-major; limit truncates from the front.
Dataset load_idx(const std::string& images_path, const std::string& labels_path,
                 int limit = -1);

/// Writes a classification dataset as an IDX pair (images scaled back to
/// bytes). Image height/width must be given such that h * w == dim.
void write_idx(const Dataset& data, const std::string& images_path,
               const std::string& labels_path, int height, int width);

/// Two-class 2-D task: points offset above/below a random polynomial, with
/// Gaussian noise on y. x range [-1, 1], offsets +-0.5 (documented defaults).
Dataset gen_polynomial_2d(int degree, int n, double noise_sd, std::uint64_t seed);

/// 1-D regression task: 2000 noisy train points and 500 noiseless test points
/// of 0.5 cos(20x) + 2 cos(5x) + 0.5 sin(10x) on [0, 2].
std::pair<Dataset, Dataset> gen_regression(std::uint64_t seed);

/// Deterministic test-fixture matrix, 1-based indices:
/// S[i,j] = tan(pi/2 + 1/(j+1)) + cos(i) log(i+j+1) + sin(j) cos(i/j).
Matrix deterministic_s_matrix(int n);

/// Ten-class 28x28 synthetic image corpus (blurred class prototypes with
/// shifts and pixel noise). Stands in for MNIST where the real files are
/// not on disk; emitted and reloaded through the IDX container.
Dataset gen_synthetic_digits(int n, std::uint64_t seed);

/// Export inputs/labels as CSV for inspection.
void save_dataset_csv(const Dataset& data, const std::string& path);

}  // namespace rmt
