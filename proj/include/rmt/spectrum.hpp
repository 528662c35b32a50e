#pragma once

#include <string>
#include <vector>

#include "rmt/common.hpp"

namespace rmt {

/// Ascending non-negative eigenvalues of a symmetrized matrix
/// (equivalently squared singular values), with the empirical CDF.
class Spectrum {
public:
    Spectrum() = default;
    explicit Spectrum(std::vector<double> values);

    const std::vector<double>& values() const { return values_; }
    int count() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }
    double min() const { return values_.front(); }
    double max() const { return values_.back(); }

    /// Right-continuous empirical CDF: #{values <= a} / count.
    double cdf(double a) const;

    /// Multiply every value by k > 0.
    Spectrum scaled(double k) const;

private:
    std::vector<double> values_;  // sorted ascending, all >= 0
};

/// Squared singular values of a matrix, unnormalized, ascending,
/// min(rows, cols) entries.
Spectrum esd(const Matrix& w);

/// Single-column CSV round trip; load enforces ascending order.
Spectrum load_spectrum_csv(const std::string& path);
void save_spectrum_csv(const Spectrum& s, const std::string& path);

}  // namespace rmt
