#include "rmt/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace rmt {

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
    if (!std::is_sorted(values_.begin(), values_.end()))
        std::sort(values_.begin(), values_.end());
    for (double v : values_) {
        if (!std::isfinite(v))
            throw std::invalid_argument("Spectrum: non-finite value");
        if (v < 0.0)
            throw std::invalid_argument("Spectrum: negative value");
    }
}

double Spectrum::cdf(double a) const {
    if (values_.empty()) return 0.0;
    auto it = std::upper_bound(values_.begin(), values_.end(), a);
    return static_cast<double>(it - values_.begin()) / values_.size();
}

Spectrum Spectrum::scaled(double k) const {
    std::vector<double> out(values_);
    for (double& v : out) v *= k;
    return Spectrum(std::move(out));
}

Spectrum esd(const Matrix& w) {
    if (!w.allFinite()) throw std::invalid_argument("esd: non-finite entries");
    Eigen::BDCSVD<Matrix> svd(w);
    if (svd.info() != Eigen::Success)
        throw NumericalError("esd: SVD did not converge");
    Vector s = svd.singularValues();  // descending
    std::vector<double> vals(s.size());
    for (int i = 0; i < s.size(); ++i)
        vals[s.size() - 1 - i] = s[i] * s[i];
    return Spectrum(std::move(vals));
}

Spectrum load_spectrum_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spectrum file: " + path);
    std::vector<double> vals;
    std::string line;
    double prev = -1.0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        double v = std::stod(line);
        if (v < prev)
            throw std::runtime_error("spectrum file not ascending: " + path);
        prev = v;
        vals.push_back(v);
    }
    return Spectrum(std::move(vals));
}

void save_spectrum_csv(const Spectrum& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write spectrum file: " + path);
    out.precision(17);
    for (double v : s.values()) out << v << "\n";
}

}  // namespace rmt
