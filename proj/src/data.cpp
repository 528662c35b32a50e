#include "rmt/data.hpp"

#include <zlib.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

namespace rmt {

void Dataset::validate() const {
    if (inputs.cols() == 0) throw std::invalid_argument("Dataset: empty inputs");
    if (regression) {
        if (targets.size() != inputs.cols())
            throw std::invalid_argument("Dataset: target count mismatch");
    } else {
        if (static_cast<int>(labels.size()) != inputs.cols())
            throw std::invalid_argument("Dataset: label count mismatch");
    }
}

namespace {

std::vector<unsigned char> read_file_maybe_gzip(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::vector<unsigned char> raw((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
    if (raw.size() >= 2 && raw[0] == 0x1f && raw[1] == 0x8b) {
        // gzip container
        std::vector<unsigned char> out;
        out.resize(std::max<std::size_t>(raw.size() * 4, 1 << 20));
        z_stream zs{};
        if (inflateInit2(&zs, 15 + 16) != Z_OK)
            throw std::runtime_error("gzip init failed: " + path);
        zs.next_in = raw.data();
        zs.avail_in = static_cast<uInt>(raw.size());
        std::size_t written = 0;
        int rc = Z_OK;
        while (rc != Z_STREAM_END) {
            if (written == out.size()) out.resize(out.size() * 2);
            zs.next_out = out.data() + written;
            zs.avail_out = static_cast<uInt>(out.size() - written);
            rc = inflate(&zs, Z_NO_FLUSH);
            if (rc != Z_OK && rc != Z_STREAM_END) {
                inflateEnd(&zs);
                throw std::runtime_error("gzip decode failed: " + path);
            }
            written = out.size() - zs.avail_out;
        }
        inflateEnd(&zs);
        out.resize(written);
        return out;
    }
    return raw;
}

std::uint32_t be32(const unsigned char* p) {
    return (std::uint32_t(p[0]) << 24) | (std::uint32_t(p[1]) << 16) |
           (std::uint32_t(p[2]) << 8) | std::uint32_t(p[3]);
}

void put_be32(std::ofstream& out, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v >> 24),
                          static_cast<unsigned char>(v >> 16),
                          static_cast<unsigned char>(v >> 8),
                          static_cast<unsigned char>(v)};
    out.write(reinterpret_cast<const char*>(b), 4);
}

}  // namespace

Dataset load_idx(const std::string& images_path, const std::string& labels_path,
                 int limit) {
    auto img = read_file_maybe_gzip(images_path);
    auto lab = read_file_maybe_gzip(labels_path);
    if (img.size() < 16 || be32(img.data()) != 0x00000803u)
        throw std::runtime_error("bad IDX image magic in " + images_path);
    if (lab.size() < 8 || be32(lab.data()) != 0x00000801u)
        throw std::runtime_error("bad IDX label magic in " + labels_path);

    const std::uint32_t n_img = be32(img.data() + 4);
    const std::uint32_t rows = be32(img.data() + 8);
    const std::uint32_t cols = be32(img.data() + 12);
    const std::uint32_t n_lab = be32(lab.data() + 4);
    if (n_img != n_lab)
        throw std::runtime_error("image/label count mismatch: " +
                                 std::to_string(n_img) + " vs " +
                                 std::to_string(n_lab));
    const std::size_t pixels = static_cast<std::size_t>(rows) * cols;
    if (img.size() < 16 + pixels * n_img)
        throw std::runtime_error("truncated IDX image file: " + images_path);
    if (lab.size() < 8 + n_lab)
        throw std::runtime_error("truncated IDX label file: " + labels_path);

    int take = static_cast<int>(n_img);
    if (limit >= 0) take = std::min(take, limit);

    Dataset out;
    out.inputs.resize(pixels, take);
    out.labels.resize(take);
    const unsigned char* px = img.data() + 16;
    for (int j = 0; j < take; ++j) {
        for (std::size_t i = 0; i < pixels; ++i)
            out.inputs(i, j) = px[j * pixels + i] / 255.0;
        out.labels[j] = lab[8 + j];
    }
    out.validate();
    return out;
}

void write_idx(const Dataset& data, const std::string& images_path,
               const std::string& labels_path, int height, int width) {
    data.validate();
    if (height * width != data.dim())
        throw std::invalid_argument("write_idx: h * w != feature dim");
    std::ofstream img(images_path, std::ios::binary);
    std::ofstream lab(labels_path, std::ios::binary);
    if (!img || !lab) throw std::runtime_error("write_idx: cannot open outputs");
    put_be32(img, 0x00000803u);
    put_be32(img, data.count());
    put_be32(img, height);
    put_be32(img, width);
    put_be32(lab, 0x00000801u);
    put_be32(lab, data.count());
    for (int j = 0; j < data.count(); ++j) {
        for (int i = 0; i < data.dim(); ++i) {
            double v = std::clamp(data.inputs(i, j), 0.0, 1.0);
            unsigned char b = static_cast<unsigned char>(std::lround(v * 255.0));
            img.write(reinterpret_cast<const char*>(&b), 1);
        }
        unsigned char l = static_cast<unsigned char>(data.labels[j]);
        lab.write(reinterpret_cast<const char*>(&l), 1);
    }
}

Dataset gen_polynomial_2d(int degree, int n, double noise_sd,
                          std::uint64_t seed) {
    if (degree < 1) throw std::invalid_argument("gen_polynomial_2d: degree >= 1");
    if (n < 2) throw std::invalid_argument("gen_polynomial_2d: n >= 2");
    Rng rng(seed);
    std::vector<double> coef(degree + 1);
    for (double& c : coef) c = rng.uniform(-1.0, 1.0);
    auto poly = [&](double x) {
        double acc = 0.0;
        for (int d = degree; d >= 0; --d) acc = acc * x + coef[d];
        return acc;
    };
    const double offset = 0.5;
    Dataset out;
    out.inputs.resize(2, n);
    out.labels.resize(n);
    for (int j = 0; j < n; ++j) {
        double x = rng.uniform(-1.0, 1.0);
        int side = rng.uniform01() < 0.5 ? -1 : 1;
        double y = poly(x) + side * offset + noise_sd * rng.normal();
        out.inputs(0, j) = x;
        out.inputs(1, j) = y;
        out.labels[j] = side > 0 ? 1 : 0;  // blue above, red below
    }
    out.validate();
    return out;
}

std::pair<Dataset, Dataset> gen_regression(std::uint64_t seed) {
    auto target = [](double x) {
        return 0.5 * std::cos(20.0 * x) + 2.0 * std::cos(5.0 * x) +
               0.5 * std::sin(10.0 * x);
    };
    Rng rng(seed);
    Dataset train, test;
    train.regression = test.regression = true;

    const int n_train = 2000;
    train.inputs.resize(1, n_train);
    train.targets.resize(n_train);
    for (int i = 0; i < n_train; ++i) {
        double x = 2.0 * i / (n_train - 1);
        train.inputs(0, i) = x;
        train.targets[i] = target(x) + 0.5 * rng.uniform(-1.0, 1.0);
    }

    const int n_test = 500;
    test.inputs.resize(1, n_test);
    test.targets.resize(n_test);
    for (int i = 0; i < n_test; ++i) {
        double x = 2.0 * i / (n_test - 1);
        test.inputs(0, i) = x;
        test.targets[i] = target(x);
    }
    train.validate();
    test.validate();
    return {std::move(train), std::move(test)};
}

Matrix deterministic_s_matrix(int n) {
    if (n < 1) throw std::invalid_argument("deterministic_s_matrix: n >= 1");
    Matrix s(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            s(i - 1, j - 1) = std::tan(M_PI / 2.0 + 1.0 / (j + 1)) +
                              std::cos(static_cast<double>(i)) *
                                  std::log(static_cast<double>(i) + j + 1) +
                              std::sin(static_cast<double>(j)) *
                                  std::cos(static_cast<double>(i) / j);
    return s;
}

Dataset gen_synthetic_digits(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_synthetic_digits: n >= 1");
    constexpr int kSide = 28;
    constexpr int kDim = kSide * kSide;
    constexpr int kClasses = 10;

    // Class prototypes: a few smooth random bumps per class, fixed across
    // seeds so train/test draws share the same class geometry.
    std::vector<Matrix> protos;
    for (int c = 0; c < kClasses; ++c) {
        Rng prng(0xd161750000ULL + c);
        Matrix p = Matrix::Zero(kSide, kSide);
        for (int bump = 0; bump < 4; ++bump) {
            double cx = prng.uniform(6.0, 22.0), cy = prng.uniform(6.0, 22.0);
            double sx = prng.uniform(2.0, 5.0), sy = prng.uniform(2.0, 5.0);
            double amp = prng.uniform(0.5, 1.0);
            for (int y = 0; y < kSide; ++y)
                for (int x = 0; x < kSide; ++x)
                    p(y, x) += amp * std::exp(-0.5 * ((x - cx) * (x - cx) / (sx * sx) +
                                                      (y - cy) * (y - cy) / (sy * sy)));
        }
        p /= p.maxCoeff();
        protos.push_back(std::move(p));
    }

    Rng rng(seed);
    Dataset out;
    out.inputs.resize(kDim, n);
    out.labels.resize(n);
    for (int j = 0; j < n; ++j) {
        int c = rng.uniform_int(kClasses);
        int dx = rng.uniform_int(5) - 2;  // shift in [-2, 2]
        int dy = rng.uniform_int(5) - 2;
        double scale = rng.uniform(0.7, 1.0);
        for (int y = 0; y < kSide; ++y)
            for (int x = 0; x < kSide; ++x) {
                int sx = std::clamp(x - dx, 0, kSide - 1);
                int sy = std::clamp(y - dy, 0, kSide - 1);
                double v = scale * protos[c](sy, sx) + 0.25 * rng.uniform01();
                out.inputs(y * kSide + x, j) = std::clamp(v, 0.0, 1.0);
            }
        out.labels[j] = c;
    }
    out.validate();
    return out;
}

void save_dataset_csv(const Dataset& data, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write dataset csv: " + path);
    out.precision(10);
    for (int j = 0; j < data.count(); ++j) {
        for (int i = 0; i < data.dim(); ++i) out << data.inputs(i, j) << ",";
        if (data.regression)
            out << data.targets[j] << "\n";
        else
            out << data.labels[j] << "\n";
    }
}

}  // namespace rmt
