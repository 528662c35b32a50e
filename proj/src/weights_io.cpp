#include "rmt/weights_io.hpp"

#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

namespace rmt {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kFormatVersion = 1;

void write_blob(const Matrix& m, const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write blob: " + path.string());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            float v = static_cast<float>(m(i, j));
            out.write(reinterpret_cast<const char*>(&v), sizeof(float));
        }
}

Matrix read_blob(const fs::path& path, int rows, int cols) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read blob: " + path.string());
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            float v;
            in.read(reinterpret_cast<char*>(&v), sizeof(float));
            if (!in)
                throw std::runtime_error("truncated blob: " + path.string());
            m(i, j) = v;
        }
    return m;
}

std::string act_name(Activation a) {
    switch (a) {
        case Activation::abs: return "abs";
        case Activation::relu: return "relu";
        default: return "none";
    }
}

Activation act_from(const std::string& s) {
    if (s == "abs") return Activation::abs;
    if (s == "relu") return Activation::relu;
    if (s == "none") return Activation::none;
    throw std::runtime_error("unknown activation in manifest: " + s);
}

}  // namespace

void save_weights(const DenseNet& net, const std::string& dir) {
    fs::create_directories(dir);
    json manifest;
    manifest["format_version"] = kFormatVersion;
    json layers = json::array();
    for (int l = 0; l < net.depth(); ++l) {
        const LayerSlot& slot = net.slots[l];
        json j;
        j["activation"] = act_name(net.acts[l]);
        j["rows"] = slot.out();
        j["cols"] = slot.in();
        const std::string stem = "layer" + std::to_string(l);
        if (slot.split) {
            j["kind"] = "split";
            j["rank"] = slot.rank();
            write_blob(slot.w1, fs::path(dir) / (stem + "_w1.f32"));
            write_blob(slot.w2, fs::path(dir) / (stem + "_w2.f32"));
        } else {
            j["kind"] = "full";
            write_blob(slot.w, fs::path(dir) / (stem + "_w.f32"));
        }
        write_blob(Matrix(slot.bias.transpose()), fs::path(dir) / (stem + "_bias.f32"));
        layers.push_back(j);
    }
    manifest["layers"] = layers;
    std::ofstream out(fs::path(dir) / "manifest.json");
    out << manifest.dump(2) << "\n";
}

DenseNet load_weights(const std::string& dir) {
    std::ifstream in(fs::path(dir) / "manifest.json");
    if (!in)
        throw std::runtime_error("no manifest.json in container: " + dir);
    json manifest;
    try {
        in >> manifest;
    } catch (const json::exception& e) {
        throw std::runtime_error("corrupt manifest in " + dir + ": " + e.what());
    }
    if (manifest.value("format_version", -1) != kFormatVersion)
        throw std::runtime_error("unsupported container format version in " + dir);

    DenseNet net;
    int l = 0;
    for (const auto& j : manifest.at("layers")) {
        const int rows = j.at("rows").get<int>();
        const int cols = j.at("cols").get<int>();
        const std::string stem = "layer" + std::to_string(l);
        LayerSlot slot;
        if (j.at("kind") == "split") {
            const int k = j.at("rank").get<int>();
            slot.install_split(read_blob(fs::path(dir) / (stem + "_w1.f32"), rows, k),
                               read_blob(fs::path(dir) / (stem + "_w2.f32"), k, cols));
        } else {
            slot.install_full(read_blob(fs::path(dir) / (stem + "_w.f32"), rows, cols));
        }
        slot.bias =
            read_blob(fs::path(dir) / (stem + "_bias.f32"), 1, rows).row(0);
        net.slots.push_back(std::move(slot));
        net.acts.push_back(act_from(j.at("activation").get<std::string>()));
        ++l;
    }
    if (net.slots.empty())
        throw std::runtime_error("container has no layers: " + dir);
    return net;
}

}  // namespace rmt
