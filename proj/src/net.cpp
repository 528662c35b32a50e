#include "rmt/net.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rmt {

DenseNet init_net(const std::vector<int>& topology, Init init,
                  std::uint64_t seed, Activation act, bool activate_final) {
    if (topology.size() < 2)
        throw std::invalid_argument("init_net: topology needs >= 2 widths");
    for (int w : topology)
        if (w < 1) throw std::invalid_argument("init_net: widths must be >= 1");

    DenseNet net;
    Rng rng(seed);
    const int layers = static_cast<int>(topology.size()) - 1;
    for (int l = 0; l < layers; ++l) {
        const int fan_in = topology[l], fan_out = topology[l + 1];
        double var;
        switch (init) {
            case Init::normal_inv_n: var = 1.0 / fan_in; break;
            case Init::he: var = 2.0 / fan_in; break;
            case Init::xavier: var = 2.0 / (fan_in + fan_out); break;
            default: var = 1.0 / fan_in;
        }
        LayerSlot slot;
        slot.w = gaussian_matrix(fan_out, fan_in, std::sqrt(var), rng);
        slot.bias = Vector::Zero(fan_out);
        net.slots.push_back(std::move(slot));
        net.acts.push_back((l == layers - 1 && !activate_final) ? Activation::none
                                                                : act);
    }
    return net;
}

double apply_activation_scalar(double x, Activation a) {
    switch (a) {
        case Activation::abs: return std::abs(x);
        case Activation::relu: return x > 0.0 ? x : 0.0;
        default: return x;
    }
}

void apply_activation(Matrix& z, Activation a) {
    switch (a) {
        case Activation::abs: z = z.cwiseAbs(); break;
        case Activation::relu: z = z.cwiseMax(0.0); break;
        default: break;
    }
}

Matrix activation_derivative(const Matrix& z, Activation a) {
    switch (a) {
        case Activation::abs:
            // sign(z), subgradient 0 at 0
            return z.unaryExpr([](double v) {
                return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
            });
        case Activation::relu:
            return z.unaryExpr([](double v) { return v > 0.0 ? 1.0 : 0.0; });
        default:
            return Matrix::Ones(z.rows(), z.cols());
    }
}

Matrix forward(const DenseNet& net, const Matrix& x) {
    if (x.rows() != net.input_width())
        throw std::invalid_argument("forward: input width mismatch");
    Matrix a = x;
    for (int l = 0; l < net.depth(); ++l) {
        const LayerSlot& slot = net.slots[l];
        Matrix z;
        if (slot.split)
            z.noalias() = slot.w1 * (slot.w2 * a);
        else
            z.noalias() = slot.w * a;
        z.colwise() += slot.bias;
        apply_activation(z, net.acts[l]);
        a = std::move(z);
    }
    return a;
}

Vector forward(const DenseNet& net, const Vector& s) {
    return forward(net, Matrix(s)).col(0);
}

Matrix softmax(const Matrix& logits) {
    Matrix p = logits;
    for (int j = 0; j < p.cols(); ++j) {
        Vector col = p.col(j);
        double mx = col.maxCoeff();
        col = (col.array() - mx).exp();
        p.col(j) = col / col.sum();
    }
    return p;
}

Vector softmax(const Vector& logits) { return softmax(Matrix(logits)).col(0); }

double classification_confidence(const Vector& logits, int true_class) {
    if (logits.size() < 2)
        throw std::invalid_argument("classification_confidence: need >= 2 classes");
    if (true_class < 0 || true_class >= logits.size())
        throw std::invalid_argument("classification_confidence: class out of range");
    double best_other = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < logits.size(); ++j)
        if (j != true_class) best_other = std::max(best_other, logits[j]);
    return logits[true_class] - best_other;
}

double cross_entropy_loss(const Matrix& logits, const std::vector<int>& labels,
                          std::int64_t* clamp_warnings) {
    if (static_cast<int>(labels.size()) != logits.cols())
        throw std::invalid_argument("cross_entropy_loss: label count mismatch");
    Matrix p = softmax(logits);
    double sum = 0.0;
    for (int j = 0; j < p.cols(); ++j) {
        double prob = p(labels[j], j);
        if (prob < 1e-12) {
            prob = 1e-12;
            if (clamp_warnings) ++(*clamp_warnings);
        }
        sum -= std::log(prob);
    }
    return sum / p.cols();
}

double regularization_term(const DenseNet& net, double mu1, double mu2) {
    if (mu1 == 0.0 && mu2 == 0.0) return 0.0;
    double l1 = 0.0, l2 = 0.0;
    for (const auto& slot : net.slots) {
        if (slot.split) {
            l1 += slot.w1.cwiseAbs().sum() + slot.w2.cwiseAbs().sum();
            l2 += slot.w1.squaredNorm() + slot.w2.squaredNorm();
        } else {
            l1 += slot.w.cwiseAbs().sum();
            l2 += slot.w.squaredNorm();
        }
    }
    return mu1 * l1 + mu2 * l2;
}

double accuracy(const DenseNet& net, const Dataset& data) {
    if (data.count() == 0) throw std::invalid_argument("accuracy: empty dataset");
    Matrix logits = forward(net, data.inputs);
    int correct = 0;
    for (int j = 0; j < logits.cols(); ++j)
        if (classification_confidence(logits.col(j), data.labels[j]) > 0.0)
            ++correct;
    return static_cast<double>(correct) / data.count();
}

std::vector<int> good_set(const DenseNet& net, const Dataset& data, double eta) {
    Matrix logits = forward(net, data.inputs);
    std::vector<int> idx;
    for (int j = 0; j < logits.cols(); ++j)
        if (classification_confidence(logits.col(j), data.labels[j]) > eta)
            idx.push_back(j);
    return idx;
}

namespace {

// Activations entering layer b (1-based): s itself for b = 1.
Vector prefix_activation(const DenseNet& net, const Vector& s, int b) {
    Vector a = s;
    for (int l = 0; l < b - 1; ++l) {
        const LayerSlot& slot = net.slots[l];
        Vector z = slot.split ? Vector(slot.w1 * (slot.w2 * a))
                              : Vector(slot.w * a);
        z += slot.bias;
        for (int i = 0; i < z.size(); ++i)
            z[i] = apply_activation_scalar(z[i], net.acts[l]);
        a = std::move(z);
    }
    return a;
}

}  // namespace

double g_phi(const DenseNet& net, const Vector& s, int b) {
    if (b < 1 || b > net.depth())
        throw std::invalid_argument("g_phi: layer index out of range");
    double value = prefix_activation(net, s, b).norm();
    for (int l = b; l < net.depth(); ++l)
        value *= spectral_norm(net.slots[l].effective());
    return value;
}

double h_phi(const DenseNet& net, const Vector& s, int b) {
    if (b < 1 || b > net.depth())
        throw std::invalid_argument("h_phi: layer index out of range");
    double value = prefix_activation(net, s, b).lpNorm<1>();
    for (int l = b; l < net.depth(); ++l)
        value *= max_abs_col_sum(net.slots[l].effective());
    return value;
}

}  // namespace rmt
