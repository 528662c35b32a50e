#pragma once

#include <cstdint>
#include <vector>

#include "rmt/common.hpp"
#include "rmt/data.hpp"

namespace rmt {

enum class Activation { abs, relu, none };
enum class Init { normal_inv_n, he, xavier };

/// One affine layer, either a single matrix or a low-rank factored pair.
struct LayerSlot {
    Matrix w;        // Full state: out x in
    Matrix w1, w2;   // Split state: out x k, k x in
    Vector bias;     // length out
    bool split = false;

    int out() const { return static_cast<int>(bias.size()); }
    int in() const {
        return static_cast<int>(split ? w2.cols() : w.cols());
    }
    int rank() const { return split ? static_cast<int>(w1.cols()) : -1; }

    std::int64_t param_count() const {
        if (split)
            return static_cast<std::int64_t>(w1.size()) + w2.size() + bias.size();
        return static_cast<std::int64_t>(w.size()) + bias.size();
    }

    /// The matrix the slot represents: w, or w1 * w2.
    Matrix effective() const { return split ? Matrix(w1 * w2) : w; }

    void install_full(Matrix new_w) {
        w = std::move(new_w);
        w1.resize(0, 0);
        w2.resize(0, 0);
        split = false;
    }
    void install_split(Matrix new_w1, Matrix new_w2) {
        w1 = std::move(new_w1);
        w2 = std::move(new_w2);
        w.resize(0, 0);
        split = true;
    }
};

struct DenseNet {
    std::vector<LayerSlot> slots;
    std::vector<Activation> acts;  // one per slot

    int depth() const { return static_cast<int>(slots.size()); }
    int input_width() const { return slots.front().in(); }
    int output_width() const { return slots.back().out(); }
};

/// Fan-based initialization; biases zero; deterministic per seed.
/// normal_inv_n: var 1/fan_in. he: var 2/fan_in. xavier: var 2/(fan_in+fan_out).
DenseNet init_net(const std::vector<int>& topology, Init init,
                  std::uint64_t seed, Activation act = Activation::relu,
                  bool activate_final = true);

/// Columns of x are samples (in x batch); returns out x batch.
Matrix forward(const DenseNet& net, const Matrix& x);
Vector forward(const DenseNet& net, const Vector& s);

/// Column-wise softmax with max subtraction.
Matrix softmax(const Matrix& logits);
Vector softmax(const Vector& logits);

/// delta X = logits[true] - max over j != true.
double classification_confidence(const Vector& logits, int true_class);

/// Cross-entropy (mean over columns) plus L1/L2 penalties on the weight
/// matrices. Probabilities are clamped at 1e-12; the clamp count is
/// accumulated in *clamp_warnings when given.
double cross_entropy_loss(const Matrix& logits, const std::vector<int>& labels,
                          std::int64_t* clamp_warnings = nullptr);
double regularization_term(const DenseNet& net, double mu1, double mu2);

double apply_activation_scalar(double x, Activation a);
void apply_activation(Matrix& z, Activation a);
Matrix activation_derivative(const Matrix& z, Activation a);

/// Fraction of samples with strictly positive classification confidence.
double accuracy(const DenseNet& net, const Dataset& data);

/// Indices of samples with delta X > eta.
std::vector<int> good_set(const DenseNet& net, const Dataset& data, double eta);

/// Bound factors of the confidence-change lemmas, for pruning layer b
/// (1-based): prefix norm of the activations entering layer b times the
/// product of downstream operator norms. g uses l2 / largest singular value,
/// h uses l1 / max absolute column sum.
double g_phi(const DenseNet& net, const Vector& s, int b);
double h_phi(const DenseNet& net, const Vector& s, int b);

}  // namespace rmt
