#include "rmt/train.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rmt {

void TrainConfig::validate() const {
    if (!(lr > 0.0)) throw ConfigError("TrainConfig: lr must be > 0");
    if (!(momentum >= 0.0 && momentum < 1.0))
        throw ConfigError("TrainConfig: momentum must lie in [0, 1)");
    if (batch_size < 1) throw ConfigError("TrainConfig: batch_size must be >= 1");
    if (!(lr_decay > 0.0 && lr_decay <= 1.0))
        throw ConfigError("TrainConfig: lr_decay must lie in (0, 1]");
    if (epochs < 0) throw ConfigError("TrainConfig: epochs must be >= 0");
    if (mu1 < 0.0 || mu2 < 0.0)
        throw ConfigError("TrainConfig: regularization must be >= 0");
}

double lr_step(const TrainConfig& config, int epoch) {
    if (epoch < 0) throw std::invalid_argument("lr_step: epoch must be >= 0");
    return config.lr * std::pow(config.lr_decay, epoch);
}

Trainer::Trainer(const DenseNet& net, TrainConfig config)
    : config_(std::move(config)) {
    config_.validate();
    sync_velocity(net);
}

void Trainer::sync_velocity(const DenseNet& net) {
    velocity_.resize(net.slots.size());
    for (std::size_t i = 0; i < net.slots.size(); ++i) {
        const LayerSlot& s = net.slots[i];
        SlotVelocity& v = velocity_[i];
        if (s.split) {
            if (v.w1.rows() != s.w1.rows() || v.w1.cols() != s.w1.cols())
                v.w1 = Matrix::Zero(s.w1.rows(), s.w1.cols());
            if (v.w2.rows() != s.w2.rows() || v.w2.cols() != s.w2.cols())
                v.w2 = Matrix::Zero(s.w2.rows(), s.w2.cols());
            v.w.resize(0, 0);
        } else {
            if (v.w.rows() != s.w.rows() || v.w.cols() != s.w.cols())
                v.w = Matrix::Zero(s.w.rows(), s.w.cols());
            v.w1.resize(0, 0);
            v.w2.resize(0, 0);
        }
        if (v.bias.size() != s.bias.size()) v.bias = Vector::Zero(s.bias.size());
    }
}

namespace {

struct ForwardTrace {
    std::vector<Matrix> pre;    // pre-activation per layer
    std::vector<Matrix> post;   // post-activation per layer
    std::vector<Matrix> inner;  // w2 * input for split slots (else empty)
};

Matrix traced_forward(const DenseNet& net, const Matrix& x, ForwardTrace& tr) {
    tr.pre.resize(net.depth());
    tr.post.resize(net.depth());
    tr.inner.resize(net.depth());
    Matrix a = x;
    for (int l = 0; l < net.depth(); ++l) {
        const LayerSlot& slot = net.slots[l];
        Matrix z;
        if (slot.split) {
            tr.inner[l].noalias() = slot.w2 * a;
            z.noalias() = slot.w1 * tr.inner[l];
        } else {
            z.noalias() = slot.w * a;
        }
        z.colwise() += slot.bias;
        tr.pre[l] = z;
        apply_activation(z, net.acts[l]);
        tr.post[l] = z;
        a = std::move(z);
    }
    return a;
}

}  // namespace

EpochMetrics Trainer::train_epoch(DenseNet& net, const Dataset& data,
                                  int epoch) {
    sync_velocity(net);
    const int n = data.count();
    if (n == 0) throw std::invalid_argument("train_epoch: empty dataset");
    const double lr = lr_step(config_, epoch);
    const double m = config_.momentum;

    // Per-epoch shuffle stream derived from the run seed.
    Rng rng(config_.seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(epoch));
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(order[i], order[rng.uniform_int(i + 1)]);

    double loss_sum = 0.0;
    std::int64_t correct = 0;
    int batches = 0;

    for (int start = 0; start < n; start += config_.batch_size) {
        const int bs = std::min(config_.batch_size, n - start);
        Matrix x(data.dim(), bs);
        std::vector<int> labels(bs);
        Vector targets(bs);
        for (int j = 0; j < bs; ++j) {
            int idx = order[start + j];
            x.col(j) = data.inputs.col(idx);
            if (data.regression)
                targets[j] = data.targets[idx];
            else
                labels[j] = data.labels[idx];
        }

        ForwardTrace tr;
        Matrix logits = traced_forward(net, x, tr);

        double batch_loss;
        Matrix d_logits;  // dL/d(output), per sample averaged over the batch
        if (config_.loss == LossKind::cross_entropy) {
            batch_loss = cross_entropy_loss(logits, labels, &clamp_warnings_);
            d_logits = softmax(logits);
            for (int j = 0; j < bs; ++j) {
                d_logits(labels[j], j) -= 1.0;
                if (classification_confidence(logits.col(j), labels[j]) > 0.0)
                    ++correct;
            }
            d_logits /= bs;
        } else {
            Matrix diff = logits;
            diff.row(0) -= targets.transpose();
            batch_loss = diff.squaredNorm() / bs;
            d_logits = 2.0 * diff / bs;
        }
        batch_loss += regularization_term(net, config_.mu1, config_.mu2);
        if (!std::isfinite(batch_loss))
            throw NumericalError("train_epoch: non-finite loss at epoch " +
                                 std::to_string(epoch) + ", batch " +
                                 std::to_string(batches));
        loss_sum += batch_loss;
        ++batches;

        // Backward
        Matrix delta = d_logits;
        for (int l = net.depth() - 1; l >= 0; --l) {
            LayerSlot& slot = net.slots[l];
            SlotVelocity& vel = velocity_[l];
            delta = delta.cwiseProduct(activation_derivative(tr.pre[l], net.acts[l]));
            const Matrix& input = (l == 0) ? x : tr.post[l - 1];
            Vector d_bias = delta.rowwise().sum();

            if (slot.split) {
                Matrix d_w1 = delta * tr.inner[l].transpose();
                Matrix w1t_delta = slot.w1.transpose() * delta;
                Matrix d_w2 = w1t_delta * input.transpose();
                if (config_.mu1 != 0.0) {
                    d_w1 += config_.mu1 * slot.w1.unaryExpr([](double v) {
                        return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
                    });
                    d_w2 += config_.mu1 * slot.w2.unaryExpr([](double v) {
                        return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
                    });
                }
                if (config_.mu2 != 0.0) {
                    d_w1 += 2.0 * config_.mu2 * slot.w1;
                    d_w2 += 2.0 * config_.mu2 * slot.w2;
                }
                if (l > 0) delta = slot.w2.transpose() * w1t_delta;
                vel.w1 = m * vel.w1 - lr * d_w1;
                vel.w2 = m * vel.w2 - lr * d_w2;
                slot.w1 += vel.w1;
                slot.w2 += vel.w2;
            } else {
                Matrix d_w = delta * input.transpose();
                if (config_.mu1 != 0.0)
                    d_w += config_.mu1 * slot.w.unaryExpr([](double v) {
                        return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
                    });
                if (config_.mu2 != 0.0) d_w += 2.0 * config_.mu2 * slot.w;
                if (l > 0) delta = slot.w.transpose() * delta;
                vel.w = m * vel.w - lr * d_w;
                slot.w += vel.w;
            }
            vel.bias = m * vel.bias - lr * d_bias;
            slot.bias += vel.bias;
        }
    }

    EpochMetrics out;
    out.loss = loss_sum / std::max(1, batches);
    out.accuracy = data.regression ? 0.0 : static_cast<double>(correct) / n;
    return out;
}

double evaluate_loss(const DenseNet& net, const Dataset& data, double mu1,
                     double mu2, LossKind kind) {
    Matrix logits = forward(net, data.inputs);
    double base;
    if (kind == LossKind::cross_entropy) {
        base = cross_entropy_loss(logits, data.labels);
    } else {
        Matrix diff = logits;
        diff.row(0) -= data.targets.transpose();
        base = diff.squaredNorm() / data.count();
    }
    return base + regularization_term(net, mu1, mu2);
}

}  // namespace rmt
