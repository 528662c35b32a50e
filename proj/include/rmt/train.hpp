#pragma once

#include <cstdint>
#include <vector>

#include "rmt/data.hpp"
#include "rmt/net.hpp"

namespace rmt {

enum class LossKind { cross_entropy, mse };

struct TrainConfig {
    double lr = 0.02;
    double momentum = 0.9;
    int batch_size = 128;
    double lr_decay = 1.0;  // multiplicative per epoch
    double mu1 = 0.0;       // L1 coefficient
    double mu2 = 0.0;       // L2 coefficient
    int epochs = 40;
    std::uint64_t seed = 1;
    Init init = Init::normal_inv_n;
    LossKind loss = LossKind::cross_entropy;

    void validate() const;
};

/// lr * decay^epoch.
double lr_step(const TrainConfig& config, int epoch);

struct EpochMetrics {
    double loss = 0.0;      // mean over batches, regularizer included
    double accuracy = 0.0;  // classification only; 0 for regression
};

/// Mini-batch SGD with classical momentum. Velocity buffers mirror the net's
/// slots and are reset for any slot whose shape changed (e.g. after pruning).
class Trainer {
public:
    Trainer(const DenseNet& net, TrainConfig config);

    /// One pass over the data in a seeded shuffle; epoch indexes the lr decay
    /// and the shuffle stream.
    EpochMetrics train_epoch(DenseNet& net, const Dataset& data, int epoch);

    const TrainConfig& config() const { return config_; }

private:
    struct SlotVelocity {
        Matrix w, w1, w2;
        Vector bias;
    };
    void sync_velocity(const DenseNet& net);

    TrainConfig config_;
    std::vector<SlotVelocity> velocity_;
    std::int64_t clamp_warnings_ = 0;
};

/// Dataset-level loss without touching the net (regularizer included).
double evaluate_loss(const DenseNet& net, const Dataset& data, double mu1,
                     double mu2, LossKind kind);

}  // namespace rmt
