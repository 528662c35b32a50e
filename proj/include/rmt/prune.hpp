#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rmt/net.hpp"

namespace rmt {

struct RetentionSchedule {
    double slope = -1.0 / 30.0;
    double intercept = 1.0;
};

struct SparsifySchedule {
    double xi_start = 0.001;
    double xi_end = 0.02;  // reached at the final epoch
};

struct PruneSchedule {
    int split_frequency = 7;  // epochs between pruning passes
    double tau_fc = 0.7;      // GoF threshold for dense layers
    double tau_conv = 0.05;   // GoF threshold for flattened conv layers
    RetentionSchedule retention;
    double alpha = 0.1;  // BEMA trim
    double beta = 0.1;   // Tracy-Widom confidence
    std::optional<SparsifySchedule> sparsify;

    void validate() const;
};

/// Fraction of below-threshold singular values retained at this epoch:
/// max(0, slope * epoch + intercept), clamped to [0, 1].
double keep_fraction(int epoch, const RetentionSchedule& schedule);

/// Sparsification threshold at this epoch, linear from xi_start to xi_end.
double xi_at(const SparsifySchedule& schedule, int epoch, int total_epochs);

enum class PruneAction {
    split,
    truncate_in_place,
    recombine,
    skipped_gof,
    skipped_params
};

struct PruneEvent {
    int epoch = 0;
    int layer = 0;
    PruneAction action = PruneAction::skipped_gof;
    double gof_statistic = 0.0;
    double lambda_plus = 0.0;
    int kept_above = 0;
    int kept_below = 0;
    int removed = 0;
    std::int64_t params_before = 0;
    std::int64_t params_after = 0;
};

std::string to_json_line(const PruneEvent& event);

/// One Algorithm-1 analysis pass over the Full, not-yet-split slots:
/// SVD -> BEMA -> goodness of fit -> threshold truncation with the epoch's
/// retention -> split when the factored form is strictly smaller.
/// SVD/BEMA failures become skipped events; training is never aborted.
std::vector<PruneEvent> prune_pass(DenseNet& net, const PruneSchedule& schedule,
                                   int epoch);

/// The reverse branch for Split slots: recombine W1 W2 when the product still
/// fits the MP law and a fresh truncate-then-split would shrink parameters
/// strictly below the current count.
std::vector<PruneEvent> recombine_pass(DenseNet& net,
                                       const PruneSchedule& schedule, int epoch);

struct SparsifyReport {
    std::int64_t zeroed = 0;
    std::int64_t nonzero_after = 0;
};

/// Zeroes sub-threshold entries of every weight matrix; biases untouched.
SparsifyReport sparsify_pass(DenseNet& net, double xi);

struct ParamCount {
    std::int64_t total = 0;
    std::int64_t nonzero = 0;
    std::vector<std::int64_t> per_layer;
};

ParamCount parameter_count(const DenseNet& net);

}  // namespace rmt
