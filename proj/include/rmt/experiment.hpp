#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rmt/data.hpp"
#include "rmt/prune.hpp"
#include "rmt/spectrum.hpp"
#include "rmt/train.hpp"

namespace rmt {

/// Dataset selection for an experiment run.
struct DatasetSpec {
    std::string kind = "synthetic_digits";  // idx | synthetic_digits | polynomial | regression
    std::string train_images, train_labels, test_images, test_labels;
    int train_limit = -1, test_limit = -1;
    int train_count = 10000, test_count = 2000;  // synthetic_digits
    int poly_degree = 3;
    double poly_noise = 0.05;
    int poly_count = 1000;
};

struct RunConfig {
    std::string task = "classify";  // classify | regress
    std::vector<int> topology;
    TrainConfig train;
    std::optional<PruneSchedule> schedule;
    DatasetSpec dataset;
    std::vector<std::uint64_t> seeds{1};
    std::string out_dir = "out";
    std::string activation = "relu";  // abs | relu | none
    bool activate_final = true;

    void validate() const;
};

/// Strict parse: unknown keys raise ConfigError naming the key.
RunConfig parse_run_config(const nlohmann::json& j);
RunConfig load_run_config(const std::string& path);

struct EpochRow {
    std::string run;  // "normal" | "pruned"
    std::uint64_t seed = 0;
    int epoch = 0;
    double train_acc = 0.0, test_acc = 0.0;
    double train_loss = 0.0, test_loss = 0.0;
    std::int64_t params_total = 0, params_nonzero = 0;
};

struct ExperimentReport {
    std::vector<EpochRow> rows;
    std::vector<std::pair<std::uint64_t, PruneEvent>> events;  // (seed, event)
};

/// Paired normal/pruned training over every seed; writes report.csv,
/// events.jsonl and summary.json under config.out_dir and saves the final
/// nets as weight containers.
ExperimentReport run_experiment(const RunConfig& config);

void write_report_csv(const ExperimentReport& report, const std::string& path);
void write_events_jsonl(const ExperimentReport& report, const std::string& path);
void write_summary_json(const ExperimentReport& report, const std::string& path);

struct LayerAnalysis {
    int layer = 0;
    int rows = 0, cols = 0;
    bool is_split = false;
    double sigma_hat_sq = 0.0;
    double lambda_plus = 0.0;
    double gof_statistic = 0.0;
    bool gof_pass = false;
    int spike_count = 0;     // squared singulars above lambda_plus
    int recommended_k = 0;   // rank to keep at the MP threshold
    std::int64_t params_full = 0, params_split = 0;
    bool split_recommended = false;
};

std::vector<LayerAnalysis> analyze_weights(const std::string& container_dir,
                                           double alpha, double beta,
                                           double gamma);

struct SweepPoint {
    double xi = 0.0;
    std::int64_t params_nonzero = 0;
    double accuracy = 0.0;
};

std::vector<SweepPoint> sparsify_sweep(const DenseNet& net,
                                       const std::vector<double>& xi_grid,
                                       const Dataset& eval_data);

struct PropertyResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double bound = 0.0;
};

struct VerifySuiteConfig {
    std::uint64_t seed = 42;
    double tolerance_scale = 1.0;  // 0 makes every numeric check fail
};

/// Fixed-seed re-checks of the distribution/spiked-model properties,
/// machine readable; failures are report content, not errors.
std::vector<PropertyResult> verify_rmt(const VerifySuiteConfig& config);

enum class PlotKind { accuracy_vs_epoch, acc_vs_params, esd_histogram };

/// Plain-text plot tables plus a JSON metadata sidecar; no image rendering.
void emit_plot_data(const ExperimentReport& report, PlotKind kind,
                    const std::string& out_prefix);
void emit_plot_data(const std::vector<SweepPoint>& curve,
                    const std::string& out_prefix);
void emit_plot_data(const Spectrum& spectrum, int bins,
                    const std::string& out_prefix);

}  // namespace rmt
