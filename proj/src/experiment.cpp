#include "rmt/experiment.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "rmt/bema.hpp"
#include "rmt/spiked.hpp"
#include "rmt/svd_ops.hpp"
#include "rmt/weights_io.hpp"

namespace rmt {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw ConfigError("unknown key \"" + it.key() + "\" in " + where);
}

Activation parse_activation(const std::string& s) {
    if (s == "abs") return Activation::abs;
    if (s == "relu") return Activation::relu;
    if (s == "none") return Activation::none;
    throw ConfigError("unknown activation \"" + s + "\"");
}

Init parse_init(const std::string& s) {
    if (s == "normal_inv_n") return Init::normal_inv_n;
    if (s == "he") return Init::he;
    if (s == "xavier") return Init::xavier;
    throw ConfigError("unknown init \"" + s + "\"");
}

TrainConfig parse_train(const json& j) {
    reject_unknown_keys(j,
                        {"lr", "momentum", "batch_size", "lr_decay", "mu1",
                         "mu2", "epochs", "seed", "init", "loss"},
                        "train");
    TrainConfig t;
    t.lr = j.value("lr", t.lr);
    t.momentum = j.value("momentum", t.momentum);
    t.batch_size = j.value("batch_size", t.batch_size);
    t.lr_decay = j.value("lr_decay", t.lr_decay);
    t.mu1 = j.value("mu1", t.mu1);
    t.mu2 = j.value("mu2", t.mu2);
    t.epochs = j.value("epochs", t.epochs);
    t.seed = j.value("seed", t.seed);
    if (j.contains("init")) t.init = parse_init(j["init"].get<std::string>());
    if (j.contains("loss")) {
        std::string s = j["loss"].get<std::string>();
        if (s == "cross_entropy") t.loss = LossKind::cross_entropy;
        else if (s == "mse") t.loss = LossKind::mse;
        else throw ConfigError("unknown loss \"" + s + "\"");
    }
    t.validate();
    return t;
}

PruneSchedule parse_schedule(const json& j) {
    reject_unknown_keys(j,
                        {"split_frequency", "tau_fc", "tau_conv", "retention",
                         "alpha", "beta", "sparsify"},
                        "prune");
    PruneSchedule s;
    s.split_frequency = j.value("split_frequency", s.split_frequency);
    s.tau_fc = j.value("tau_fc", s.tau_fc);
    s.tau_conv = j.value("tau_conv", s.tau_conv);
    if (j.contains("retention")) {
        reject_unknown_keys(j["retention"], {"slope", "intercept"}, "retention");
        s.retention.slope = j["retention"].value("slope", s.retention.slope);
        s.retention.intercept =
            j["retention"].value("intercept", s.retention.intercept);
    }
    s.alpha = j.value("alpha", s.alpha);
    s.beta = j.value("beta", s.beta);
    if (j.contains("sparsify") && !j["sparsify"].is_null()) {
        reject_unknown_keys(j["sparsify"], {"xi_start", "xi_end"}, "sparsify");
        SparsifySchedule sp;
        sp.xi_start = j["sparsify"].value("xi_start", sp.xi_start);
        sp.xi_end = j["sparsify"].value("xi_end", sp.xi_end);
        s.sparsify = sp;
    }
    s.validate();
    return s;
}

DatasetSpec parse_dataset(const json& j) {
    reject_unknown_keys(j,
                        {"kind", "train_images", "train_labels", "test_images",
                         "test_labels", "train_limit", "test_limit",
                         "train_count", "test_count", "poly_degree",
                         "poly_noise", "poly_count"},
                        "dataset");
    DatasetSpec d;
    d.kind = j.value("kind", d.kind);
    if (d.kind != "idx" && d.kind != "synthetic_digits" &&
        d.kind != "polynomial" && d.kind != "regression")
        throw ConfigError("unknown dataset kind \"" + d.kind + "\"");
    d.train_images = j.value("train_images", "");
    d.train_labels = j.value("train_labels", "");
    d.test_images = j.value("test_images", "");
    d.test_labels = j.value("test_labels", "");
    d.train_limit = j.value("train_limit", -1);
    d.test_limit = j.value("test_limit", -1);
    d.train_count = j.value("train_count", d.train_count);
    d.test_count = j.value("test_count", d.test_count);
    d.poly_degree = j.value("poly_degree", d.poly_degree);
    d.poly_noise = j.value("poly_noise", d.poly_noise);
    d.poly_count = j.value("poly_count", d.poly_count);
    return d;
}

}  // namespace

void RunConfig::validate() const {
    if (task != "classify" && task != "regress")
        throw ConfigError("task must be classify or regress, got \"" + task + "\"");
    if (topology.size() < 2) throw ConfigError("topology needs >= 2 widths");
    for (int w : topology)
        if (w < 1) throw ConfigError("topology widths must be >= 1");
    if (seeds.empty()) throw ConfigError("at least one seed required");
    train.validate();
    if (schedule) schedule->validate();
    parse_activation(activation);
}

RunConfig parse_run_config(const json& j) {
    reject_unknown_keys(j,
                        {"task", "topology", "train", "prune", "dataset",
                         "seeds", "out_dir", "activation", "activate_final"},
                        "config root");
    RunConfig c;
    c.task = j.value("task", c.task);
    if (j.contains("topology"))
        c.topology = j["topology"].get<std::vector<int>>();
    if (j.contains("train")) c.train = parse_train(j["train"]);
    if (j.contains("prune") && !j["prune"].is_null())
        c.schedule = parse_schedule(j["prune"]);
    if (j.contains("dataset")) c.dataset = parse_dataset(j["dataset"]);
    if (j.contains("seeds"))
        c.seeds = j["seeds"].get<std::vector<std::uint64_t>>();
    c.out_dir = j.value("out_dir", c.out_dir);
    c.activation = j.value("activation", c.activation);
    c.activate_final = j.value("activate_final", c.activate_final);
    c.validate();
    return c;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("config is not valid JSON: " + std::string(e.what()));
    }
    return parse_run_config(j);
}

namespace {

std::pair<Dataset, Dataset> build_datasets(const RunConfig& c,
                                           std::uint64_t seed) {
    const DatasetSpec& d = c.dataset;
    if (d.kind == "idx") {
        if (d.train_images.empty() || d.train_labels.empty())
            throw ConfigError("idx dataset requires train_images/train_labels");
        Dataset train = load_idx(d.train_images, d.train_labels, d.train_limit);
        Dataset test = (d.test_images.empty())
                           ? train
                           : load_idx(d.test_images, d.test_labels, d.test_limit);
        return {std::move(train), std::move(test)};
    }
    if (d.kind == "synthetic_digits") {
        return {gen_synthetic_digits(d.train_count, seed * 1000 + 1),
                gen_synthetic_digits(d.test_count, seed * 1000 + 2)};
    }
    if (d.kind == "polynomial") {
        return {gen_polynomial_2d(d.poly_degree, d.poly_count, d.poly_noise,
                                  seed * 1000 + 1),
                gen_polynomial_2d(d.poly_degree, d.poly_count, d.poly_noise,
                                  seed * 1000 + 2)};
    }
    // regression
    return gen_regression(seed * 1000 + 1);
}

EpochRow make_row(const std::string& run, std::uint64_t seed, int epoch,
                  const DenseNet& net, const Dataset& train,
                  const Dataset& test, const TrainConfig& tc,
                  double train_acc, double train_loss) {
    EpochRow r;
    r.run = run;
    r.seed = seed;
    r.epoch = epoch;
    r.train_acc = train_acc;
    r.train_loss = train_loss;
    r.test_loss = evaluate_loss(net, test, tc.mu1, tc.mu2, tc.loss);
    r.test_acc = test.regression ? 0.0 : accuracy(net, test);
    ParamCount pc = parameter_count(net);
    r.params_total = pc.total;
    r.params_nonzero = pc.nonzero;
    return r;
}

}  // namespace

ExperimentReport run_experiment(const RunConfig& config) {
    config.validate();
    fs::create_directories(config.out_dir);
    const Activation act = parse_activation(config.activation);

    ExperimentReport report;
    for (std::uint64_t seed : config.seeds) {
        auto [train_data, test_data] = build_datasets(config, seed);
        if (config.task == "regress" && !train_data.regression)
            throw ConfigError("regress task requires a regression dataset");

        TrainConfig tc = config.train;
        tc.seed = seed;

        // Paired runs share initialization exactly.
        DenseNet normal = init_net(config.topology, tc.init, seed, act,
                                   config.activate_final);
        DenseNet pruned = normal;

        auto initial_row = [&](const std::string& run, const DenseNet& net) {
            double tr_acc =
                train_data.regression ? 0.0 : accuracy(net, train_data);
            double tr_loss =
                evaluate_loss(net, train_data, tc.mu1, tc.mu2, tc.loss);
            report.rows.push_back(make_row(run, seed, 0, net, train_data,
                                           test_data, tc, tr_acc, tr_loss));
        };
        initial_row("normal", normal);
        if (config.schedule) initial_row("pruned", pruned);

        Trainer normal_trainer(normal, tc);
        Trainer pruned_trainer(pruned, tc);

        for (int epoch = 1; epoch <= tc.epochs; ++epoch) {
            EpochMetrics nm = normal_trainer.train_epoch(normal, train_data, epoch - 1);
            report.rows.push_back(make_row("normal", seed, epoch, normal,
                                           train_data, test_data, tc, nm.accuracy,
                                           nm.loss));
            if (!config.schedule) continue;

            EpochMetrics pm = pruned_trainer.train_epoch(pruned, train_data, epoch - 1);
            const PruneSchedule& sched = *config.schedule;
            if (epoch % sched.split_frequency == 0) {
                for (auto& ev : recombine_pass(pruned, sched, epoch))
                    report.events.emplace_back(seed, ev);
                for (auto& ev : prune_pass(pruned, sched, epoch))
                    report.events.emplace_back(seed, ev);
            }
            if (sched.sparsify)
                sparsify_pass(pruned, xi_at(*sched.sparsify, epoch, tc.epochs));
            report.rows.push_back(make_row("pruned", seed, epoch, pruned,
                                           train_data, test_data, tc, pm.accuracy,
                                           pm.loss));
        }

        save_weights(normal, (fs::path(config.out_dir) /
                              ("normal_seed" + std::to_string(seed)))
                                 .string());
        if (config.schedule)
            save_weights(pruned, (fs::path(config.out_dir) /
                                  ("pruned_seed" + std::to_string(seed)))
                                     .string());
    }

    write_report_csv(report, (fs::path(config.out_dir) / "report.csv").string());
    write_events_jsonl(report,
                       (fs::path(config.out_dir) / "events.jsonl").string());
    write_summary_json(report,
                       (fs::path(config.out_dir) / "summary.json").string());
    return report;
}

void write_report_csv(const ExperimentReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "run,seed,epoch,train_acc,test_acc,train_loss,test_loss,"
           "params_total,params_nonzero\n";
    out.precision(10);
    for (const auto& r : report.rows)
        out << r.run << "," << r.seed << "," << r.epoch << "," << r.train_acc
            << "," << r.test_acc << "," << r.train_loss << "," << r.test_loss
            << "," << r.params_total << "," << r.params_nonzero << "\n";
}

void write_events_jsonl(const ExperimentReport& report,
                        const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    for (const auto& [seed, ev] : report.events) {
        std::string line = to_json_line(ev);
        // splice the seed into the record
        line.insert(1, "\"seed\":" + std::to_string(seed) + ",");
        out << line << "\n";
    }
}

void write_summary_json(const ExperimentReport& report,
                        const std::string& path) {
    // aggregate mean/variance of test accuracy and loss across seeds
    std::map<std::pair<std::string, int>, std::vector<const EpochRow*>> groups;
    for (const auto& r : report.rows) groups[{r.run, r.epoch}].push_back(&r);

    json agg = json::array();
    for (const auto& [key, rows] : groups) {
        double acc_mean = 0.0, loss_mean = 0.0, params_mean = 0.0;
        for (const auto* r : rows) {
            acc_mean += r->test_acc;
            loss_mean += r->test_loss;
            params_mean += static_cast<double>(r->params_total);
        }
        const double n = static_cast<double>(rows.size());
        acc_mean /= n;
        loss_mean /= n;
        params_mean /= n;
        double acc_var = 0.0;
        for (const auto* r : rows)
            acc_var += (r->test_acc - acc_mean) * (r->test_acc - acc_mean);
        acc_var /= n;
        agg.push_back({{"run", key.first},
                       {"epoch", key.second},
                       {"test_acc_mean", acc_mean},
                       {"test_acc_var", acc_var},
                       {"test_loss_mean", loss_mean},
                       {"params_mean", params_mean},
                       {"seeds", rows.size()}});
    }
    std::ofstream out(path);
    out << json{{"aggregates", agg}}.dump(2) << "\n";
}

std::vector<LayerAnalysis> analyze_weights(const std::string& container_dir,
                                           double alpha, double beta,
                                           double gamma) {
    DenseNet net = load_weights(container_dir);
    std::vector<LayerAnalysis> out;
    for (int l = 0; l < net.depth(); ++l) {
        const LayerSlot& slot = net.slots[l];
        Matrix w = slot.effective();
        LayerAnalysis a;
        a.layer = l;
        a.rows = static_cast<int>(w.rows());
        a.cols = static_cast<int>(w.cols());
        a.is_split = slot.split;

        Spectrum spec = esd(w);
        GofResult gof = mp_fit_test(spec, alpha, beta, gamma,
                                    static_cast<int>(std::max(w.rows(), w.cols())));
        a.sigma_hat_sq = gof.bema.sigma_hat_sq;
        a.lambda_plus = gof.bema.lambda_plus;
        a.gof_statistic = gof.statistic;
        a.gof_pass = gof.pass;
        for (double v : spec.values())
            if (v > a.lambda_plus) ++a.spike_count;
        a.recommended_k = a.spike_count;
        a.params_full = static_cast<std::int64_t>(a.rows) * a.cols;
        a.params_split = a.recommended_k > 0
                             ? static_cast<std::int64_t>(a.recommended_k) *
                                   (a.rows + a.cols)
                             : a.params_full;
        a.split_recommended =
            a.recommended_k > 0 &&
            should_split(a.rows, a.cols, a.recommended_k);
        out.push_back(a);
    }
    return out;
}

std::vector<SweepPoint> sparsify_sweep(const DenseNet& net,
                                       const std::vector<double>& xi_grid,
                                       const Dataset& eval_data) {
    std::vector<SweepPoint> out;
    for (double xi : xi_grid) {
        DenseNet copy = net;
        sparsify_pass(copy, xi);
        SweepPoint p;
        p.xi = xi;
        p.params_nonzero = parameter_count(copy).nonzero;
        p.accuracy = accuracy(copy, eval_data);
        out.push_back(p);
    }
    return out;
}

void emit_plot_data(const ExperimentReport& report, PlotKind kind,
                    const std::string& out_prefix) {
    if (kind != PlotKind::accuracy_vs_epoch)
        throw std::invalid_argument(
            "emit_plot_data(report): only accuracy_vs_epoch applies");
    std::map<int, std::array<std::vector<double>, 2>> by_epoch;  // [normal, pruned]
    for (const auto& r : report.rows)
        by_epoch[r.epoch][r.run == "normal" ? 0 : 1].push_back(r.test_acc);

    std::ofstream out(out_prefix + ".txt");
    out << "epoch mean_normal var_normal mean_pruned var_pruned\n";
    auto stats = [](const std::vector<double>& v) -> std::pair<double, double> {
        if (v.empty()) return {0.0, 0.0};
        double m = 0.0;
        for (double x : v) m += x;
        m /= v.size();
        double var = 0.0;
        for (double x : v) var += (x - m) * (x - m);
        return {m, var / v.size()};
    };
    for (const auto& [epoch, series] : by_epoch) {
        auto [mn, vn] = stats(series[0]);
        auto [mp, vp] = stats(series[1]);
        out << epoch << " " << mn << " " << vn << " " << mp << " " << vp << "\n";
    }
    std::ofstream meta(out_prefix + ".json");
    meta << json{{"kind", "accuracy_vs_epoch"},
                 {"columns",
                  {"epoch", "mean_normal", "var_normal", "mean_pruned",
                   "var_pruned"}},
                 {"rows", by_epoch.size()}}
                .dump(2)
         << "\n";
}

void emit_plot_data(const std::vector<SweepPoint>& curve,
                    const std::string& out_prefix) {
    std::vector<SweepPoint> sorted = curve;
    std::sort(sorted.begin(), sorted.end(),
              [](const SweepPoint& a, const SweepPoint& b) {
                  return a.params_nonzero < b.params_nonzero;
              });
    std::ofstream out(out_prefix + ".txt");
    out << "params accuracy xi\n";
    out.precision(10);
    for (const auto& p : sorted)
        out << p.params_nonzero << " " << p.accuracy << " " << p.xi << "\n";
    std::ofstream meta(out_prefix + ".json");
    meta << json{{"kind", "acc_vs_params"},
                 {"columns", {"params", "accuracy", "xi"}},
                 {"rows", sorted.size()}}
                .dump(2)
         << "\n";
}

void emit_plot_data(const Spectrum& spectrum, int bins,
                    const std::string& out_prefix) {
    if (bins < 1) throw std::invalid_argument("esd_histogram: bins >= 1");
    if (spectrum.empty()) throw std::invalid_argument("esd_histogram: empty");
    const double lo = spectrum.min(), hi = spectrum.max();
    const double width = (hi > lo) ? (hi - lo) / bins : 1.0;
    std::vector<int> counts(bins, 0);
    for (double v : spectrum.values()) {
        int b = (hi > lo) ? std::min(bins - 1, static_cast<int>((v - lo) / width))
                          : 0;
        ++counts[b];
    }
    std::ofstream out(out_prefix + ".txt");
    out << "bin_center density\n";
    out.precision(10);
    const double norm = 1.0 / (spectrum.count() * width);
    for (int b = 0; b < bins; ++b)
        out << lo + (b + 0.5) * width << " " << counts[b] * norm << "\n";
    std::ofstream meta(out_prefix + ".json");
    meta << json{{"kind", "esd_histogram"},
                 {"columns", {"bin_center", "density"}},
                 {"bins", bins},
                 {"bin_width", width},
                 {"count", spectrum.count()}}
                .dump(2)
         << "\n";
}

std::vector<PropertyResult> verify_rmt(const VerifySuiteConfig& config) {
    const double scale = config.tolerance_scale;
    std::vector<PropertyResult> results;
    auto check = [&](const std::string& name, double measured, double bound) {
        results.push_back({name, measured <= bound, measured, bound});
    };

    // MP pdf normalization
    {
        MPParams mp{1.0, 1.0};
        double mass = mp_integrate([](double) { return 1.0; }, mp);
        check("mp_pdf_normalization", std::abs(mass - 1.0), 1e-6 * scale);
        MPParams mp2{2.0, 0.25};
        double mass2 = mp_integrate([](double) { return 1.0; }, mp2);
        check("mp_pdf_normalization_c025", std::abs(mass2 - 1.0), 1e-6 * scale);
    }
    // cdf-quantile identity
    {
        MPParams mp{1.0, 1.0};
        double worst = 0.0;
        for (double p : {0.01, 0.1, 0.5, 0.9, 0.99})
            worst = std::max(worst, std::abs(mp_cdf(mp_quantile(p, mp), mp) - p));
        check("mp_cdf_quantile_identity", worst, 1e-6 * scale);
    }
    // BEMA scale equivariance
    {
        Rng rng(config.seed);
        Matrix w = gaussian_matrix(200, 200, std::sqrt(1.0 / 200), rng);
        Spectrum s = esd(w);
        BemaResult base = bema_lambda_plus(s, 0.25, 0.5);
        BemaResult scaled = bema_lambda_plus(s.scaled(3.0), 0.25, 0.5);
        double rel = std::abs(scaled.lambda_plus - 3.0 * base.lambda_plus) /
                     (3.0 * base.lambda_plus);
        check("bema_scale_equivariance", rel, 1e-12 * scale);
    }
    // Wishart KS distance
    {
        Matrix w = sample_gaussian(500, 500, 1.0 / 500, config.seed + 1);
        Spectrum s = esd(w);
        MPParams mp{1.0, 1.0};
        double ks = 0.0;
        for (double v : s.values())
            ks = std::max(ks, std::abs(s.cdf(v) - mp_cdf(v, mp)));
        check("wishart_ks_distance", ks, 0.05 * scale);
    }
    // Spiked singular-value and overlap predictions
    {
        SpikeSpec spec;
        spec.sigmas = {30.0, 40.0};
        std::sort(spec.sigmas.rbegin(), spec.sigmas.rend());
        spec.n = spec.m = 1500;
        DeformedSample sample = build_deformed(spec, config.seed + 2);
        TopSvd top = top_singular_triplets(sample.w, 2);
        double worst_sv = 0.0, worst_ov = 0.0;
        for (int i = 0; i < 2; ++i) {
            double pred = predict_spike_singular(spec.sigmas[i],
                                                 NoiseModel::gaussian_rect);
            worst_sv = std::max(worst_sv, std::abs(top.s[i] - pred) / pred);
            double pred_ov = std::sqrt(
                predict_overlap_sq(spec.sigmas[i], NoiseModel::gaussian_rect));
            // diagonal planting: u_i is the i-th coordinate direction
            double meas = std::abs(top.u(i, i));
            worst_ov = std::max(worst_ov, std::abs(meas - pred_ov));
        }
        check("spiked_singular_prediction", worst_sv, 0.01 * scale);
        check("spiked_overlap_prediction", worst_ov, 2e-3 * scale);
    }
    // theta_bar and D-transform
    {
        MPParams mp{1.0, 1.0};
        check("theta_bar_gaussian", std::abs(theta_bar(mp) - 1.0), 1e-3 * scale);
        double prev = d_transform(2.0 + 1e-4, mp);
        bool monotone = true;
        for (double z = 2.2; z <= 6.0; z += 0.2) {
            double cur = d_transform(z, mp);
            if (cur >= prev) monotone = false;
            prev = cur;
        }
        check("d_transform_strictly_decreasing", monotone ? 0.0 : 1.0,
              0.5 * std::max(scale, 1e-30));
    }
    // f_W at the paper's reference point
    {
        double fw = f_w({5.0}, NoiseModel::gaussian_rect);
        check("f_w_sigma5_near_one", std::abs(fw - 1.0), 0.03 * scale);
    }
    // Approximation error vs f_W
    {
        SpikeSpec spec;
        spec.sigmas = {70.0, 60.0, 50.0, 40.0, 30.0};
        spec.n = spec.m = 1000;
        DeformedSample sample = build_deformed(spec, config.seed + 3);
        Matrix truncated = truncate_above_threshold(sample.w, 2.0);
        double err = approximation_error(sample, truncated);
        double fw = f_w(spec.sigmas, NoiseModel::gaussian_rect);
        check("approximation_error_matches_f_w", std::abs(err - fw),
              0.15 * scale);
    }
    return results;
}

}  // namespace rmt
