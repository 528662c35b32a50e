#include "rmt/prune.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>

#include "rmt/bema.hpp"
#include "rmt/svd_ops.hpp"

namespace rmt {

void PruneSchedule::validate() const {
    if (split_frequency < 1)
        throw ConfigError("PruneSchedule: split_frequency must be >= 1");
    if (!(tau_fc > 0.0 && tau_fc <= 1.0))
        throw ConfigError("PruneSchedule: tau_fc must lie in (0, 1]");
    if (!(tau_conv > 0.0 && tau_conv <= 1.0))
        throw ConfigError("PruneSchedule: tau_conv must lie in (0, 1]");
    if (!(alpha > 0.0 && alpha < 0.5))
        throw ConfigError("PruneSchedule: alpha must lie in (0, 1/2)");
    if (!(beta > 0.0 && beta < 1.0))
        throw ConfigError("PruneSchedule: beta must lie in (0, 1)");
    if (sparsify && sparsify->xi_end < sparsify->xi_start)
        throw ConfigError("PruneSchedule: xi schedule must be nondecreasing");
}

double keep_fraction(int epoch, const RetentionSchedule& schedule) {
    if (epoch < 0) throw std::invalid_argument("keep_fraction: epoch >= 0");
    double f = schedule.slope * epoch + schedule.intercept;
    return std::clamp(std::max(0.0, f), 0.0, 1.0);
}

double xi_at(const SparsifySchedule& schedule, int epoch, int total_epochs) {
    if (total_epochs <= 1) return schedule.xi_end;
    double t = std::clamp(static_cast<double>(epoch) / (total_epochs - 1), 0.0, 1.0);
    return schedule.xi_start + t * (schedule.xi_end - schedule.xi_start);
}

namespace {

const char* action_name(PruneAction a) {
    switch (a) {
        case PruneAction::split: return "split";
        case PruneAction::truncate_in_place: return "truncate_in_place";
        case PruneAction::recombine: return "recombine";
        case PruneAction::skipped_gof: return "skipped_gof";
        case PruneAction::skipped_params: return "skipped_params";
    }
    return "?";
}

// Shared analysis step: spectrum of W^T W -> BEMA -> GoF.
struct LayerFit {
    GofResult gof;
    double sqrt_lambda_plus = 0.0;
};

LayerFit analyze_matrix(const Matrix& w, const PruneSchedule& schedule,
                        double tau) {
    Spectrum spec = esd(w);
    const int rows = static_cast<int>(std::max(w.rows(), w.cols()));
    LayerFit fit;
    fit.gof = mp_fit_test(spec, schedule.alpha, schedule.beta, tau, rows);
    fit.sqrt_lambda_plus = std::sqrt(std::max(0.0, fit.gof.bema.lambda_plus));
    return fit;
}

}  // namespace

std::string to_json_line(const PruneEvent& e) {
    std::ostringstream os;
    os << "{\"epoch\":" << e.epoch << ",\"layer\":" << e.layer
       << ",\"action\":\"" << action_name(e.action) << "\""
       << ",\"gof_statistic\":" << e.gof_statistic
       << ",\"lambda_plus\":" << e.lambda_plus
       << ",\"kept_above\":" << e.kept_above
       << ",\"kept_below\":" << e.kept_below << ",\"removed\":" << e.removed
       << ",\"params_before\":" << e.params_before
       << ",\"params_after\":" << e.params_after << "}";
    return os.str();
}

std::vector<PruneEvent> prune_pass(DenseNet& net, const PruneSchedule& schedule,
                                   int epoch) {
    schedule.validate();
    assert(epoch % schedule.split_frequency == 0);
    const double f = keep_fraction(epoch, schedule.retention);

    std::vector<PruneEvent> events;
    for (int l = 0; l < net.depth(); ++l) {
        LayerSlot& slot = net.slots[l];
        if (slot.split) continue;

        PruneEvent ev;
        ev.epoch = epoch;
        ev.layer = l;
        ev.params_before = slot.param_count();
        ev.params_after = ev.params_before;

        try {
            LayerFit fit = analyze_matrix(slot.w, schedule, schedule.tau_fc);
            ev.gof_statistic = fit.gof.statistic;
            ev.lambda_plus = fit.gof.bema.lambda_plus;
            if (!fit.gof.pass) {
                ev.action = PruneAction::skipped_gof;
                events.push_back(ev);
                continue;
            }

            SvdFactors factors = svd(slot.w);
            auto [trunc, rep] = truncate(factors, fit.sqrt_lambda_plus, f);
            ev.kept_above = rep.kept_above;
            ev.kept_below = rep.kept_below;
            ev.removed = rep.removed;

            const int k = trunc.rank();
            const int n_out = static_cast<int>(slot.w.rows());
            const int n_in = static_cast<int>(slot.w.cols());
            if (k == 0) {
                // Retention hit zero with nothing above threshold; zeroing the
                // whole layer is never what Alg. 1 wants.
                ev.action = PruneAction::skipped_params;
            } else if (should_split(n_out, n_in, k)) {
                auto [w1, w2] = split(trunc);
                slot.install_split(std::move(w1), std::move(w2));
                ev.action = PruneAction::split;
                ev.params_after = slot.param_count();
            } else {
                slot.install_full(trunc.reconstruct());
                ev.action = PruneAction::truncate_in_place;
                ev.params_after = slot.param_count();
            }
        } catch (const NumericalError&) {
            ev.action = PruneAction::skipped_gof;
        } catch (const std::invalid_argument&) {
            ev.action = PruneAction::skipped_gof;
        }
        events.push_back(ev);
    }
    return events;
}

std::vector<PruneEvent> recombine_pass(DenseNet& net,
                                       const PruneSchedule& schedule,
                                       int epoch) {
    schedule.validate();
    const double f = keep_fraction(epoch, schedule.retention);

    std::vector<PruneEvent> events;
    for (int l = 0; l < net.depth(); ++l) {
        LayerSlot& slot = net.slots[l];
        if (!slot.split) continue;

        PruneEvent ev;
        ev.epoch = epoch;
        ev.layer = l;
        ev.params_before = slot.param_count();
        ev.params_after = ev.params_before;

        try {
            Matrix w = recombine(slot.w1, slot.w2);
            LayerFit fit = analyze_matrix(w, schedule, schedule.tau_fc);
            ev.gof_statistic = fit.gof.statistic;
            ev.lambda_plus = fit.gof.bema.lambda_plus;
            if (!fit.gof.pass) {
                ev.action = PruneAction::skipped_gof;
                events.push_back(ev);
                continue;
            }

            // Hypothetical steps 4-12 on the recombined matrix.
            SvdFactors factors = svd(w);
            auto [trunc, rep] = truncate(factors, fit.sqrt_lambda_plus, f);
            const int k = trunc.rank();
            const int n_out = static_cast<int>(w.rows());
            const int n_in = static_cast<int>(w.cols());
            std::int64_t hypothetical =
                (k > 0 && should_split(n_out, n_in, k))
                    ? static_cast<std::int64_t>(k) * (n_out + n_in) +
                          slot.bias.size()
                    : static_cast<std::int64_t>(n_out) * n_in + slot.bias.size();
            ev.kept_above = rep.kept_above;
            ev.kept_below = rep.kept_below;
            ev.removed = rep.removed;

            if (hypothetical < ev.params_before) {
                slot.install_full(std::move(w));
                ev.action = PruneAction::recombine;
                ev.params_after = slot.param_count();
            } else {
                ev.action = PruneAction::skipped_params;
            }
        } catch (const NumericalError&) {
            ev.action = PruneAction::skipped_gof;
        } catch (const std::invalid_argument&) {
            ev.action = PruneAction::skipped_gof;
        }
        events.push_back(ev);
    }
    return events;
}

SparsifyReport sparsify_pass(DenseNet& net, double xi) {
    if (xi < 0.0) throw std::invalid_argument("sparsify_pass: xi must be >= 0");
    SparsifyReport rep;
    for (auto& slot : net.slots) {
        if (slot.split) {
            auto [m1, z1] = sparsify(slot.w1, xi);
            auto [m2, z2] = sparsify(slot.w2, xi);
            slot.w1 = std::move(m1);
            slot.w2 = std::move(m2);
            rep.zeroed += z1 + z2;
        } else {
            auto [m, z] = sparsify(slot.w, xi);
            slot.w = std::move(m);
            rep.zeroed += z;
        }
    }
    rep.nonzero_after = parameter_count(net).nonzero;
    return rep;
}

ParamCount parameter_count(const DenseNet& net) {
    ParamCount out;
    for (const auto& slot : net.slots) {
        std::int64_t layer_total = slot.param_count();
        out.per_layer.push_back(layer_total);
        out.total += layer_total;
        auto count_nonzero = [](const Matrix& m) {
            std::int64_t c = 0;
            for (int j = 0; j < m.cols(); ++j)
                for (int i = 0; i < m.rows(); ++i)
                    if (m(i, j) != 0.0) ++c;
            return c;
        };
        if (slot.split)
            out.nonzero += count_nonzero(slot.w1) + count_nonzero(slot.w2);
        else
            out.nonzero += count_nonzero(slot.w);
        for (int i = 0; i < slot.bias.size(); ++i)
            if (slot.bias[i] != 0.0) ++out.nonzero;
    }
    return out;
}

}  // namespace rmt
