#pragma once

namespace rmt {

namespace detail {
extern const int kTw1TableSize;
extern const double kTw1P[];
extern const double kTw1T[];
}  // namespace detail

/// Quantile of the Tracy-Widom beta=1 law by monotone cubic interpolation of
/// the embedded table. Covered range: p in [0.001, 0.999]; outside it a
/// std::domain_error names the covered interval.
double tracy_widom_quantile(double p);

}  // namespace rmt
