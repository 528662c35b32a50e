#pragma once

#include <string>

#include "rmt/net.hpp"

namespace rmt {

/// Weight container: a directory holding manifest.json (shapes, slot kinds,
/// activation flags, format version) plus per-layer .f32 blobs of 32-bit
/// little-endian floats in row-major order.
void save_weights(const DenseNet& net, const std::string& dir);
DenseNet load_weights(const std::string& dir);

}  // namespace rmt
