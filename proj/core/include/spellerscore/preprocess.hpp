#pragma once

#include <vector>

#include "spellerscore/dataset.hpp"

namespace spellerscore {

// Replaces each run of `factor` consecutive samples by its mean, per channel.
// Trailing samples that do not fill a run are dropped; the result declares
// samples_per_channel / factor samples. Throws ConfigError when factor is
// outside [1, samples_per_channel].
Dataset decimate(const Dataset& d, int factor);

// Keeps the listed channel blocks, in the order given. Channel indices are
// 0-based; duplicates or out-of-range indices throw ConfigError.
Dataset select_channels(const Dataset& d, const std::vector<int>& keep);

}  // namespace spellerscore
