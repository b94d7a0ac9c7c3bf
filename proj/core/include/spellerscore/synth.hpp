#pragma once

#include <cstdint>
#include <utility>

#include "spellerscore/dataset.hpp"

namespace spellerscore {

// Synthetic recording: target stimuli get a mean offset of target_shift along
// a fixed unit direction (all components equal), non-targets are centred at
// the origin, and every component carries Gaussian noise with noise_sd.
// Attended flashes are drawn uniformly per (trial, level). The same config
// and seed always produce the same pair of recordings.
struct SynthConfig {
  int n_trials = 10;      // per split
  int n_iterations = 8;
  int n_flashes = 6;
  int n_levels = 1;
  int feature_dim = 16;
  int n_channels = 1;     // feature_dim must divide evenly into channels
  double target_shift = 2.0;
  double noise_sd = 1.0;
  double soa_seconds = 0.25;
  std::uint64_t seed = 0;

  void validate() const;
};

std::pair<Dataset, Dataset> synth_dataset(const SynthConfig& cfg);  // train, test

}  // namespace spellerscore
