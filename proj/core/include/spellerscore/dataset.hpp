#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spellerscore/errors.hpp"

namespace spellerscore {

// Stimulation protocol shared by every trial of a recording.
// A trial presents max_iterations rounds; each round flashes every level's
// n_flashes stimuli once, so one round shows flashes_per_iteration stimuli.
struct ProtocolMeta {
  int n_symbols = 0;
  std::vector<std::string> levels;  // selection levels, in presentation order
  int n_flashes = 0;                // stimuli per level per iteration
  int max_iterations = 0;
  double soa_seconds = 0.0;         // stimulus onset asynchrony
  int flashes_per_iteration = 0;    // n_flashes * levels.size()
  double overhead_seconds = 0.0;    // inter-trial pause, informational only
  int n_channels = 0;
  int samples_per_channel = 0;

  int n_levels() const { return static_cast<int>(levels.size()); }
  int feature_dim() const { return n_channels * samples_per_channel; }

  // Throws ConfigError when a field is out of range or inconsistent.
  void validate() const;
};

enum class Split { train, test };

const char* split_name(Split s);
Split split_from_name(const std::string& name);

// One flashed stimulus. trial, iteration and flash are 1-based; level is the
// 0-based position in ProtocolMeta::levels. label is +1 when the flash covers
// the attended symbol, -1 otherwise.
struct StimulusRecord {
  int trial = 0;
  int iteration = 0;
  int level = 0;
  int flash = 0;
  int label = 0;
  std::vector<double> features;  // channel-major blocks of samples_per_channel
};

// Dense index arithmetic over (trial, iteration, level, flash).
struct TensorShape {
  int n_trials = 0;
  int n_iterations = 0;
  int n_levels = 0;
  int n_flashes = 0;

  std::size_t size() const {
    return static_cast<std::size_t>(n_trials) * n_iterations * n_levels * n_flashes;
  }
  std::size_t index(int k, int r, int t, int f) const {
    return ((static_cast<std::size_t>(k - 1) * n_iterations + (r - 1)) * n_levels + t) *
               n_flashes +
           (f - 1);
  }
  bool operator==(const TensorShape&) const = default;
};

// A labelled recording: records in canonical (trial, iteration, level, flash)
// order plus the attended flash per (trial, level).
struct Dataset {
  ProtocolMeta meta;
  Split split = Split::train;
  int n_trials = 0;
  std::vector<StimulusRecord> records;
  std::vector<std::vector<int>> truth;  // [trial-1][level] -> attended flash

  TensorShape shape() const {
    return {n_trials, meta.max_iterations, meta.n_levels(), meta.n_flashes};
  }
  int feature_dim() const { return meta.feature_dim(); }

  const StimulusRecord& at(int k, int r, int t, int f) const {
    return records[shape().index(k, r, t, f)];
  }
  int target_flash(int k, int t) const { return truth[k - 1][t]; }

  // Sorts records into canonical order, then validates.
  void finalize();

  // Checks completeness (every (k,r,t) holds each flash exactly once), label
  // consistency with truth, and uniform feature dimension. Throws DataError.
  void validate() const;
};

}  // namespace spellerscore
