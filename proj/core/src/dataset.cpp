#include "spellerscore/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

namespace spellerscore {

namespace {

std::string idx_str(int k, int r, int t) {
  return "(trial " + std::to_string(k) + ", iteration " + std::to_string(r) + ", level " +
         std::to_string(t) + ")";
}

}  // namespace

void ProtocolMeta::validate() const {
  if (n_symbols < 2) throw ConfigError("n_symbols must be at least 2");
  if (levels.empty()) throw ConfigError("levels must not be empty");
  if (n_flashes < 2) throw ConfigError("n_flashes must be at least 2");
  if (max_iterations < 1) throw ConfigError("max_iterations must be at least 1");
  if (!(soa_seconds > 0.0)) throw ConfigError("soa_seconds must be positive");
  if (flashes_per_iteration != n_flashes * n_levels())
    throw ConfigError("flashes_per_iteration must equal n_flashes * levels");
  if (overhead_seconds < 0.0) throw ConfigError("overhead_seconds must be non-negative");
  if (n_channels < 1) throw ConfigError("n_channels must be at least 1");
  if (samples_per_channel < 1) throw ConfigError("samples_per_channel must be at least 1");
  // n_symbols cannot exceed the number of distinct flash combinations.
  double combos = std::pow(static_cast<double>(n_flashes), n_levels());
  if (static_cast<double>(n_symbols) > combos)
    throw ConfigError("n_symbols exceeds n_flashes^levels");
}

const char* split_name(Split s) { return s == Split::train ? "train" : "test"; }

Split split_from_name(const std::string& name) {
  if (name == "train") return Split::train;
  if (name == "test") return Split::test;
  throw ParseError("unknown split name: " + name);
}

void Dataset::finalize() {
  std::sort(records.begin(), records.end(),
            [](const StimulusRecord& a, const StimulusRecord& b) {
              return std::tie(a.trial, a.iteration, a.level, a.flash) <
                     std::tie(b.trial, b.iteration, b.level, b.flash);
            });
  validate();
}

void Dataset::validate() const {
  meta.validate();
  if (n_trials < 1) throw DataError("dataset has no trials");

  const TensorShape sh = shape();
  if (records.size() != sh.size())
    throw DataError("record count " + std::to_string(records.size()) + " does not match " +
                    std::to_string(sh.size()) + " expected from shape");

  if (truth.size() != static_cast<std::size_t>(n_trials))
    throw DataError("truth table must cover every trial");
  for (int k = 1; k <= n_trials; ++k) {
    if (truth[k - 1].size() != static_cast<std::size_t>(meta.n_levels()))
      throw DataError("truth table for trial " + std::to_string(k) +
                      " must cover every level");
    for (int t = 0; t < meta.n_levels(); ++t) {
      int f = truth[k - 1][t];
      if (f < 1 || f > meta.n_flashes)
        throw DataError("truth flash out of range at " + idx_str(k, 0, t));
    }
  }

  const int dim = meta.feature_dim();
  std::size_t i = 0;
  for (int k = 1; k <= n_trials; ++k) {
    for (int r = 1; r <= meta.max_iterations; ++r) {
      for (int t = 0; t < meta.n_levels(); ++t) {
        int positives = 0;
        for (int f = 1; f <= meta.n_flashes; ++f, ++i) {
          const StimulusRecord& rec = records[i];
          if (rec.trial != k || rec.iteration != r || rec.level != t || rec.flash != f)
            throw DataError("missing or duplicate record at " + idx_str(k, r, t) +
                            ", flash " + std::to_string(f));
          if (rec.label != 1 && rec.label != -1)
            throw DataError("label must be +1 or -1 at " + idx_str(k, r, t));
          if (rec.features.size() != static_cast<std::size_t>(dim))
            throw DataError("feature dimension mismatch at " + idx_str(k, r, t));
          if (rec.label == 1) {
            ++positives;
            if (rec.flash != truth[k - 1][t])
              throw DataError("positive label disagrees with truth at " + idx_str(k, r, t));
          }
        }
        if (positives != 1)
          throw DataError("expected exactly one target flash at " + idx_str(k, r, t) +
                          ", found " + std::to_string(positives));
      }
    }
  }
}

}  // namespace spellerscore
