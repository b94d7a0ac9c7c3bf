#include "spellerscore/synth.hpp"

#include <cmath>
#include <random>
#include <string>

namespace spellerscore {

void SynthConfig::validate() const {
  if (n_trials < 1) throw ConfigError("synth: n_trials must be at least 1");
  if (n_iterations < 1) throw ConfigError("synth: n_iterations must be at least 1");
  if (n_flashes < 2) throw ConfigError("synth: n_flashes must be at least 2");
  if (n_levels < 1) throw ConfigError("synth: n_levels must be at least 1");
  if (feature_dim < 1) throw ConfigError("synth: feature_dim must be at least 1");
  if (n_channels < 1 || feature_dim % n_channels != 0)
    throw ConfigError("synth: n_channels must divide feature_dim");
  if (noise_sd < 0.0) throw ConfigError("synth: noise_sd must be non-negative");
  if (!(soa_seconds > 0.0)) throw ConfigError("synth: soa_seconds must be positive");
}

namespace {

Dataset synth_split(const SynthConfig& cfg, Split split, std::mt19937_64& rng) {
  Dataset d;
  d.split = split;
  d.n_trials = cfg.n_trials;
  d.meta.levels.reserve(cfg.n_levels);
  for (int t = 0; t < cfg.n_levels; ++t) d.meta.levels.push_back("L" + std::to_string(t));
  d.meta.n_flashes = cfg.n_flashes;
  d.meta.max_iterations = cfg.n_iterations;
  d.meta.soa_seconds = cfg.soa_seconds;
  d.meta.flashes_per_iteration = cfg.n_flashes * cfg.n_levels;
  d.meta.n_channels = cfg.n_channels;
  d.meta.samples_per_channel = cfg.feature_dim / cfg.n_channels;
  int symbols = 1;
  for (int t = 0; t < cfg.n_levels; ++t) symbols *= cfg.n_flashes;
  d.meta.n_symbols = symbols;

  std::uniform_int_distribution<int> flash_dist(1, cfg.n_flashes);
  d.truth.assign(cfg.n_trials, std::vector<int>(cfg.n_levels, 0));
  for (int k = 1; k <= cfg.n_trials; ++k)
    for (int t = 0; t < cfg.n_levels; ++t) d.truth[k - 1][t] = flash_dist(rng);

  const double shift = cfg.target_shift / std::sqrt(static_cast<double>(cfg.feature_dim));
  std::normal_distribution<double> noise(0.0, cfg.noise_sd);
  d.records.reserve(d.shape().size());
  for (int k = 1; k <= cfg.n_trials; ++k) {
    for (int r = 1; r <= cfg.n_iterations; ++r) {
      for (int t = 0; t < cfg.n_levels; ++t) {
        for (int f = 1; f <= cfg.n_flashes; ++f) {
          StimulusRecord rec;
          rec.trial = k;
          rec.iteration = r;
          rec.level = t;
          rec.flash = f;
          rec.label = f == d.truth[k - 1][t] ? 1 : -1;
          rec.features.resize(cfg.feature_dim);
          const double mean = rec.label == 1 ? shift : 0.0;
          for (double& v : rec.features) v = mean + noise(rng);
          d.records.push_back(std::move(rec));
        }
      }
    }
  }
  d.finalize();
  return d;
}

}  // namespace

std::pair<Dataset, Dataset> synth_dataset(const SynthConfig& cfg) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  Dataset train = synth_split(cfg, Split::train, rng);
  Dataset test = synth_split(cfg, Split::test, rng);
  return {std::move(train), std::move(test)};
}

}  // namespace spellerscore
