#include "spellerscore/preprocess.hpp"

#include <set>
#include <string>

namespace spellerscore {

Dataset decimate(const Dataset& d, int factor) {
  if (factor < 1) throw ConfigError("decimation factor must be at least 1");
  if (factor > d.meta.samples_per_channel)
    throw ConfigError("decimation factor " + std::to_string(factor) +
                      " exceeds samples_per_channel " +
                      std::to_string(d.meta.samples_per_channel));

  const int spc = d.meta.samples_per_channel;
  const int new_spc = spc / factor;
  Dataset out = d;
  out.meta.samples_per_channel = new_spc;
  for (StimulusRecord& rec : out.records) {
    std::vector<double> reduced;
    reduced.reserve(static_cast<std::size_t>(d.meta.n_channels) * new_spc);
    for (int c = 0; c < d.meta.n_channels; ++c) {
      const double* block = rec.features.data() + static_cast<std::size_t>(c) * spc;
      for (int s = 0; s < new_spc; ++s) {
        double sum = 0.0;
        for (int j = 0; j < factor; ++j) sum += block[s * factor + j];
        reduced.push_back(sum / factor);
      }
    }
    rec.features = std::move(reduced);
  }
  out.validate();
  return out;
}

Dataset select_channels(const Dataset& d, const std::vector<int>& keep) {
  if (keep.empty()) throw ConfigError("channel selection must not be empty");
  std::set<int> seen;
  for (int c : keep) {
    if (c < 0 || c >= d.meta.n_channels)
      throw ConfigError("channel index " + std::to_string(c) + " out of range");
    if (!seen.insert(c).second)
      throw ConfigError("duplicate channel index " + std::to_string(c));
  }

  const int spc = d.meta.samples_per_channel;
  Dataset out = d;
  out.meta.n_channels = static_cast<int>(keep.size());
  for (StimulusRecord& rec : out.records) {
    std::vector<double> kept;
    kept.reserve(keep.size() * static_cast<std::size_t>(spc));
    for (int c : keep) {
      const double* block = rec.features.data() + static_cast<std::size_t>(c) * spc;
      kept.insert(kept.end(), block, block + spc);
    }
    rec.features = std::move(kept);
  }
  out.validate();
  return out;
}

}  // namespace spellerscore
