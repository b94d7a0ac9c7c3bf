#include "spellerscore/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

namespace spellerscore {

char zone_letter(Zone z) { return static_cast<char>('a' + static_cast<int>(z)); }

Zone zone_from_letter(char c) {
  if (c < 'a' || c > 'e') throw ParseError(std::string("unknown zone letter '") + c + "'");
  return static_cast<Zone>(c - 'a');
}

GroupingSpec default_grouping(const ProtocolMeta& meta) {
  GroupingSpec g;
  g.mode = meta.n_levels() == 1 ? GroupingMode::per_level : GroupingMode::pooled;
  return g;
}

namespace {

int resolved_split(const TensorShape& shape, const GroupingSpec& g) {
  return g.split_flash > 0 ? g.split_flash : shape.n_flashes / 2;
}

}  // namespace

int group_count(const TensorShape& shape, const GroupingSpec& g) {
  if (g.mode == GroupingMode::pooled) return 1;
  if (shape.n_levels > 1) return shape.n_levels;
  return resolved_split(shape, g) < shape.n_flashes ? 2 : 1;
}

int group_of(const TensorShape& shape, const GroupingSpec& g, int level, int flash) {
  if (g.mode == GroupingMode::pooled) return 0;
  if (shape.n_levels > 1) return level;
  return flash <= resolved_split(shape, g) ? 0 : 1;
}

DvTensor decision_tensor(const Hyperplane& h, const Dataset& d) {
  return decision_tensor(h, d, default_grouping(d.meta));
}

DvTensor decision_tensor(const Hyperplane& h, const Dataset& d, const GroupingSpec& g) {
  DvTensor dv;
  dv.shape = d.shape();
  dv.grouping = g;
  dv.values.reserve(d.records.size());
  for (const StimulusRecord& rec : d.records)
    dv.values.push_back(decision_value(h, rec.features));
  return dv;
}

namespace {

double quantile_type7(const std::vector<double>& sorted, double p) {
  const std::size_t n = sorted.size();
  const double h = (static_cast<double>(n) - 1.0) * p;
  const std::size_t lo = static_cast<std::size_t>(h);
  if (lo + 1 >= n) return sorted.back();
  return sorted[lo] + (h - lo) * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

Quartiles quartiles(const DvTensor& dv) {
  const int groups = group_count(dv.shape, dv.grouping);
  std::vector<std::vector<double>> pools(groups);
  const TensorShape& sh = dv.shape;
  for (int k = 1; k <= sh.n_trials; ++k)
    for (int r = 1; r <= sh.n_iterations; ++r)
      for (int t = 0; t < sh.n_levels; ++t)
        for (int f = 1; f <= sh.n_flashes; ++f)
          pools[group_of(sh, dv.grouping, t, f)].push_back(dv.at(k, r, t, f));

  Quartiles out;
  out.grouping = dv.grouping;
  out.q.resize(groups);
  for (int g = 0; g < groups; ++g) {
    if (pools[g].empty()) throw DataError("quartiles: empty group " + std::to_string(g));
    std::sort(pools[g].begin(), pools[g].end());
    out.q[g] = {quantile_type7(pools[g], 0.25), quantile_type7(pools[g], 0.50),
                quantile_type7(pools[g], 0.75)};
  }
  return out;
}

void ZoneTensor::validate() const {
  if (zones.size() != shape.size()) throw DataError("zone tensor size mismatch");
  for (int k = 1; k <= shape.n_trials; ++k)
    for (int r = 1; r <= shape.n_iterations; ++r)
      for (int t = 0; t < shape.n_levels; ++t) {
        int a_count = 0;
        for (int f = 1; f <= shape.n_flashes; ++f)
          if (at(k, r, t, f) == Zone::a) ++a_count;
        if (a_count > 1)
          throw DataError("more than one zone a in sequence (trial " + std::to_string(k) +
                          ", iteration " + std::to_string(r) + ", level " +
                          std::to_string(t) + ")");
      }
}

ZoneTensor assign_zones(const DvTensor& dv, const Quartiles& q) {
  if (!(dv.grouping == q.grouping))
    throw DataError("assign_zones: quartile grouping does not match tensor grouping");
  if (static_cast<int>(q.q.size()) != group_count(dv.shape, dv.grouping))
    throw DataError("assign_zones: quartile group count mismatch");

  ZoneTensor out;
  out.shape = dv.shape;
  out.zones.resize(dv.values.size());
  const TensorShape& sh = dv.shape;
  for (int k = 1; k <= sh.n_trials; ++k)
    for (int r = 1; r <= sh.n_iterations; ++r)
      for (int t = 0; t < sh.n_levels; ++t) {
        // The strict sequence maximum is the only candidate for zone a.
        double best = dv.at(k, r, t, 1);
        int best_count = 1;
        for (int f = 2; f <= sh.n_flashes; ++f) {
          const double v = dv.at(k, r, t, f);
          if (v > best) {
            best = v;
            best_count = 1;
          } else if (v == best) {
            ++best_count;
          }
        }
        for (int f = 1; f <= sh.n_flashes; ++f) {
          const double v = dv.at(k, r, t, f);
          const auto& [q1, q2, q3] = q.q[group_of(sh, dv.grouping, t, f)];
          Zone z;
          if (v < q1)
            z = Zone::e;
          else if (v < q2)
            z = Zone::d;
          else if (v < q3)
            z = Zone::c;
          else if (v > 0.0 && v == best && best_count == 1)
            z = Zone::a;
          else
            z = Zone::b;
          out.zones[sh.index(k, r, t, f)] = z;
        }
      }
  out.validate();
  return out;
}

void ScoreProfile::validate() const {
  if (upper < lower) throw ConfigError("score profile: upper bound below lower bound");
  if (s[0] > upper) throw ConfigError("score profile: zone a score above upper bound");
  if (s[4] < lower) throw ConfigError("score profile: zone e score below lower bound");
  for (int i = 0; i < 4; ++i)
    if (s[i + 1] > s[i] - 1)
      throw ConfigError("score profile: scores must strictly descend from a to e");
  if (s[2] < 0) throw ConfigError("score profile: zone c score must be non-negative");
  if (delta < s[0] - s[4] + 1)
    throw ConfigError("score profile: delta must exceed the one-iteration score span");
}

ScoreProfile sbf_heuristic_profile() {
  ScoreProfile p;
  p.s = {2, 1, 0, -1, -2};
  p.delta = 5;
  p.lower = -2;
  p.upper = 2;
  p.validate();
  return p;
}

std::vector<int> cumulative_scores(const ZoneTensor& z, const ScoreProfile& p, int k, int t,
                                   int upto_r) {
  if (upto_r < 1 || upto_r > z.shape.n_iterations)
    throw DataError("cumulative_scores: iteration out of range");
  std::vector<int> cum(z.shape.n_flashes, 0);
  for (int r = 1; r <= upto_r; ++r)
    for (int f = 1; f <= z.shape.n_flashes; ++f)
      cum[f - 1] += p.score(z.at(k, r, t, f));
  return cum;
}

void write_zone_csv(const ZoneTensor& z, std::ostream& out) {
  out << "k,r,t,f,zone\n";
  const TensorShape& sh = z.shape;
  for (int k = 1; k <= sh.n_trials; ++k)
    for (int r = 1; r <= sh.n_iterations; ++r)
      for (int t = 0; t < sh.n_levels; ++t)
        for (int f = 1; f <= sh.n_flashes; ++f)
          out << k << ',' << r << ',' << t << ',' << f << ',' << zone_letter(z.at(k, r, t, f))
              << '\n';
}

}  // namespace spellerscore
