#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "spellerscore/dataset.hpp"
#include "spellerscore/svm.hpp"

namespace spellerscore {

// Zones partition each stimulation sequence's decision values by the training
// quartiles: e below q1, d in [q1, q2), c in [q2, q3), and at or above q3
// either a (positive and the strict maximum of its sequence) or b.
enum class Zone : std::uint8_t { a, b, c, d, e };

char zone_letter(Zone z);
Zone zone_from_letter(char c);

enum class GroupingMode { per_level, pooled };

// Which decision values share quartiles. pooled uses one group for the whole
// tensor. per_level groups by selection level; with a single level it splits
// each iteration's flashes into two halves instead (flash <= split_flash and
// the rest), the convention for row/column protocols folded into one level.
struct GroupingSpec {
  GroupingMode mode = GroupingMode::pooled;
  int split_flash = 0;  // single-level per_level only; 0 picks n_flashes / 2

  bool operator==(const GroupingSpec&) const = default;
};

GroupingSpec default_grouping(const ProtocolMeta& meta);
int group_count(const TensorShape& shape, const GroupingSpec& g);
int group_of(const TensorShape& shape, const GroupingSpec& g, int level, int flash);

struct DvTensor {
  TensorShape shape;
  GroupingSpec grouping;
  std::vector<double> values;

  double at(int k, int r, int t, int f) const { return values[shape.index(k, r, t, f)]; }
};

DvTensor decision_tensor(const Hyperplane& h, const Dataset& d);
DvTensor decision_tensor(const Hyperplane& h, const Dataset& d, const GroupingSpec& g);

struct Quartiles {
  GroupingSpec grouping;
  std::vector<std::array<double, 3>> q;  // per group: q1, q2, q3
};

// Linear-interpolation quantiles (the R type 7 rule) at 0.25, 0.5, 0.75 per
// group, computed over every value in the tensor.
Quartiles quartiles(const DvTensor& dv);

struct ZoneTensor {
  TensorShape shape;
  std::vector<Zone> zones;

  Zone at(int k, int r, int t, int f) const { return zones[shape.index(k, r, t, f)]; }

  // Checks that no stimulation sequence holds more than one zone a entry.
  void validate() const;
};

ZoneTensor assign_zones(const DvTensor& dv, const Quartiles& q);

// Integer scores per zone plus the separation threshold used by the
// score-based stopping rules. Bounds record the lattice the scores came from.
struct ScoreProfile {
  std::array<int, 5> s{2, 1, 0, -1, -2};  // zones a..e
  int delta = 5;
  int lower = -2;
  int upper = 2;

  int score(Zone z) const { return s[static_cast<std::size_t>(z)]; }

  // Scores must descend by at least 1 within [lower, upper], keep the middle
  // zone non-negative, and delta must exceed the largest single-iteration gap.
  void validate() const;
};

// The hand-tuned profile: scores 2,1,0,-1,-2 with delta 5.
ScoreProfile sbf_heuristic_profile();

// Cumulative per-flash scores for one (trial, level) over iterations 1..upto_r.
std::vector<int> cumulative_scores(const ZoneTensor& z, const ScoreProfile& p, int k, int t,
                                   int upto_r);

// One `k,r,t,f,zone` line per entry, zones as letters.
void write_zone_csv(const ZoneTensor& z, std::ostream& out);

}  // namespace spellerscore
