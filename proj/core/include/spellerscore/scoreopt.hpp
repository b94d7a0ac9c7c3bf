#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "spellerscore/scoring.hpp"

namespace spellerscore {

// Attended flash per [trial-1][level], matching Dataset::truth.
using TruthMap = std::vector<std::vector<int>>;

// Integer lattice the score search walks: all strictly descending score
// vectors within [lower, upper] whose middle zone stays non-negative, crossed
// with every admissible separation threshold up to delta_max.
struct LatticeBounds {
  int lower = -10;
  int upper = 10;
  int delta_max = 0;  // 0 resolves to max(n_iterations * (upper - lower), upper - lower + 1)

  void validate() const;
  int resolved_delta_max(int n_iterations) const;
};

// Enumerated in ascending lexicographic order; shared by the optimizer and
// the exhaustive checks.
std::vector<std::array<int, 5>> enumerate_score_vectors(const LatticeBounds& b);

struct TimingParams {
  double soa_seconds = 0.0;
  int flashes_per_iteration = 0;
  int n_trials = 0;
  int n_iterations = 0;

  void validate() const;
};

enum class OptimizeMode { nostop, earlystop };

// Fixed-length simulation outcome, indexed by (level, trial).
// Fixed-length selection: x marks the iterations whose cumulative target
// score beats every competitor by at least delta.
struct NostopSim {
  int n_levels = 0, n_trials = 0, n_iterations = 0;
  std::vector<std::uint8_t> x;    // (t, k, r)
  std::vector<std::uint8_t> err;  // (t, k)

  bool x_at(int t, int k, int r) const {
    return x[(static_cast<std::size_t>(t) * n_trials + (k - 1)) * n_iterations + (r - 1)] != 0;
  }
  bool err_at(int t, int k) const {
    return err[static_cast<std::size_t>(t) * n_trials + (k - 1)] != 0;
  }
};

// Early-stopping outcome: the first iteration where the cumulative target
// score beats every competitor by delta wins; a competitor reaching the same
// margin over the target first blocks the character instead.
struct EarlystopSim {
  int n_levels = 0, n_trials = 0, n_iterations = 0;
  std::vector<int> stop_iteration;  // (t, k); 0 when the character errs
  std::vector<std::uint8_t> err;    // (t, k)

  int stop_at(int t, int k) const {
    return stop_iteration[static_cast<std::size_t>(t) * n_trials + (k - 1)];
  }
  bool err_at(int t, int k) const {
    return err[static_cast<std::size_t>(t) * n_trials + (k - 1)] != 0;
  }
};

NostopSim simulate_nostop(const ZoneTensor& z, const TruthMap& truth, const ScoreProfile& p);
EarlystopSim simulate_earlystop(const ZoneTensor& z, const TruthMap& truth,
                                const ScoreProfile& p);

// Objective formulas over per-level integer tallies. Every evaluation funnels
// through these so independently derived tallies compare bit for bit.
double nostop_objective_from_tallies(const std::vector<int>& err_count,
                                     const std::vector<long long>& x_sum, int n_trials,
                                     int n_iterations);
double earlystop_objective_from_tallies(const std::vector<int>& err_count,
                                        const std::vector<long long>& stop_sum,
                                        const TimingParams& tp);

double nostop_objective(const ZoneTensor& z, const TruthMap& truth, const ScoreProfile& p);
double earlystop_objective(const ZoneTensor& z, const TruthMap& truth, const ScoreProfile& p,
                           const TimingParams& tp);

struct LevelStats {
  int err_count = 0;
  double err_rate = 0.0;
  long long x_sum = 0;              // fixed-length mode
  long long stop_sum = 0;           // early-stopping mode, successes only
  double mean_stop_iteration = 0.0; // early-stopping mode, errors charged n_iterations
};

struct OptResult {
  ScoreProfile profile;
  OptimizeMode mode = OptimizeMode::nostop;
  double objective = 0.0;
  std::vector<LevelStats> per_level;
  std::uint64_t nodes_explored = 0;  // (score vector, delta) pairs evaluated
  double wall_seconds = 0.0;
};

// Exact search over the whole lattice. Ties on the objective keep the
// lexicographically smallest (scores, delta). jobs > 1 splits the outermost
// score loop across threads; the result does not depend on jobs.
OptResult optimize_nostop(const ZoneTensor& z, const TruthMap& truth, const LatticeBounds& b,
                          int jobs = 1);
OptResult optimize_earlystop(const ZoneTensor& z, const TruthMap& truth,
                             const LatticeBounds& b, const TimingParams& tp, int jobs = 1);

// Re-derives every selection constraint from raw cumulative scores and
// reports human-readable violations; empty means the profile and its
// simulated selection satisfy all of them.
std::vector<std::string> audit_nostop(const ZoneTensor& z, const TruthMap& truth,
                                      const ScoreProfile& p, const LatticeBounds& b);
std::vector<std::string> audit_earlystop(const ZoneTensor& z, const TruthMap& truth,
                                         const ScoreProfile& p, const LatticeBounds& b);

}  // namespace spellerscore
