#include "spellerscore/scoreopt.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>
#include <tuple>

#include "spellerscore/errors.hpp"

namespace spellerscore {

void LatticeBounds::validate() const {
  if (upper - lower < 4)
    throw ConfigError("score lattice needs upper - lower >= 4 to fit five distinct scores");
  if (delta_max != 0 && delta_max < upper - lower + 1)
    throw ConfigError("delta_max must be at least upper - lower + 1");
}

int LatticeBounds::resolved_delta_max(int n_iterations) const {
  if (delta_max != 0) return delta_max;
  return std::max(n_iterations * (upper - lower), upper - lower + 1);
}

void TimingParams::validate() const {
  if (!(soa_seconds > 0.0)) throw ConfigError("timing: soa_seconds must be positive");
  if (flashes_per_iteration < 1)
    throw ConfigError("timing: flashes_per_iteration must be at least 1");
  if (n_trials < 1) throw ConfigError("timing: n_trials must be at least 1");
  if (n_iterations < 1) throw ConfigError("timing: n_iterations must be at least 1");
}

std::vector<std::array<int, 5>> enumerate_score_vectors(const LatticeBounds& b) {
  b.validate();
  std::vector<std::array<int, 5>> out;
  for (int sa = std::max(b.lower + 4, 2); sa <= b.upper; ++sa)
    for (int sb = std::max(b.lower + 3, 1); sb <= sa - 1; ++sb)
      for (int sc = std::max(b.lower + 2, 0); sc <= sb - 1; ++sc)
        for (int sd = b.lower + 1; sd <= sc - 1; ++sd)
          for (int se = b.lower; se <= sd - 1; ++se)
            out.push_back({sa, sb, sc, sd, se});
  return out;
}

namespace {

void validate_inputs(const ZoneTensor& z, const TruthMap& truth) {
  z.validate();
  if (truth.size() != static_cast<std::size_t>(z.shape.n_trials))
    throw DataError("truth table does not cover every trial");
  for (const auto& per_level : truth) {
    if (per_level.size() != static_cast<std::size_t>(z.shape.n_levels))
      throw DataError("truth table does not cover every level");
    for (int f : per_level)
      if (f < 1 || f > z.shape.n_flashes) throw DataError("truth flash out of range");
  }
}

// Margin of the attended flash over its best competitor after each iteration.
// Everything the two stopping rules decide is a threshold test on these.
void lead_margins(const ZoneTensor& z, const ScoreProfile& p, int k, int t, int trg,
                  std::vector<int>& cum, std::vector<int>& out) {
  const TensorShape& sh = z.shape;
  cum.assign(sh.n_flashes, 0);
  out.resize(sh.n_iterations);
  for (int r = 1; r <= sh.n_iterations; ++r) {
    for (int f = 1; f <= sh.n_flashes; ++f) cum[f - 1] += p.score(z.at(k, r, t, f));
    int best_other = std::numeric_limits<int>::min();
    for (int f = 1; f <= sh.n_flashes; ++f)
      if (f != trg) best_other = std::max(best_other, cum[f - 1]);
    out[r - 1] = cum[trg - 1] - best_other;
  }
}

}  // namespace

NostopSim simulate_nostop(const ZoneTensor& z, const TruthMap& truth, const ScoreProfile& p) {
  p.validate();
  validate_inputs(z, truth);
  const TensorShape& sh = z.shape;
  NostopSim sim;
  sim.n_levels = sh.n_levels;
  sim.n_trials = sh.n_trials;
  sim.n_iterations = sh.n_iterations;
  sim.x.assign(sh.size() / sh.n_flashes, 0);
  sim.err.assign(static_cast<std::size_t>(sh.n_levels) * sh.n_trials, 0);

  std::vector<int> cum, margins;
  for (int t = 0; t < sh.n_levels; ++t)
    for (int k = 1; k <= sh.n_trials; ++k) {
      lead_margins(z, p, k, t, truth[k - 1][t], cum, margins);
      const std::size_t base =
          (static_cast<std::size_t>(t) * sh.n_trials + (k - 1)) * sh.n_iterations;
      for (int r = 1; r <= sh.n_iterations; ++r)
        sim.x[base + (r - 1)] = margins[r - 1] >= p.delta ? 1 : 0;
      sim.err[static_cast<std::size_t>(t) * sh.n_trials + (k - 1)] =
          margins[sh.n_iterations - 1] >= p.delta ? 0 : 1;
    }
  return sim;
}

EarlystopSim simulate_earlystop(const ZoneTensor& z, const TruthMap& truth,
                                const ScoreProfile& p) {
  p.validate();
  validate_inputs(z, truth);
  const TensorShape& sh = z.shape;
  EarlystopSim sim;
  sim.n_levels = sh.n_levels;
  sim.n_trials = sh.n_trials;
  sim.n_iterations = sh.n_iterations;
  sim.stop_iteration.assign(static_cast<std::size_t>(sh.n_levels) * sh.n_trials, 0);
  sim.err.assign(static_cast<std::size_t>(sh.n_levels) * sh.n_trials, 1);

  std::vector<int> cum, margins;
  for (int t = 0; t < sh.n_levels; ++t)
    for (int k = 1; k <= sh.n_trials; ++k) {
      lead_margins(z, p, k, t, truth[k - 1][t], cum, margins);
      const std::size_t at = static_cast<std::size_t>(t) * sh.n_trials + (k - 1);
      for (int r = 1; r <= sh.n_iterations; ++r) {
        if (margins[r - 1] >= p.delta) {
          sim.stop_iteration[at] = r;
          sim.err[at] = 0;
          break;
        }
        if (-margins[r - 1] >= p.delta) break;  // a competitor sealed the margin first
      }
    }
  return sim;
}

double nostop_objective_from_tallies(const std::vector<int>& err_count,
                                     const std::vector<long long>& x_sum, int n_trials,
                                     int n_iterations) {
  const double nk = n_trials;
  const double nkr = static_cast<double>(n_trials) * n_iterations;
  double obj = 0.0;
  for (std::size_t t = 0; t < err_count.size(); ++t)
    obj += (1.0 - err_count[t] / nk) + x_sum[t] / nkr;
  return obj;
}

double earlystop_objective_from_tallies(const std::vector<int>& err_count,
                                        const std::vector<long long>& stop_sum,
                                        const TimingParams& tp) {
  const double nk = tp.n_trials;
  // Minutes per iteration, scaled to points per percent accuracy: 100/60ths
  // of a minute of stimulation cost one accuracy point per trial.
  const double cost = (100.0 * tp.flashes_per_iteration / 60.0) * (tp.soa_seconds / nk);
  double obj = 0.0;
  for (std::size_t t = 0; t < err_count.size(); ++t) {
    const long long charged =
        stop_sum[t] + static_cast<long long>(tp.n_iterations) * err_count[t];
    obj += 1.0 - err_count[t] / nk - cost * static_cast<double>(charged);
  }
  return obj;
}

namespace {

void nostop_tallies(const NostopSim& sim, std::vector<int>& err, std::vector<long long>& x) {
  err.assign(sim.n_levels, 0);
  x.assign(sim.n_levels, 0);
  for (int t = 0; t < sim.n_levels; ++t)
    for (int k = 1; k <= sim.n_trials; ++k) {
      err[t] += sim.err_at(t, k) ? 1 : 0;
      for (int r = 1; r <= sim.n_iterations; ++r) x[t] += sim.x_at(t, k, r) ? 1 : 0;
    }
}

void earlystop_tallies(const EarlystopSim& sim, std::vector<int>& err,
                       std::vector<long long>& stop) {
  err.assign(sim.n_levels, 0);
  stop.assign(sim.n_levels, 0);
  for (int t = 0; t < sim.n_levels; ++t)
    for (int k = 1; k <= sim.n_trials; ++k) {
      if (sim.err_at(t, k))
        err[t] += 1;
      else
        stop[t] += sim.stop_at(t, k);
    }
}

}  // namespace

double nostop_objective(const ZoneTensor& z, const TruthMap& truth, const ScoreProfile& p) {
  NostopSim sim = simulate_nostop(z, truth, p);
  std::vector<int> err;
  std::vector<long long> x;
  nostop_tallies(sim, err, x);
  return nostop_objective_from_tallies(err, x, sim.n_trials, sim.n_iterations);
}

double earlystop_objective(const ZoneTensor& z, const TruthMap& truth, const ScoreProfile& p,
                           const TimingParams& tp) {
  tp.validate();
  EarlystopSim sim = simulate_earlystop(z, truth, p);
  std::vector<int> err;
  std::vector<long long> stop;
  earlystop_tallies(sim, err, stop);
  return earlystop_objective_from_tallies(err, stop, tp);
}

namespace {

bool profile_less(const ScoreProfile& a, const ScoreProfile& b) {
  return std::tie(a.s[0], a.s[1], a.s[2], a.s[3], a.s[4], a.delta) <
         std::tie(b.s[0], b.s[1], b.s[2], b.s[3], b.s[4], b.delta);
}

struct Incumbent {
  bool has = false;
  double objective = -std::numeric_limits<double>::infinity();
  ScoreProfile profile;
};

struct SearchInputs {
  const ZoneTensor& z;
  const TruthMap& truth;
  OptimizeMode mode;
  TimingParams tp;  // early-stopping only
  int dmax = 0;
  double bound = 0.0;  // objective value no profile can exceed
};

// Evaluates one score vector for every admissible delta at once. Margins per
// (level, trial, iteration) are integers, so each delta's tallies come from
// threshold counts instead of a fresh simulation.
class DeltaSweep {
 public:
  explicit DeltaSweep(const SearchInputs& in) : in_(in) {
    const TensorShape& sh = in.z.shape;
    n_levels_ = sh.n_levels;
    per_level_a_.resize(n_levels_);
    per_level_b_.resize(n_levels_);
    err_.resize(n_levels_);
    sum_.resize(n_levels_);
  }

  // Walks deltas in ascending order; reports each evaluated (delta, objective)
  // pair to visit(delta, objective). Returns the number of deltas evaluated.
  template <typename Visit>
  std::uint64_t run(const std::array<int, 5>& s, Visit&& visit) {
    ScoreProfile p;
    p.s = s;
    const int dmin = s[0] - s[4] + 1;
    const int dmax = in_.dmax;
    if (dmin > dmax) return 0;
    const std::size_t range = static_cast<std::size_t>(dmax - dmin + 1);
    const TensorShape& sh = in_.z.shape;

    for (int t = 0; t < n_levels_; ++t) {
      per_level_a_[t].assign(range + 1, 0);
      per_level_b_[t].assign(range + 1, 0);
    }

    for (int t = 0; t < n_levels_; ++t) {
      auto& acc_a = per_level_a_[t];
      auto& acc_b = per_level_b_[t];
      for (int k = 1; k <= sh.n_trials; ++k) {
        lead_margins(in_.z, p, k, t, in_.truth[k - 1][t], cum_, margins_);
        if (in_.mode == OptimizeMode::nostop) {
          // acc_a histograms all margins, acc_b the final-iteration ones;
          // suffix sums later turn them into per-delta counts.
          for (int r = 0; r < sh.n_iterations; ++r) {
            const int b = std::min(margins_[r], dmax);
            if (b >= dmin) ++acc_a[b - dmin];
          }
          const int b = std::min(margins_[sh.n_iterations - 1], dmax);
          if (b >= dmin) ++acc_b[b - dmin];
        } else {
          // First crossing of each |margin| level decides the character for
          // every delta in that band: errors and stop iterations are added
          // over delta intervals via difference arrays.
          int reached = dmin - 1;
          for (int r = 0; r < sh.n_iterations && reached < dmax; ++r) {
            const int mag = std::abs(margins_[r]);
            if (mag <= reached) continue;
            const int lo = std::max(reached + 1, dmin);
            const int hi = std::min(mag, dmax);
            if (lo <= hi) {
              if (margins_[r] > 0) {
                acc_b[lo - dmin] += r + 1;
                acc_b[hi - dmin + 1] -= r + 1;
              } else {
                acc_a[lo - dmin] += 1;
                acc_a[hi - dmin + 1] -= 1;
              }
            }
            reached = mag;
          }
          if (reached < dmax) {  // margins never reached these deltas: error
            const int lo = std::max(reached + 1, dmin);
            acc_a[lo - dmin] += 1;
            acc_a[dmax - dmin + 1] -= 1;
          }
        }
      }
    }

    if (in_.mode == OptimizeMode::nostop) {
      // Turn histograms into suffix counts: entries at or above each delta.
      for (int t = 0; t < n_levels_; ++t) {
        auto& acc_a = per_level_a_[t];
        auto& acc_b = per_level_b_[t];
        for (std::size_t i = range; i-- > 1;) {
          acc_a[i - 1] += acc_a[i];
          acc_b[i - 1] += acc_b[i];
        }
      }
      for (std::size_t i = 0; i < range; ++i) {
        for (int t = 0; t < n_levels_; ++t) {
          sum_[t] = per_level_a_[t][i];
          err_[t] = sh.n_trials - static_cast<int>(per_level_b_[t][i]);
        }
        visit(dmin + static_cast<int>(i),
              nostop_objective_from_tallies(err_, sum_, sh.n_trials, sh.n_iterations));
      }
    } else {
      std::fill(err_.begin(), err_.end(), 0);
      std::fill(sum_.begin(), sum_.end(), 0);
      std::vector<long long> run_err(n_levels_, 0), run_stop(n_levels_, 0);
      for (std::size_t i = 0; i < range; ++i) {
        for (int t = 0; t < n_levels_; ++t) {
          run_err[t] += per_level_a_[t][i];
          run_stop[t] += per_level_b_[t][i];
          err_[t] = static_cast<int>(run_err[t]);
          sum_[t] = run_stop[t];
        }
        visit(dmin + static_cast<int>(i),
              earlystop_objective_from_tallies(err_, sum_, in_.tp));
      }
    }
    return range;
  }

 private:
  const SearchInputs& in_;
  int n_levels_ = 0;
  std::vector<std::vector<long long>> per_level_a_, per_level_b_;
  std::vector<int> err_;
  std::vector<long long> sum_;
  std::vector<int> cum_, margins_;
};

// One worker's share: complete score vectors, ascending. Stops early once the
// admissible bound is met; everything skipped is lexicographically larger.
void search_shard(const SearchInputs& in, const std::vector<std::array<int, 5>>& svecs,
                  Incumbent& best, std::uint64_t& nodes) {
  DeltaSweep sweep(in);
  for (const auto& s : svecs) {
    nodes += sweep.run(s, [&](int delta, double obj) {
      if (obj > best.objective) {
        best.objective = obj;
        best.profile.s = s;
        best.profile.delta = delta;
        best.has = true;
      }
    });
    if (best.has && best.objective >= in.bound) break;
  }
}

OptResult optimize_common(const ZoneTensor& z, const TruthMap& truth, const LatticeBounds& b,
                          OptimizeMode mode, const TimingParams& tp, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  b.validate();
  validate_inputs(z, truth);
  if (jobs < 1) throw ConfigError("jobs must be at least 1");

  SearchInputs in{z, truth, mode, tp, b.resolved_delta_max(z.shape.n_iterations), 0.0};
  const int n_k = z.shape.n_trials;
  const int n_r = z.shape.n_iterations;
  {
    std::vector<int> zero_err(z.shape.n_levels, 0);
    if (mode == OptimizeMode::nostop) {
      std::vector<long long> full_x(z.shape.n_levels,
                                    static_cast<long long>(n_k) * n_r);
      in.bound = nostop_objective_from_tallies(zero_err, full_x, n_k, n_r);
    } else {
      tp.validate();
      std::vector<long long> first_stop(z.shape.n_levels, n_k);
      in.bound = earlystop_objective_from_tallies(zero_err, first_stop, tp);
    }
  }

  const auto svecs = enumerate_score_vectors(b);
  Incumbent best;
  std::uint64_t nodes = 0;
  const int workers = std::min<int>(jobs, static_cast<int>(svecs.size()));
  if (workers <= 1) {
    search_shard(in, svecs, best, nodes);
  } else {
    // Stripe the outermost score across workers; every worker's share stays
    // in ascending order, so per-worker incumbents keep the lex tie-break.
    std::vector<int> sa_values;
    for (const auto& s : svecs)
      if (sa_values.empty() || sa_values.back() != s[0]) sa_values.push_back(s[0]);
    std::vector<std::vector<std::array<int, 5>>> shares(workers);
    for (std::size_t i = 0; i < sa_values.size(); ++i) {
      const int w = static_cast<int>(i % workers);
      for (const auto& s : svecs)
        if (s[0] == sa_values[i]) shares[w].push_back(s);
    }
    std::vector<Incumbent> bests(workers);
    std::vector<std::uint64_t> node_counts(workers, 0);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] { search_shard(in, shares[w], bests[w], node_counts[w]); });
    for (auto& th : pool) th.join();
    for (int w = 0; w < workers; ++w) {
      nodes += node_counts[w];
      if (!bests[w].has) continue;
      if (!best.has || bests[w].objective > best.objective ||
          (bests[w].objective == best.objective && profile_less(bests[w].profile, best.profile)))
        best = bests[w];
    }
  }
  if (!best.has) throw NumericError("score search evaluated no candidate");

  OptResult res;
  res.mode = mode;
  res.profile = best.profile;
  res.profile.lower = b.lower;
  res.profile.upper = b.upper;
  res.profile.validate();
  res.nodes_explored = nodes;

  // Replay the winner through the plain simulation; the sweep must agree.
  std::vector<int> err;
  std::vector<long long> sum;
  if (mode == OptimizeMode::nostop) {
    NostopSim sim = simulate_nostop(z, truth, res.profile);
    nostop_tallies(sim, err, sum);
    res.objective = nostop_objective_from_tallies(err, sum, n_k, n_r);
  } else {
    EarlystopSim sim = simulate_earlystop(z, truth, res.profile);
    earlystop_tallies(sim, err, sum);
    res.objective = earlystop_objective_from_tallies(err, sum, tp);
  }
  if (res.objective != best.objective)
    throw NumericError("score search result does not replay to the same objective");

  res.per_level.resize(z.shape.n_levels);
  for (int t = 0; t < z.shape.n_levels; ++t) {
    LevelStats& ls = res.per_level[t];
    ls.err_count = err[t];
    ls.err_rate = static_cast<double>(err[t]) / n_k;
    if (mode == OptimizeMode::nostop) {
      ls.x_sum = sum[t];
    } else {
      ls.stop_sum = sum[t];
      ls.mean_stop_iteration =
          static_cast<double>(sum[t] + static_cast<long long>(n_r) * err[t]) / n_k;
    }
  }
  res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace

OptResult optimize_nostop(const ZoneTensor& z, const TruthMap& truth, const LatticeBounds& b,
                          int jobs) {
  return optimize_common(z, truth, b, OptimizeMode::nostop, TimingParams{}, jobs);
}

OptResult optimize_earlystop(const ZoneTensor& z, const TruthMap& truth,
                             const LatticeBounds& b, const TimingParams& tp, int jobs) {
  tp.validate();
  if (tp.n_trials != z.shape.n_trials || tp.n_iterations != z.shape.n_iterations)
    throw ConfigError("timing params disagree with the zone tensor shape");
  return optimize_common(z, truth, b, OptimizeMode::earlystop, tp, jobs);
}

namespace {

void audit_profile(const ScoreProfile& p, const LatticeBounds& b, int n_iterations,
                   std::vector<std::string>& out) {
  if (p.s[0] > b.upper) out.push_back("zone a score exceeds the upper bound");
  if (p.s[4] < b.lower) out.push_back("zone e score falls below the lower bound");
  for (int i = 0; i < 4; ++i)
    if (p.s[i + 1] > p.s[i] - 1) out.push_back("scores do not strictly descend");
  if (p.s[2] < 0) out.push_back("middle zone score is negative");
  if (p.delta < p.s[0] - p.s[4] + 1)
    out.push_back("delta does not exceed the one-iteration score span");
  if (p.delta > b.resolved_delta_max(n_iterations))
    out.push_back("delta exceeds the lattice ceiling");
}

std::string char_tag(int t, int k) {
  return "level " + std::to_string(t) + ", trial " + std::to_string(k);
}

}  // namespace

std::vector<std::string> audit_nostop(const ZoneTensor& z, const TruthMap& truth,
                                      const ScoreProfile& p, const LatticeBounds& b) {
  validate_inputs(z, truth);
  std::vector<std::string> out;
  audit_profile(p, b, z.shape.n_iterations, out);
  if (!out.empty()) return out;
  ScoreProfile checked = p;
  checked.lower = std::min(p.s[4], b.lower);
  checked.upper = std::max(p.s[0], b.upper);
  NostopSim sim = simulate_nostop(z, truth, checked);
  const TensorShape& sh = z.shape;
  for (int t = 0; t < sh.n_levels; ++t)
    for (int k = 1; k <= sh.n_trials; ++k) {
      const int trg = truth[k - 1][t];
      bool last_selected = false;
      for (int r = 1; r <= sh.n_iterations; ++r) {
        const std::vector<int> cum = cumulative_scores(z, p, k, t, r);
        bool separated = true;
        for (int f = 1; f <= sh.n_flashes; ++f)
          if (f != trg && cum[trg - 1] < cum[f - 1] + p.delta) separated = false;
        const bool x = sim.x_at(t, k, r);
        if (x && !separated)
          out.push_back("selected iteration lacks the score margin at " + char_tag(t, k) +
                        ", iteration " + std::to_string(r));
        if (!x && separated)
          out.push_back("separated iteration left unselected at " + char_tag(t, k) +
                        ", iteration " + std::to_string(r));
        if (r == sh.n_iterations) last_selected = x;
      }
      if (sim.err_at(t, k) == last_selected)
        out.push_back("error flag disagrees with the final iteration at " + char_tag(t, k));
    }
  return out;
}

std::vector<std::string> audit_earlystop(const ZoneTensor& z, const TruthMap& truth,
                                         const ScoreProfile& p, const LatticeBounds& b) {
  validate_inputs(z, truth);
  std::vector<std::string> out;
  audit_profile(p, b, z.shape.n_iterations, out);
  if (!out.empty()) return out;
  ScoreProfile checked = p;
  checked.lower = std::min(p.s[4], b.lower);
  checked.upper = std::max(p.s[0], b.upper);
  EarlystopSim sim = simulate_earlystop(z, truth, checked);
  const TensorShape& sh = z.shape;
  for (int t = 0; t < sh.n_levels; ++t)
    for (int k = 1; k <= sh.n_trials; ++k) {
      const int trg = truth[k - 1][t];
      auto separated = [&](const std::vector<int>& cum) {
        for (int f = 1; f <= sh.n_flashes; ++f)
          if (f != trg && cum[trg - 1] < cum[f - 1] + p.delta) return false;
        return true;
      };
      auto blocked = [&](const std::vector<int>& cum) {
        for (int f = 1; f <= sh.n_flashes; ++f)
          if (f != trg && cum[f - 1] >= cum[trg - 1] + p.delta) return true;
        return false;
      };
      if (!sim.err_at(t, k)) {
        const int stop = sim.stop_at(t, k);
        if (stop < 1 || stop > sh.n_iterations) {
          out.push_back("stop iteration out of range at " + char_tag(t, k));
          continue;
        }
        if (!separated(cumulative_scores(z, p, k, t, stop)))
          out.push_back("stop iteration lacks the score margin at " + char_tag(t, k));
        for (int r = 1; r < stop; ++r) {
          const std::vector<int> cum = cumulative_scores(z, p, k, t, r);
          if (separated(cum))
            out.push_back("earlier iteration already separated at " + char_tag(t, k) +
                          ", iteration " + std::to_string(r));
          for (int f = 1; f <= sh.n_flashes; ++f)
            if (f != trg && cum[trg - 1] < cum[f - 1] - p.delta + 1)
              out.push_back("competitor blocked an earlier iteration at " + char_tag(t, k) +
                            ", iteration " + std::to_string(r));
        }
      } else {
        if (sim.stop_at(t, k) != 0)
          out.push_back("errored character carries a stop iteration at " + char_tag(t, k));
        // An error is only consistent when no separation precedes a block.
        bool blocked_seen = false;
        for (int r = 1; r <= sh.n_iterations && !blocked_seen; ++r) {
          const std::vector<int> cum = cumulative_scores(z, p, k, t, r);
          if (separated(cum)) {
            out.push_back("errored character had a separated iteration at " + char_tag(t, k) +
                          ", iteration " + std::to_string(r));
            break;
          }
          blocked_seen = blocked(cum);
        }
      }
    }
  return out;
}

}  // namespace spellerscore
