#include "acceptance/oracles.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "spellerscore/errors.hpp"

namespace spellerscore::acceptance {

namespace {

double dense_dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
  return s;
}

}  // namespace

double qp_oracle_objective(const TrainMatrix& m, const SvmConfig& cfg) {
  cfg.validate();
  const bool biased = cfg.bias_scale > 0.0;
  const int ad = m.dim + (biased ? 1 : 0);
  const std::size_t l1 = m.l1();
  const double inf = std::numeric_limits<double>::infinity();

  // Signed augmented rows, restricted to what the sweep would keep: rows with
  // positive cost and a positive regularized diagonal.
  std::vector<std::vector<double>> rows;
  std::vector<double> upper, diag;
  for (std::size_t i = 0; i < l1 + m.l2(); ++i) {
    const double cost =
        i < l1 ? (m.sign_cost.empty() ? cfg.c1 : m.sign_cost[i]) : cfg.c2;
    if (cost <= 0.0) continue;
    std::vector<double> v(ad, 0.0);
    if (i < l1) {
      const auto x = m.x_row(i);
      for (int j = 0; j < m.dim; ++j) v[j] = m.y[i] * x[j];
      if (biased) v[m.dim] = m.y[i] * cfg.bias_scale;
    } else {
      const auto z = m.z_row(i - l1);
      for (int j = 0; j < m.dim; ++j) v[j] = z[j];
    }
    const double d = cfg.loss == SvmLoss::l2 ? 0.5 / cost : 0.0;
    if (dense_dot(v, v) + d <= 0.0) continue;
    rows.push_back(std::move(v));
    upper.push_back(cfg.loss == SvmLoss::l2 ? inf : cost);
    diag.push_back(d);
  }

  const std::size_t n = rows.size();
  if (n == 0) return 0.0;

  std::vector<double> Q(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double q = dense_dot(rows[i], rows[j]);
      Q[i * n + j] = q;
      Q[j * n + i] = q;
    }
    Q[i * n + i] += diag[i];
  }

  auto mat_vec = [&](const std::vector<double>& a, std::vector<double>& out) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      const double* qi = Q.data() + i * n;
      for (std::size_t j = 0; j < n; ++j) s += qi[j] * a[j];
      out[i] = s;
    }
  };
  auto objective = [&](const std::vector<double>& a, std::vector<double>& scratch) {
    mat_vec(a, scratch);
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * (0.5 * scratch[i] - 1.0);
    return s;
  };

  // Lipschitz constant via power iteration on the dense matrix.
  std::mt19937_64 prng(0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> gauss;
  std::vector<double> v(n), qv(n);
  for (double& c : v) c = gauss(prng);
  double lip = 0.0;
  for (int it = 0; it < 100; ++it) {
    mat_vec(v, qv);
    double norm = std::sqrt(dense_dot(qv, qv));
    if (norm <= 0.0) break;
    lip = norm;
    for (std::size_t i = 0; i < n; ++i) v[i] = qv[i] / norm;
  }
  lip = lip * 1.05 + 1e-12;

  // Accelerated projected gradient with momentum restarts on the box.
  std::vector<double> x(n, 0.0), x_prev(n, 0.0), y(n, 0.0), g(n), scratch(n);
  double t = 1.0;
  double f_prev = 0.0;
  double best = 0.0;
  for (int iter = 0; iter < 500000; ++iter) {
    mat_vec(y, g);
    for (std::size_t i = 0; i < n; ++i) {
      const double step = y[i] - (g[i] - 1.0) / lip;
      x[i] = std::min(upper[i], std::max(0.0, step));
    }

    mat_vec(x, g);
    double residual = 0.0;
    double fx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      fx += x[i] * (0.5 * g[i] - 1.0);
      double pg = g[i] - 1.0;
      if (x[i] <= 0.0)
        pg = std::min(pg, 0.0);
      else if (x[i] >= upper[i])
        pg = std::max(pg, 0.0);
      residual = std::max(residual, std::fabs(pg));
    }
    best = std::min(best, fx);
    if (residual <= 1e-10) break;

    if (fx > f_prev) {
      t = 1.0;  // momentum restarted from the current point
      y = x;
      x_prev = x;
      f_prev = fx;
      continue;
    }
    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    const double beta = (t - 1.0) / t_next;
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + beta * (x[i] - x_prev[i]);
    x_prev = x;
    t = t_next;
    f_prev = fx;
  }
  best = std::min(best, objective(x, scratch));
  return best;
}

namespace {

struct CharOutcome {
  bool err = false;
  int stop = 0;  // early stopping: iteration of the decision, 0 on error
};

// Plain per-character walk over cumulative zone scores; shares nothing with
// the sweep implementation it cross-checks.
void walk_character(const ZoneTensor& z, const ScoreProfile& p, int k, int t, int trg,
                    bool earlystop, std::vector<int>& cum, CharOutcome& out,
                    long long& x_count) {
  const TensorShape& sh = z.shape;
  cum.assign(sh.n_flashes, 0);
  out = {};
  out.err = true;
  x_count = 0;
  for (int r = 1; r <= sh.n_iterations; ++r) {
    for (int f = 1; f <= sh.n_flashes; ++f) cum[f - 1] += p.score(z.at(k, r, t, f));
    int best_other = std::numeric_limits<int>::min();
    for (int f = 1; f <= sh.n_flashes; ++f)
      if (f != trg) best_other = std::max(best_other, cum[f - 1]);
    const int margin = cum[trg - 1] - best_other;
    if (earlystop) {
      if (margin >= p.delta) {
        out.err = false;
        out.stop = r;
        return;
      }
      if (-margin >= p.delta) return;
    } else {
      if (margin >= p.delta) ++x_count;
      if (r == sh.n_iterations) out.err = margin < p.delta;
    }
  }
}

template <typename Evaluate>
BruteBest brute_force_common(const LatticeBounds& b, int n_iterations, Evaluate&& evaluate) {
  b.validate();
  const int dmax = b.resolved_delta_max(n_iterations);
  BruteBest best;
  best.objective = -std::numeric_limits<double>::infinity();
  bool found = false;
  for (int sa = std::max(b.lower + 4, 2); sa <= b.upper; ++sa)
    for (int sb = std::max(b.lower + 3, 1); sb <= sa - 1; ++sb)
      for (int sc = std::max(b.lower + 2, 0); sc <= sb - 1; ++sc)
        for (int sd = b.lower + 1; sd <= sc - 1; ++sd)
          for (int se = b.lower; se <= sd - 1; ++se)
            for (int delta = sa - se + 1; delta <= dmax; ++delta) {
              ScoreProfile p;
              p.s = {sa, sb, sc, sd, se};
              p.delta = delta;
              p.lower = b.lower;
              p.upper = b.upper;
              const double obj = evaluate(p);
              ++best.evaluated;
              if (!found || obj > best.objective) {
                best.objective = obj;
                best.profile = p;
                found = true;
              }
            }
  if (!found) throw NumericError("brute force evaluated no candidate");
  return best;
}

}  // namespace

BruteBest brute_force_nostop(const ZoneTensor& zones, const TruthMap& truth,
                             const LatticeBounds& bounds) {
  zones.validate();
  std::vector<int> cum;
  return brute_force_common(bounds, zones.shape.n_iterations, [&](const ScoreProfile& p) {
    std::vector<int> err(zones.shape.n_levels, 0);
    std::vector<long long> x_sum(zones.shape.n_levels, 0);
    for (int t = 0; t < zones.shape.n_levels; ++t)
      for (int k = 1; k <= zones.shape.n_trials; ++k) {
        CharOutcome oc;
        long long xc = 0;
        walk_character(zones, p, k, t, truth[k - 1][t], false, cum, oc, xc);
        err[t] += oc.err ? 1 : 0;
        x_sum[t] += xc;
      }
    return nostop_objective_from_tallies(err, x_sum, zones.shape.n_trials,
                                         zones.shape.n_iterations);
  });
}

BruteBest brute_force_earlystop(const ZoneTensor& zones, const TruthMap& truth,
                                const LatticeBounds& bounds, const TimingParams& timing) {
  zones.validate();
  timing.validate();
  std::vector<int> cum;
  return brute_force_common(bounds, zones.shape.n_iterations, [&](const ScoreProfile& p) {
    std::vector<int> err(zones.shape.n_levels, 0);
    std::vector<long long> stop_sum(zones.shape.n_levels, 0);
    for (int t = 0; t < zones.shape.n_levels; ++t)
      for (int k = 1; k <= zones.shape.n_trials; ++k) {
        CharOutcome oc;
        long long xc = 0;
        walk_character(zones, p, k, t, truth[k - 1][t], true, cum, oc, xc);
        if (oc.err)
          err[t] += 1;
        else
          stop_sum[t] += oc.stop;
      }
    return earlystop_objective_from_tallies(err, stop_sum, timing);
  });
}

SynthConfig random_synth_config(std::mt19937_64& rng, int max_sign_rows) {
  std::uniform_int_distribution<int> trials(1, 3), iters(1, 2), flashes(2, 3), levels(1, 2),
      dims(2, 8);
  std::uniform_real_distribution<double> shift(0.5, 3.0), noise(0.5, 1.5);
  for (;;) {
    SynthConfig c;
    c.n_trials = trials(rng);
    c.n_iterations = iters(rng);
    c.n_flashes = flashes(rng);
    c.n_levels = levels(rng);
    c.feature_dim = dims(rng);
    c.n_channels = 1;
    c.target_shift = shift(rng);
    c.noise_sd = noise(rng);
    c.soa_seconds = 0.25;
    c.seed = rng();
    const long rows = static_cast<long>(c.n_trials) * c.n_iterations * c.n_levels * c.n_flashes;
    if (rows <= max_sign_rows) return c;
  }
}

ZoneTensor random_zone_tensor(std::mt19937_64& rng, int n_trials, int n_iterations,
                              int n_flashes, int n_levels, TruthMap& truth_out) {
  ZoneTensor z;
  z.shape = {n_trials, n_iterations, n_levels, n_flashes};
  z.zones.assign(z.shape.size(), Zone::b);
  truth_out.assign(n_trials, std::vector<int>(n_levels, 1));
  std::uniform_int_distribution<int> flash(1, n_flashes);
  std::uniform_int_distribution<int> below(1, 4);  // zones b..e
  std::bernoulli_distribution place_a(0.5);
  for (int k = 1; k <= n_trials; ++k)
    for (int t = 0; t < n_levels; ++t) truth_out[k - 1][t] = flash(rng);
  for (int k = 1; k <= n_trials; ++k)
    for (int r = 1; r <= n_iterations; ++r)
      for (int t = 0; t < n_levels; ++t) {
        const int a_at = place_a(rng) ? flash(rng) : 0;
        for (int f = 1; f <= n_flashes; ++f)
          z.zones[z.shape.index(k, r, t, f)] =
              f == a_at ? Zone::a : static_cast<Zone>(below(rng));
      }
  return z;
}

long double bitrate_long_double(int n_symbols, long double p) {
  const long double n = n_symbols;
  long double b = std::log2(n);
  if (p > 0.0L) b += p * std::log2(p);
  if (p < 1.0L) b += (1.0L - p) * std::log2((1.0L - p) / (n - 1.0L));
  return b;
}

}  // namespace spellerscore::acceptance
