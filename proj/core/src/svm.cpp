#include "spellerscore/svm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

namespace spellerscore {

void SvmConfig::validate() const {
  if (!(c1 > 0.0)) throw ConfigError("svm: c1 must be positive");
  if (c2 < 0.0) throw ConfigError("svm: c2 must be non-negative");
  if (!(tol > 0.0)) throw ConfigError("svm: tol must be positive");
  if (max_epochs < 1) throw ConfigError("svm: max_epochs must be at least 1");
  if (bias_scale < 0.0) throw ConfigError("svm: bias_scale must be non-negative");
}

TrainMatrix build_train_matrix(const Dataset& d) {
  d.validate();
  TrainMatrix m;
  m.dim = d.feature_dim();
  const std::size_t n = d.records.size();
  m.x.reserve(n * m.dim);
  m.y.reserve(n);
  m.x_ref.reserve(n);
  for (const StimulusRecord& rec : d.records) {
    m.x.insert(m.x.end(), rec.features.begin(), rec.features.end());
    m.y.push_back(static_cast<std::int8_t>(rec.label));
    m.x_ref.push_back({rec.trial, rec.iteration, rec.level, rec.flash});
  }
  for (const StimulusRecord& rec : d.records) {
    if (rec.label == 1) continue;
    const StimulusRecord& trg =
        d.at(rec.trial, rec.iteration, rec.level, d.target_flash(rec.trial, rec.level));
    for (int j = 0; j < m.dim; ++j)
      m.z.push_back(trg.features[j] - rec.features[j]);
    m.z_ref.push_back({rec.trial, rec.iteration, rec.level, rec.flash});
  }
  return m;
}

namespace {

double dot(const double* a, const double* b, int n) {
  double s = 0.0;
  for (int j = 0; j < n; ++j) s += a[j] * b[j];
  return s;
}

void check_finite(const std::vector<double>& values, const char* what) {
  for (double v : values)
    if (!std::isfinite(v))
      throw NumericError(std::string("non-finite value in ") + what);
}

}  // namespace

double decision_value(const Hyperplane& h, std::span<const double> features) {
  if (features.size() != h.w.size())
    throw DataError("decision_value: feature dimension mismatch");
  return dot(h.w.data(), features.data(), static_cast<int>(h.w.size())) + h.b;
}

Hyperplane train(const TrainMatrix& m, const SvmConfig& cfg, DualState* state_out) {
  cfg.validate();
  if (m.dim < 1) throw DataError("svm: empty feature dimension");
  if (m.x.size() != m.l1() * static_cast<std::size_t>(m.dim) ||
      m.z.size() != m.l2() * static_cast<std::size_t>(m.dim))
    throw DataError("svm: train matrix storage inconsistent");
  if (!m.sign_cost.empty() && m.sign_cost.size() != m.l1())
    throw DataError("svm: sign_cost must cover every sign row");
  check_finite(m.x, "sign rows");
  check_finite(m.z, "difference rows");

  const std::size_t l1 = m.l1();
  const std::size_t l2 = m.l2();
  const std::size_t total = l1 + l2;
  const bool biased = cfg.bias_scale > 0.0;
  const int wdim = m.dim + (biased ? 1 : 0);
  const double inf = std::numeric_limits<double>::infinity();

  auto row_cost = [&](std::size_t i) {
    if (i < l1) return m.sign_cost.empty() ? cfg.c1 : m.sign_cost[i];
    return cfg.c2;
  };

  DualState st;
  st.alpha.assign(total, 0.0);
  st.w_running.assign(wdim, 0.0);
  double* w = st.w_running.data();

  // Per-row diagonal of the dual Hessian, plus the loss-dependent pieces.
  std::vector<double> qd(total, 0.0);
  std::vector<double> diag(total, 0.0);
  std::vector<double> upper(total, inf);
  std::vector<std::size_t> active;
  active.reserve(total);
  int skipped = 0;
  for (std::size_t i = 0; i < total; ++i) {
    const double cost = row_cost(i);
    if (cost <= 0.0) continue;
    double q;
    if (i < l1) {
      const double* xi = m.x.data() + i * m.dim;
      q = dot(xi, xi, m.dim);
      if (biased) q += cfg.bias_scale * cfg.bias_scale;
    } else {
      const double* zi = m.z.data() + (i - l1) * m.dim;
      q = dot(zi, zi, m.dim);
    }
    if (cfg.loss == SvmLoss::l2) {
      diag[i] = 0.5 / cost;
      q += diag[i];
    } else {
      upper[i] = cost;
    }
    if (q <= 0.0) {
      ++skipped;
      continue;
    }
    qd[i] = q;
    active.push_back(i);
  }

  std::mt19937_64 rng(cfg.shuffle_seed);
  double pg_max = 0.0;
  int epoch = 0;
  bool converged = false;
  while (epoch < cfg.max_epochs) {
    std::shuffle(active.begin(), active.end(), rng);
    pg_max = 0.0;
    for (std::size_t i : active) {
      const double a = st.alpha[i];
      double g;
      if (i < l1) {
        const double* xi = m.x.data() + i * m.dim;
        double v = dot(xi, w, m.dim);
        if (biased) v += cfg.bias_scale * w[m.dim];
        g = m.y[i] * v - 1.0 + diag[i] * a;
      } else {
        const double* zi = m.z.data() + (i - l1) * m.dim;
        g = dot(zi, w, m.dim) - 1.0 + diag[i] * a;
      }

      double pg = g;
      if (a <= 0.0)
        pg = std::min(g, 0.0);
      else if (a >= upper[i])
        pg = std::max(g, 0.0);
      pg_max = std::max(pg_max, std::fabs(pg));
      if (pg == 0.0) continue;

      const double a_new = std::min(upper[i], std::max(0.0, a - g / qd[i]));
      if (a_new == a) continue;
      const double delta = a_new - a;
      st.alpha[i] = a_new;
      if (i < l1) {
        const double* xi = m.x.data() + i * m.dim;
        const double step = m.y[i] * delta;
        for (int j = 0; j < m.dim; ++j) w[j] += step * xi[j];
        if (biased) w[m.dim] += step * cfg.bias_scale;
      } else {
        const double* zi = m.z.data() + (i - l1) * m.dim;
        for (int j = 0; j < m.dim; ++j) w[j] += delta * zi[j];
      }
    }
    ++epoch;
    if (pg_max <= cfg.tol) {
      converged = true;
      break;
    }
  }

  Hyperplane h;
  h.w.assign(st.w_running.begin(), st.w_running.begin() + m.dim);
  h.b = biased ? cfg.bias_scale * st.w_running[m.dim] : 0.0;
  h.bias_scale = cfg.bias_scale;
  h.diagnostics.epochs_run = epoch;
  h.diagnostics.final_max_projected_gradient = pg_max;
  h.diagnostics.dual_objective = dual_objective(m, st, cfg);
  h.diagnostics.converged = converged;
  h.diagnostics.skipped_rows = skipped;
  if (state_out) *state_out = std::move(st);
  return h;
}

double dual_objective(const TrainMatrix& m, const DualState& s, const SvmConfig& cfg) {
  if (s.alpha.size() != m.l1() + m.l2())
    throw DataError("dual_objective: alpha length mismatch");
  double obj = 0.5 * dot(s.w_running.data(), s.w_running.data(),
                         static_cast<int>(s.w_running.size()));
  for (std::size_t i = 0; i < s.alpha.size(); ++i) obj -= s.alpha[i];
  if (cfg.loss == SvmLoss::l2) {
    for (std::size_t i = 0; i < s.alpha.size(); ++i) {
      if (s.alpha[i] == 0.0) continue;
      const double cost = i < m.l1() ? (m.sign_cost.empty() ? cfg.c1 : m.sign_cost[i])
                                     : cfg.c2;
      obj += 0.25 * s.alpha[i] * s.alpha[i] / cost;
    }
  }
  return obj;
}

}  // namespace spellerscore
