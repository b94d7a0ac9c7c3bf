#include "spellerscore/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace spellerscore {

const char* decision_method_name(DecisionMethod m) {
  switch (m) {
    case DecisionMethod::dv_med: return "dv_med";
    case DecisionMethod::erp_avg: return "erp_avg";
    case DecisionMethod::sbf: return "sbf";
    case DecisionMethod::osbf: return "osbf";
  }
  return "?";
}

DecisionMethod decision_method_from_name(const std::string& name) {
  if (name == "dv_med") return DecisionMethod::dv_med;
  if (name == "erp_avg") return DecisionMethod::erp_avg;
  if (name == "sbf") return DecisionMethod::sbf;
  if (name == "osbf") return DecisionMethod::osbf;
  throw ConfigError("unknown decision method: " + name);
}

const char* stopping_mode_name(StoppingMode m) {
  return m == StoppingMode::nostop ? "nostop" : "earlystop";
}

StoppingMode stopping_mode_from_name(const std::string& name) {
  if (name == "nostop") return StoppingMode::nostop;
  if (name == "earlystop") return StoppingMode::earlystop;
  throw ConfigError("unknown stopping mode: " + name);
}

namespace {

TrialPrediction finalize_trial(const Dataset& d, int k, std::vector<int> flashes,
                               std::vector<int> stops, bool fallback) {
  TrialPrediction pred;
  pred.trial = k;
  pred.stop_iteration = *std::max_element(stops.begin(), stops.end());
  pred.no_stop_fallback = fallback;
  pred.correct = true;
  pred.predicted_symbol = 0;
  for (int t = 0; t < d.meta.n_levels(); ++t) {
    if (flashes[t] != d.target_flash(k, t)) pred.correct = false;
    pred.predicted_symbol = pred.predicted_symbol * d.meta.n_flashes + (flashes[t] - 1);
  }
  pred.flash_per_level = std::move(flashes);
  pred.stop_per_level = std::move(stops);
  return pred;
}

int argmax_flash(const std::vector<double>& values) {
  int best = 1;
  for (int f = 2; f <= static_cast<int>(values.size()); ++f)
    if (values[f - 1] > values[best - 1]) best = f;
  return best;
}

int argmax_flash_int(const std::vector<int>& values) {
  int best = 1;
  for (int f = 2; f <= static_cast<int>(values.size()); ++f)
    if (values[f - 1] > values[best - 1]) best = f;
  return best;
}

}  // namespace

std::vector<TrialPrediction> predict_dv_med(const DvTensor& dv, const Dataset& d) {
  if (!(dv.shape == d.shape())) throw DataError("decision tensor shape mismatch");
  const TensorShape& sh = dv.shape;
  std::vector<TrialPrediction> out;
  out.reserve(sh.n_trials);
  std::vector<double> mean(sh.n_flashes);
  for (int k = 1; k <= sh.n_trials; ++k) {
    std::vector<int> flashes(sh.n_levels), stops(sh.n_levels, sh.n_iterations);
    for (int t = 0; t < sh.n_levels; ++t) {
      for (int f = 1; f <= sh.n_flashes; ++f) {
        double sum = 0.0;
        for (int r = 1; r <= sh.n_iterations; ++r) sum += dv.at(k, r, t, f);
        mean[f - 1] = sum / sh.n_iterations;
      }
      flashes[t] = argmax_flash(mean);
    }
    out.push_back(finalize_trial(d, k, std::move(flashes), std::move(stops), false));
  }
  return out;
}

std::vector<TrialPrediction> predict_erp_avg(const Hyperplane& h, const Dataset& d) {
  const TensorShape sh = d.shape();
  std::vector<TrialPrediction> out;
  out.reserve(sh.n_trials);
  std::vector<double> scores(sh.n_flashes);
  std::vector<double> avg(d.feature_dim());
  for (int k = 1; k <= sh.n_trials; ++k) {
    std::vector<int> flashes(sh.n_levels), stops(sh.n_levels, sh.n_iterations);
    for (int t = 0; t < sh.n_levels; ++t) {
      for (int f = 1; f <= sh.n_flashes; ++f) {
        std::fill(avg.begin(), avg.end(), 0.0);
        for (int r = 1; r <= sh.n_iterations; ++r) {
          const StimulusRecord& rec = d.at(k, r, t, f);
          for (std::size_t j = 0; j < avg.size(); ++j) avg[j] += rec.features[j];
        }
        for (double& v : avg) v /= sh.n_iterations;
        scores[f - 1] = decision_value(h, avg);
      }
      flashes[t] = argmax_flash(scores);
    }
    out.push_back(finalize_trial(d, k, std::move(flashes), std::move(stops), false));
  }
  return out;
}

std::vector<TrialPrediction> predict_scorebased(const ZoneTensor& z, const Dataset& d,
                                                const ScoreProfile& p, StoppingMode mode,
                                                int up_to) {
  p.validate();
  if (!(z.shape == d.shape())) throw DataError("zone tensor shape mismatch");
  const TensorShape& sh = z.shape;
  if (up_to == 0) up_to = sh.n_iterations;
  if (up_to < 1 || up_to > sh.n_iterations)
    throw DataError("predict_scorebased: iteration budget out of range");

  std::vector<TrialPrediction> out;
  out.reserve(sh.n_trials);
  for (int k = 1; k <= sh.n_trials; ++k) {
    std::vector<int> flashes(sh.n_levels), stops(sh.n_levels);
    bool fallback = false;
    for (int t = 0; t < sh.n_levels; ++t) {
      if (mode == StoppingMode::nostop) {
        flashes[t] = argmax_flash_int(cumulative_scores(z, p, k, t, up_to));
        stops[t] = up_to;
        continue;
      }
      std::vector<int> cum(sh.n_flashes, 0);
      int stopped_at = 0;
      for (int r = 1; r <= up_to && stopped_at == 0; ++r) {
        for (int f = 1; f <= sh.n_flashes; ++f) cum[f - 1] += p.score(z.at(k, r, t, f));
        int top1 = std::numeric_limits<int>::min(), top2 = std::numeric_limits<int>::min();
        for (int v : cum) {
          if (v > top1) {
            top2 = top1;
            top1 = v;
          } else if (v > top2) {
            top2 = v;
          }
        }
        if (top1 - top2 >= p.delta) stopped_at = r;
      }
      if (stopped_at > 0) {
        flashes[t] = argmax_flash_int(cum);
        stops[t] = stopped_at;
      } else {
        flashes[t] = argmax_flash_int(cum);  // cum now holds all up_to iterations
        stops[t] = up_to;
        fallback = true;
      }
    }
    out.push_back(finalize_trial(d, k, std::move(flashes), std::move(stops), fallback));
  }
  return out;
}

double bitrate(int n_symbols, double p) {
  if (n_symbols < 2) throw ConfigError("bitrate needs at least two symbols");
  if (p < 0.0 || p > 1.0) throw ConfigError("bitrate accuracy must lie in [0, 1]");
  double b = std::log2(static_cast<double>(n_symbols));
  if (p > 0.0) b += p * std::log2(p);
  if (p < 1.0) b += (1.0 - p) * std::log2((1.0 - p) / (n_symbols - 1));
  return b;
}

ItrResult itr(double bitrate_bits, double soa_seconds, int stimuli_per_iteration,
              double mean_iterations) {
  ItrResult res;
  res.trial_duration_min =
      soa_seconds * stimuli_per_iteration * mean_iterations / 60.0;
  if (!(res.trial_duration_min > 0.0))
    throw NumericError("trial duration must be positive to rate transfer");
  res.itr_bits_per_min = bitrate_bits / res.trial_duration_min;
  return res;
}

EvalReport make_report(DecisionMethod method, StoppingMode mode, const Dataset& d,
                       std::vector<TrialPrediction> predictions,
                       const std::vector<int>* symbol_map) {
  if (predictions.size() != static_cast<std::size_t>(d.n_trials))
    throw DataError("make_report: one prediction per trial required");
  EvalReport rep;
  rep.method = method;
  rep.mode = mode;
  int correct = 0;
  double iter_sum = 0.0;
  for (TrialPrediction& pred : predictions) {
    if (symbol_map) {
      if (pred.predicted_symbol < 0 ||
          pred.predicted_symbol >= static_cast<int>(symbol_map->size()))
        throw ConfigError("symbol map does not cover predicted symbol");
      pred.predicted_symbol = (*symbol_map)[pred.predicted_symbol];
    }
    correct += pred.correct ? 1 : 0;
    iter_sum += pred.stop_iteration;
  }
  rep.accuracy = static_cast<double>(correct) / d.n_trials;
  rep.mean_iterations = iter_sum / d.n_trials;
  rep.bitrate_bits = bitrate(d.meta.n_symbols, rep.accuracy);
  const ItrResult r =
      itr(rep.bitrate_bits, d.meta.soa_seconds, d.meta.flashes_per_iteration,
          rep.mean_iterations);
  rep.trial_duration_min = r.trial_duration_min;
  rep.itr_bits_per_min = r.itr_bits_per_min;
  rep.per_trial = std::move(predictions);
  return rep;
}

ClassSplitSummary class_split(const std::vector<std::pair<std::string, EvalReport>>& first,
                              const std::vector<std::pair<std::string, EvalReport>>& second) {
  if (first.size() != second.size())
    throw DataError("class_split: subject lists differ in length");
  ClassSplitSummary out;
  double c1_first = 0.0, c1_second = 0.0, c2_first = 0.0, c2_second = 0.0;
  for (std::size_t i = 0; i < first.size(); ++i) {
    if (first[i].first != second[i].first)
      throw DataError("class_split: subject lists disagree at position " +
                      std::to_string(i));
    const double a = first[i].second.accuracy;
    const double b = second[i].second.accuracy;
    if (a > b) {
      out.class1_subjects.push_back(first[i].first);
      c1_first += a;
      c1_second += b;
    } else if (b > a) {
      out.class2_subjects.push_back(first[i].first);
      c2_first += a;
      c2_second += b;
    }
  }
  if (!out.class1_subjects.empty()) {
    out.class1_mean_first = c1_first / out.class1_subjects.size();
    out.class1_mean_second = c1_second / out.class1_subjects.size();
  }
  if (!out.class2_subjects.empty()) {
    out.class2_mean_first = c2_first / out.class2_subjects.size();
    out.class2_mean_second = c2_second / out.class2_subjects.size();
  }
  return out;
}

}  // namespace spellerscore
