#pragma once

#include <string>
#include <vector>

#include "spellerscore/dataset.hpp"
#include "spellerscore/scoreopt.hpp"
#include "spellerscore/scoring.hpp"

namespace spellerscore {

enum class DecisionMethod { dv_med, erp_avg, sbf, osbf };
enum class StoppingMode { nostop, earlystop };

const char* decision_method_name(DecisionMethod m);
DecisionMethod decision_method_from_name(const std::string& name);
const char* stopping_mode_name(StoppingMode m);
StoppingMode stopping_mode_from_name(const std::string& name);

struct TrialPrediction {
  int trial = 0;
  std::vector<int> flash_per_level;   // predicted flash per level
  std::vector<int> stop_per_level;    // iterations consumed per level
  int stop_iteration = 0;             // slowest level decides the trial
  int predicted_symbol = 0;           // row-major over per-level flashes
  bool correct = false;               // every level must match the truth
  bool no_stop_fallback = false;      // some level never reached the margin
};

// Flash with the highest mean decision value over all iterations.
std::vector<TrialPrediction> predict_dv_med(const DvTensor& dv, const Dataset& d);

// Classifies the per-flash average feature vector; for a linear classifier
// this picks the same flash as predict_dv_med.
std::vector<TrialPrediction> predict_erp_avg(const Hyperplane& h, const Dataset& d);

// Cumulative zone scores. Early stopping halts a level once the leading
// flash's score beats the runner-up by the profile's delta; without a stop
// the level falls back to the full-length argmax. Fixed-length mode always
// reads the argmax at up_to iterations. up_to of 0 means every iteration.
std::vector<TrialPrediction> predict_scorebased(const ZoneTensor& z, const Dataset& d,
                                                const ScoreProfile& p, StoppingMode mode,
                                                int up_to = 0);

// Bits conveyed per selection from the symbol count and accuracy p.
double bitrate(int n_symbols, double p);

struct ItrResult {
  double trial_duration_min = 0.0;
  double itr_bits_per_min = 0.0;
};

// Duration charges soa * stimuli_per_iteration seconds per iteration.
ItrResult itr(double bitrate_bits, double soa_seconds, int stimuli_per_iteration,
              double mean_iterations);

struct EvalReport {
  DecisionMethod method = DecisionMethod::dv_med;
  StoppingMode mode = StoppingMode::nostop;
  double accuracy = 0.0;
  double mean_iterations = 0.0;
  double bitrate_bits = 0.0;
  double trial_duration_min = 0.0;
  double itr_bits_per_min = 0.0;
  std::vector<TrialPrediction> per_trial;
};

// Aggregates predictions into accuracy, mean iterations and transfer rates.
// symbol_map, when given, relabels row-major symbol indices.
EvalReport make_report(DecisionMethod method, StoppingMode mode, const Dataset& d,
                       std::vector<TrialPrediction> predictions,
                       const std::vector<int>* symbol_map = nullptr);

// Subjects whose first report beats the second on accuracy go to class 1,
// the converse goes to class 2, and exact ties drop out.
struct ClassSplitSummary {
  std::vector<std::string> class1_subjects;
  std::vector<std::string> class2_subjects;
  double class1_mean_first = 0.0;
  double class1_mean_second = 0.0;
  double class2_mean_first = 0.0;
  double class2_mean_second = 0.0;
};

ClassSplitSummary class_split(const std::vector<std::pair<std::string, EvalReport>>& first,
                              const std::vector<std::pair<std::string, EvalReport>>& second);

}  // namespace spellerscore
