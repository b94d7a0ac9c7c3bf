#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "spellerscore/eval.hpp"
#include "spellerscore/scoreopt.hpp"

namespace spellerscore {

std::string opt_result_json(const OptResult& res);
void save_opt_result(const OptResult& res, const std::filesystem::path& path);
OptResult load_opt_result(const std::filesystem::path& path);

// Frozen training-side scoring model: grouping plus per-group quartiles.
std::string scoring_model_json(const Quartiles& q);
void save_scoring_model(const Quartiles& q, const std::filesystem::path& path);
Quartiles load_scoring_model(const std::filesystem::path& path);

std::string eval_report_json(const EvalReport& rep);
void save_eval_report(const EvalReport& rep, const std::filesystem::path& path);

std::string class_split_json(const ClassSplitSummary& cs);

struct AggregateRow {
  std::string dataset;
  std::string subject;
  std::string method;  // decision method, suffixed with the classifier variant
  std::string mode;
  double accuracy = 0.0;
  double mean_iters = 0.0;
  double bitrate = 0.0;
  double duration_min = 0.0;
  double itr = 0.0;
};

void write_aggregate_csv(const std::vector<AggregateRow>& rows, std::ostream& out);
void write_aggregate_csv(const std::vector<AggregateRow>& rows,
                         const std::filesystem::path& path);

}  // namespace spellerscore
