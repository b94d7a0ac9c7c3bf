#include "spellerscore/report_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>

#include "json.hpp"

namespace spellerscore {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_text(const std::string& text, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw DataError("write failed for " + path.string());
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

json profile_to_json(const ScoreProfile& p) {
  return json{{"scores", p.s}, {"delta", p.delta}, {"lower", p.lower}, {"upper", p.upper}};
}

ScoreProfile profile_from_json(const json& j) {
  ScoreProfile p;
  try {
    const auto& scores = j.at("scores");
    if (scores.size() != 5) throw ParseError("profile needs five scores");
    for (std::size_t i = 0; i < 5; ++i) p.s[i] = scores.at(i).get<int>();
    p.delta = j.at("delta").get<int>();
    p.lower = j.at("lower").get<int>();
    p.upper = j.at("upper").get<int>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("score profile: ") + e.what());
  }
  p.validate();
  return p;
}

const char* mode_name(OptimizeMode m) {
  return m == OptimizeMode::nostop ? "nostop" : "earlystop";
}

OptimizeMode mode_from_name(const std::string& name) {
  if (name == "nostop") return OptimizeMode::nostop;
  if (name == "earlystop") return OptimizeMode::earlystop;
  throw ParseError("unknown optimize mode: " + name);
}

}  // namespace

std::string opt_result_json(const OptResult& res) {
  json levels = json::array();
  for (const LevelStats& ls : res.per_level) {
    json entry{{"err_count", ls.err_count}, {"err_rate", ls.err_rate}};
    if (res.mode == OptimizeMode::nostop) {
      entry["x_sum"] = ls.x_sum;
    } else {
      entry["stop_sum"] = ls.stop_sum;
      entry["mean_stop_iteration"] = ls.mean_stop_iteration;
    }
    levels.push_back(std::move(entry));
  }
  json j{{"profile", profile_to_json(res.profile)},
         {"mode", mode_name(res.mode)},
         {"objective", res.objective},
         {"per_level", std::move(levels)},
         {"nodes_explored", res.nodes_explored},
         {"wall_seconds", res.wall_seconds}};
  return j.dump(2) + "\n";
}

void save_opt_result(const OptResult& res, const std::filesystem::path& path) {
  write_text(opt_result_json(res), path);
}

OptResult load_opt_result(const std::filesystem::path& path) {
  const json j = read_json(path);
  OptResult res;
  try {
    res.profile = profile_from_json(j.at("profile"));
    res.mode = mode_from_name(j.at("mode").get<std::string>());
    res.objective = j.at("objective").get<double>();
    res.nodes_explored = j.at("nodes_explored").get<std::uint64_t>();
    res.wall_seconds = j.value("wall_seconds", 0.0);
    for (const json& entry : j.at("per_level")) {
      LevelStats ls;
      ls.err_count = entry.at("err_count").get<int>();
      ls.err_rate = entry.at("err_rate").get<double>();
      ls.x_sum = entry.value("x_sum", 0LL);
      ls.stop_sum = entry.value("stop_sum", 0LL);
      ls.mean_stop_iteration = entry.value("mean_stop_iteration", 0.0);
      res.per_level.push_back(ls);
    }
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return res;
}

std::string scoring_model_json(const Quartiles& q) {
  json j{{"grouping",
          {{"mode", q.grouping.mode == GroupingMode::pooled ? "pooled" : "per_level"},
           {"split_flash", q.grouping.split_flash}}},
         {"quartiles", q.q}};
  return j.dump(2) + "\n";
}

void save_scoring_model(const Quartiles& q, const std::filesystem::path& path) {
  write_text(scoring_model_json(q), path);
}

Quartiles load_scoring_model(const std::filesystem::path& path) {
  const json j = read_json(path);
  Quartiles q;
  try {
    const std::string mode = j.at("grouping").at("mode").get<std::string>();
    if (mode == "pooled")
      q.grouping.mode = GroupingMode::pooled;
    else if (mode == "per_level")
      q.grouping.mode = GroupingMode::per_level;
    else
      throw ParseError("unknown grouping mode: " + mode);
    q.grouping.split_flash = j.at("grouping").at("split_flash").get<int>();
    for (const json& entry : j.at("quartiles")) {
      if (entry.size() != 3) throw ParseError("quartile entries need three values");
      q.q.push_back({entry.at(0).get<double>(), entry.at(1).get<double>(),
                     entry.at(2).get<double>()});
    }
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return q;
}

std::string eval_report_json(const EvalReport& rep) {
  json trials = json::array();
  for (const TrialPrediction& pred : rep.per_trial) {
    trials.push_back(json{{"trial", pred.trial},
                          {"flash_per_level", pred.flash_per_level},
                          {"stop_per_level", pred.stop_per_level},
                          {"stop_iteration", pred.stop_iteration},
                          {"predicted_symbol", pred.predicted_symbol},
                          {"correct", pred.correct},
                          {"no_stop_fallback", pred.no_stop_fallback}});
  }
  json j{{"method", decision_method_name(rep.method)},
         {"mode", stopping_mode_name(rep.mode)},
         {"accuracy", rep.accuracy},
         {"mean_iterations", rep.mean_iterations},
         {"bitrate_bits", rep.bitrate_bits},
         {"trial_duration_min", rep.trial_duration_min},
         {"itr_bits_per_min", rep.itr_bits_per_min},
         {"per_trial", std::move(trials)}};
  return j.dump(2) + "\n";
}

void save_eval_report(const EvalReport& rep, const std::filesystem::path& path) {
  write_text(eval_report_json(rep), path);
}

std::string class_split_json(const ClassSplitSummary& cs) {
  json j{{"class1",
          {{"subjects", cs.class1_subjects},
           {"mean_accuracy_first", cs.class1_mean_first},
           {"mean_accuracy_second", cs.class1_mean_second}}},
         {"class2",
          {{"subjects", cs.class2_subjects},
           {"mean_accuracy_first", cs.class2_mean_first},
           {"mean_accuracy_second", cs.class2_mean_second}}}};
  return j.dump(2) + "\n";
}

void write_aggregate_csv(const std::vector<AggregateRow>& rows, std::ostream& out) {
  out << "dataset,subject,method,mode,accuracy,mean_iters,bitrate,duration_min,itr\n";
  for (const AggregateRow& row : rows)
    out << row.dataset << ',' << row.subject << ',' << row.method << ',' << row.mode << ','
        << fmt_double(row.accuracy) << ',' << fmt_double(row.mean_iters) << ','
        << fmt_double(row.bitrate) << ',' << fmt_double(row.duration_min) << ','
        << fmt_double(row.itr) << '\n';
}

void write_aggregate_csv(const std::vector<AggregateRow>& rows,
                         const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot open " + path.string() + " for writing");
  write_aggregate_csv(rows, out);
  if (!out) throw DataError("write failed for " + path.string());
}

}  // namespace spellerscore
