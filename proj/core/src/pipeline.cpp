#include "spellerscore/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "json.hpp"

#include "spellerscore/dataset_io.hpp"
#include "spellerscore/preprocess.hpp"
#include "spellerscore/svm_io.hpp"
#include "spellerscore/version.hpp"

namespace spellerscore {

namespace {

using nlohmann::json;

void expect_keys(const json& j, const char* where, std::initializer_list<const char*> keys) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::find_if(keys.begin(), keys.end(),
                     [&](const char* k) { return key == k; }) == keys.end())
      throw ConfigError(std::string(where) + ": unknown key '" + key + "'");
  }
}

std::filesystem::path resolve(const std::filesystem::path& base,
                              const std::filesystem::path& p) {
  return p.is_absolute() ? p : base / p;
}

}  // namespace

void PipelineConfig::validate() const {
  if (subjects.empty() == !synth.has_value())
    throw ConfigError("config needs either a subjects list or a synth block, not both");
  if (synth) synth->validate();
  std::set<std::string> names;
  for (const SubjectSpec& s : subjects) {
    if (s.name.empty()) throw ConfigError("subject name must not be empty");
    if (!names.insert(s.name).second)
      throw ConfigError("duplicate subject name: " + s.name);
  }
  if (decimation < 1) throw ConfigError("decimation must be at least 1");
  svm.validate();
  if (variants.empty()) throw ConfigError("at least one classifier variant required");
  std::set<std::string> vs;
  for (const std::string& v : variants) {
    if (v != "svm" && v != "msvm")
      throw ConfigError("unknown classifier variant: " + v);
    if (!vs.insert(v).second) throw ConfigError("duplicate classifier variant: " + v);
    if (v == "msvm" && !(svm.c2 > 0.0))
      throw ConfigError("the msvm variant needs c2 > 0");
  }
  if (grouping != "auto" && grouping != "pooled" && grouping != "per_level")
    throw ConfigError("grouping must be auto, pooled or per_level");
  if (split_flash < 0) throw ConfigError("split_flash must be non-negative");
  if (sbf_override) sbf_override->validate();
  bounds.validate();
  if (modes.empty()) throw ConfigError("at least one stopping mode required");
  if (methods.empty()) throw ConfigError("at least one decision method required");
  if (jobs < 1) throw ConfigError("jobs must be at least 1");
}

PipelineConfig parse_pipeline_config(const std::string& text,
                                     const std::filesystem::path& base_dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }

  PipelineConfig cfg;
  try {
    expect_keys(j, "config",
                {"dataset", "subjects", "synth", "preprocess", "svm", "variants", "scoring",
                 "optimize", "modes", "methods", "out", "dump_zones", "jobs"});
    cfg.dataset_name = j.value("dataset", cfg.dataset_name);
    if (j.contains("subjects")) {
      for (const json& s : j.at("subjects")) {
        expect_keys(s, "subjects entry", {"name", "train", "test"});
        SubjectSpec spec;
        spec.name = s.at("name").get<std::string>();
        spec.train = resolve(base_dir, s.at("train").get<std::string>());
        spec.test = resolve(base_dir, s.at("test").get<std::string>());
        cfg.subjects.push_back(std::move(spec));
      }
    }
    if (j.contains("synth")) {
      const json& s = j.at("synth");
      expect_keys(s, "synth",
                  {"trials", "iterations", "flashes", "levels", "dim", "channels", "shift",
                   "noise", "soa", "seed"});
      SynthConfig sc;
      sc.n_trials = s.value("trials", sc.n_trials);
      sc.n_iterations = s.value("iterations", sc.n_iterations);
      sc.n_flashes = s.value("flashes", sc.n_flashes);
      sc.n_levels = s.value("levels", sc.n_levels);
      sc.feature_dim = s.value("dim", sc.feature_dim);
      sc.n_channels = s.value("channels", sc.n_channels);
      sc.target_shift = s.value("shift", sc.target_shift);
      sc.noise_sd = s.value("noise", sc.noise_sd);
      sc.soa_seconds = s.value("soa", sc.soa_seconds);
      sc.seed = s.value("seed", sc.seed);
      cfg.synth = sc;
    }
    if (j.contains("preprocess")) {
      const json& p = j.at("preprocess");
      expect_keys(p, "preprocess", {"decimation", "channels"});
      cfg.decimation = p.value("decimation", cfg.decimation);
      if (p.contains("channels"))
        cfg.channels = p.at("channels").get<std::vector<int>>();
    }
    if (j.contains("svm")) {
      const json& s = j.at("svm");
      expect_keys(s, "svm",
                  {"loss", "c1", "c2", "tol", "max_epochs", "seed", "bias_scale"});
      if (s.contains("loss")) {
        const std::string loss = s.at("loss").get<std::string>();
        if (loss == "l1")
          cfg.svm.loss = SvmLoss::l1;
        else if (loss == "l2")
          cfg.svm.loss = SvmLoss::l2;
        else
          throw ConfigError("svm loss must be l1 or l2");
      }
      cfg.svm.c1 = s.value("c1", cfg.svm.c1);
      cfg.svm.c2 = s.value("c2", cfg.svm.c2);
      cfg.svm.tol = s.value("tol", cfg.svm.tol);
      cfg.svm.max_epochs = s.value("max_epochs", cfg.svm.max_epochs);
      cfg.svm.shuffle_seed = s.value("seed", cfg.svm.shuffle_seed);
      cfg.svm.bias_scale = s.value("bias_scale", cfg.svm.bias_scale);
    }
    if (j.contains("variants")) cfg.variants = j.at("variants").get<std::vector<std::string>>();
    if (j.contains("scoring")) {
      const json& s = j.at("scoring");
      expect_keys(s, "scoring",
                  {"grouping", "split_flash", "sbf_scores", "sbf_delta", "sbf_lower",
                   "sbf_upper"});
      cfg.grouping = s.value("grouping", cfg.grouping);
      cfg.split_flash = s.value("split_flash", cfg.split_flash);
      if (s.contains("sbf_scores") || s.contains("sbf_delta")) {
        ScoreProfile p = sbf_heuristic_profile();
        if (s.contains("sbf_scores")) {
          const auto scores = s.at("sbf_scores").get<std::vector<int>>();
          if (scores.size() != 5) throw ConfigError("sbf_scores needs five values");
          std::copy(scores.begin(), scores.end(), p.s.begin());
        }
        p.delta = s.value("sbf_delta", p.delta);
        p.lower = s.value("sbf_lower", std::min(p.s[4], p.lower));
        p.upper = s.value("sbf_upper", std::max(p.s[0], p.upper));
        p.validate();
        cfg.sbf_override = p;
      }
    }
    if (j.contains("optimize")) {
      const json& o = j.at("optimize");
      expect_keys(o, "optimize", {"lower", "upper", "delta_max"});
      cfg.bounds.lower = o.value("lower", cfg.bounds.lower);
      cfg.bounds.upper = o.value("upper", cfg.bounds.upper);
      cfg.bounds.delta_max = o.value("delta_max", cfg.bounds.delta_max);
    }
    if (j.contains("modes")) {
      cfg.modes.clear();
      for (const json& m : j.at("modes"))
        cfg.modes.push_back(stopping_mode_from_name(m.get<std::string>()));
    }
    if (j.contains("methods")) {
      cfg.methods.clear();
      for (const json& m : j.at("methods"))
        cfg.methods.push_back(decision_method_from_name(m.get<std::string>()));
    }
    if (j.contains("out")) cfg.out_dir = resolve(base_dir, j.at("out").get<std::string>());
    cfg.dump_zones = j.value("dump_zones", cfg.dump_zones);
    cfg.jobs = j.value("jobs", cfg.jobs);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

PipelineConfig load_pipeline_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_pipeline_config(buf.str(), path.parent_path());
}

void apply_overrides(PipelineConfig& cfg, const CliOverrides& ov) {
  if (ov.out_dir) cfg.out_dir = *ov.out_dir;
  if (ov.seed) {
    cfg.svm.shuffle_seed = *ov.seed;
    if (cfg.synth) cfg.synth->seed = *ov.seed;
  }
  if (ov.mode) cfg.modes = {stopping_mode_from_name(*ov.mode)};
  if (!ov.methods.empty()) {
    cfg.methods.clear();
    for (const std::string& m : ov.methods)
      cfg.methods.push_back(decision_method_from_name(m));
  }
  if (ov.jobs) cfg.jobs = *ov.jobs;
  cfg.validate();
}

std::string canonical_config_json(const PipelineConfig& cfg) {
  json subjects = json::array();
  for (const SubjectSpec& s : cfg.subjects)
    subjects.push_back(json{{"name", s.name},
                            {"train", s.train.generic_string()},
                            {"test", s.test.generic_string()}});
  json j{{"dataset", cfg.dataset_name},
         {"subjects", std::move(subjects)},
         {"decimation", cfg.decimation},
         {"channels", cfg.channels},
         {"svm",
          {{"loss", cfg.svm.loss == SvmLoss::l1 ? "l1" : "l2"},
           {"c1", cfg.svm.c1},
           {"c2", cfg.svm.c2},
           {"tol", cfg.svm.tol},
           {"max_epochs", cfg.svm.max_epochs},
           {"seed", cfg.svm.shuffle_seed},
           {"bias_scale", cfg.svm.bias_scale}}},
         {"variants", cfg.variants},
         {"grouping", cfg.grouping},
         {"split_flash", cfg.split_flash},
         {"optimize",
          {{"lower", cfg.bounds.lower},
           {"upper", cfg.bounds.upper},
           {"delta_max", cfg.bounds.delta_max}}},
         {"out", cfg.out_dir.generic_string()},
         {"dump_zones", cfg.dump_zones},
         {"jobs", cfg.jobs}};
  if (cfg.synth)
    j["synth"] = {{"trials", cfg.synth->n_trials},
                  {"iterations", cfg.synth->n_iterations},
                  {"flashes", cfg.synth->n_flashes},
                  {"levels", cfg.synth->n_levels},
                  {"dim", cfg.synth->feature_dim},
                  {"channels", cfg.synth->n_channels},
                  {"shift", cfg.synth->target_shift},
                  {"noise", cfg.synth->noise_sd},
                  {"soa", cfg.synth->soa_seconds},
                  {"seed", cfg.synth->seed}};
  if (cfg.sbf_override)
    j["sbf"] = {{"scores", cfg.sbf_override->s},
                {"delta", cfg.sbf_override->delta},
                {"lower", cfg.sbf_override->lower},
                {"upper", cfg.sbf_override->upper}};
  json modes = json::array(), methods = json::array();
  for (StoppingMode m : cfg.modes) modes.push_back(stopping_mode_name(m));
  for (DecisionMethod m : cfg.methods) methods.push_back(decision_method_name(m));
  j["modes"] = std::move(modes);
  j["methods"] = std::move(methods);
  return j.dump();
}

std::uint64_t config_hash(const PipelineConfig& cfg) {
  const std::string text = canonical_config_json(cfg);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

std::string variant_label(const PipelineConfig& cfg, const std::string& variant) {
  return (cfg.svm.loss == SvmLoss::l1 ? "l1" : "l2") + variant;
}

SvmConfig variant_svm_config(const PipelineConfig& cfg, const std::string& variant) {
  SvmConfig sc = cfg.svm;
  if (variant == "svm") sc.c2 = 0.0;
  return sc;
}

GroupingSpec grouping_spec(const PipelineConfig& cfg, const ProtocolMeta& meta) {
  GroupingSpec g;
  if (cfg.grouping == "auto") {
    g = default_grouping(meta);
  } else {
    g.mode = cfg.grouping == "pooled" ? GroupingMode::pooled : GroupingMode::per_level;
  }
  if (cfg.split_flash > 0) g.split_flash = cfg.split_flash;
  return g;
}

ScoreProfile sbf_profile(const PipelineConfig& cfg) {
  return cfg.sbf_override ? *cfg.sbf_override : sbf_heuristic_profile();
}

std::vector<SubjectSpec> resolved_subjects(const PipelineConfig& cfg) {
  if (!cfg.synth) return cfg.subjects;
  SubjectSpec s;
  s.name = "synth";
  s.train = cfg.out_dir / "synth" / "train.dat";
  s.test = cfg.out_dir / "synth" / "test.dat";
  return {s};
}

std::filesystem::path subject_dir(const PipelineConfig& cfg, const SubjectSpec& s) {
  return cfg.out_dir / s.name;
}

Dataset load_prepared(const PipelineConfig& cfg, const std::filesystem::path& path) {
  if (!std::filesystem::exists(path))
    throw DataError("dataset file missing: " + path.string());
  Dataset d = load_dataset(path);
  if (!cfg.channels.empty()) d = select_channels(d, cfg.channels);
  if (cfg.decimation > 1) d = decimate(d, cfg.decimation);
  return d;
}

void write_manifest(const PipelineConfig& cfg) {
  std::filesystem::create_directories(cfg.out_dir);
  json seeds{{"shuffle", cfg.svm.shuffle_seed}};
  if (cfg.synth) seeds["synth"] = cfg.synth->seed;
  json subjects = json::array();
  for (const SubjectSpec& s : resolved_subjects(cfg)) subjects.push_back(s.name);
  json j{{"version", version_string},
         {"config_hash", hex64(config_hash(cfg))},
         {"dataset", cfg.dataset_name},
         {"seeds", std::move(seeds)},
         {"subjects", std::move(subjects)},
         {"jobs", cfg.jobs}};
  std::ofstream out(cfg.out_dir / "manifest.json");
  if (!out) throw DataError("cannot write manifest in " + cfg.out_dir.string());
  out << j.dump(2) << '\n';
}

// Runs fn(i) for every subject index, spreading subjects over the available
// jobs. The per-subject inner work then runs single-threaded.
template <typename Fn>
void for_each_subject(std::size_t count, int jobs, Fn&& fn) {
  const int workers = std::min<int>(jobs, static_cast<int>(count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

std::filesystem::path hyperplane_path(const PipelineConfig& cfg, const SubjectSpec& s,
                                      const std::string& label) {
  return subject_dir(cfg, s) / ("hyperplane_" + label + ".txt");
}

std::filesystem::path scoring_path(const PipelineConfig& cfg, const SubjectSpec& s,
                                   const std::string& label) {
  return subject_dir(cfg, s) / ("scoring_" + label + ".json");
}

std::filesystem::path profile_path(const PipelineConfig& cfg, const SubjectSpec& s,
                                   const std::string& label, StoppingMode mode) {
  return subject_dir(cfg, s) /
         ("profile_" + label + "_" + stopping_mode_name(mode) + ".json");
}

bool profile_inside_bounds(const ScoreProfile& p, const LatticeBounds& b, int n_iterations) {
  return p.s[0] <= b.upper && p.s[4] >= b.lower &&
         p.delta <= b.resolved_delta_max(n_iterations);
}

}  // namespace

void stage_synth(const PipelineConfig& cfg) {
  cfg.validate();
  if (!cfg.synth) throw ConfigError("synth stage needs a synth block in the config");
  write_manifest(cfg);
  const SubjectSpec s = resolved_subjects(cfg).front();
  std::filesystem::create_directories(s.train.parent_path());
  auto [train, test] = synth_dataset(*cfg.synth);
  save_dataset(train, s.train);
  save_dataset(test, s.test);
}

void stage_train(const PipelineConfig& cfg) {
  cfg.validate();
  write_manifest(cfg);
  const auto subjects = resolved_subjects(cfg);
  for_each_subject(subjects.size(), cfg.jobs, [&](std::size_t i) {
    const SubjectSpec& s = subjects[i];
    std::filesystem::create_directories(subject_dir(cfg, s));
    const Dataset train = load_prepared(cfg, s.train);
    for (const std::string& variant : cfg.variants) {
      const std::string label = variant_label(cfg, variant);
      const TrainMatrix m = build_train_matrix(train);
      const Hyperplane h = spellerscore::train(m, variant_svm_config(cfg, variant));
      save_hyperplane(h, hyperplane_path(cfg, s, label));
      const DvTensor dv = decision_tensor(h, train, grouping_spec(cfg, train.meta));
      save_scoring_model(quartiles(dv), scoring_path(cfg, s, label));
    }
  });
}

void stage_optimize(const PipelineConfig& cfg) {
  cfg.validate();
  write_manifest(cfg);
  const auto subjects = resolved_subjects(cfg);
  const int inner_jobs = subjects.size() > 1 ? 1 : cfg.jobs;
  for_each_subject(subjects.size(), cfg.jobs, [&](std::size_t i) {
    const SubjectSpec& s = subjects[i];
    const Dataset train = load_prepared(cfg, s.train);
    TimingParams tp{train.meta.soa_seconds, train.meta.flashes_per_iteration,
                    train.n_trials, train.meta.max_iterations};
    for (const std::string& variant : cfg.variants) {
      const std::string label = variant_label(cfg, variant);
      const Hyperplane h = load_hyperplane(hyperplane_path(cfg, s, label));
      const Quartiles q = load_scoring_model(scoring_path(cfg, s, label));
      const DvTensor dv = decision_tensor(h, train, q.grouping);
      const ZoneTensor zones = assign_zones(dv, q);
      if (cfg.dump_zones) {
        std::ofstream zout(subject_dir(cfg, s) / ("zones_" + label + "_train.csv"));
        write_zone_csv(zones, zout);
      }
      const ScoreProfile sbf = sbf_profile(cfg);
      const bool sbf_fits =
          profile_inside_bounds(sbf, cfg.bounds, train.meta.max_iterations);
      for (StoppingMode mode : cfg.modes) {
        OptResult res;
        double sbf_objective = 0.0;
        if (mode == StoppingMode::nostop) {
          res = optimize_nostop(zones, train.truth, cfg.bounds, inner_jobs);
          if (sbf_fits) sbf_objective = nostop_objective(zones, train.truth, sbf);
        } else {
          res = optimize_earlystop(zones, train.truth, cfg.bounds, tp, inner_jobs);
          if (sbf_fits) sbf_objective = earlystop_objective(zones, train.truth, sbf, tp);
        }
        if (sbf_fits && res.objective < sbf_objective)
          throw NumericError("optimized profile scores below the heuristic profile");
        save_opt_result(res, profile_path(cfg, s, label, mode));
      }
    }
  });
}

PipelineSummary stage_evaluate(const PipelineConfig& cfg) {
  cfg.validate();
  write_manifest(cfg);
  const auto subjects = resolved_subjects(cfg);

  struct SubjectReports {
    std::vector<AggregateRow> rows;
    // (method, label, mode) keyed reports for the class split
    std::vector<std::tuple<std::string, std::string, std::string, EvalReport>> reports;
  };
  std::vector<SubjectReports> collected(subjects.size());

  for_each_subject(subjects.size(), cfg.jobs, [&](std::size_t i) {
    const SubjectSpec& s = subjects[i];
    const Dataset test = load_prepared(cfg, s.test);
    SubjectReports& bucket = collected[i];
    for (const std::string& variant : cfg.variants) {
      const std::string label = variant_label(cfg, variant);
      const Hyperplane h = load_hyperplane(hyperplane_path(cfg, s, label));
      const Quartiles q = load_scoring_model(scoring_path(cfg, s, label));
      const DvTensor dv = decision_tensor(h, test, q.grouping);
      const ZoneTensor zones = assign_zones(dv, q);
      if (cfg.dump_zones) {
        std::ofstream zout(subject_dir(cfg, s) / ("zones_" + label + "_test.csv"));
        write_zone_csv(zones, zout);
      }
      for (StoppingMode mode : cfg.modes) {
        for (DecisionMethod method : cfg.methods) {
          // The plain classifier readouts have no stopping rule to evaluate.
          if (mode == StoppingMode::earlystop &&
              (method == DecisionMethod::dv_med || method == DecisionMethod::erp_avg))
            continue;
          std::vector<TrialPrediction> preds;
          switch (method) {
            case DecisionMethod::dv_med:
              preds = predict_dv_med(dv, test);
              break;
            case DecisionMethod::erp_avg:
              preds = predict_erp_avg(h, test);
              break;
            case DecisionMethod::sbf:
              preds = predict_scorebased(zones, test, sbf_profile(cfg), mode);
              break;
            case DecisionMethod::osbf: {
              const auto ppath = profile_path(cfg, s, label, mode);
              if (!std::filesystem::exists(ppath))
                throw DataError("optimized profile missing (run optimize-scores): " +
                                ppath.string());
              preds = predict_scorebased(zones, test, load_opt_result(ppath).profile, mode);
              break;
            }
          }
          EvalReport rep = make_report(method, mode, test, std::move(preds));
          const std::string method_tag =
              std::string(decision_method_name(method)) + ":" + label;
          save_eval_report(rep, subject_dir(cfg, s) /
                                    ("report_" + std::string(decision_method_name(method)) +
                                     "_" + label + "_" + stopping_mode_name(mode) + ".json"));
          bucket.rows.push_back({cfg.dataset_name, s.name, method_tag,
                                 stopping_mode_name(mode), rep.accuracy,
                                 rep.mean_iterations, rep.bitrate_bits,
                                 rep.trial_duration_min, rep.itr_bits_per_min});
          bucket.reports.emplace_back(decision_method_name(method), label,
                                      stopping_mode_name(mode), std::move(rep));
        }
      }
    }
  });

  PipelineSummary summary;
  for (const SubjectReports& bucket : collected)
    summary.rows.insert(summary.rows.end(), bucket.rows.begin(), bucket.rows.end());
  write_aggregate_csv(summary.rows, cfg.out_dir / "aggregate.csv");

  // Subject split by which classifier variant reads out more accurately.
  const bool both = std::find(cfg.variants.begin(), cfg.variants.end(), "svm") !=
                        cfg.variants.end() &&
                    std::find(cfg.variants.begin(), cfg.variants.end(), "msvm") !=
                        cfg.variants.end();
  if (both && subjects.size() > 1) {
    for (StoppingMode mode : cfg.modes) {
      for (DecisionMethod method : cfg.methods) {
        if (mode == StoppingMode::earlystop &&
            (method == DecisionMethod::dv_med || method == DecisionMethod::erp_avg))
          continue;
        std::vector<std::pair<std::string, EvalReport>> plain, margin;
        for (std::size_t i = 0; i < subjects.size(); ++i)
          for (const auto& [m, label, mo, rep] : collected[i].reports) {
            if (m != decision_method_name(method) || mo != stopping_mode_name(mode))
              continue;
            if (label == variant_label(cfg, "svm"))
              plain.emplace_back(subjects[i].name, rep);
            else if (label == variant_label(cfg, "msvm"))
              margin.emplace_back(subjects[i].name, rep);
          }
        const ClassSplitSummary cs = class_split(plain, margin);
        std::ofstream out(cfg.out_dir /
                          ("class_split_" + std::string(decision_method_name(method)) + "_" +
                           stopping_mode_name(mode) + ".json"));
        out << class_split_json(cs);
      }
    }
  }
  return summary;
}

PipelineSummary run_pipeline(const PipelineConfig& cfg) {
  cfg.validate();
  if (cfg.synth) stage_synth(cfg);
  stage_train(cfg);
  stage_optimize(cfg);
  return stage_evaluate(cfg);
}

}  // namespace spellerscore
