#include <sys/wait.h>

#include <array>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "spellerscore/pipeline.hpp"

using namespace spellerscore;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("spellerscore_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  REQUIRE(out.good());
  out << text;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* tiny_synth_json = R"({
  "dataset": "toy",
  "synth": {"trials": 4, "iterations": 3, "flashes": 3, "levels": 1,
            "dim": 4, "channels": 2, "shift": 3.0, "noise": 1.0,
            "soa": 0.25, "seed": 5},
  "svm": {"loss": "l2", "c1": 1.0, "c2": 1.0, "seed": 7},
  "optimize": {"lower": -3, "upper": 3},
  "methods": ["dv_med", "sbf", "osbf"]
})";

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string("\"") + SPELLERSCORE_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("a minimal config fills in the documented defaults") {
  const PipelineConfig cfg = parse_pipeline_config(
      R"({"synth": {"trials": 2, "iterations": 2, "flashes": 3, "levels": 1,
                    "dim": 2, "channels": 1, "shift": 1.0, "noise": 1.0,
                    "soa": 0.3, "seed": 4}})",
      "/tmp");
  CHECK(cfg.dataset_name == "dataset");
  REQUIRE(cfg.synth.has_value());
  CHECK(cfg.synth->n_trials == 2);
  CHECK(cfg.synth->soa_seconds == 0.3);
  CHECK(cfg.subjects.empty());
  CHECK(cfg.decimation == 1);
  CHECK(cfg.channels.empty());
  CHECK(cfg.variants == std::vector<std::string>{"svm", "msvm"});
  CHECK(cfg.grouping == "auto");
  CHECK(cfg.split_flash == 0);
  CHECK_FALSE(cfg.sbf_override.has_value());
  CHECK(cfg.bounds.lower == -10);
  CHECK(cfg.bounds.upper == 10);
  CHECK(cfg.bounds.delta_max == 0);
  CHECK(cfg.modes.size() == 2);
  CHECK(cfg.methods.size() == 4);
  CHECK(cfg.out_dir == fs::path("out"));
  CHECK_FALSE(cfg.dump_zones);
  CHECK(cfg.jobs == 1);
}

TEST_CASE("configs need exactly one data source") {
  CHECK_THROWS_AS(parse_pipeline_config("{}", "/tmp"), ConfigError);
  CHECK_THROWS_AS(parse_pipeline_config(
                      R"({"subjects": [{"name": "a", "train": "a1.dat", "test": "a2.dat"}],
                          "synth": {"trials": 2, "iterations": 2, "flashes": 3, "levels": 1,
                                    "dim": 2, "channels": 1, "shift": 1.0, "noise": 1.0,
                                    "soa": 0.3, "seed": 4}})",
                      "/tmp"),
                  ConfigError);
}

TEST_CASE("unknown keys and malformed text are rejected") {
  CHECK_THROWS_WITH_AS(
      parse_pipeline_config(R"({"vanity": 1})", "/tmp"),
      "config: unknown key 'vanity'", ConfigError);
  CHECK_THROWS_AS(parse_pipeline_config(
                      R"({"synth": {"trials": 2, "cows": 3}})", "/tmp"),
                  ConfigError);
  CHECK_THROWS_AS(parse_pipeline_config(
                      R"({"svm": {"c3": 1.0},
                          "synth": {"trials": 2, "iterations": 2, "flashes": 3, "levels": 1,
                                    "dim": 2, "channels": 1, "shift": 1.0, "noise": 1.0,
                                    "soa": 0.3, "seed": 4}})",
                      "/tmp"),
                  ConfigError);
  CHECK_THROWS_AS(parse_pipeline_config("not json at all", "/tmp"), ParseError);
}

TEST_CASE("variant and scoring blocks are validated") {
  const std::string synth_part =
      R"("synth": {"trials": 2, "iterations": 2, "flashes": 3, "levels": 1,
                   "dim": 2, "channels": 1, "shift": 1.0, "noise": 1.0,
                   "soa": 0.3, "seed": 4})";
  CHECK_THROWS_AS(
      parse_pipeline_config("{" + synth_part + R"(, "variants": ["ridge"]})", "/tmp"),
      ConfigError);
  CHECK_THROWS_AS(parse_pipeline_config("{" + synth_part +
                                            R"(, "variants": ["msvm"],
                                                "svm": {"c2": 0.0}})",
                                        "/tmp"),
                  ConfigError);
  CHECK_THROWS_AS(parse_pipeline_config("{" + synth_part +
                                            R"(, "scoring": {"sbf_scores": [2, 1, 0, -1, -2],
                                                             "sbf_delta": 4}})",
                                        "/tmp"),
                  ConfigError);
  const PipelineConfig cfg = parse_pipeline_config(
      "{" + synth_part + R"(, "scoring": {"sbf_scores": [3, 1, 0, -1, -3],
                                          "sbf_delta": 7}})",
      "/tmp");
  REQUIRE(cfg.sbf_override.has_value());
  CHECK(cfg.sbf_override->s == std::array<int, 5>{3, 1, 0, -1, -3});
  CHECK(cfg.sbf_override->delta == 7);
  CHECK(cfg.sbf_override->lower == -3);
  CHECK(cfg.sbf_override->upper == 3);
}

TEST_CASE("relative paths resolve against the config directory") {
  const PipelineConfig cfg = parse_pipeline_config(
      R"({"subjects": [{"name": "s1", "train": "data/tr.dat", "test": "/abs/te.dat"}],
          "out": "results"})",
      "/base");
  CHECK(cfg.subjects[0].train == fs::path("/base/data/tr.dat"));
  CHECK(cfg.subjects[0].test == fs::path("/abs/te.dat"));
  CHECK(cfg.out_dir == fs::path("/base/results"));
}

TEST_CASE("command line overrides reach every consumer of the seed") {
  PipelineConfig cfg = parse_pipeline_config(tiny_synth_json, "/tmp");
  CliOverrides ov;
  ov.seed = 77;
  ov.mode = "earlystop";
  ov.methods = {"sbf"};
  ov.jobs = 3;
  ov.out_dir = fs::path("/tmp/elsewhere");
  apply_overrides(cfg, ov);
  CHECK(cfg.svm.shuffle_seed == 77);
  CHECK(cfg.synth->seed == 77);
  CHECK(cfg.modes == std::vector<StoppingMode>{StoppingMode::earlystop});
  CHECK(cfg.methods == std::vector<DecisionMethod>{DecisionMethod::sbf});
  CHECK(cfg.jobs == 3);
  CHECK(cfg.out_dir == fs::path("/tmp/elsewhere"));

  CliOverrides bad;
  bad.methods = {"votes"};
  CHECK_THROWS_AS(apply_overrides(cfg, bad), ConfigError);
}

TEST_CASE("the config fingerprint is stable and input sensitive") {
  const PipelineConfig a = parse_pipeline_config(tiny_synth_json, "/tmp");
  const PipelineConfig b = parse_pipeline_config(tiny_synth_json, "/tmp");
  CHECK(canonical_config_json(a) == canonical_config_json(b));
  CHECK(config_hash(a) == config_hash(b));
  PipelineConfig c = a;
  c.jobs = 2;
  CHECK(config_hash(a) != config_hash(c));
  PipelineConfig d = a;
  d.svm.c1 = 2.0;
  CHECK(config_hash(a) != config_hash(d));
}

TEST_CASE("optimization results survive the disk round trip") {
  const fs::path dir = fresh_dir("optio");
  OptResult res;
  res.profile.s = {3, 1, 0, -1, -3};
  res.profile.delta = 7;
  res.profile.lower = -3;
  res.profile.upper = 3;
  res.mode = OptimizeMode::earlystop;
  res.objective = 1.25;
  LevelStats ls;
  ls.err_count = 1;
  ls.err_rate = 0.25;
  ls.stop_sum = 7;
  ls.mean_stop_iteration = 2.75;
  res.per_level.push_back(ls);
  res.nodes_explored = 123;
  res.wall_seconds = 0.5;
  save_opt_result(res, dir / "opt.json");
  const OptResult back = load_opt_result(dir / "opt.json");
  CHECK(back.profile.s == res.profile.s);
  CHECK(back.profile.delta == res.profile.delta);
  CHECK(back.mode == res.mode);
  CHECK(back.objective == res.objective);
  CHECK(back.nodes_explored == res.nodes_explored);
  CHECK(back.wall_seconds == res.wall_seconds);
  REQUIRE(back.per_level.size() == 1);
  CHECK(back.per_level[0].err_count == 1);
  CHECK(back.per_level[0].err_rate == 0.25);
  CHECK(back.per_level[0].stop_sum == 7);
  CHECK(back.per_level[0].mean_stop_iteration == 2.75);

  res.mode = OptimizeMode::nostop;
  res.per_level[0].stop_sum = 0;
  res.per_level[0].mean_stop_iteration = 0.0;
  res.per_level[0].x_sum = 5;
  save_opt_result(res, dir / "opt2.json");
  const OptResult back2 = load_opt_result(dir / "opt2.json");
  CHECK(back2.mode == OptimizeMode::nostop);
  CHECK(back2.per_level[0].x_sum == 5);
  CHECK(back2.per_level[0].stop_sum == 0);
}

TEST_CASE("scoring models survive the disk round trip") {
  const fs::path dir = fresh_dir("scoreio");
  Quartiles q;
  q.grouping.mode = GroupingMode::per_level;
  q.grouping.split_flash = 2;
  q.q.push_back({0.1, 0.2, 0.3});
  q.q.push_back({-1.0, 0.0, 1.0});
  save_scoring_model(q, dir / "scoring.json");
  const Quartiles back = load_scoring_model(dir / "scoring.json");
  CHECK(back.grouping == q.grouping);
  CHECK(back.q == q.q);
  CHECK_THROWS_AS(load_scoring_model(dir / "missing.json"), DataError);
}

TEST_CASE("aggregate rows serialize to the documented csv shape") {
  std::vector<AggregateRow> rows(1);
  rows[0] = {"d", "s", "sbf:l2svm", "nostop", 0.5, 2.5, 0.75, 0.03125, 24.5};
  std::ostringstream out;
  write_aggregate_csv(rows, out);
  CHECK(out.str() ==
        "dataset,subject,method,mode,accuracy,mean_iters,bitrate,duration_min,itr\n"
        "d,s,sbf:l2svm,nostop,0.5,2.5,0.75,0.03125,24.5\n");
}

TEST_CASE("a full run is reproducible byte for byte") {
  const fs::path dir = fresh_dir("runtwice");
  PipelineConfig cfg = parse_pipeline_config(tiny_synth_json, dir.string());
  cfg.out_dir = dir / "out";

  const PipelineSummary first = run_pipeline(cfg);
  REQUIRE(first.rows.size() == 10);  // dv_med skips the early stopping mode
  for (const AggregateRow& row : first.rows) {
    CHECK(row.dataset == "toy");
    CHECK(row.subject == "synth");
    CHECK(row.method.find(':') != std::string::npos);
  }
  const std::string aggregate = read_file(cfg.out_dir / "aggregate.csv");
  const fs::path report = cfg.out_dir / "synth" / "report_osbf_l2msvm_earlystop.json";
  const std::string report_text = read_file(report);
  CHECK(fs::exists(cfg.out_dir / "manifest.json"));
  CHECK(fs::exists(cfg.out_dir / "synth" / "hyperplane_l2svm.txt"));
  CHECK(fs::exists(cfg.out_dir / "synth" / "scoring_l2msvm.json"));
  CHECK(fs::exists(cfg.out_dir / "synth" / "profile_l2svm_nostop.json"));

  const PipelineSummary second = run_pipeline(cfg);
  REQUIRE(second.rows.size() == first.rows.size());
  for (std::size_t i = 0; i < first.rows.size(); ++i) {
    CHECK(first.rows[i].method == second.rows[i].method);
    CHECK(first.rows[i].accuracy == second.rows[i].accuracy);
    CHECK(first.rows[i].itr == second.rows[i].itr);
  }
  CHECK(read_file(cfg.out_dir / "aggregate.csv") == aggregate);
  CHECK(read_file(report) == report_text);

  const std::string header = aggregate.substr(0, aggregate.find('\n'));
  CHECK(header == "dataset,subject,method,mode,accuracy,mean_iters,bitrate,duration_min,itr");
}

TEST_CASE("a missing recording surfaces its path") {
  const fs::path dir = fresh_dir("missingdata");
  PipelineConfig cfg = parse_pipeline_config(
      R"({"subjects": [{"name": "s1", "train": "none_train.dat", "test": "none_test.dat"}]})",
      dir.string());
  cfg.out_dir = dir / "out";
  try {
    stage_train(cfg);
    FAIL("expected DataError");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("none_train.dat") != std::string::npos);
  }
}

TEST_CASE("the command line tool reports errors through exit codes") {
  const fs::path dir = fresh_dir("clirun");
  write_file(dir / "bad.json", R"({"vanity": 1})");
  write_file(dir / "missing.json",
             R"({"subjects": [{"name": "s1", "train": "no.dat", "test": "no2.dat"}]})");
  write_file(dir / "tiny.json",
             R"({"synth": {"trials": 3, "iterations": 2, "flashes": 3, "levels": 1,
                           "dim": 2, "channels": 1, "shift": 3.0, "noise": 0.8,
                           "soa": 0.25, "seed": 9},
                 "variants": ["svm"],
                 "modes": ["nostop"],
                 "methods": ["sbf", "osbf"],
                 "optimize": {"lower": -2, "upper": 2},
                 "out": "cli_out"})");

  CHECK(run_cli("run") == 1);  // --config is required
  CHECK(run_cli("run --config \"" + (dir / "bad.json").string() + "\"") == 1);
  CHECK(run_cli("train --config \"" + (dir / "missing.json").string() + "\"") == 2);
  CHECK(run_cli("run --config \"" + (dir / "tiny.json").string() + "\" --jobs 2") == 0);
  CHECK(fs::exists(dir / "cli_out" / "aggregate.csv"));
  CHECK(run_cli("--version") == 0);
}
