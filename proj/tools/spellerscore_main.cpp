#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "acceptance/criteria.hpp"
#include "spellerscore/errors.hpp"
#include "spellerscore/pipeline.hpp"
#include "spellerscore/version.hpp"

namespace {

using namespace spellerscore;

// 0 success, 1 configuration, 2 data, 3 numeric failure.
constexpr int exit_config = 1;
constexpr int exit_data = 2;
constexpr int exit_numeric = 3;

void print_error(const char* type, const std::string& message) {
  std::cerr << "{\"error\":{\"type\":\"" << type << "\",\"message\":\"";
  for (char c : message) {
    if (c == '"' || c == '\\') std::cerr << '\\';
    if (c == '\n') {
      std::cerr << "\\n";
      continue;
    }
    std::cerr << c;
  }
  std::cerr << "\"}}\n";
}

struct CommonArgs {
  std::string config;
  CliOverrides overrides;
  std::string out;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string mode;
  std::vector<std::string> methods;
  int jobs = 0;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool config_required) {
  auto* copt = cmd->add_option("--config", args.config, "pipeline config file (JSON)");
  if (config_required) copt->required();
  cmd->add_option("--out", args.out, "output directory override");
  cmd->add_option("--seed", args.seed, "seed override for synthesis and shuffling")
      ->each([&](const std::string&) { args.seed_set = true; });
  cmd->add_option("--mode", args.mode, "restrict to one stopping mode")
      ->check(CLI::IsMember({"nostop", "earlystop"}));
  cmd->add_option("--method", args.methods, "restrict decision methods (repeatable)")
      ->check(CLI::IsMember({"dv_med", "erp_avg", "sbf", "osbf"}));
  cmd->add_option("--jobs", args.jobs, "worker threads")->check(CLI::PositiveNumber);
}

PipelineConfig make_config(CommonArgs& args) {
  PipelineConfig cfg = load_pipeline_config(args.config);
  if (!args.out.empty()) args.overrides.out_dir = args.out;
  if (args.seed_set) args.overrides.seed = args.seed;
  if (!args.mode.empty()) args.overrides.mode = args.mode;
  args.overrides.methods = args.methods;
  if (args.jobs > 0) args.overrides.jobs = args.jobs;
  apply_overrides(cfg, args.overrides);
  return cfg;
}

void print_summary(const PipelineSummary& summary) {
  for (const AggregateRow& row : summary.rows)
    std::cout << row.subject << ' ' << row.method << ' ' << row.mode << ": accuracy "
              << row.accuracy << ", mean iterations " << row.mean_iters << ", transfer "
              << row.itr << " bits/min\n";
}

int dispatch(int argc, char** argv) {
  CLI::App app{"ERP speller classification and score optimization"};
  app.set_version_flag("--version", version_string);
  app.require_subcommand(1);

  CommonArgs synth_args, train_args, opt_args, eval_args, run_args;
  CLI::App* synth = app.add_subcommand("synth", "generate a synthetic recording pair");
  add_common(synth, synth_args, true);
  CLI::App* train = app.add_subcommand("train", "train classifiers and freeze quartiles");
  add_common(train, train_args, true);
  CLI::App* optimize =
      app.add_subcommand("optimize-scores", "search score profiles on training data");
  add_common(optimize, opt_args, true);
  CLI::App* evaluate = app.add_subcommand("evaluate", "evaluate methods on test data");
  add_common(evaluate, eval_args, true);
  CLI::App* run = app.add_subcommand("run", "synth/train/optimize/evaluate in sequence");
  add_common(run, run_args, true);
  CLI::App* selftest = app.add_subcommand("selftest", "run the embedded acceptance suite");
  int selftest_jobs = 1;
  selftest->add_option("--jobs", selftest_jobs, "worker threads")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_config;
  }

  if (synth->parsed()) {
    stage_synth(make_config(synth_args));
  } else if (train->parsed()) {
    stage_train(make_config(train_args));
  } else if (optimize->parsed()) {
    stage_optimize(make_config(opt_args));
  } else if (evaluate->parsed()) {
    print_summary(stage_evaluate(make_config(eval_args)));
  } else if (run->parsed()) {
    print_summary(run_pipeline(make_config(run_args)));
  } else if (selftest->parsed()) {
    const auto results = acceptance::run_all(static_cast<unsigned>(selftest_jobs));
    if (!acceptance::report(results, std::cout)) return exit_numeric;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const ConfigError& e) {
    print_error("config", e.what());
    return exit_config;
  } catch (const ParseError& e) {
    print_error("parse", e.what());
    return exit_data;
  } catch (const DataError& e) {
    print_error("data", e.what());
    return exit_data;
  } catch (const NumericError& e) {
    print_error("numeric", e.what());
    return exit_numeric;
  } catch (const std::exception& e) {
    print_error("internal", e.what());
    return exit_numeric;
  }
}
