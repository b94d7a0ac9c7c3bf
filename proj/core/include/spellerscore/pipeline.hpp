#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "spellerscore/eval.hpp"
#include "spellerscore/report_io.hpp"
#include "spellerscore/scoreopt.hpp"
#include "spellerscore/svm.hpp"
#include "spellerscore/synth.hpp"

namespace spellerscore {

struct SubjectSpec {
  std::string name;
  std::filesystem::path train;
  std::filesystem::path test;
};

// Parsed run description. Subjects either point at recordings on disk or are
// generated from the synth block into the output directory.
struct PipelineConfig {
  std::string dataset_name = "dataset";
  std::vector<SubjectSpec> subjects;
  std::optional<SynthConfig> synth;

  int decimation = 1;
  std::vector<int> channels;  // empty keeps every channel

  SvmConfig svm;
  std::vector<std::string> variants{"svm", "msvm"};  // msvm keeps c2, svm zeroes it

  std::string grouping = "auto";  // auto | pooled | per_level
  int split_flash = 0;
  std::optional<ScoreProfile> sbf_override;

  LatticeBounds bounds;
  std::vector<StoppingMode> modes{StoppingMode::nostop, StoppingMode::earlystop};
  std::vector<DecisionMethod> methods{DecisionMethod::dv_med, DecisionMethod::erp_avg,
                                      DecisionMethod::sbf, DecisionMethod::osbf};

  std::filesystem::path out_dir = "out";
  bool dump_zones = false;
  int jobs = 1;

  void validate() const;
};

// Relative paths in the file resolve against the config file's directory.
PipelineConfig load_pipeline_config(const std::filesystem::path& path);
PipelineConfig parse_pipeline_config(const std::string& text,
                                     const std::filesystem::path& base_dir);

struct CliOverrides {
  std::optional<std::filesystem::path> out_dir;
  std::optional<std::uint64_t> seed;  // applies to both synth and shuffling
  std::optional<std::string> mode;
  std::vector<std::string> methods;
  std::optional<int> jobs;
};

void apply_overrides(PipelineConfig& cfg, const CliOverrides& ov);

// Stable fingerprint of the fully resolved configuration.
std::string canonical_config_json(const PipelineConfig& cfg);
std::uint64_t config_hash(const PipelineConfig& cfg);

// Stages communicate through files in out_dir; each one re-reads what the
// previous stage wrote. run_pipeline chains all of them.
void stage_synth(const PipelineConfig& cfg);
void stage_train(const PipelineConfig& cfg);
void stage_optimize(const PipelineConfig& cfg);

struct PipelineSummary {
  std::vector<AggregateRow> rows;
};

PipelineSummary stage_evaluate(const PipelineConfig& cfg);
PipelineSummary run_pipeline(const PipelineConfig& cfg);

}  // namespace spellerscore
