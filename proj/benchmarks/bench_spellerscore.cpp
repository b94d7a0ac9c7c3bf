#include <benchmark/benchmark.h>

#include "spellerscore/eval.hpp"
#include "spellerscore/scoreopt.hpp"
#include "spellerscore/scoring.hpp"
#include "spellerscore/svm.hpp"
#include "spellerscore/synth.hpp"

namespace {

using namespace spellerscore;

SynthConfig bench_synth() {
  SynthConfig sc;
  sc.n_trials = 20;
  sc.n_iterations = 8;
  sc.n_flashes = 6;
  sc.feature_dim = 64;
  sc.n_channels = 8;
  sc.target_shift = 3.0;
  sc.seed = 2024;
  return sc;
}

const Dataset& bench_dataset() {
  static const Dataset d = synth_dataset(bench_synth()).first;
  return d;
}

const TrainMatrix& bench_matrix() {
  static const TrainMatrix m = build_train_matrix(bench_dataset());
  return m;
}

SvmConfig bench_svm_config(SvmLoss loss) {
  SvmConfig cfg;
  cfg.loss = loss;
  cfg.tol = 1e-3;
  cfg.max_epochs = 50;
  return cfg;
}

const Hyperplane& bench_hyperplane() {
  static const Hyperplane h = train(bench_matrix(), bench_svm_config(SvmLoss::l2));
  return h;
}

const DvTensor& bench_dv() {
  static const DvTensor dv = decision_tensor(bench_hyperplane(), bench_dataset());
  return dv;
}

const ZoneTensor& bench_zones() {
  static const ZoneTensor z = assign_zones(bench_dv(), quartiles(bench_dv()));
  return z;
}

void BM_BuildTrainMatrix(benchmark::State& state) {
  const Dataset& d = bench_dataset();
  for (auto _ : state) benchmark::DoNotOptimize(build_train_matrix(d));
}
BENCHMARK(BM_BuildTrainMatrix);

void BM_TrainL1(benchmark::State& state) {
  const TrainMatrix& m = bench_matrix();
  const SvmConfig cfg = bench_svm_config(SvmLoss::l1);
  for (auto _ : state) benchmark::DoNotOptimize(train(m, cfg));
}
BENCHMARK(BM_TrainL1);

void BM_TrainL2(benchmark::State& state) {
  const TrainMatrix& m = bench_matrix();
  const SvmConfig cfg = bench_svm_config(SvmLoss::l2);
  for (auto _ : state) benchmark::DoNotOptimize(train(m, cfg));
}
BENCHMARK(BM_TrainL2);

void BM_DecisionTensor(benchmark::State& state) {
  const Hyperplane& h = bench_hyperplane();
  const Dataset& d = bench_dataset();
  for (auto _ : state) benchmark::DoNotOptimize(decision_tensor(h, d));
}
BENCHMARK(BM_DecisionTensor);

void BM_AssignZones(benchmark::State& state) {
  const DvTensor& dv = bench_dv();
  const Quartiles q = quartiles(dv);
  for (auto _ : state) benchmark::DoNotOptimize(assign_zones(dv, q));
}
BENCHMARK(BM_AssignZones);

void BM_SimulateEarlystop(benchmark::State& state) {
  const ZoneTensor& z = bench_zones();
  const TruthMap& truth = bench_dataset().truth;
  const ScoreProfile p = sbf_heuristic_profile();
  for (auto _ : state) benchmark::DoNotOptimize(simulate_earlystop(z, truth, p));
}
BENCHMARK(BM_SimulateEarlystop);

// Full lattice searches at increasing score ranges.
void BM_OptimizeNostop(benchmark::State& state) {
  const ZoneTensor& z = bench_zones();
  const TruthMap& truth = bench_dataset().truth;
  const LatticeBounds b{-static_cast<int>(state.range(0)),
                        static_cast<int>(state.range(0)), 0};
  for (auto _ : state) benchmark::DoNotOptimize(optimize_nostop(z, truth, b, 1));
}
BENCHMARK(BM_OptimizeNostop)->Arg(2)->Arg(3)->Arg(4);

void BM_OptimizeEarlystopThreads(benchmark::State& state) {
  const ZoneTensor& z = bench_zones();
  const TruthMap& truth = bench_dataset().truth;
  const LatticeBounds b{-3, 3, 0};
  const SynthConfig sc = bench_synth();
  const TimingParams tp{sc.soa_seconds, sc.n_flashes * sc.n_levels, sc.n_trials,
                        sc.n_iterations};
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(optimize_earlystop(z, truth, b, tp, jobs));
}
BENCHMARK(BM_OptimizeEarlystopThreads)->Arg(1)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
