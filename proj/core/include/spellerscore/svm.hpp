#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spellerscore/dataset.hpp"

namespace spellerscore {

enum class SvmLoss { l1, l2 };

struct SvmConfig {
  SvmLoss loss = SvmLoss::l2;
  double c1 = 1.0;             // cost for labelled stimulus rows
  double c2 = 1.0;             // cost for target-difference rows; 0 drops the block
  double tol = 1e-4;           // stop when max |projected gradient| falls below
  int max_epochs = 1000;
  std::uint64_t shuffle_seed = 0;
  double bias_scale = 1.0;     // augmented bias coordinate; 0 trains without bias

  void validate() const;
};

struct RecordRef {
  int trial = 0;
  int iteration = 0;
  int level = 0;
  int flash = 0;
};

// Training rows in two blocks. The sign block carries every labelled stimulus.
// The difference block pairs each non-target stimulus with the target of its
// (trial, iteration, level) sequence: z = x_target - x_nontarget, constrained
// to score positive, which pushes the target above each competing flash.
struct TrainMatrix {
  int dim = 0;
  std::vector<double> x;              // sign rows, row-major l1 x dim
  std::vector<std::int8_t> y;         // +1 / -1 per sign row
  std::vector<RecordRef> x_ref;
  std::vector<double> sign_cost;      // optional per-row cost; empty means cfg.c1
  std::vector<double> z;              // difference rows, row-major l2 x dim
  std::vector<RecordRef> z_ref;       // the non-target stimulus behind each row

  std::size_t l1() const { return y.size(); }
  std::size_t l2() const { return z_ref.size(); }
  std::span<const double> x_row(std::size_t i) const {
    return {x.data() + i * dim, static_cast<std::size_t>(dim)};
  }
  std::span<const double> z_row(std::size_t i) const {
    return {z.data() + i * dim, static_cast<std::size_t>(dim)};
  }
};

TrainMatrix build_train_matrix(const Dataset& d);

struct TrainDiagnostics {
  int epochs_run = 0;
  double final_max_projected_gradient = 0.0;
  double dual_objective = 0.0;
  bool converged = false;
  int skipped_rows = 0;  // zero-norm rows left out of the sweep
};

struct Hyperplane {
  std::vector<double> w;
  double b = 0.0;
  double bias_scale = 0.0;  // augmentation constant used during training
  TrainDiagnostics diagnostics;
};

double decision_value(const Hyperplane& h, std::span<const double> features);

// Dual iterate: alpha holds the sign-block multipliers first, then the
// difference-block ones. w_running lives in the augmented space (one extra
// coordinate when bias_scale > 0) and always equals
// sum_i alpha_i y_i x~_i + sum_j alpha_j z~_j.
struct DualState {
  std::vector<double> alpha;
  std::vector<double> w_running;
};

// Coordinate descent on the dual, one pass per epoch over a freshly shuffled
// permutation of the active rows. Rows priced at cost zero and rows with a
// zero diagonal are excluded from the sweep entirely.
Hyperplane train(const TrainMatrix& m, const SvmConfig& cfg,
                 DualState* state_out = nullptr);

double dual_objective(const TrainMatrix& m, const DualState& s, const SvmConfig& cfg);

}  // namespace spellerscore
