#pragma once

#include <random>

#include "spellerscore/dataset.hpp"
#include "spellerscore/scoreopt.hpp"
#include "spellerscore/scoring.hpp"
#include "spellerscore/svm.hpp"
#include "spellerscore/synth.hpp"

// Independent reference implementations used only by the acceptance checks.
// They share no code with the library paths they validate: the dual solver is
// checked against a dense-Gram projected-gradient QP, and the lattice search
// against plain nested-loop enumeration.
namespace spellerscore::acceptance {

// Minimum of 1/2 a'Qa - sum(a) over the box [0, U]^n with Q assembled densely
// from the augmented rows of m. Accelerated projected gradient with a power
// iteration step size, run to a tight fixed-point residual.
double qp_oracle_objective(const TrainMatrix& m, const SvmConfig& cfg);

struct BruteBest {
  ScoreProfile profile;
  double objective = 0.0;
  long long evaluated = 0;
};

BruteBest brute_force_nostop(const ZoneTensor& zones, const TruthMap& truth,
                             const LatticeBounds& bounds);
BruteBest brute_force_earlystop(const ZoneTensor& zones, const TruthMap& truth,
                                const LatticeBounds& bounds, const TimingParams& timing);

// Small randomized fixtures.
SynthConfig random_synth_config(std::mt19937_64& rng, int max_sign_rows);
ZoneTensor random_zone_tensor(std::mt19937_64& rng, int n_trials, int n_iterations,
                              int n_flashes, int n_levels, TruthMap& truth_out);

long double bitrate_long_double(int n_symbols, long double p);

}  // namespace spellerscore::acceptance
