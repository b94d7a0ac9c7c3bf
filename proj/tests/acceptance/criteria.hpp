#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spellerscore::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  bool skipped = false;
  std::string detail;
  double seconds = 0.0;
};

// The ten checks, in order. Each runs standalone on generated data.
CriterionResult solver_matches_qp_oracle();                       // 1
CriterionResult zero_cost_matches_plain_svm();                    // 2
CriterionResult augmentation_equivalence();                       // 3
CriterionResult search_matches_enumeration();                     // 4
CriterionResult optima_pass_constraint_audit();                   // 5
CriterionResult metric_identities(double bitrate_perturb = 0.0);  // 6
CriterionResult readout_identity();                               // 7
CriterionResult synthetic_end_to_end(unsigned jobs = 1);          // 8
CriterionResult optimizer_dominates_heuristic();                  // 9
CriterionResult reproduction_harness();                           // 10

std::vector<CriterionResult> run_all(unsigned jobs = 1);

// One line per criterion plus a summary; true when nothing failed.
bool report(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace spellerscore::acceptance
