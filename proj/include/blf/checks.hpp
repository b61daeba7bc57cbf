#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blf/cohomology.hpp"

namespace blf {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details;
};

bool all_pass(const std::vector<CheckResult>& checks);

/// The twelve vector-calculus identities plus the constant-matrix suite
/// (involutions, D^2 = -Id, K K^{-1} = Id), each on `trials` seeded inputs.
std::vector<CheckResult> identity_suites(int trials, std::uint64_t seed, int max_degree = 3);

/// Every closed-form coboundary applicable to the model against the bracket,
/// for k = 0..3 and each input degree <= d_max, `trials` inputs per cell.
std::vector<CheckResult> oracle_checks(const PoissonModel& model, int trials, std::uint64_t seed, int d_max = 4);

/// d^{k+1} d^k = 0 at matrix level for every k and input degree <= d_max.
std::vector<CheckResult> complex_checks(const PoissonModel& model, CoboundaryKind kind, int d_max);

/// One check per k comparing computed and predicted Betti numbers.
std::vector<CheckResult> betti_checks(const BettiReport& report);

/// One check per k: generators are cocycles and their Casimir multiples form a
/// basis of H^k at every degree <= d_max.
std::vector<CheckResult> generator_checks(const PoissonModel& model, CoboundaryKind kind, int k_max, int d_max);

/// Unimodularity, involution invariance, pi ^ pi = 0 and scaling invariance of Betti tables.
std::vector<CheckResult> structural_checks(const PoissonModel& fold, const PoissonModel& lefschetz, int fold_d_max,
                                           int lefschetz_d_max);

/// The 3D cone complex, the Milnor count and the fold splitting relations.
std::vector<CheckResult> cone_checks(int d_max);

}  // namespace blf
