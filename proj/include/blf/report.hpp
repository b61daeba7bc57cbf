#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blf/checks.hpp"
#include "blf/cohomology.hpp"

namespace blf {

/// Machine-readable outcome of one CLI run.
struct Report {
  std::string model;
  std::string command;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  std::vector<BettiCell> betti;
  std::optional<double> elapsed_seconds;

  bool pass() const;
  void add(const std::vector<CheckResult>& more);
  void add(const BettiReport& table);
};

/// {model, command, seed, checks: [{name, pass, details}],
///  betti: [{k, degree, computed, predicted, kernel, image}], elapsed_seconds}
std::string to_json(const Report& report);

/// Betti rows under "k,degree,computed,predicted,match"; when the report has no
/// Betti cells, check rows under "name,pass,details" instead.
std::string to_csv(const Report& report);

}  // namespace blf
