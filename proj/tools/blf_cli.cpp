// Batch verification front end: identity suites, oracle comparisons, complex
// checks, Betti tables and generator verification, reported as JSON or CSV.
//
// Exit status: 0 when every check passes, 1 when a check fails, 2 on usage errors.

#include <chrono>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "blf/checks.hpp"
#include "blf/coboundary.hpp"
#include "blf/errors.hpp"
#include "blf/models.hpp"
#include "blf/report.hpp"

namespace {

using namespace blf;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::string command;
  std::string model = "fold";
  std::string kind = "compact";
  int kmax = -1;
  int dmax = -1;
  int trials = 100;
  std::uint64_t seed = 42;
  std::string out;
  std::string format = "json";
};

enum class Task { identities, complex, oracle, betti, generators };

int default_dmax(const PoissonModel& model, Task task) {
  if (task == Task::oracle) return 4;
  if (model.origin == "fold") return 8;
  if (model.origin == "lefschetz") return task == Task::complex ? 6 : 5;
  return 4;
}

CoboundaryKind resolve_kind(const RunConfig& cfg, const PoissonModel& model) {
  if (cfg.kind == "compact") return compact_kind(model);
  const CoboundaryKind kind = parse_kind(cfg.kind);
  check_kind(kind, model);
  return kind;
}

void run_model_task(const RunConfig& cfg, Task task, const PoissonModel& model, Report& report) {
  const int dmax = cfg.dmax >= 0 ? cfg.dmax : default_dmax(model, task);
  const int kmax = cfg.kmax >= 0 ? std::min(cfg.kmax, model.nvars) : model.nvars;
  const CoboundaryKind kind = resolve_kind(cfg, model);
  switch (task) {
    case Task::identities:
      break;
    case Task::complex:
      report.add(complex_checks(model, kind, dmax));
      break;
    case Task::oracle:
      report.add(oracle_checks(model, cfg.trials, cfg.seed, dmax));
      break;
    case Task::betti: {
      const BettiReport table = betti_table(model, kind, kmax, dmax);
      report.add(betti_checks(table));
      report.add(table);
      break;
    }
    case Task::generators:
      report.add(generator_checks(model, kind, kmax, dmax));
      break;
  }
}

Report run(const RunConfig& cfg, std::optional<Task> task) {
  Report report;
  report.command = cfg.command;
  report.seed = cfg.seed;
  if (task == Task::identities) {
    report.model = "";
    report.add(identity_suites(cfg.trials, cfg.seed, cfg.dmax >= 0 ? cfg.dmax : 3));
    return report;
  }
  if (task) {
    const PoissonModel model = parse_model(cfg.model);
    report.model = cfg.model;
    run_model_task(cfg, *task, model, report);
    return report;
  }
  // report-all: every suite on both reference models with default ranges.
  const PoissonModel fold = model_fold();
  const PoissonModel lefschetz = model_lefschetz();
  RunConfig base = cfg;
  base.kmax = -1;
  base.dmax = -1;
  base.kind = "compact";
  report.model = "fold,lefschetz";
  report.add(identity_suites(cfg.trials, cfg.seed));
  for (const PoissonModel* m : {&fold, &lefschetz}) {
    for (Task t : {Task::oracle, Task::complex, Task::betti, Task::generators}) run_model_task(base, t, *m, report);
  }
  report.add(structural_checks(fold, lefschetz, 8, 5));
  report.add(cone_checks(8));
  return report;
}

void emit(const RunConfig& cfg, const Report& report) {
  const std::string text = cfg.format == "csv" ? to_csv(report) : to_json(report);
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + cfg.out + "'");
  file << text;
}

void add_common(CLI::App* cmd, RunConfig& cfg, bool with_model) {
  if (with_model) {
    cmd->add_option("--model", cfg.model, "fold, lefschetz or jacobian:<mu>:<P1>:<P2>");
    cmd->add_option("--kind", cfg.kind, "compact, schouten, jacobian_general, jacobian_const_quarter or fold_direct");
  }
  cmd->add_option("--kmax", cfg.kmax, "largest multivector degree")->check(CLI::NonNegativeNumber);
  cmd->add_option("--dmax", cfg.dmax, "largest polynomial degree")->check(CLI::NonNegativeNumber);
  cmd->add_option("--trials", cfg.trials, "random inputs per check")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", cfg.seed, "seed for the random inputs");
  cmd->add_option("--out", cfg.out, "write the report here instead of stdout");
  cmd->add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Poisson cohomology checks for the fold and Lefschetz models"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::optional<Task> task;
  bool all = false;

  auto* verify = app.add_subcommand("verify", "identity suites or d o d = 0");
  verify->require_subcommand(1);
  auto* identities = verify->add_subcommand("identities", "vector-calculus identities on random inputs");
  add_common(identities, cfg, false);
  identities->callback([&] { task = Task::identities; });
  auto* complex = verify->add_subcommand("complex", "d^{k+1} d^k = 0 at matrix level");
  add_common(complex, cfg, true);
  complex->callback([&] { task = Task::complex; });

  auto* oracle = app.add_subcommand("oracle", "closed-form coboundaries against the Schouten bracket");
  add_common(oracle, cfg, true);
  oracle->callback([&] { task = Task::oracle; });
  auto* betti = app.add_subcommand("betti", "graded Betti table with predictions");
  add_common(betti, cfg, true);
  betti->callback([&] { task = Task::betti; });
  auto* generators = app.add_subcommand("generators", "cocycle, spanning and freeness checks for listed generators");
  add_common(generators, cfg, true);
  generators->callback([&] { task = Task::generators; });
  auto* report_all = app.add_subcommand("report-all", "every suite on both reference models");
  add_common(report_all, cfg, false);
  report_all->callback([&] { all = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (identities->parsed()) cfg.command = "verify identities";
  if (complex->parsed()) cfg.command = "verify complex";
  if (oracle->parsed()) cfg.command = "oracle";
  if (betti->parsed()) cfg.command = "betti";
  if (generators->parsed()) cfg.command = "generators";
  if (all) cfg.command = "report-all";

  try {
    const auto start = std::chrono::steady_clock::now();
    Report report = run(cfg, all ? std::nullopt : task);
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(cfg, report);
    for (const auto& c : report.checks) {
      if (!c.pass) std::cerr << "FAIL " << c.name << ": " << c.details << "\n";
    }
    return report.pass() ? kExitPass : kExitFail;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const StructureError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
