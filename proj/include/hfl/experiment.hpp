#pragma once

#include "hfl/metrics.hpp"
#include "hfl/simgen.hpp"
#include "hfl/solver_baseline.hpp"
#include "hfl/solver_dual.hpp"
#include "hfl/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hfl {

enum class SolverKind { dual, primal, proxgrad };

std::string solver_name(SolverKind kind);
SolverKind parse_solver(const std::string& name);
std::vector<SolverKind> parse_solver_list(const std::string& csv_names);

/// Dispatch one fit with shared options.
FitResult run_solver(SolverKind kind, const RegressionProblem& problem,
                     const HuberFusedConfig& cfg, const SolverOptions& opts);

struct ExperimentConfig {
  enum class Mode { simulate, fit_csv };
  Mode mode = Mode::simulate;

  SimulationSpec sim;  // simulate mode; sim.seed also seeds the holdout split

  std::string data_path;  // fit-csv mode
  bool has_header = false;
  Index response_col = 0;
  bool transpose = false;
  bool do_standardize = false;
  double holdout = 0.0;  // fraction of samples held out for evaluation
  double class_threshold = 0.5;

  HuberFusedConfig cfg;
  SolverOptions opts;
  std::vector<SolverKind> solvers = {SolverKind::dual};

  std::vector<double> tau_grid;  // empty -> fixed cfg.tau
  std::string grid_metric = "mae";
  int grid_workers = 1;  // parallel grid fits; output is order-stable

  int repeats = 1;
  bool omit_timing = false;  // zero the time column for byte-stable output

  std::optional<std::string> positions;  // "default" | "all" | comma list (1-based)
};

struct ExperimentRow {
  std::string mode, solver, noise, eval;
  std::uint64_t seed = 0;
  int repeat = 0;
  Index n = 0, p = 0;
  double tau = 0, lambda1 = 0, lambda2 = 0, sigma = 0, rho = 0, tol = 0;
  int max_iter = 0;
  bool converged = false;
  int iterations = 0;
  double wall_time = 0, rel_err = 0;
  double rlne, mae, mse, accuracy, recall;  // nan when not applicable
};

struct ExperimentResults {
  std::vector<ExperimentRow> rows;
  std::string grid_csv;     // per-tau rows when a grid search ran
  std::string profile_csv;  // coefficient profile when positions were requested
  bool all_converged = true;

  static std::string csv_header();
  std::string csv(bool omit_timing) const;
};

/// Runs the configured experiment; rows are ordered by (repeat, solver).
ExperimentResults run_experiment(const ExperimentConfig& config);

struct TauGridRow {
  double tau = 0;
  bool converged = false;
  int iterations = 0;
  double wall_time = 0, rel_err = 0;
  double rlne, mae, mse;
  bool failed = false;  // solver raised; excluded from selection
};

struct TauGridResult {
  double best_tau = 0;
  std::size_t best_index = 0;
  FitResult best_fit;
  std::vector<TauGridRow> rows;
};

/// Fits once per grid value and selects the tau minimizing the metric
/// ("mae", "mse", or "rlne"; ties go to the smaller tau).  beta_star may be
/// null unless metric is "rlne".  Grid points are independent; workers > 1
/// fits them in parallel with results collected in grid order, so the
/// outcome does not depend on scheduling.
TauGridResult tau_grid_search(const RegressionProblem& problem, const HuberFusedConfig& base,
                              const SolverOptions& opts, const std::vector<double>& grid,
                              SolverKind solver, const Vec* beta_star,
                              const std::string& metric, int workers = 1);

/// The benchmark grid {0.001, 0.01, 0.1, 0.5, 1} plus a*sqrt(n/log p) for
/// a = 0.40, 0.45, ..., 1.50, sorted ascending (28 candidates).
std::vector<double> default_tau_grid(Index n, Index p);

/// 1-based focus positions ceil(p/10), ceil(3p/10), ceil(p/2), ceil(27p/40),
/// ceil(7p/8).
std::vector<Index> default_profile_positions(Index p);

/// "position,coefficient" rows for the given 1-based positions; out-of-range
/// positions are rejected.
std::string emit_coefficient_profile(const Vec& beta, const std::vector<Index>& positions);

}  // namespace hfl
