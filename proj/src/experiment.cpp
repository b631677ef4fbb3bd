#include "hfl/experiment.hpp"

#include "hfl/dataset.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>

namespace hfl {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

std::string fmt_time(double t) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6f", t);
  return buf;
}

BaselineOptions to_baseline(const SolverOptions& opts) {
  BaselineOptions b;
  b.sigma = opts.sigma;
  b.sigma1 = opts.sigma;
  b.tol = opts.tol;
  b.max_iter = opts.max_iter;
  b.spectral_tol = opts.spectral_tol;
  return b;
}

}  // namespace

std::string solver_name(SolverKind kind) {
  switch (kind) {
    case SolverKind::dual: return "dual";
    case SolverKind::primal: return "primal";
    case SolverKind::proxgrad: return "proxgrad";
  }
  return "unknown";
}

SolverKind parse_solver(const std::string& name) {
  if (name == "dual") return SolverKind::dual;
  if (name == "primal" || name == "primal-baseline") return SolverKind::primal;
  if (name == "proxgrad") return SolverKind::proxgrad;
  throw std::invalid_argument("unknown solver: " + name);
}

std::vector<SolverKind> parse_solver_list(const std::string& csv_names) {
  std::vector<SolverKind> out;
  std::stringstream ss(csv_names);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_solver(item));
  }
  if (out.empty()) throw std::invalid_argument("empty solver list");
  return out;
}

FitResult run_solver(SolverKind kind, const RegressionProblem& problem,
                     const HuberFusedConfig& cfg, const SolverOptions& opts) {
  switch (kind) {
    case SolverKind::dual: return solve(problem, cfg, opts);
    case SolverKind::primal: return primal_admm_solve(problem, cfg, to_baseline(opts));
    case SolverKind::proxgrad: return prox_gradient_solve(problem, cfg, to_baseline(opts));
  }
  throw std::logic_error("run_solver: bad kind");
}

std::vector<double> default_tau_grid(Index n, Index p) {
  std::vector<double> grid = {0.001, 0.01, 0.1, 0.5, 1.0};
  const double logp = std::log(static_cast<double>(p));
  if (logp > 0.0) {
    const double base = std::sqrt(static_cast<double>(n) / logp);
    for (int k = 0; k <= 22; ++k) grid.push_back((0.40 + 0.05 * k) * base);
  }
  std::sort(grid.begin(), grid.end());
  return grid;
}

TauGridResult tau_grid_search(const RegressionProblem& problem, const HuberFusedConfig& base,
                              const SolverOptions& opts, const std::vector<double>& grid,
                              SolverKind solver, const Vec* beta_star,
                              const std::string& metric, int workers) {
  if (grid.empty()) throw std::invalid_argument("tau_grid_search: empty grid");
  if (metric != "mae" && metric != "mse" && metric != "rlne")
    throw std::invalid_argument("tau_grid_search: metric must be mae, mse, or rlne");
  if (metric == "rlne" && beta_star == nullptr)
    throw std::invalid_argument("tau_grid_search: rlne metric needs the true coefficients");
  if (workers < 1) throw std::invalid_argument("tau_grid_search: workers must be >= 1");

  std::vector<double> sorted = grid;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t m = sorted.size();

  std::vector<TauGridRow> rows(m);
  std::vector<FitResult> fits(m);
  std::vector<char> ok(m, 0);

  auto fit_one = [&](std::size_t i) {
    TauGridRow row;
    row.tau = sorted[i];
    row.rlne = row.mae = row.mse = kNan;
    HuberFusedConfig cfg = base;
    cfg.tau = sorted[i];
    try {
      FitResult fit = run_solver(solver, problem, cfg, opts);
      row.converged = fit.converged;
      row.iterations = fit.iterations;
      row.wall_time = fit.wall_time;
      row.rel_err = fit.rel_err_history.empty() ? 0.0 : fit.rel_err_history.back();
      row.mae = mae(problem, fit.beta_hat);
      row.mse = mse(problem, fit.beta_hat);
      if (beta_star) row.rlne = rlne(fit.beta_hat, *beta_star);
      fits[i] = std::move(fit);
      ok[i] = 1;
    } catch (const std::exception&) {
      row.failed = true;
    }
    rows[i] = std::move(row);
  };

  if (workers == 1 || m <= 1) {
    for (std::size_t i = 0; i < m; ++i) fit_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto drain = [&] {
      for (std::size_t i = next.fetch_add(1); i < m; i = next.fetch_add(1)) fit_one(i);
    };
    std::vector<std::thread> pool;
    const int count = std::min<int>(workers, static_cast<int>(m));
    pool.reserve(static_cast<std::size_t>(count - 1));
    for (int k = 1; k < count; ++k) pool.emplace_back(drain);
    drain();
    for (auto& th : pool) th.join();
  }

  TauGridResult result;
  result.rows = std::move(rows);
  double best_score = std::numeric_limits<double>::infinity();
  bool any_ok = false;
  for (std::size_t i = 0; i < m; ++i) {
    if (!ok[i]) continue;
    const auto& row = result.rows[i];
    const double score = metric == "mae" ? row.mae : (metric == "mse" ? row.mse : row.rlne);
    // Strict improvement keeps the smallest tau on ties (ascending scan).
    if (score < best_score) {
      best_score = score;
      result.best_tau = sorted[i];
      result.best_index = i;
      result.best_fit = std::move(fits[i]);
    }
    any_ok = true;
  }
  if (!any_ok) throw std::runtime_error("tau_grid_search: every grid point failed");
  return result;
}

std::vector<Index> default_profile_positions(Index p) {
  auto ceil_frac = [](Index num, Index den) { return (num + den - 1) / den; };
  return {ceil_frac(p, 10), ceil_frac(3 * p, 10), ceil_frac(p, 2), ceil_frac(27 * p, 40),
          ceil_frac(7 * p, 8)};
}

std::string emit_coefficient_profile(const Vec& beta, const std::vector<Index>& positions) {
  std::string out = "position,coefficient\n";
  for (Index pos : positions) {
    if (pos < 1 || pos > beta.size())
      throw std::invalid_argument("emit_coefficient_profile: position " + std::to_string(pos) +
                                  " out of range 1.." + std::to_string(beta.size()));
    out += std::to_string(pos);
    out += ',';
    out += fmt(beta[pos - 1]);
    out += '\n';
  }
  return out;
}

std::string ExperimentResults::csv_header() {
  return "mode,solver,noise,seed,repeat,n,p,tau,lambda1,lambda2,sigma,rho,tol,max_iter,"
         "converged,iter,time,rel_err,rlne,mae,mse,accuracy,recall,eval";
}

std::string ExperimentResults::csv(bool omit_timing) const {
  std::string out = csv_header() + "\n";
  for (const auto& r : rows) {
    out += r.mode + ',' + r.solver + ',' + r.noise + ',';
    out += std::to_string(r.seed) + ',' + std::to_string(r.repeat) + ',';
    out += std::to_string(r.n) + ',' + std::to_string(r.p) + ',';
    out += fmt(r.tau) + ',' + fmt(r.lambda1) + ',' + fmt(r.lambda2) + ',';
    out += fmt(r.sigma) + ',' + fmt(r.rho) + ',' + fmt(r.tol) + ',';
    out += std::to_string(r.max_iter) + ',';
    out += std::string(r.converged ? "1" : "0") + ',' + std::to_string(r.iterations) + ',';
    out += fmt_time(omit_timing ? 0.0 : r.wall_time) + ',' + fmt(r.rel_err) + ',';
    out += fmt(r.rlne) + ',' + fmt(r.mae) + ',' + fmt(r.mse) + ',';
    out += fmt(r.accuracy) + ',' + fmt(r.recall) + ',' + r.eval + '\n';
  }
  return out;
}

namespace {

struct EvalSplit {
  RegressionProblem train;
  RegressionProblem eval;
  bool holdout = false;
};

// Deterministic Fisher-Yates over sample indices; the first floor(f*n)
// shuffled samples form the evaluation set.
EvalSplit split_problem(const RegressionProblem& full, double fraction, std::uint64_t seed) {
  EvalSplit out;
  const Index n = full.n();
  const Index n_eval = static_cast<Index>(fraction * static_cast<double>(n));
  if (fraction < 0.0 || fraction >= 1.0)
    throw std::invalid_argument("holdout fraction must lie in [0, 1)");
  if (n_eval <= 0 || n - n_eval < 1) {
    out.train = full;
    out.eval = full;
    return out;
  }
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  Rng rng(mix_seed(seed, 3));
  for (Index i = n - 1; i > 0; --i) {
    const Index j = static_cast<Index>(rng.uniform() * static_cast<double>(i + 1));
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
  }
  out.holdout = true;
  out.eval.X.resize(n_eval, full.p());
  out.eval.y.resize(n_eval);
  out.train.X.resize(n - n_eval, full.p());
  out.train.y.resize(n - n_eval);
  for (Index i = 0; i < n_eval; ++i) {
    out.eval.X.row(i) = full.X.row(order[static_cast<std::size_t>(i)]);
    out.eval.y[i] = full.y[order[static_cast<std::size_t>(i)]];
  }
  for (Index i = n_eval; i < n; ++i) {
    out.train.X.row(i - n_eval) = full.X.row(order[static_cast<std::size_t>(i)]);
    out.train.y[i - n_eval] = full.y[order[static_cast<std::size_t>(i)]];
  }
  return out;
}

bool is_binary(const Vec& y) {
  for (Index i = 0; i < y.size(); ++i)
    if (y[i] != 0.0 && y[i] != 1.0) return false;
  return y.size() > 0;
}

}  // namespace

ExperimentResults run_experiment(const ExperimentConfig& config) {
  if (config.repeats < 1) throw std::invalid_argument("run_experiment: repeats must be >= 1");
  config.cfg.validate();
  config.opts.validate();
  if (config.solvers.empty()) throw std::invalid_argument("run_experiment: no solvers");

  ExperimentResults results;
  std::string grid_csv =
      "repeat,solver,tau,failed,converged,iter,time,rel_err,rlne,mae,mse\n";
  bool any_grid = false;

  // fit-csv data is loaded once and shared across repeats.
  RegressionProblem csv_problem;
  if (config.mode == ExperimentConfig::Mode::fit_csv) {
    RawCsv raw = parse_csv(config.data_path, config.has_header);
    if (config.transpose) {
      if (!raw.header.empty())
        throw std::invalid_argument("run_experiment: --transpose requires a headerless file");
      raw.values = raw.values.transpose().eval();
    }
    Dataset data = make_dataset(raw, config.response_col);
    if (config.do_standardize) data = standardize(data);
    csv_problem.X = std::move(data.features);
    csv_problem.y = std::move(data.response);
    csv_problem.validate();
  }

  for (int rep = 0; rep < config.repeats; ++rep) {
    const std::uint64_t seed = config.sim.seed + static_cast<std::uint64_t>(rep);

    RegressionProblem problem;
    GroundTruth truth;
    bool have_truth = false;
    if (config.mode == ExperimentConfig::Mode::simulate) {
      SimulationSpec spec = config.sim;
      spec.seed = seed;
      auto gen = gen_problem(spec);
      problem = std::move(gen.first);
      truth = std::move(gen.second);
      have_truth = true;
    } else {
      problem = csv_problem;
    }

    EvalSplit split = split_problem(problem, config.holdout, seed);

    for (SolverKind solver : config.solvers) {
      ExperimentRow row;
      row.mode = config.mode == ExperimentConfig::Mode::simulate ? "simulate" : "fit-csv";
      row.solver = solver_name(solver);
      row.noise = config.mode == ExperimentConfig::Mode::simulate ? noise_name(config.sim.noise)
                                                                  : "-";
      row.eval = split.holdout ? "holdout" : "insample";
      row.seed = seed;
      row.repeat = rep;
      row.n = problem.n();
      row.p = problem.p();
      row.lambda1 = config.cfg.lambda1;
      row.lambda2 = config.cfg.lambda2;
      row.sigma = config.opts.sigma;
      row.rho = config.opts.rho;
      row.tol = config.opts.tol;
      row.max_iter = config.opts.max_iter;
      row.rlne = row.accuracy = row.recall = kNan;

      FitResult fit;
      double used_tau = config.cfg.tau;
      if (!config.tau_grid.empty()) {
        TauGridResult grid = tau_grid_search(split.train, config.cfg, config.opts,
                                             config.tau_grid, solver,
                                             have_truth ? &truth.beta_star : nullptr,
                                             config.grid_metric, config.grid_workers);
        used_tau = grid.best_tau;
        fit = std::move(grid.best_fit);
        any_grid = true;
        for (const auto& g : grid.rows) {
          grid_csv += std::to_string(rep) + ',' + row.solver + ',' + fmt(g.tau) + ',';
          grid_csv += std::string(g.failed ? "1" : "0") + ',';
          grid_csv += std::string(g.converged ? "1" : "0") + ',';
          grid_csv += std::to_string(g.iterations) + ',';
          grid_csv += fmt_time(config.omit_timing ? 0.0 : g.wall_time) + ',';
          grid_csv += fmt(g.rel_err) + ',' + fmt(g.rlne) + ',' + fmt(g.mae) + ',' +
                      fmt(g.mse) + '\n';
        }
      } else {
        HuberFusedConfig cfg = config.cfg;
        fit = run_solver(solver, split.train, cfg, config.opts);
      }

      row.tau = used_tau;
      row.converged = fit.converged;
      row.iterations = fit.iterations;
      row.wall_time = fit.wall_time;
      row.rel_err = fit.rel_err_history.empty() ? 0.0 : fit.rel_err_history.back();
      row.mae = mae(split.eval, fit.beta_hat);
      row.mse = mse(split.eval, fit.beta_hat);
      if (have_truth) row.rlne = rlne(fit.beta_hat, truth.beta_star);
      if (is_binary(split.eval.y)) {
        Vec scores = split.eval.X * fit.beta_hat;
        auto cm = classification_metrics(split.eval.y, scores, config.class_threshold);
        row.accuracy = cm.accuracy;
        row.recall = cm.recall.value_or(kNan);
      }
      if (!row.converged) results.all_converged = false;

      // Coefficient profile from the first fit only.
      if (config.positions && rep == 0 && solver == config.solvers.front()) {
        std::vector<Index> pos;
        if (*config.positions == "default") {
          pos = default_profile_positions(problem.p());
        } else if (*config.positions == "all") {
          pos.resize(static_cast<std::size_t>(problem.p()));
          std::iota(pos.begin(), pos.end(), Index{1});
        } else {
          std::stringstream ss(*config.positions);
          std::string item;
          while (std::getline(ss, item, ',')) {
            if (!item.empty()) pos.push_back(static_cast<Index>(std::stoll(item)));
          }
          if (pos.empty())
            throw std::invalid_argument("run_experiment: empty positions list");
        }
        results.profile_csv = emit_coefficient_profile(fit.beta_hat, pos);
      }

      results.rows.push_back(std::move(row));
    }
  }

  if (any_grid) results.grid_csv = grid_csv;
  return results;
}

}  // namespace hfl
