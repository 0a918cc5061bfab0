#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hartree/errors.hpp"
#include "hartree/io.hpp"
#include "hartree/limits.hpp"
#include "hartree/linops.hpp"
#include "hartree/solve.hpp"
#include "hartree/specfun.hpp"
#include "hartree/validate.hpp"

namespace hartree::cli {

using nlohmann::json;

void OutputSink::write(const std::string& name, const std::string& text) {
  io::write_file(dir_ / name, text);
  written_.push_back(name);
}

void OutputSink::write_json(const std::string& name, const json& doc) { write(name, doc.dump(2) + "\n"); }

namespace {

GridPtr grid_of(const RunConfig& cfg) { return make_grid(cfg.grid.n, cfg.grid.r_max); }

SolverOptions solver_of(const RunConfig& cfg) { return {cfg.solver.tol, cfg.solver.max_iter}; }

RelativisticOptions rel_options_of(const RunConfig& cfg) {
  RelativisticOptions opts;
  opts.tol = cfg.solver.tol;
  opts.max_iter = cfg.solver.max_iter;
  return opts;
}

template <class Writer>
std::string to_text(Writer&& writer) {
  std::ostringstream os;
  writer(os);
  return os.str();
}

// Nonrelativistic state from the config: normalized (m = 1/2, lambda = 1)
// when neither N nor a multiplier is set.
GroundState nr_state(const RunConfig& cfg) {
  const double m = cfg.model.m.value_or(0.5);
  const GridPtr grid = grid_of(cfg);
  if (cfg.model.N) return solve_nr(grid, m, *cfg.model.N, solver_of(cfg));
  return solve_nr_multiplier(grid, m, cfg.model.multiplier.value_or(1.0), solver_of(cfg));
}

GroundState rel_state(const RunConfig& cfg) {
  const double m = cfg.model.m.value_or(1.0);
  const double c = cfg.model.c;
  const GridPtr grid = grid_of(cfg);
  if (cfg.model.multiplier) {
    const double z = *cfg.model.multiplier + m * c * c;
    if (!(z > 0.0)) throw InvalidArgument("relativistic multiplier must exceed -m c^2");
    const GroundState guess = solve_nr_multiplier(grid, m, z, solver_of(cfg));
    return solve_rel_fixed_multiplier(guess.Q, m, c, z, rel_options_of(cfg));
  }
  return solve_rel(grid, m, c, cfg.model.N.value_or(1.0), rel_options_of(cfg));
}

void emit_state(const GroundState& gs, const RunConfig& cfg, OutputSink& out) {
  if (cfg.wants("json")) out.write_json("ground_state.json", io::to_json(gs));
  if (cfg.wants("csv")) out.write("profile.csv", to_text([&](std::ostream& os) { io::write_csv(os, gs.Q); }));
  std::cout << std::setprecision(10) << "multiplier " << gs.multiplier << "  mass " << gs.mass << "  energy "
            << gs.energy << "  residual " << gs.residual << "  iterations " << gs.iterations << "\n";
}

Status run_solve_nr(const RunConfig& cfg, OutputSink& out) {
  emit_state(nr_state(cfg), cfg, out);
  return Status::ok;
}

Status run_solve_rel(const RunConfig& cfg, OutputSink& out) {
  emit_state(rel_state(cfg), cfg, out);
  return Status::ok;
}

Status run_shoot(const RunConfig& cfg, OutputSink& out) {
  const ShootingResult res = shoot_threshold();
  if (cfg.wants("json")) out.write_json("shooting.json", io::to_json(res));
  if (cfg.wants("csv")) {
    const RadialProfile q = res.normalized_profile(grid_of(cfg));
    out.write("shooting_profile.csv", to_text([&](std::ostream& os) { io::write_csv(os, q); }));
  }
  std::cout << std::setprecision(12) << "v0* " << res.v0_star << "  kappa " << res.kappa << "  trust radius "
            << res.trust_radius << "  probes " << res.trace.size() << "\n";
  return Status::ok;
}

Status run_spectrum(const RunConfig& cfg, OutputSink& out) {
  const bool rel = cfg.relativistic();
  const GroundState gs = rel ? rel_state(cfg) : nr_state(cfg);
  const int l_max = cfg.spectrum.l_max;
  const int k = cfg.spectrum.k_eigs;
  json summary{{"state", io::to_json(gs)}, {"sectors", json::array()}};

  for (int l = 0; l <= l_max; ++l) {
    const SectorOperator op = rel ? assemble_sector_rel(l, gs) : assemble_sector_nr(l, gs);
    SpectralReport report = eigs(op, k);
    if (!rel && l >= 2) report.gap_bound = k_ell_gap(l, gs, report.ground());
    const std::string stem = "spectrum_l" + std::to_string(l);
    if (cfg.wants("json")) out.write_json(stem + ".json", io::to_json(report));
    if (cfg.wants("csv"))
      out.write(stem + ".csv", to_text([&](std::ostream& os) { io::write_eigenfunctions_csv(os, report); }));
    summary["sectors"].push_back({{"l", l}, {"lowest", report.eigenvalues.front()}});
    std::cout << std::setprecision(8) << "l = " << l << "  lowest eigenvalues";
    for (std::size_t i = 0; i < std::min<std::size_t>(report.eigenvalues.size(), 4); ++i)
      std::cout << ' ' << report.eigenvalues[i];
    std::cout << "\n";
  }
  if (!rel) {
    const SpectralReport minus = eigs(assemble_lminus(gs), std::min(k, 4));
    if (cfg.wants("json")) out.write_json("spectrum_lminus.json", io::to_json(minus));
  }

  const KernelCount kc = kernel_count(gs, l_max, cfg.spectrum.kernel_radius, cfg.jobs);
  summary["kernel_count"] = io::to_json(kc);
  const bool normalized =
      !rel && gs.params.m == 0.5 && std::abs(gs.multiplier - 1.0) < 1e-12 && !cfg.model.N;
  if (normalized) summary["nullspace"] = io::to_json(nullspace_diagnostics(gs, l_max, cfg.spectrum.kernel_radius));
  if (cfg.wants("json")) out.write_json("kernel_count.json", summary);
  std::cout << "kernel count " << kc.total << "\n";
  return Status::ok;
}

Status run_sweep(const RunConfig& cfg, OutputSink& out) {
  const double m = cfg.model.m.value_or(1.0);
  const double N = cfg.model.N.value_or(1.0);
  const SweepResult sweep = sweep_c(cfg.sweep.c_list, m, N, grid_of(cfg), rel_options_of(cfg), cfg.jobs);
  if (cfg.wants("json")) out.write_json("sweep.json", io::to_json(sweep));
  if (cfg.wants("csv")) out.write("sweep.csv", to_text([&](std::ostream& os) { io::write_sweep_csv(os, sweep.records); }));
  bool failed = false;
  std::cout << std::setprecision(8);
  for (const SweepRecord& r : sweep.records) {
    if (r.ok()) {
      std::cout << "c = " << r.c << "  gap " << r.gap << "  h1 distance " << r.h1_dist << "\n";
    } else {
      failed = true;
      std::cerr << "c = " << r.c << ": " << *r.error << "\n";
    }
  }
  return failed ? Status::solver_failure : Status::ok;
}

Status run_heat_kernel(const RunConfig& cfg, OutputSink& out) {
  const GridPtr grid = grid_of(cfg);
  const std::size_t n = grid->n();
  const std::size_t interior = std::max<std::size_t>(1, n / 2);
  json rows = json::array();
  std::ostringstream csv;
  csv << std::setprecision(17) << "l,t,min_log_entry,positive,semigroup_defect\n";
  for (int l = 0; l <= cfg.spectrum.l_max; ++l) {
    for (double t : cfg.heat_kernel.times) {
      const HeatKernelSector full = heat_kernel_sector(l, t, grid);
      const HeatKernelSector half = heat_kernel_sector(l, 0.5 * t, grid);
      const Eigen::MatrixXd composed = half.matrix * half.matrix;
      const auto block = [&](const Eigen::MatrixXd& a) { return a.topLeftCorner(interior, interior); };
      const double scale = block(full.matrix).norm();
      const double defect = scale > 0.0 ? (block(composed) - block(full.matrix)).norm() / scale : 0.0;
      const double min_log = full.log_entries.minCoeff();
      const bool positive = std::isfinite(min_log);
      rows.push_back({{"l", l}, {"t", t}, {"min_log_entry", min_log}, {"positive", positive},
                      {"semigroup_defect", defect}});
      csv << l << ',' << t << ',' << min_log << ',' << (positive ? 1 : 0) << ',' << defect << '\n';
    }
  }
  if (cfg.wants("json"))
    out.write_json("heat_kernel.json", {{"grid", io::to_json(*grid)}, {"interior_nodes", interior}, {"entries", rows}});
  if (cfg.wants("csv")) out.write("heat_kernel.csv", csv.str());
  std::cout << "heat kernel: " << rows.size() << " (l, t) pairs\n";
  return Status::ok;
}

Status run_critical_mass(const RunConfig& cfg, OutputSink& out) {
  const double m = cfg.model.m.value_or(1.0);
  const CriticalMassEstimate est =
      critical_mass_estimate(cfg.model.c, m, grid_of(cfg), cfg.critical.bracket_tol, rel_options_of(cfg));
  if (cfg.wants("json")) out.write_json("critical_mass.json", io::to_json(est));
  if (cfg.wants("csv")) {
    std::ostringstream csv;
    csv << std::setprecision(17) << "N,converged,outcome\n";
    for (const MassProbe& p : est.trace) csv << p.N << ',' << (p.converged ? 1 : 0) << ',' << p.outcome << '\n';
    out.write("critical_mass.csv", csv.str());
  }
  std::cout << std::setprecision(8) << "critical mass in [" << est.N_lo << ", " << est.N_hi << "], lower bound "
            << est.lower_bound() << "\n";
  return Status::ok;
}

Status run_validate(const RunConfig& cfg, OutputSink& out) {
  ValidationOptions opts;
  opts.n = cfg.grid.n;
  opts.r_max = cfg.grid.r_max;
  opts.jobs = cfg.jobs;
  opts.seed = cfg.seed;
  opts.tol = cfg.solver.tol;
  const auto print = [](const CheckResult& r) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(9) << r.module << std::setw(28) << r.name
              << std::right << std::setprecision(4) << std::scientific << " value " << r.value << "  bound "
              << r.threshold << std::defaultfloat;
    if (!r.detail.empty()) std::cout << "  " << r.detail;
    std::cout << std::endl;
  };
  const std::vector<CheckResult> results = run_invariants(opts, print);
  json rows = json::array();
  std::ostringstream csv;
  csv << std::setprecision(17) << "module,name,passed,value,threshold\n";
  int failures = 0;
  for (const CheckResult& r : results) {
    failures += r.passed ? 0 : 1;
    rows.push_back({{"module", r.module}, {"name", r.name}, {"passed", r.passed}, {"value", r.value},
                    {"threshold", r.threshold}, {"detail", r.detail}});
    csv << r.module << ',' << r.name << ',' << (r.passed ? 1 : 0) << ',' << r.value << ',' << r.threshold << '\n';
  }
  if (cfg.wants("json")) out.write_json("validate.json", {{"checks", rows}, {"failures", failures}});
  if (cfg.wants("csv")) out.write("validate.csv", csv.str());
  std::cout << results.size() - failures << "/" << results.size() << " checks passed\n";
  return failures == 0 ? Status::ok : Status::invalid;
}

}  // namespace

Status dispatch(const std::string& subcommand, const RunConfig& cfg, OutputSink& out) {
  if (subcommand == "solve-nr") return run_solve_nr(cfg, out);
  if (subcommand == "solve-rel") return run_solve_rel(cfg, out);
  if (subcommand == "shoot") return run_shoot(cfg, out);
  if (subcommand == "spectrum") return run_spectrum(cfg, out);
  if (subcommand == "sweep-c") return run_sweep(cfg, out);
  if (subcommand == "heat-kernel") return run_heat_kernel(cfg, out);
  if (subcommand == "critical-mass") return run_critical_mass(cfg, out);
  if (subcommand == "validate") return run_validate(cfg, out);
  throw InvalidArgument("unknown subcommand '" + subcommand + "'");
}

}  // namespace hartree::cli
