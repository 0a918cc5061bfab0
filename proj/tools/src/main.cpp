#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "commands.hpp"
#include "config.hpp"
#include "hartree/errors.hpp"
#include "hartree/io.hpp"

namespace {

using hartree::cli::RunConfig;
using hartree::cli::Status;

struct Overrides {
  std::optional<std::string> config;
  std::optional<std::string> out;
  std::optional<int> jobs;
  std::optional<std::string> format;
  std::optional<std::size_t> n;
  std::optional<double> r_max;
  std::optional<std::string> model;
  std::optional<double> m;
  std::optional<double> c;
  std::optional<double> N;
  std::optional<double> multiplier;
  std::optional<double> tol;
  std::optional<int> max_iter;
  std::optional<int> l_max;
  std::optional<int> k;
  std::optional<double> kernel_radius;
  std::optional<std::string> c_list;
  std::optional<std::uint64_t> seed;
  std::optional<double> bracket_tol;
  std::optional<std::string> times;
};

void add_options(CLI::App& app, Overrides& o) {
  app.add_option("--config", o.config, "INI configuration file")->check(CLI::ExistingFile);
  app.add_option("--out", o.out, "Output directory");
  app.add_option("--jobs", o.jobs, "Worker threads");
  app.add_option("--format", o.format, "Comma-separated output formats (json, csv)");
  app.add_option("--n", o.n, "Number of interior grid nodes");
  app.add_option("--r-max", o.r_max, "Outer radius");
  app.add_option("--model", o.model, "nonrelativistic or relativistic");
  app.add_option("--m", o.m, "Particle mass parameter");
  app.add_option("--c", o.c, "Speed of light");
  app.add_option("--N", o.N, "Target mass");
  app.add_option("--multiplier", o.multiplier, "Fixed Lagrange multiplier");
  app.add_option("--tol", o.tol, "Residual tolerance");
  app.add_option("--max-iter", o.max_iter, "Iteration cap");
  app.add_option("--l-max", o.l_max, "Highest angular momentum sector");
  app.add_option("--k", o.k, "Eigenpairs per sector");
  app.add_option("--kernel-radius", o.kernel_radius, "Radius r0 of the kernel window");
  app.add_option("--c-list", o.c_list, "Comma-separated speeds of light");
  app.add_option("--seed", o.seed, "Random seed");
  app.add_option("--bracket-tol", o.bracket_tol, "Width of the critical-mass bracket");
  app.add_option("--t", o.times, "Comma-separated heat-kernel times");
}

RunConfig resolve(const Overrides& o, const std::string& subcommand) {
  RunConfig cfg = o.config ? hartree::cli::load_config(*o.config) : RunConfig{};
  if (const char* env = std::getenv("HARTREE_LAB_OUT"); env && *env) cfg.output.dir = env;
  if (o.out) cfg.output.dir = *o.out;
  if (o.jobs) cfg.jobs = *o.jobs;
  if (o.format) {
    cfg.output.formats.clear();
    std::string rest = *o.format;
    for (std::size_t pos; (pos = rest.find(',')) != std::string::npos; rest.erase(0, pos + 1))
      cfg.output.formats.push_back(rest.substr(0, pos));
    if (!rest.empty()) cfg.output.formats.push_back(rest);
  }
  if (o.n) cfg.grid.n = *o.n;
  if (o.r_max) cfg.grid.r_max = *o.r_max;
  if (o.model) cfg.model.kind = *o.model;
  if (o.m) cfg.model.m = *o.m;
  if (o.c) cfg.model.c = *o.c;
  if (o.N) {
    cfg.model.N = *o.N;
    cfg.model.multiplier.reset();
  }
  if (o.multiplier) {
    cfg.model.multiplier = *o.multiplier;
    if (!o.N) cfg.model.N.reset();
  }
  if (o.tol) cfg.solver.tol = *o.tol;
  if (o.max_iter) cfg.solver.max_iter = *o.max_iter;
  if (o.l_max) cfg.spectrum.l_max = *o.l_max;
  if (o.k) cfg.spectrum.k_eigs = *o.k;
  if (o.kernel_radius) cfg.spectrum.kernel_radius = *o.kernel_radius;
  if (o.c_list) cfg.sweep.c_list = hartree::cli::parse_list(*o.c_list);
  if (o.seed) cfg.seed = *o.seed;
  if (o.bracket_tol) cfg.critical.bracket_tol = *o.bracket_tol;
  if (o.times) cfg.heat_kernel.times = hartree::cli::parse_list(*o.times);
  if (subcommand == "solve-rel" || subcommand == "sweep-c" || subcommand == "critical-mass")
    cfg.model.kind = "relativistic";
  if (subcommand == "solve-nr") cfg.model.kind = "nonrelativistic";
  hartree::cli::check(cfg);
  return cfg;
}

Status classify(const std::exception& e) {
  if (dynamic_cast<const hartree::Inconclusive*>(&e) || dynamic_cast<const hartree::AmbiguousCount*>(&e))
    return Status::inconclusive;
  if (dynamic_cast<const hartree::NoConvergence*>(&e) || dynamic_cast<const hartree::Collapse*>(&e) ||
      dynamic_cast<const hartree::BracketFailure*>(&e) || dynamic_cast<const hartree::EigensolverFailure*>(&e))
    return Status::solver_failure;
  return Status::invalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical experiments for the Hartree equation with Coulomb self-interaction"};
  app.set_version_flag("--version", hartree::io::library_version());
  app.require_subcommand(1);
  Overrides overrides;
  add_options(app, overrides);
  app.fallthrough();
  for (const std::string& name : hartree::cli::subcommands()) app.add_subcommand(name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(Status::invalid);
  }
  const std::string subcommand = app.get_subcommands().front()->get_name();

  RunConfig cfg;
  try {
    cfg = resolve(overrides, subcommand);
  } catch (const std::exception& e) {
    std::cerr << "hartree-lab: " << e.what() << "\n";
    return static_cast<int>(Status::invalid);
  }

  hartree::cli::OutputSink sink(cfg.output.dir);
  const auto start = std::chrono::steady_clock::now();
  Status status = Status::ok;
  std::optional<std::string> error;
  try {
    status = hartree::cli::dispatch(subcommand, cfg, sink);
  } catch (const std::exception& e) {
    status = classify(e);
    error = e.what();
    std::cerr << "hartree-lab " << subcommand << ": " << e.what() << "\n";
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  nlohmann::json manifest{{"subcommand", subcommand},
                          {"config", hartree::cli::to_json(cfg)},
                          {"versions", hartree::io::build_info()},
                          {"wall_time", wall},
                          {"exit_status", static_cast<int>(status)},
                          {"outputs", sink.written()}};
  if (error) manifest["error"] = *error;
  try {
    hartree::io::write_file(sink.dir() / "manifest.json", manifest.dump(2) + "\n");
  } catch (const std::exception& e) {
    std::cerr << "hartree-lab: cannot write manifest: " << e.what() << "\n";
    if (status == Status::ok) status = Status::invalid;
  }
  return static_cast<int>(status);
}
