#include "hartree/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "hartree/errors.hpp"

namespace hartree::io {

namespace {

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::ostream& precise(std::ostream& os) { return os << std::setprecision(17); }

}  // namespace

json to_json(const RadialGrid& grid) { return {{"n", grid.n()}, {"r_max", grid.r_max()}}; }

json to_json(const RadialProfile& profile) {
  json arr = json::array();
  const RadialGrid& g = profile.grid();
  for (std::size_t k = 0; k < g.n(); ++k) arr.push_back({g.r(k), profile[k]});
  return arr;
}

json to_json(const GroundState& state) {
  json j;
  j["model"] = to_string(state.params.model);
  j["m"] = state.params.m;
  j["c"] = state.params.model == Model::relativistic ? json(state.params.c) : json(nullptr);
  j["N"] = state.mass;
  j["target_N"] = optional_number(state.params.mass);
  j["multiplier"] = state.multiplier;
  j["energy"] = state.energy;
  j["residual"] = state.residual;
  j["iterations"] = state.iterations;
  j["grid"] = to_json(state.Q.grid());
  return j;
}

json to_json(const SpectralReport& report) {
  return {{"l", report.l},
          {"kind", to_string(report.kind)},
          {"eigenvalues", report.eigenvalues},
          {"sign_definite", report.sign_definite},
          {"gap_bound", optional_number(report.gap_bound)},
          {"count_in_unit_interval", report.count_in_unit_interval}};
}

json to_json(const KernelCount& count) {
  return {{"total", count.total}, {"per_sector", count.per_sector}, {"eigenvalues", count.eigenvalues}};
}

json to_json(const NullspaceDiagnostics& diag) {
  return {{"resid_translation", diag.resid_translation},
          {"resid_R", diag.resid_R},
          {"tau", diag.tau},
          {"tau_separated", diag.tau_separated},
          {"kernel_counts", diag.kernel_counts}};
}

json to_json(const ShootingResult& result) {
  json trace = json::array();
  for (const ShotProbe& p : result.trace)
    trace.push_back({{"v0", p.v0}, {"outcome", to_string(p.outcome)}, {"radius", p.radius}});
  return {{"v0_lo", result.v0_lo},
          {"v0_hi", result.v0_hi},
          {"v0_star", result.v0_star},
          {"trust_radius", result.trust_radius},
          {"kappa", result.kappa},
          {"normalized_q0", result.kappa > 0.0 ? json(result.normalized(0.0)) : json(nullptr)},
          {"trace", trace}};
}

json to_json(const SweepResult& sweep) {
  json recs = json::array();
  for (const SweepRecord& r : sweep.records) {
    json j{{"c", r.c}};
    if (r.ok()) {
      j.update({{"mu", r.mu},
                {"gap", r.gap},
                {"h1_dist", r.h1_dist},
                {"h1_norm", r.h1_norm},
                {"energy", r.energy},
                {"N", r.mass},
                {"residual", r.residual},
                {"bound_flags",
                 {{"herbst_ok", r.flags.herbst_ok},
                  {"delta1_ok", r.flags.delta1_ok},
                  {"delta2_ok", r.flags.delta2_ok},
                  {"h1_uniform_ok", r.flags.h1_uniform_ok}}}});
    } else {
      j["error"] = *r.error;
    }
    recs.push_back(std::move(j));
  }
  return {{"reference", to_json(sweep.reference)}, {"h1_bound", sweep.h1_bound}, {"records", recs}};
}

json to_json(const EnergyCurve& curve) {
  json pts = json::array();
  for (const EnergyPoint& p : curve.points) {
    json j{{"N", p.N}, {"energy", optional_number(p.energy)}};
    if (p.error) j["error"] = *p.error;
    pts.push_back(std::move(j));
  }
  return {{"c", curve.c},
          {"m", curve.m},
          {"points", pts},
          {"second_differences", curve.second_differences},
          {"concave", curve.concave()}};
}

json to_json(const CriticalMassEstimate& estimate) {
  json trace = json::array();
  for (const MassProbe& p : estimate.trace) trace.push_back({{"N", p.N}, {"outcome", p.outcome}});
  return {{"N_lo", estimate.N_lo},
          {"N_hi", estimate.N_hi},
          {"width", estimate.width()},
          {"c", estimate.c},
          {"m", estimate.m},
          {"lower_bound", estimate.lower_bound()},
          {"trace", trace}};
}

void write_csv(std::ostream& os, const RadialProfile& profile) {
  precise(os) << "r,value\n";
  const RadialGrid& g = profile.grid();
  for (std::size_t k = 0; k < g.n(); ++k) os << g.r(k) << ',' << profile[k] << '\n';
}

void write_eigenfunctions_csv(std::ostream& os, const SpectralReport& report) {
  precise(os) << "index,eigenvalue,r,value\n";
  for (std::size_t j = 0; j < report.eigenvectors.size(); ++j) {
    const RadialProfile& f = report.eigenvectors[j];
    for (std::size_t k = 0; k < f.size(); ++k)
      os << j << ',' << report.eigenvalues[j] << ',' << f.grid().r(k) << ',' << f[k] << '\n';
  }
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& records) {
  precise(os) << "c,mu,gap,h1_dist,energy,residual,herbst_ok,delta1_ok,delta2_ok\n";
  for (const SweepRecord& r : records) {
    if (!r.ok()) continue;
    os << r.c << ',' << r.mu << ',' << r.gap << ',' << r.h1_dist << ',' << r.energy << ',' << r.residual << ','
       << r.flags.herbst_ok << ',' << r.flags.delta1_ok << ',' << r.flags.delta2_ok << '\n';
  }
}

void write_energy_csv(std::ostream& os, const EnergyCurve& curve) {
  precise(os) << "N,energy\n";
  for (const EnergyPoint& p : curve.points)
    if (p.energy) os << p.N << ',' << *p.energy << '\n';
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out << text;
    if (!out) throw Error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace hartree::io
