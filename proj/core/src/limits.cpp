#include "hartree/limits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hartree/errors.hpp"
#include "hartree/parallel.hpp"

namespace hartree {

namespace {
constexpr double four_over_pi = 4.0 / std::numbers::pi;
}

BoundFlags mu_bounds_check(const SweepRecord& record, double m, double N, double e_nr, double tol) {
  BoundFlags f;
  f.h1_uniform_ok = record.flags.h1_uniform_ok;
  if (!record.ok()) return f;
  const double rest = m * record.c * record.c;
  const double minus_mu = -record.mu;
  f.delta1_ok = rest - 0.25 * m * std::numbers::pi * std::numbers::pi * N * N <= minus_mu + tol;
  f.delta2_ok = minus_mu <= rest + e_nr / N + tol;
  const double s = std::numbers::pi * N / (2.0 * record.c);
  f.herbst_ok = s < 1.0 && rest * std::sqrt(1.0 - s * s) <= minus_mu + tol;
  return f;
}

H1Uniform h1_uniform_check(std::vector<SweepRecord>& records) {
  H1Uniform out;
  std::vector<double> running;
  for (const SweepRecord& r : records) {
    if (!r.ok()) continue;
    out.bound = std::max(out.bound, r.h1_norm);
    running.push_back(out.bound);
  }
  if (running.size() >= 2) {
    const double a = running[running.size() - 2];
    const double b = running.back();
    out.stable = std::abs(b - a) <= 0.05 * b;
  }
  for (SweepRecord& r : records)
    if (r.ok()) r.flags.h1_uniform_ok = out.stable;
  return out;
}

SweepResult sweep_c(std::vector<double> cs, double m, double N, GridPtr grid, const RelativisticOptions& opts,
                    int jobs) {
  if (cs.empty()) throw InvalidArgument("sweep needs at least one value of c");
  if (!(m > 0.0) || !(N > 0.0)) throw InvalidArgument("m and N must be positive");
  std::sort(cs.begin(), cs.end());
  for (double c : cs)
    if (!(c > 0.0) || !(N < 0.9 * (2.0 / std::numbers::pi) * c))
      throw InvalidArgument("c = " + std::to_string(c) + " violates N < 0.9 (2/pi) c");

  SweepResult res{{}, solve_nr(grid, m, N, SolverOptions{opts.tol, opts.max_iter}), 0.0};
  res.records.resize(cs.size());
  parallel_for(cs.size(), jobs, [&](std::size_t i) {
    SweepRecord& rec = res.records[i];
    rec.c = cs[i];
    try {
      const GroundState s = solve_rel(grid, m, cs[i], N, opts);
      rec.mu = s.multiplier;
      rec.gap = -s.multiplier - m * cs[i] * cs[i];
      rec.h1_dist = norm_h1(s.Q - res.reference.Q, m);
      rec.h1_norm = norm_h1(s.Q, m);
      rec.energy = s.energy;
      rec.mass = s.mass;
      rec.residual = s.residual;
    } catch (const Error& e) {
      rec.error = e.what();
    }
  });
  for (SweepRecord& rec : res.records) rec.flags = mu_bounds_check(rec, m, N, res.reference.energy);
  res.h1_bound = h1_uniform_check(res.records).bound;
  return res;
}

bool EnergyCurve::concave() const noexcept {
  if (second_differences.empty()) return false;
  return std::all_of(second_differences.begin(), second_differences.end(), [](double d) { return d < 0.0; });
}

EnergyCurve energy_curve(const std::vector<double>& Ns, double c, double m, GridPtr grid,
                         const RelativisticOptions& opts, int jobs) {
  if (Ns.size() < 3) throw InvalidArgument("energy curve needs at least three masses");
  EnergyCurve curve;
  curve.c = c;
  curve.m = m;
  curve.points.resize(Ns.size());
  parallel_for(Ns.size(), jobs, [&](std::size_t i) {
    EnergyPoint& p = curve.points[i];
    p.N = Ns[i];
    try {
      p.energy = solve_rel(grid, m, c, Ns[i], opts).energy;
    } catch (const Error& e) {
      p.error = e.what();
    }
  });
  for (std::size_t i = 1; i + 1 < curve.points.size(); ++i) {
    const auto& a = curve.points[i - 1].energy;
    const auto& b = curve.points[i].energy;
    const auto& d = curve.points[i + 1].energy;
    if (a && b && d) curve.second_differences.push_back(*a - 2.0 * *b + *d);
  }
  return curve;
}

double CriticalMassEstimate::lower_bound() const noexcept { return c * four_over_pi; }

CriticalMassEstimate critical_mass_estimate(double c, double m, GridPtr grid, double bracket_tol,
                                            const RelativisticOptions& opts) {
  if (!(c > 0.0) || !(m > 0.0)) throw InvalidArgument("c and m must be positive");
  if (!(bracket_tol > 0.0)) throw InvalidArgument("bracket tolerance must be positive");
  CriticalMassEstimate est;
  est.c = c;
  est.m = m;

  auto attempt = [&](double N) {
    MassProbe p{N, false, "converged"};
    try {
      solve_rel(grid, m, c, N, opts);
      p.converged = true;
    } catch (const Collapse&) {
      p.outcome = "collapse";
    } catch (const NoConvergence&) {
      p.outcome = "no-convergence";
    }
    est.trace.push_back(p);
    return p;
  };

  const double ceiling = 10.0 * c * four_over_pi;
  const double step = 0.25 * c;
  double lo = c;
  if (!attempt(lo).converged) throw Inconclusive("no converged solve at N = c");
  double hi = lo;
  bool collapsed = false;
  bool failed = false;
  for (double N = lo + step; N <= ceiling + 1e-12; N += step) {
    const MassProbe p = attempt(N);
    if (p.converged) {
      if (!failed) lo = N;
      continue;
    }
    if (!failed) {
      failed = true;
      hi = N;
    }
    if (p.outcome == "collapse") {
      collapsed = true;
      break;
    }
  }
  if (!collapsed) throw Inconclusive("collapse was not detected below 10 c 4/pi");

  while (hi - lo > bracket_tol) {
    const double mid = 0.5 * (lo + hi);
    if (attempt(mid).converged)
      lo = mid;
    else
      hi = mid;
  }
  est.N_lo = lo;
  est.N_hi = hi;
  return est;
}

}  // namespace hartree
