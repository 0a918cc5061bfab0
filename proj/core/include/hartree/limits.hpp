#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hartree/solve.hpp"

namespace hartree {

struct BoundFlags {
  bool herbst_ok = false;      // m c^2 sqrt(1 - (pi N / 2c)^2) <= -mu
  bool delta1_ok = false;      // m c^2 - m pi^2 N^2 / 4 <= -mu
  bool delta2_ok = false;      // -mu <= m c^2 + E_nr(N) / N
  bool h1_uniform_ok = false;  // filled by h1_uniform_check across a sweep
};

struct SweepRecord {
  double c = 0.0;
  double mu = 0.0;
  double gap = 0.0;      // -mu - m c^2
  double h1_dist = 0.0;  // || Q_c - Q_nr ||_H1
  double h1_norm = 0.0;  // || Q_c ||_H1
  double energy = 0.0;
  double mass = 0.0;
  double residual = 0.0;
  BoundFlags flags;
  std::optional<std::string> error;  // set when the solve failed

  bool ok() const noexcept { return !error.has_value(); }
};

struct SweepResult {
  std::vector<SweepRecord> records;  // ascending c
  GroundState reference;             // nonrelativistic state of the same mass
  double h1_bound = 0.0;             // M from h1_uniform_check
};

// Relativistic solves at each c (ascending), compared against the
// nonrelativistic ground state of mass N on the same grid. A failed solve is
// recorded in its record; InvalidArgument unless N < 0.9 (2/pi) c for every c.
SweepResult sweep_c(std::vector<double> cs, double m, double N, GridPtr grid, const RelativisticOptions& opts = {},
                    int jobs = 1);

// Upper and lower bounds on -mu for a solved record. `tol` is an absolute slack.
BoundFlags mu_bounds_check(const SweepRecord& record, double m, double N, double e_nr, double tol = 1e-9);

struct H1Uniform {
  bool stable = false;  // running maximum changed by <= 5% on the last record
  double bound = 0.0;   // max ||Q_c||_H1
};

// Considers records that solved; sets h1_uniform_ok on them when stable.
H1Uniform h1_uniform_check(std::vector<SweepRecord>& records);

struct EnergyPoint {
  double N = 0.0;
  std::optional<double> energy;
  std::optional<std::string> error;
};

struct EnergyCurve {
  double c = 0.0;
  double m = 0.0;
  std::vector<EnergyPoint> points;
  // Second differences E(N_{i-1}) - 2 E(N_i) + E(N_{i+1}) over consecutive
  // solved points; assumes uniformly spaced masses.
  std::vector<double> second_differences;
  bool concave() const noexcept;
};

EnergyCurve energy_curve(const std::vector<double>& Ns, double c, double m, GridPtr grid,
                         const RelativisticOptions& opts = {}, int jobs = 1);

struct MassProbe {
  double N = 0.0;
  bool converged = false;
  std::string outcome;  // "converged", "collapse" or "no-convergence"
};

struct CriticalMassEstimate {
  double N_lo = 0.0;  // largest mass with a converged solve
  double N_hi = 0.0;  // smallest mass without one
  double c = 0.0;
  double m = 0.0;
  std::vector<MassProbe> trace;

  double width() const noexcept { return N_hi - N_lo; }
  // Lower bound c 4/pi for the critical mass at this c.
  double lower_bound() const noexcept;
};

// Expands N upward from c until a solve fails with collapse, then bisects.
// Inconclusive if collapse is not detected below 10 c 4/pi.
CriticalMassEstimate critical_mass_estimate(double c, double m, GridPtr grid, double bracket_tol,
                                            const RelativisticOptions& opts = {});

}  // namespace hartree
