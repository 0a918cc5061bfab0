#pragma once

#include <Eigen/Dense>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "hartree/dense.hpp"
#include "hartree/grid.hpp"
#include "hartree/interp.hpp"

namespace hartree {

enum class Model { nonrelativistic, relativistic };

const char* to_string(Model model) noexcept;

struct ModelParams {
  Model model = Model::nonrelativistic;
  double m = 0.5;
  double c = 1.0;  // ignored for the nonrelativistic model
  std::optional<double> mass;
  std::optional<double> multiplier;

  // Throws InvalidArgument unless m > 0, c > 0 and exactly one target is set.
  void validate() const;
};

// Ground state Q with its Lagrange multiplier (lambda for the nonrelativistic
// model, mu for the relativistic one).
struct GroundState {
  RadialProfile Q;
  double multiplier = 0.0;
  ModelParams params;
  double mass = 0.0;
  double energy = 0.0;
  double residual = 0.0;
  int iterations = 0;

  const GridPtr& grid() const noexcept { return Q.grid_ptr(); }
};

struct SolverOptions {
  double tol = 1e-10;
  int max_iter = 5000;
};

// ---- energies ------------------------------------------------------------

// Hartree term D = int (|x|^-1 * psi^2) psi^2.
double hartree_term(const RadialProfile& psi);
// (1/2m) int |grad psi|^2 - (1/2) D, kinetic part from the discrete Dirichlet form.
double energy_nr(const RadialProfile& psi, double m);
// <psi, sqrt(-c^2 Delta + m^2 c^4) psi> in the l = 0 sine basis.
double kinetic_rel(const RadialProfile& psi, double m, double c);
double energy_rel(const RadialProfile& psi, double m, double c);

// Weighted L2 norm of (1/2m) L Q + lambda Q - (|x|^-1 * Q^2) Q.
double residual_nr(const RadialProfile& Q, double m, double lambda);
// Weighted L2 norm of sqrt(-c^2 Delta + m^2 c^4) Q - (|x|^-1 * Q^2) Q + mu Q.
double residual_rel(const RadialProfile& Q, double m, double c, double mu);

// Kinetic, mass and Hartree terms of a profile for m = 1/2; the normalized
// ground state satisfies M = 3T and D = 4T.
struct Virial {
  double kinetic = 0.0;
  double mass = 0.0;
  double hartree = 0.0;
};
Virial virial_terms(const RadialProfile& Q);

// Action S = T/2 + M/2 - D/4 of the normalized equation.
double action_normalized(const RadialProfile& Q);

// d/dsigma S(Q(./sigma)) at sigma = 1 by a central difference of step eps,
// resampling with cubic interpolation.
double action_scaling_derivative(const RadialProfile& Q, double eps = 1e-4);

// ---- nonrelativistic solvers --------------------------------------------

// Petviashvili iteration for -Delta Q - (|x|^-1 * Q^2) Q = -Q.
// NoConvergence after max_iter iterations, Collapse if the stabilizing factor diverges.
GroundState solve_nr_normalized(GridPtr grid, double tol, int max_iter = 5000);

// Ground state of -(1/2m) Delta Q - (|x|^-1 * Q^2) Q = -lambda Q with mass N.
// The normalized problem is solved on a grid scaled so that the nodes map
// onto `grid` exactly.
GroundState solve_nr(GridPtr grid, double m, double N, const SolverOptions& opts = {});

// Same equation with the multiplier lambda fixed instead of the mass.
GroundState solve_nr_multiplier(GridPtr grid, double m, double lambda, const SolverOptions& opts = {});

// b^2 Q(b .) resampled onto the same grid by cubic interpolation; multiplier b^2 lambda, mass b N.
// ResampleOutOfRange if the rescaled profile would not fit inside r_max.
GroundState rescale(const GroundState& state, double b);

// b^2 Q(b .) on the grid (n, r_max / b), where it is sampled without interpolation.
GroundState rescale_exact(const GroundState& state, double b);

// ---- shooting ------------------------------------------------------------

enum class ShotOutcome { crossed_zero, blew_up };

const char* to_string(ShotOutcome outcome) noexcept;

struct ShootingOptions {
  double step = 2e-3;          // RK4 step in the shooting variable
  double rel_width = 1e-12;    // bisection stops at width <= rel_width * v0
  double r_cap = 400.0;        // integration limit for one probe
  double divergence = 0.01;    // trust radius: endpoints differ by this fraction
  double tail_extent = 60.0;   // tail solved on [r_trust, r_trust + tail_extent / kappa]
};

struct ShotProbe {
  double v0 = 0.0;
  ShotOutcome outcome = ShotOutcome::crossed_zero;
  double radius = 0.0;  // where the classification was made
};

ShotOutcome classify_shot(double v0, const ShootingOptions& opts = {});

struct ShootingResult {
  double v0_lo = 0.0;
  double v0_hi = 0.0;
  double v0_star = 0.0;
  std::vector<ShotProbe> trace;
  double trust_radius = 0.0;
  double coulomb_at_origin = 0.0;  // C_v = 4 pi int s v^2 ds
  double norm = 0.0;               // N_v = 4 pi int s^2 v^2 ds
  double kappa = 0.0;              // sqrt(C_v - 1)
  std::shared_ptr<const UniformCubic> profile;  // v on [0, r_trust + tail]

  // v(r); zero beyond the tabulated range.
  double v(double r) const;
  // Profile of the normalized equation, Q(r) = b^2 v(b r) with b = 1/kappa.
  double normalized(double r) const;
  RadialProfile normalized_profile(GridPtr grid) const;
};

// Bisection on v(0) for v'' + (2/r) v' = (P - 1) v with
// P(r) = int_0^r K(r,s) v(s)^2 ds. The bracket is expanded inside (0, 100]
// when both ends classify alike; BracketFailure if that fails.
ShootingResult shoot_threshold(const ShootingOptions& opts = {}, std::pair<double, double> bracket = {0.1, 1.0});

// ---- relativistic solver -------------------------------------------------

struct RelativisticOptions {
  double tol = 1e-10;
  int max_iter = 5000;       // Petviashvili iterations per multiplier
  int max_outer = 60;        // multiplier updates
  double mass_rtol = 1e-9;   // relative mass mismatch accepted
  double growth_limit = 10.0;
};

// Ground state of sqrt(-c^2 Delta + m^2 c^4) Q - (|x|^-1 * Q^2) Q = -mu Q with mass N.
// Collapse if the profile concentrates; NoConvergence otherwise.
GroundState solve_rel(GridPtr grid, double m, double c, double N, const RelativisticOptions& opts = {});

// Petviashvili solve at fixed z = mu + m c^2 from an initial guess.
GroundState solve_rel_fixed_multiplier(const RadialProfile& guess, double m, double c, double z,
                                       const RelativisticOptions& opts = {});

// U sqrt(c^2 Lambda + m^2 c^4) U^T from the eigendecomposition of the sector
// Laplacian. Cached per (grid, l, m, c); SizeExceeded for n > 4000.
std::shared_ptr<const SymmetricOperator> sqrt_operator_sector(GridPtr grid, int l, double m, double c);

// Same operator minus m c^2, evaluated without cancellation.
std::shared_ptr<const SymmetricOperator> kinetic_operator_sector(GridPtr grid, int l, double m, double c);

inline constexpr std::size_t max_dense_size = 4000;

// ---- Wronskian -----------------------------------------------------------

// Discrete form of r^2 (Q v' - Q' v)(r) - int_0^r s^2 Q W ds on the staggered
// nodes r_{i+1/2}:
//   [r_i r_{i+1} (Q_i v_{i+1} - Q_{i+1} v_i)] / h - sum_{j<=i} h r_j^2 Q_j W_j.
// The last entry (no right neighbour) is zero.
RadialProfile wronskian_residual(const RadialProfile& Q, const RadialProfile& v, const RadialProfile& W_of_v);

}  // namespace hartree
