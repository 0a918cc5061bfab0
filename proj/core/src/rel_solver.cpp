#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "hartree/coulomb.hpp"
#include "hartree/dst.hpp"
#include "hartree/errors.hpp"
#include "hartree/solve.hpp"

namespace hartree {
namespace {

GroundState petviashvili_fixed_z(const RadialProfile& guess, double m, double c, double z,
                                 const RelativisticOptions& opts, double reference_peak) {
  if (!(z > 0.0)) throw InvalidArgument("shifted multiplier z must be positive");
  std::vector<double> symbol = relativistic_symbol(guess.grid(), m, c);
  for (double& s : symbol) s += z;
  std::vector<double> inverse(symbol.size());
  for (std::size_t k = 0; k < symbol.size(); ++k) inverse[k] = 1.0 / symbol[k];

  RadialProfile u = guess;
  for (int it = 0; it < opts.max_iter; ++it) {
    const RadialProfile phi = newton_potential(hadamard(u, u));
    const RadialProfile nonlinear = hadamard(phi, u);
    const RadialProfile lhs = apply_sine_multiplier(u, symbol);
    const double residual = norm_l2(lhs - nonlinear);
    if (residual <= opts.tol) {
      GroundState gs{u, z - m * c * c, {}, mass(u), energy_rel(u, m, c), residual, it};
      gs.params.model = Model::relativistic;
      gs.params.m = m;
      gs.params.c = c;
      gs.params.multiplier = gs.multiplier;
      return gs;
    }
    const double num = inner(u, lhs);
    const double den = inner(u, nonlinear);
    if (!(den > 0.0) || !std::isfinite(num)) throw Collapse("stabilizing factor is undefined");
    const double gamma = num / den;
    if (!std::isfinite(gamma) || gamma > 1e12) throw Collapse("stabilizing factor diverged");
    u = apply_sine_multiplier(nonlinear, inverse) * std::pow(gamma, 1.5);
    if (max_abs(u) > opts.growth_limit * reference_peak)
      throw Collapse("central value grew by more than " + std::to_string(opts.growth_limit) + "x");
  }
  throw NoConvergence("relativistic Petviashvili iteration did not converge at z = " + std::to_string(z));
}

}  // namespace

GroundState solve_rel_fixed_multiplier(const RadialProfile& guess, double m, double c, double z,
                                       const RelativisticOptions& opts) {
  return petviashvili_fixed_z(guess, m, c, z, opts, max_abs(guess));
}

GroundState solve_rel(GridPtr grid, double m, double c, double N, const RelativisticOptions& opts) {
  if (!(m > 0.0) || !(c > 0.0)) throw InvalidArgument("m and c must be positive");
  if (!(N > 0.0)) throw InvalidArgument("mass N must be positive");
  if (!(opts.tol >= 1e-14 && opts.tol <= 1e-4)) throw InvalidArgument("tolerance must lie in [1e-14, 1e-4]");
  if (N >= c * 4.0 / std::numbers::pi)
    warn("mass " + std::to_string(N) + " is not below c * 4/pi; a ground state may not exist");

  const GroundState nr = solve_nr(grid, m, N, SolverOptions{opts.tol, opts.max_iter});
  const double peak = max_abs(nr.Q);

  struct Sample {
    double z;
    double excess;  // mass - N
  };
  std::optional<Sample> below;  // excess < 0
  std::optional<Sample> above;  // excess > 0
  // Every fixed-z solve starts from the same guess: a warm start can satisfy the
  // residual test at a nearby z without moving, which stalls the secant.
  auto evaluate = [&](double z) {
    GroundState s = petviashvili_fixed_z(nr.Q, m, c, z, opts, peak);
    const Sample smp{z, s.mass - N};
    if (smp.excess < 0.0 && (!below || smp.z > below->z)) below = smp;
    if (smp.excess > 0.0 && (!above || smp.z < above->z)) above = smp;
    return std::pair{s, smp};
  };

  double z_prev = nr.multiplier;
  auto [state, prev] = evaluate(z_prev);
  double z = z_prev * (N / state.mass) * (N / state.mass);
  for (int outer = 0; outer < opts.max_outer; ++outer) {
    if (std::abs(state.mass - N) <= opts.mass_rtol * N) {
      state.params.mass = N;
      state.params.multiplier.reset();
      state.iterations = outer;
      return state;
    }
    auto [next, cur] = evaluate(z);
    state = std::move(next);
    double z_new = cur.z - cur.excess * (cur.z - prev.z) / (cur.excess - prev.excess);
    const bool bracketed = below && above;
    const bool outside = bracketed && (z_new <= below->z || z_new >= above->z);
    if (!std::isfinite(z_new) || z_new <= 0.0 || outside) {
      if (bracketed) {
        z_new = 0.5 * (below->z + above->z);
      } else if (cur.excess < 0.0) {
        z_new = 2.0 * cur.z;
      } else {
        z_new = 0.5 * cur.z;
      }
    }
    prev = cur;
    z = z_new;
  }
  throw NoConvergence("mass targeting did not converge for N = " + std::to_string(N));
}

}  // namespace hartree
