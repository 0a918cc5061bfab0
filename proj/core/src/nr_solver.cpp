#include <cmath>
#include <string>
#include <vector>

#include "hartree/coulomb.hpp"
#include "hartree/errors.hpp"
#include "hartree/interp.hpp"
#include "hartree/solve.hpp"
#include "linalg.hpp"

namespace hartree {
namespace {

// Mass of the normalized ground state; only a starting value for the
// grid-scale iteration in solve_nr.
constexpr double normalized_mass_estimate = 3.5053;

// Solves (-Delta + 1) f = g through (T + I) (r f) = r g.
class ShiftedLaplacianSolver {
 public:
  explicit ShiftedLaplacianSolver(const RadialGrid& g)
      : grid_(g), diag_(g.n(), 2.0 / (g.h() * g.h()) + 1.0), off_(g.n() - 1, -1.0 / (g.h() * g.h())) {}

  RadialProfile solve(const RadialProfile& rhs) const {
    const std::size_t n = grid_.n();
    std::vector<double> b(n);
    for (std::size_t k = 0; k < n; ++k) b[k] = grid_.r(k) * rhs[k];
    std::vector<double> u = linalg::solve_spd_tridiagonal(diag_, off_, b);
    for (std::size_t k = 0; k < n; ++k) u[k] /= grid_.r(k);
    return RadialProfile(rhs.grid_ptr(), std::move(u));
  }

 private:
  const RadialGrid& grid_;
  std::vector<double> diag_;
  std::vector<double> off_;
};

}  // namespace

GroundState solve_nr_normalized(GridPtr grid, double tol, int max_iter) {
  if (!(tol >= 1e-14 && tol <= 1e-4)) throw InvalidArgument("tolerance must lie in [1e-14, 1e-4]");
  if (max_iter < 1) throw InvalidArgument("iteration cap must be positive");
  const ShiftedLaplacianSolver resolvent(*grid);
  RadialProfile u = RadialProfile::sample(grid, [](double r) { return std::exp(-r * r); });

  for (int it = 0; it < max_iter; ++it) {
    const RadialProfile phi = newton_potential(hadamard(u, u));
    const RadialProfile nonlinear = hadamard(phi, u);
    RadialProfile lhs = apply_sector_laplacian(u, 0);
    lhs += u;
    const double residual = norm_l2(lhs - nonlinear);
    if (residual <= tol) {
      GroundState gs{u, 1.0, {}, mass(u), energy_nr(u, 0.5), residual, it};
      gs.params.model = Model::nonrelativistic;
      gs.params.m = 0.5;
      gs.params.multiplier = 1.0;
      return gs;
    }
    const double num = inner(u, lhs);
    const double den = inner(u, nonlinear);
    if (!(den > 0.0) || !std::isfinite(num)) throw Collapse("stabilizing factor is undefined");
    const double gamma = num / den;
    if (!std::isfinite(gamma) || gamma > 1e12) throw Collapse("stabilizing factor diverged");
    u = resolvent.solve(nonlinear) * std::pow(gamma, 1.5);
  }
  throw NoConvergence("Petviashvili iteration did not reach tolerance in " + std::to_string(max_iter) +
                      " iterations");
}

GroundState solve_nr(GridPtr grid, double m, double N, const SolverOptions& opts) {
  if (!(m > 0.0)) throw InvalidArgument("m must be positive");
  if (!(N > 0.0)) throw InvalidArgument("mass N must be positive");
  // Q(x) = a Q0(b x) maps the normalized state to mass N when b = 2 m N / N0 and
  // a = b^2 / sqrt(2m); N0 is the discrete mass on the scaled grid.
  double n0 = normalized_mass_estimate;
  GroundState base{RadialProfile(grid), 0.0, {}, 0.0, 0.0, 0.0, 0};
  double b = 0.0;
  for (int pass = 0; pass < 8; ++pass) {
    b = 2.0 * m * N / n0;
    base = solve_nr_normalized(make_grid(grid->n(), b * grid->r_max()), opts.tol, opts.max_iter);
    const double updated = base.mass;
    const bool settled = std::abs(updated - n0) <= 1e-14 * n0;
    n0 = updated;
    if (settled) break;
  }
  b = 2.0 * m * N / n0;
  if (std::abs(b * grid->r_max() - base.grid()->r_max()) > 1e-12 * base.grid()->r_max())
    base = solve_nr_normalized(make_grid(grid->n(), b * grid->r_max()), opts.tol, opts.max_iter);

  const double a = b * b / std::sqrt(2.0 * m);
  const double lambda = b * b / (2.0 * m);
  std::vector<double> values(base.Q.data());
  for (double& v : values) v *= a;
  RadialProfile Q(grid, std::move(values));
  GroundState gs{Q, lambda, {}, mass(Q), energy_nr(Q, m), residual_nr(Q, m, lambda), base.iterations};
  gs.params.model = Model::nonrelativistic;
  gs.params.m = m;
  gs.params.mass = N;
  return gs;
}

GroundState solve_nr_multiplier(GridPtr grid, double m, double lambda, const SolverOptions& opts) {
  if (!(m > 0.0)) throw InvalidArgument("m must be positive");
  if (!(lambda > 0.0)) throw InvalidArgument("multiplier must be positive");
  const double b = std::sqrt(2.0 * m * lambda);
  const GroundState base = solve_nr_normalized(make_grid(grid->n(), b * grid->r_max()), opts.tol, opts.max_iter);
  const double a = b * b / std::sqrt(2.0 * m);
  std::vector<double> values(base.Q.data());
  for (double& v : values) v *= a;
  RadialProfile Q(grid, std::move(values));
  GroundState gs{Q, lambda, {}, mass(Q), energy_nr(Q, m), residual_nr(Q, m, lambda), base.iterations};
  gs.params.model = Model::nonrelativistic;
  gs.params.m = m;
  gs.params.multiplier = lambda;
  return gs;
}

namespace {

double support_radius(const RadialProfile& Q) {
  const double peak = max_abs(Q);
  const RadialGrid& g = Q.grid();
  for (std::size_t k = g.n(); k-- > 0;)
    if (std::abs(Q[k]) > 1e-10 * peak) return g.r(k);
  return 0.0;
}

void require_nonrelativistic(const GroundState& s) {
  if (s.params.model != Model::nonrelativistic) throw InvalidArgument("rescaling applies to nonrelativistic states");
}

GroundState finish_rescaled(const GroundState& state, RadialProfile Q, double b) {
  GroundState out = state;
  const double m = state.params.m;
  out.multiplier = b * b * state.multiplier;
  out.mass = mass(Q);
  out.energy = energy_nr(Q, m);
  out.residual = residual_nr(Q, m, out.multiplier);
  out.Q = std::move(Q);
  if (state.params.mass) {
    out.params.mass = b * *state.params.mass;
    out.params.multiplier.reset();
  } else {
    out.params.multiplier = out.multiplier;
  }
  return out;
}

}  // namespace

GroundState rescale(const GroundState& state, double b) {
  require_nonrelativistic(state);
  if (!(b > 0.0)) throw InvalidArgument("scale factor must be positive");
  const double r_support = support_radius(state.Q);
  if (b < r_support / state.grid()->r_max())
    throw ResampleOutOfRange("rescaled profile would extend beyond r_max");
  RadialProfile Q = resample(state.Q, state.grid(), b);
  Q *= b * b;
  return finish_rescaled(state, std::move(Q), b);
}

GroundState rescale_exact(const GroundState& state, double b) {
  require_nonrelativistic(state);
  if (!(b > 0.0)) throw InvalidArgument("scale factor must be positive");
  GridPtr grid = make_grid(state.grid()->n(), state.grid()->r_max() / b);
  std::vector<double> values(state.Q.data());
  for (double& v : values) v *= b * b;
  return finish_rescaled(state, RadialProfile(grid, std::move(values)), b);
}

}  // namespace hartree
