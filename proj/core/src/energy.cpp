#include <cmath>
#include <numbers>
#include <vector>

#include "hartree/coulomb.hpp"
#include "hartree/dst.hpp"
#include "hartree/errors.hpp"
#include "hartree/interp.hpp"
#include "hartree/solve.hpp"

namespace hartree {

const char* to_string(Model model) noexcept {
  return model == Model::nonrelativistic ? "nonrelativistic" : "relativistic";
}

void ModelParams::validate() const {
  if (!(m > 0.0) || !std::isfinite(m)) throw InvalidArgument("model mass parameter m must be positive");
  if (model == Model::relativistic && (!(c > 0.0) || !std::isfinite(c)))
    throw InvalidArgument("speed of light c must be positive");
  if (mass.has_value() == multiplier.has_value())
    throw InvalidArgument("exactly one of mass N or multiplier must be specified");
  if (mass && !(*mass > 0.0)) throw InvalidArgument("mass N must be positive");
}

double hartree_term(const RadialProfile& psi) {
  const RadialProfile rho = hadamard(psi, psi);
  return inner(newton_potential(rho), rho);
}

double energy_nr(const RadialProfile& psi, double m) {
  if (!(m > 0.0)) throw InvalidArgument("m must be positive");
  return dirichlet_form(psi) / (2.0 * m) - 0.5 * hartree_term(psi);
}

double kinetic_rel(const RadialProfile& psi, double m, double c) {
  const RadialGrid& g = psi.grid();
  const std::size_t n = g.n();
  const std::vector<double> sym = relativistic_symbol(g, m, c);
  SineTransform dst(n);
  std::vector<double> u(n), uh(n);
  for (std::size_t k = 0; k < n; ++k) u[k] = g.r(k) * psi[k];
  dst.apply(u, uh);
  double shifted = 0.0;
  for (std::size_t k = 0; k < n; ++k) shifted += sym[k] * uh[k] * uh[k];
  shifted *= 4.0 * std::numbers::pi * g.h();
  return shifted + m * c * c * mass(psi);
}

double energy_rel(const RadialProfile& psi, double m, double c) {
  return kinetic_rel(psi, m, c) - 0.5 * hartree_term(psi);
}

double residual_nr(const RadialProfile& Q, double m, double lambda) {
  const RadialProfile phi = newton_potential(hadamard(Q, Q));
  RadialProfile d = apply_sector_laplacian(Q, 0) * (1.0 / (2.0 * m));
  d += Q * lambda;
  d -= hadamard(phi, Q);
  return norm_l2(d);
}

double residual_rel(const RadialProfile& Q, double m, double c, double mu) {
  const std::vector<double> sym = relativistic_symbol(Q.grid(), m, c);
  const RadialProfile phi = newton_potential(hadamard(Q, Q));
  RadialProfile d = apply_sine_multiplier(Q, sym);
  d += Q * (mu + m * c * c);
  d -= hadamard(phi, Q);
  return norm_l2(d);
}

Virial virial_terms(const RadialProfile& Q) {
  return Virial{dirichlet_form(Q), mass(Q), hartree_term(Q)};
}

double action_normalized(const RadialProfile& Q) {
  const Virial v = virial_terms(Q);
  return 0.5 * v.kinetic + 0.5 * v.mass - 0.25 * v.hartree;
}

double action_scaling_derivative(const RadialProfile& Q, double eps) {
  if (!(eps > 0.0) || eps > 0.1) throw InvalidArgument("finite-difference step must lie in (0, 0.1]");
  const auto scaled = [&](double sigma) { return action_normalized(resample(Q, Q.grid_ptr(), 1.0 / sigma)); };
  return (scaled(1.0 + eps) - scaled(1.0 - eps)) / (2.0 * eps);
}

RadialProfile wronskian_residual(const RadialProfile& Q, const RadialProfile& v, const RadialProfile& W_of_v) {
  require_same_grid(Q, v);
  require_same_grid(Q, W_of_v);
  const RadialGrid& g = Q.grid();
  const std::size_t n = g.n();
  const double h = g.h();
  RadialProfile out(Q.grid_ptr());
  double integral = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double r0 = g.r(k);
    const double r1 = g.r(k + 1);
    integral += h * r0 * r0 * Q[k] * W_of_v[k];
    out[k] = r0 * r1 * (Q[k] * v[k + 1] - Q[k + 1] * v[k]) / h - integral;
  }
  return out;
}

}  // namespace hartree
