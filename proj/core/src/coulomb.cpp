#include "hartree/coulomb.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hartree/errors.hpp"

namespace hartree {

namespace {
constexpr double four_pi = 4.0 * std::numbers::pi;
}

double kernel_k(double r, double s) {
  if (s < 0.0 || r < 0.0) throw DomainError("kernel arguments must be nonnegative");
  if (s > r) throw DomainError("kernel requires s <= r");
  if (r == 0.0) return 0.0;
  return four_pi * s * (1.0 - s / r);
}

double multipole_kernel(int l, double r, double s) {
  if (l < 0 || l > max_sector) throw DomainError("sector index out of range");
  const double lo = std::min(r, s);
  const double hi = std::max(r, s);
  if (!(hi > 0.0)) throw DomainError("multipole kernel needs a positive radius");
  const double ratio = l == 0 ? 1.0 : std::exp(static_cast<double>(l) * std::log(lo / hi));
  return four_pi / static_cast<double>(2 * l + 1) * ratio / hi;
}

RadialProfile newton_potential(const RadialProfile& rho) {
  const RadialGrid& g = rho.grid();
  const std::size_t n = g.n();
  double peak = 0.0;
  for (double v : rho.values()) peak = std::max(peak, std::abs(v));
  if (peak > 0.0 && std::abs(rho[n - 1]) > 1e-8 * peak)
    warn("density has not decayed at r_max; Coulomb potential is truncated");

  RadialProfile phi(rho.grid_ptr());
  // Outer part: sum over j > i of w_j rho_j / r_j, accumulated from the edge.
  double outer = 0.0;
  for (std::size_t k = n; k-- > 0;) {
    phi[k] = outer;
    outer += g.w(k) * rho[k] / g.r(k);
  }
  double enclosed = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    enclosed += g.w(k) * rho[k];
    phi[k] += enclosed / g.r(k);
  }
  return phi;
}

namespace detail {

RadialProfile apply_w_sector_unchecked(int l, const RadialProfile& Q, const RadialProfile& f) {
  if (l < 0 || l > max_sector) throw DomainError("sector index out of range: " + std::to_string(l));
  require_same_grid(Q, f);
  const RadialGrid& g = Q.grid();
  const std::size_t n = g.n();
  const double dl = static_cast<double>(l);

  // S_i = sum_{j<=i} w_j q_j r_j^l / r_i^(l+1) and T_i = sum_{j>i} w_j q_j r_i^l / r_j^(l+1),
  // propagated through node ratios so no power of r is formed explicitly.
  std::vector<double> S(n);
  std::vector<double> T(n);
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double q = g.w(k) * Q[k] * f[k] / g.r(k);
    if (k > 0) acc *= std::pow(g.r(k - 1) / g.r(k), dl + 1.0);
    acc += q;
    S[k] = acc;
  }
  acc = 0.0;
  T[n - 1] = 0.0;
  for (std::size_t k = n - 1; k-- > 0;) {
    const double q = g.w(k + 1) * Q[k + 1] * f[k + 1] / g.r(k + 1);
    acc = (acc + q) * (l == 0 ? 1.0 : std::pow(g.r(k) / g.r(k + 1), dl));
    T[k] = acc;
  }
  RadialProfile out(Q.grid_ptr());
  const double c = -2.0 / (2.0 * dl + 1.0);
  for (std::size_t k = 0; k < n; ++k) out[k] = c * Q[k] * (S[k] + T[k]);
  return out;
}

}  // namespace detail

RadialProfile apply_w_sector(int l, const RadialProfile& Q, const RadialProfile& f) {
  if (l < 1) throw DomainError("W sector term is defined for l >= 1");
  return detail::apply_w_sector_unchecked(l, Q, f);
}

double newton_sigma(const RadialProfile& Q, const RadialProfile& xi) {
  require_same_grid(Q, xi);
  const RadialGrid& g = Q.grid();
  double s = 0.0;
  for (std::size_t k = 0; k < g.n(); ++k) s += g.w(k) * Q[k] * xi[k] / g.r(k);
  return s;
}

RadialProfile apply_newton_linearized(const RadialProfile& Q, const RadialProfile& xi) {
  require_same_grid(Q, xi);
  const RadialGrid& g = Q.grid();
  const std::size_t n = g.n();
  const double h = g.h();
  const double sigma = newton_sigma(Q, xi);
  // Interior integral sum_{j<i} h K(r_i, r_j) rho_j with K = 4 pi s - 4 pi s^2 / r.
  RadialProfile out(Q.grid_ptr());
  double a = 0.0;
  double b = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double r = g.r(k);
    const double interior = a - b / r;
    out[k] = 2.0 * Q[k] * interior - 2.0 * Q[k] * sigma;
    const double rho = Q[k] * xi[k];
    a += four_pi * h * r * rho;
    b += four_pi * h * r * r * rho;
  }
  return out;
}

}  // namespace hartree
