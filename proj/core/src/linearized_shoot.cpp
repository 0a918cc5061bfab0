#include <cmath>
#include <numbers>
#include <vector>

#include "hartree/coulomb.hpp"
#include "hartree/errors.hpp"
#include "hartree/linops.hpp"

namespace hartree {

namespace {
constexpr double blow_up = 1e8;
}

// Marching scheme in u = r v on the grid nodes:
//   u_{i+1} = 2 u_i - u_{i-1} + 2m h^2 [(lambda - Phi_i) u_i + r_i W_i],
// the row of the discrete sector Laplacian solved for its right neighbour. The
// kernel term at r_i only involves v_j for j < i, so the scheme is explicit and
// the discrete Wronskian identity against Q holds to rounding.
LinearizedShot linearized_shoot(const GroundState& state, double v0) {
  if (state.params.model != Model::nonrelativistic) throw InvalidArgument("linearized shooting needs a nonrelativistic state");
  if (v0 == 0.0 || !std::isfinite(v0)) throw InvalidArgument("initial value must be finite and nonzero");
  const RadialProfile& Q = state.Q;
  const RadialGrid& g = Q.grid();
  const std::size_t n = g.n();
  const double h = g.h();
  const double k2m = 2.0 * state.params.m;
  const double lambda = state.multiplier;
  const double four_pi_h = 4.0 * std::numbers::pi * h;
  const RadialProfile phi = newton_potential(hadamard(Q, Q));

  LinearizedShot out{RadialProfile(Q.grid_ptr()), RadialProfile(Q.grid_ptr()), 0, 0.0, 0.0, true};
  std::vector<double> u(n + 1, 0.0);  // u[i] at r = i h
  u[1] = h * v0 * (1.0 + k2m * (lambda - phi[0]) * h * h / 6.0);
  double a = 0.0;  // sum_{j<i} 4 pi h r_j Q_j v_j
  double b = 0.0;  // sum_{j<i} 4 pi h r_j^2 Q_j v_j
  std::size_t count = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t k = i - 1;
    const double r = g.r(k);
    const double v = u[i] / r;
    out.v[k] = v;
    count = i;
    if (v * v0 <= 0.0) out.sign_preserving = false;
    const double w = 2.0 * Q[k] * (a - b / r);
    out.W[k] = w;
    if (std::abs(v) > blow_up || i == n) break;
    a += four_pi_h * r * Q[k] * v;
    b += four_pi_h * r * r * Q[k] * v;
    u[i + 1] = 2.0 * u[i] - u[i - 1] + k2m * h * h * ((lambda - phi[k]) * u[i] + r * w);
  }
  out.count = count;
  out.stop_radius = g.r(count - 1);

  // Log-slope fitted by least squares over the final decade of |v|.
  const double last = std::abs(out.v[count - 1]);
  std::size_t first = count - 1;
  while (first > 0 && std::abs(out.v[first - 1]) >= 0.1 * last && out.v[first - 1] != 0.0) --first;
  const std::size_t m = count - first;
  if (m >= 2) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t k = first; k < count; ++k) {
      const double x = g.r(k);
      const double y = std::log(std::abs(out.v[k]));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double dm = static_cast<double>(m);
    out.growth_rate = (dm * sxy - sx * sy) / (dm * sxx - sx * sx);
  }
  return out;
}

}  // namespace hartree
