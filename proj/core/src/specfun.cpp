#include "hartree/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hartree/coulomb.hpp"
#include "hartree/errors.hpp"

namespace hartree {
namespace {

void check_args(int l, double z) {
  if (l < 0 || l > max_sector) throw DomainError("Bessel order index out of range: " + std::to_string(l));
  if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("Bessel argument must be positive and finite");
}

// log I_nu(z) from the ascending series, nu = l + 1/2.
double log_series(int l, double z) {
  const double nu = l + 0.5;
  const double q = 0.25 * z * z;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 200; ++k) {
    term *= q / ((k + 1.0) * (k + 1.0 + nu));
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return nu * std::log(0.5 * z) - std::lgamma(nu + 1.0) + std::log(sum);
}

// e^{-z} I_{l+1/2}(z) from the terminating expansion
//   I = (2 pi z)^{-1/2} [e^z sum_k (-1)^k a_k (2z)^-k + (-1)^{l+1} e^{-z} sum_k a_k (2z)^-k],
// a_k = (l+k)! / (k! (l-k)!). Free of cancellation once z >= l(l+1).
double scaled_closed_form(int l, double z) {
  double a = 1.0;
  double alt = 1.0;
  double pos = 1.0;
  double p = 1.0;
  for (int k = 1; k <= l; ++k) {
    a *= static_cast<double>((l + k) * (l - k + 1)) / k;
    p /= 2.0 * z;
    const double t = a * p;
    alt += (k % 2 == 0 ? t : -t);
    pos += t;
  }
  const double sign = (l % 2 == 0) ? -1.0 : 1.0;
  return (alt + sign * std::exp(-2.0 * z) * pos) / std::sqrt(2.0 * std::numbers::pi * z);
}

// Ratio I_{l+1/2}(z) / I_{l-1/2}(z) by the modified Lentz continued fraction.
double top_ratio(int l, double z) {
  constexpr double tiny = 1e-300;
  const double nu = l + 0.5;
  double f = tiny;
  double C = f;
  double D = 0.0;
  for (int k = 0; k < 100000; ++k) {
    const double b = 2.0 * (nu + k) / z;
    D = b + D;
    if (D == 0.0) D = tiny;
    C = b + 1.0 / C;
    if (C == 0.0) C = tiny;
    D = 1.0 / D;
    const double delta = C * D;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  // f = 1/(b0 + 1/(b1 + ...)) with b_k = 2(nu+k)/z.
  return f;
}

double scaled_half(double z) {
  // e^{-z} sqrt(2/(pi z)) sinh z
  return std::sqrt(2.0 / (std::numbers::pi * z)) * 0.5 * (-std::expm1(-2.0 * z));
}

// e^{-z} I_{l+1/2}(z) for 1 <= z < l(l+1): ratios from the stable backward
// recurrence r_{nu-1} = 1 / (2(nu-1)/z + r_nu) seeded by the continued fraction.
double scaled_by_ratios(int l, double z) {
  double r = top_ratio(l, z);
  double prod = r;
  for (int k = l - 1; k >= 1; --k) {
    r = 1.0 / (2.0 * (k + 0.5) / z + r);
    prod *= r;
  }
  return scaled_half(z) * prod;
}

}  // namespace

double log_bessel_i_half(int l, double z) {
  check_args(l, z);
  if (z < 1.0) return log_series(l, z);
  if (l == 0) return z + std::log(scaled_half(z));
  if (z >= static_cast<double>(l) * (l + 1)) return z + std::log(scaled_closed_form(l, z));
  return z + std::log(scaled_by_ratios(l, z));
}

double bessel_i_half_scaled(int l, double z) {
  check_args(l, z);
  if (z < 1.0) return std::exp(log_series(l, z) - z);
  if (l == 0) return scaled_half(z);
  if (z >= static_cast<double>(l) * (l + 1)) return scaled_closed_form(l, z);
  return scaled_by_ratios(l, z);
}

double bessel_i_half(int l, double z) { return std::exp(log_bessel_i_half(l, z)); }

double log_heat_kernel(int l, double t, double r, double s) {
  if (!(t > 0.0)) throw DomainError("heat kernel time must be positive");
  if (!(r > 0.0) || !(s > 0.0)) throw DomainError("heat kernel radii must be positive");
  const double z = r * s / (2.0 * t);
  // exp(-(r^2+s^2)/4t) I(z) = exp(-(r-s)^2/4t) e^{-z} I(z)
  const double d = r - s;
  return -std::log(2.0 * t) - 0.5 * std::log(r * s) - d * d / (4.0 * t) + log_bessel_i_half(l, z) - z;
}

HeatKernelSector heat_kernel_sector(int l, double t, GridPtr grid) {
  if (!(t > 0.0)) throw DomainError("heat kernel time must be positive");
  if (l < 0 || l > max_sector) throw DomainError("sector index out of range");
  const auto n = static_cast<Eigen::Index>(grid->n());
  HeatKernelSector hk;
  hk.l = l;
  hk.t = t;
  hk.grid = grid;
  hk.log_entries.resize(n, n);
  hk.matrix.resize(n, n);
  const double h = grid->h();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double s = grid->r(static_cast<std::size_t>(j));
    const double log_weight = std::log(s * s * h);
    for (Eigen::Index i = 0; i <= j; ++i) {
      const double r = grid->r(static_cast<std::size_t>(i));
      const double lk = log_heat_kernel(l, t, r, s);
      hk.log_entries(i, j) = lk + log_weight;
      hk.log_entries(j, i) = lk + std::log(r * r * h);
    }
  }
  hk.matrix = hk.log_entries.array().exp().matrix();
  return hk;
}

}  // namespace hartree
