#pragma once

#include "hartree/grid.hpp"

namespace hartree {

inline constexpr int max_sector = 64;

// K(r, s) = 4 pi s (1 - s/r) for 0 <= s <= r. DomainError if s > r.
double kernel_k(double r, double s);

// (4 pi / (2l+1)) r_<^l / r_>^(l+1), evaluated without overflow.
double multipole_kernel(int l, double r, double s);

// Positive Coulomb potential (|x|^-1 * rho) of a radial density, O(n).
RadialProfile newton_potential(const RadialProfile& rho);

// Sector nonlocal term
//   (W_l f)(r) = -(8 pi/(2l+1)) Q(r) int r_<^l / r_>^(l+1) Q(s) f(s) s^2 ds,
// for 1 <= l <= max_sector.
RadialProfile apply_w_sector(int l, const RadialProfile& Q, const RadialProfile& f);

// sigma(xi) = sum_i w_i Q_i xi_i / r_i.
double newton_sigma(const RadialProfile& Q, const RadialProfile& xi);

// -2 Q (|x|^-1 * (Q xi)) through the split into the interior K-integral and the
// rank-one far term -2 Q sigma(xi).
RadialProfile apply_newton_linearized(const RadialProfile& Q, const RadialProfile& xi);

namespace detail {
// Same as apply_w_sector but accepts l = 0 (monopole), which reproduces the
// full radial nonlocal term.
RadialProfile apply_w_sector_unchecked(int l, const RadialProfile& Q, const RadialProfile& f);
}  // namespace detail

}  // namespace hartree
