#pragma once

#include <Eigen/Dense>

#include "hartree/grid.hpp"

namespace hartree {

// Modified Bessel function I_{l+1/2}(z) for 0 <= l <= 64 and z > 0.
double bessel_i_half(int l, double z);
// e^{-z} I_{l+1/2}(z); finite for every z > 0.
double bessel_i_half_scaled(int l, double z);
// log I_{l+1/2}(z); finite even where I itself under- or overflows.
double log_bessel_i_half(int l, double z);

// Logarithm of the sector heat kernel
//   (1/2t) (rs)^(-1/2) exp(-(r^2+s^2)/4t) I_{l+1/2}(rs/2t)
// with respect to the measure r^2 dr.
double log_heat_kernel(int l, double t, double r, double s);

struct HeatKernelSector {
  int l = 0;
  double t = 0.0;
  GridPtr grid;
  // matrix(i,j) = kernel(r_i, r_j) r_j^2 h, so that (matrix * f)_i approximates
  // the action of e^{t Delta_l} on samples f.
  Eigen::MatrixXd matrix;
  // log of each entry; stays finite where the entry underflows.
  Eigen::MatrixXd log_entries;
};

HeatKernelSector heat_kernel_sector(int l, double t, GridPtr grid);

}  // namespace hartree
