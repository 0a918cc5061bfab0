#pragma once

#include <vector>

#include "hartree/grid.hpp"

namespace hartree {

// Samples y_k = y(x0 + k dx) evaluated by local four-point Lagrange interpolation.
// With even = true and x0 = 0 the data are mirrored to negative arguments.
class UniformCubic {
 public:
  UniformCubic(double x0, double dx, std::vector<double> y, bool even = false);

  double operator()(double x) const;
  double x_end() const noexcept { return x0_ + dx_ * static_cast<double>(y_.size() - 1); }

 private:
  double x0_;
  double dx_;
  std::vector<double> y_;
  bool even_;
};

// Cubic interpolation of a radial profile: even continuation through r = 0,
// zero at and beyond r_max.
double interpolate(const RadialProfile& f, double r);

// Profile g on `target` with g(r) = f(scale * r).
RadialProfile resample(const RadialProfile& f, GridPtr target, double scale = 1.0);

}  // namespace hartree
