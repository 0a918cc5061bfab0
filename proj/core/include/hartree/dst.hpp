#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hartree/grid.hpp"

namespace hartree {

// Orthonormal type-I discrete sine transform of length n (self-inverse):
//   out_k = sqrt(2/(n+1)) sum_j in_j sin(pi (j+1)(k+1) / (n+1)).
// Plans are created once per length and shared; apply() is thread-safe.
class SineTransform {
 public:
  explicit SineTransform(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  void apply(std::span<const double> in, std::span<double> out) const;

 private:
  std::size_t n_;
  void* plan_;
};

// Eigenvalues (4/h^2) sin^2(j pi / (2(n+1))), j = 1..n, of the Dirichlet second
// difference; the DST-I modes are its eigenvectors.
std::vector<double> laplacian_symbol(const RadialGrid& grid);

// sqrt(c^2 k + m^2 c^4) - m c^2 evaluated as c^2 k / (sqrt(c^2 k + m^2 c^4) + m c^2).
std::vector<double> relativistic_symbol(const RadialGrid& grid, double m, double c);

// Applies a diagonal multiplier in the l = 0 sine basis: u = r f is transformed,
// scaled mode by mode, transformed back and divided by r.
RadialProfile apply_sine_multiplier(const RadialProfile& f, std::span<const double> multiplier);

}  // namespace hartree
