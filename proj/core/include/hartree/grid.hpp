#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace hartree {

// Uniform radial grid r_i = i*h, i = 1..n, with h = r_max/(n+1).
// Dirichlet data sit at r = 0 (through u = r f) and at r = r_max.
class RadialGrid {
 public:
  RadialGrid(std::size_t n, double r_max);

  std::size_t n() const noexcept { return n_; }
  double r_max() const noexcept { return r_max_; }
  double h() const noexcept { return h_; }

  // Zero-based access: r(k) is the node r_{k+1}.
  double r(std::size_t k) const { return nodes_[k]; }
  double w(std::size_t k) const { return weights_[k]; }
  std::span<const double> nodes() const noexcept { return nodes_; }
  // Quadrature weights 4 pi r_i^2 h for integrals over R^3 of radial functions.
  std::span<const double> weights() const noexcept { return weights_; }

  friend bool operator==(const RadialGrid& a, const RadialGrid& b) noexcept {
    return a.n_ == b.n_ && a.r_max_ == b.r_max_;
  }

 private:
  std::size_t n_;
  double r_max_;
  double h_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

using GridPtr = std::shared_ptr<const RadialGrid>;

// Throws InvalidArgument for n < 16 or r_max < 1.
GridPtr make_grid(std::size_t n, double r_max);

// Samples of a radial function on a grid. Arithmetic between profiles on
// different grids throws InvalidArgument.
class RadialProfile {
 public:
  explicit RadialProfile(GridPtr grid);
  RadialProfile(GridPtr grid, std::vector<double> values);

  static RadialProfile sample(GridPtr grid, const std::function<double(double)>& f);

  const RadialGrid& grid() const noexcept { return *grid_; }
  const GridPtr& grid_ptr() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }

  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }
  const std::vector<double>& data() const noexcept { return values_; }

  double operator[](std::size_t k) const { return values_[k]; }
  double& operator[](std::size_t k) { return values_[k]; }

  RadialProfile& operator+=(const RadialProfile& other);
  RadialProfile& operator-=(const RadialProfile& other);
  RadialProfile& operator*=(double s) noexcept;

  friend RadialProfile operator+(RadialProfile a, const RadialProfile& b) { return a += b; }
  friend RadialProfile operator-(RadialProfile a, const RadialProfile& b) { return a -= b; }
  friend RadialProfile operator*(RadialProfile a, double s) { return a *= s; }
  friend RadialProfile operator*(double s, RadialProfile a) { return a *= s; }

  // Pointwise product.
  friend RadialProfile hadamard(const RadialProfile& a, const RadialProfile& b);

 private:
  GridPtr grid_;
  std::vector<double> values_;
};

bool same_grid(const RadialProfile& a, const RadialProfile& b) noexcept;
void require_same_grid(const RadialProfile& a, const RadialProfile& b);

// Weighted inner product sum_i w_i f_i g_i.
double inner(const RadialProfile& f, const RadialProfile& g);
double norm_l2(const RadialProfile& f);
double max_abs(const RadialProfile& f) noexcept;

double mass(const RadialProfile& f);

// -f'' - (2/r) f' + l(l+1) f / r^2 through u = r f with u(0) = u(r_max) = 0.
RadialProfile apply_sector_laplacian(const RadialProfile& f, int l);

// Quadratic form <f, L_l f>_w evaluated with forward differences of u = r f.
// Equals inner(f, apply_sector_laplacian(f, l)) up to rounding.
double dirichlet_form(const RadialProfile& f, int l = 0);

// Centered-difference derivative; second-order one-sided at the first node,
// f(r_max) = 0 at the last.
RadialProfile derivative(const RadialProfile& f);

// sqrt(mass(f) + sum_i w_i f'(r_i)^2). The mass parameter m is validated but
// does not weight the norm.
double norm_h1(const RadialProfile& f, double m);

}  // namespace hartree
