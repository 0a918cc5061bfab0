#include "hartree/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hartree/errors.hpp"

namespace hartree {

RadialGrid::RadialGrid(std::size_t n, double r_max) : n_(n), r_max_(r_max) {
  if (n < 16) throw InvalidArgument("grid needs at least 16 nodes, got " + std::to_string(n));
  if (!(r_max >= 1.0) || !std::isfinite(r_max))
    throw InvalidArgument("grid radius must be a finite value >= 1, got " + std::to_string(r_max));
  h_ = r_max / static_cast<double>(n + 1);
  nodes_.resize(n);
  weights_.resize(n);
  const double c = 4.0 * std::numbers::pi * h_;
  for (std::size_t k = 0; k < n; ++k) {
    const double r = static_cast<double>(k + 1) * h_;
    nodes_[k] = r;
    weights_[k] = c * r * r;
  }
}

GridPtr make_grid(std::size_t n, double r_max) { return std::make_shared<const RadialGrid>(n, r_max); }

RadialProfile::RadialProfile(GridPtr grid) : grid_(std::move(grid)) {
  if (!grid_) throw InvalidArgument("profile requires a grid");
  values_.assign(grid_->n(), 0.0);
}

RadialProfile::RadialProfile(GridPtr grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (!grid_) throw InvalidArgument("profile requires a grid");
  if (values_.size() != grid_->n())
    throw InvalidArgument("profile length " + std::to_string(values_.size()) + " does not match grid size " +
                          std::to_string(grid_->n()));
  if (!std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); }))
    throw InvalidArgument("profile contains non-finite values");
}

RadialProfile RadialProfile::sample(GridPtr grid, const std::function<double(double)>& f) {
  std::vector<double> v(grid->n());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = f(grid->r(k));
  return RadialProfile(std::move(grid), std::move(v));
}

bool same_grid(const RadialProfile& a, const RadialProfile& b) noexcept {
  return a.grid_ptr() == b.grid_ptr() || a.grid() == b.grid();
}

void require_same_grid(const RadialProfile& a, const RadialProfile& b) {
  if (!same_grid(a, b)) throw InvalidArgument("profiles live on different grids");
}

RadialProfile& RadialProfile::operator+=(const RadialProfile& other) {
  require_same_grid(*this, other);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += other.values_[k];
  return *this;
}

RadialProfile& RadialProfile::operator-=(const RadialProfile& other) {
  require_same_grid(*this, other);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= other.values_[k];
  return *this;
}

RadialProfile& RadialProfile::operator*=(double s) noexcept {
  for (double& v : values_) v *= s;
  return *this;
}

RadialProfile hadamard(const RadialProfile& a, const RadialProfile& b) {
  require_same_grid(a, b);
  RadialProfile out(a.grid_);
  for (std::size_t k = 0; k < a.values_.size(); ++k) out.values_[k] = a.values_[k] * b.values_[k];
  return out;
}

double inner(const RadialProfile& f, const RadialProfile& g) {
  require_same_grid(f, g);
  const auto w = f.grid().weights();
  double s = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) s += w[k] * f[k] * g[k];
  return s;
}

double norm_l2(const RadialProfile& f) { return std::sqrt(inner(f, f)); }

double max_abs(const RadialProfile& f) noexcept {
  double m = 0.0;
  for (double v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

double mass(const RadialProfile& f) { return inner(f, f); }

RadialProfile apply_sector_laplacian(const RadialProfile& f, int l) {
  if (l < 0) throw InvalidArgument("sector index must be nonnegative");
  const RadialGrid& g = f.grid();
  const std::size_t n = g.n();
  const double inv_h2 = 1.0 / (g.h() * g.h());
  const double cent = static_cast<double>(l) * static_cast<double>(l + 1);
  RadialProfile out(f.grid_ptr());
  for (std::size_t k = 0; k < n; ++k) {
    const double r = g.r(k);
    const double u = r * f[k];
    const double um = k > 0 ? g.r(k - 1) * f[k - 1] : 0.0;
    const double up = k + 1 < n ? g.r(k + 1) * f[k + 1] : 0.0;
    out[k] = (2.0 * u - um - up) * inv_h2 / r + cent * f[k] / (r * r);
  }
  return out;
}

double dirichlet_form(const RadialProfile& f, int l) {
  if (l < 0) throw InvalidArgument("sector index must be nonnegative");
  const RadialGrid& g = f.grid();
  const std::size_t n = g.n();
  double s = 0.0;
  double prev = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double u = g.r(k) * f[k];
    s += (u - prev) * (u - prev);
    prev = u;
  }
  s += prev * prev;
  s *= 4.0 * std::numbers::pi / g.h();
  if (l > 0) {
    const double cent = static_cast<double>(l) * static_cast<double>(l + 1);
    for (std::size_t k = 0; k < n; ++k) s += g.w(k) * cent * f[k] * f[k] / (g.r(k) * g.r(k));
  }
  return s;
}

RadialProfile derivative(const RadialProfile& f) {
  const RadialGrid& g = f.grid();
  const std::size_t n = g.n();
  const double h = g.h();
  RadialProfile d(f.grid_ptr());
  d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
  for (std::size_t k = 1; k + 1 < n; ++k) d[k] = (f[k + 1] - f[k - 1]) / (2.0 * h);
  d[n - 1] = (0.0 - f[n - 2]) / (2.0 * h);
  return d;
}

double norm_h1(const RadialProfile& f, double m) {
  if (!(m > 0.0)) throw InvalidArgument("mass parameter must be positive");
  const RadialProfile d = derivative(f);
  return std::sqrt(mass(f) + inner(d, d));
}

}  // namespace hartree
