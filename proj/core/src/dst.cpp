#include "hartree/dst.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "hartree/errors.hpp"

namespace hartree {
namespace {

struct PlanDeleter {
  void operator()(fftw_plan_s* p) const noexcept { fftw_destroy_plan(p); }
};

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_plan plan_for(std::size_t n) {
  static std::map<std::size_t, std::unique_ptr<fftw_plan_s, PlanDeleter>> cache;
  std::lock_guard lock(planner_mutex());
  auto it = cache.find(n);
  if (it != cache.end()) return it->second.get();
  std::vector<double> a(n), b(n);
  fftw_plan p = fftw_plan_r2r_1d(static_cast<int>(n), a.data(), b.data(), FFTW_RODFT00,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED | FFTW_PRESERVE_INPUT);
  if (p == nullptr) throw Error("FFTW could not create a sine transform plan");
  cache.emplace(n, std::unique_ptr<fftw_plan_s, PlanDeleter>(p));
  return p;
}

}  // namespace

SineTransform::SineTransform(std::size_t n) : n_(n), plan_(plan_for(n)) {}

void SineTransform::apply(std::span<const double> in, std::span<double> out) const {
  if (in.size() != n_ || out.size() != n_) throw InvalidArgument("sine transform length mismatch");
  // The plan preserves its input, so the const_cast never leads to a write.
  fftw_execute_r2r(static_cast<fftw_plan>(plan_), const_cast<double*>(in.data()), out.data());
  const double scale = 1.0 / std::sqrt(2.0 * static_cast<double>(n_ + 1));
  for (double& v : out) v *= scale;
}

std::vector<double> laplacian_symbol(const RadialGrid& grid) {
  const std::size_t n = grid.n();
  std::vector<double> k(n);
  const double c = 4.0 / (grid.h() * grid.h());
  for (std::size_t j = 0; j < n; ++j) {
    const double s = std::sin(static_cast<double>(j + 1) * std::numbers::pi / (2.0 * static_cast<double>(n + 1)));
    k[j] = c * s * s;
  }
  return k;
}

std::vector<double> relativistic_symbol(const RadialGrid& grid, double m, double c) {
  if (!(m >= 0.0) || !(c > 0.0)) throw InvalidArgument("relativistic symbol needs m >= 0 and c > 0");
  std::vector<double> k = laplacian_symbol(grid);
  const double rest = m * c * c;
  for (double& v : k) {
    const double ck = c * c * v;
    v = ck / (std::sqrt(ck + rest * rest) + rest);
  }
  return k;
}

RadialProfile apply_sine_multiplier(const RadialProfile& f, std::span<const double> multiplier) {
  const RadialGrid& g = f.grid();
  const std::size_t n = g.n();
  if (multiplier.size() != n) throw InvalidArgument("multiplier length mismatch");
  SineTransform dst(n);
  std::vector<double> u(n), uh(n);
  for (std::size_t k = 0; k < n; ++k) u[k] = g.r(k) * f[k];
  dst.apply(u, uh);
  for (std::size_t k = 0; k < n; ++k) uh[k] *= multiplier[k];
  dst.apply(uh, u);
  RadialProfile out(f.grid_ptr());
  for (std::size_t k = 0; k < n; ++k) out[k] = u[k] / g.r(k);
  return out;
}

}  // namespace hartree
