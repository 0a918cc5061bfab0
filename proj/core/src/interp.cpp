#include "hartree/interp.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "hartree/errors.hpp"

namespace hartree {
namespace {

double lagrange4(const std::array<double, 4>& x, const std::array<double, 4>& y, double t) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i) {
    double l = 1.0;
    for (int j = 0; j < 4; ++j)
      if (j != i) l *= (t - x[j]) / (x[i] - x[j]);
    s += l * y[i];
  }
  return s;
}

}  // namespace

UniformCubic::UniformCubic(double x0, double dx, std::vector<double> y, bool even)
    : x0_(x0), dx_(dx), y_(std::move(y)), even_(even) {
  if (y_.size() < 4) throw InvalidArgument("cubic interpolation needs at least four samples");
  if (!(dx_ > 0.0)) throw InvalidArgument("sample spacing must be positive");
}

double UniformCubic::operator()(double x) const {
  const auto last = static_cast<long>(y_.size()) - 1;
  const double t = (x - x0_) / dx_;
  auto at = [&](long k) { return y_[static_cast<std::size_t>(even_ && k < 0 ? -k : k)]; };
  long k0 = static_cast<long>(std::floor(t)) - 1;
  const long lo = even_ ? -last : 0;
  k0 = std::clamp(k0, lo, last - 3);
  std::array<double, 4> xs{};
  std::array<double, 4> ys{};
  for (int i = 0; i < 4; ++i) {
    xs[i] = static_cast<double>(k0 + i);
    ys[i] = at(k0 + i);
  }
  return lagrange4(xs, ys, t);
}

double interpolate(const RadialProfile& f, double r) {
  const RadialGrid& g = f.grid();
  const auto n = static_cast<long>(g.n());
  const double t = std::abs(r) / g.h();
  if (t >= static_cast<double>(n + 1)) return 0.0;
  // Node index j carries r = j h; j = 0 is not sampled, j < 0 mirrors, j > n is zero.
  auto value = [&](long j) -> double {
    if (j < 0) j = -j;
    if (j > n) return 0.0;
    return f[static_cast<std::size_t>(j - 1)];
  };
  const long base = static_cast<long>(std::floor(t));
  std::array<long, 8> cand{};
  int m = 0;
  for (long j = base - 3; j <= base + 4 && m < 8; ++j)
    if (j != 0) cand[static_cast<std::size_t>(m++)] = j;
  std::sort(cand.begin(), cand.begin() + m,
            [&](long a, long b) { return std::abs(static_cast<double>(a) - t) < std::abs(static_cast<double>(b) - t); });
  std::sort(cand.begin(), cand.begin() + 4);
  std::array<double, 4> xs{};
  std::array<double, 4> ys{};
  for (std::size_t i = 0; i < 4; ++i) {
    xs[i] = static_cast<double>(cand[i]);
    ys[i] = value(cand[i]);
  }
  return lagrange4(xs, ys, t);
}

RadialProfile resample(const RadialProfile& f, GridPtr target, double scale) {
  RadialProfile out(target);
  for (std::size_t k = 0; k < target->n(); ++k) out[k] = interpolate(f, scale * target->r(k));
  return out;
}

}  // namespace hartree
