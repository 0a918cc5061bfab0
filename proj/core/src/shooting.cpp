#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "hartree/errors.hpp"
#include "hartree/solve.hpp"

namespace hartree {

const char* to_string(ShotOutcome outcome) noexcept {
  return outcome == ShotOutcome::crossed_zero ? "crossed-zero" : "blew-up";
}

namespace {

constexpr double four_pi = 4.0 * std::numbers::pi;

// State (u, u', A, B) with u = r v, A = int u^2/s ds, B = int u^2 ds, so that
// int_0^r K(r,s) v^2 ds = 4 pi (A - B/r).
using State = std::array<double, 4>;

State rhs(double r, const State& y) {
  const double u = y[0];
  const double p = r > 0.0 ? four_pi * (y[2] - y[3] / r) : 0.0;
  return {y[1], (p - 1.0) * u, r > 0.0 ? u * u / r : 0.0, u * u};
}

State rk4_step(double r, const State& y, double dr) {
  auto axpy = [](const State& a, double s, const State& b) {
    return State{a[0] + s * b[0], a[1] + s * b[1], a[2] + s * b[2], a[3] + s * b[3]};
  };
  const State k1 = rhs(r, y);
  const State k2 = rhs(r + 0.5 * dr, axpy(y, 0.5 * dr, k1));
  const State k3 = rhs(r + 0.5 * dr, axpy(y, 0.5 * dr, k2));
  const State k4 = rhs(r + dr, axpy(y, dr, k3));
  State out;
  for (int i = 0; i < 4; ++i) out[i] = y[i] + dr / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

struct Trajectory {
  ShotOutcome outcome = ShotOutcome::crossed_zero;
  double radius = 0.0;
  std::vector<State> states;  // states[k] at r = k * step
};

Trajectory integrate(double v0, const ShootingOptions& opts, bool record) {
  if (!(v0 > 0.0)) throw InvalidArgument("initial value must be positive");
  Trajectory t;
  State y{0.0, v0, 0.0, 0.0};
  const double dr = opts.step;
  if (record) t.states.push_back(y);
  double v_prev = v0;
  for (long k = 0;; ++k) {
    const double r = static_cast<double>(k) * dr;
    if (r > opts.r_cap) throw NoConvergence("shooting probe unresolved at v0 = " + std::to_string(v0));
    y = rk4_step(r, y, dr);
    const double r1 = r + dr;
    if (record) t.states.push_back(y);
    const double v = y[0] / r1;
    if (y[0] < 0.0) {
      t.outcome = ShotOutcome::crossed_zero;
      t.radius = r1;
      return t;
    }
    if (v > 10.0 * v0 && v > v_prev) {
      t.outcome = ShotOutcome::blew_up;
      t.radius = r1;
      return t;
    }
    v_prev = v;
  }
}

// Decaying solution of w'' = (kappa^2 - nv / r) w on [r0, r0 + span], integrated
// inward from the far end, where the growing component is suppressed.
std::vector<double> decaying_tail(double r0, std::size_t count, double dr, double kappa, double nv) {
  std::vector<double> w(count);
  const double r_far = r0 + static_cast<double>(count - 1) * dr;
  const double k = nv / (2.0 * kappa);
  double y = 1.0;
  double yp = (-kappa + k / r_far) * y;
  w[count - 1] = y;
  auto f = [&](double r, double a, double ap) { return std::array<double, 2>{ap, (kappa * kappa - nv / r) * a}; };
  for (std::size_t i = count - 1; i-- > 0;) {
    const double r = r0 + static_cast<double>(i + 1) * dr;
    const double h = -dr;
    const auto k1 = f(r, y, yp);
    const auto k2 = f(r + 0.5 * h, y + 0.5 * h * k1[0], yp + 0.5 * h * k1[1]);
    const auto k3 = f(r + 0.5 * h, y + 0.5 * h * k2[0], yp + 0.5 * h * k2[1]);
    const auto k4 = f(r + h, y + h * k3[0], yp + h * k3[1]);
    y += h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
    yp += h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
    w[i] = y;
  }
  return w;
}

}  // namespace

ShotOutcome classify_shot(double v0, const ShootingOptions& opts) { return integrate(v0, opts, false).outcome; }

double ShootingResult::v(double r) const {
  if (!profile) throw InvalidArgument("shooting result carries no profile");
  const double ar = std::abs(r);
  if (ar > profile->x_end()) return 0.0;
  return (*profile)(ar);
}

double ShootingResult::normalized(double r) const {
  const double b = 1.0 / kappa;
  return b * b * v(b * r);
}

RadialProfile ShootingResult::normalized_profile(GridPtr grid) const {
  return RadialProfile::sample(std::move(grid), [this](double r) { return normalized(r); });
}

ShootingResult shoot_threshold(const ShootingOptions& opts, std::pair<double, double> bracket) {
  if (!(opts.step > 0.0) || !(opts.rel_width > 0.0)) throw InvalidArgument("invalid shooting options");
  auto [lo, hi] = bracket;
  if (!(lo > 0.0) || !(hi > lo)) throw InvalidArgument("bracket must satisfy 0 < lo < hi");
  ShootingResult res;
  auto probe = [&](double v0) {
    const Trajectory t = integrate(v0, opts, false);
    res.trace.push_back({v0, t.outcome, t.radius});
    return t.outcome;
  };

  ShotOutcome o_lo = probe(lo);
  ShotOutcome o_hi = probe(hi);
  while (o_hi == ShotOutcome::crossed_zero) {
    if (hi >= 100.0) throw BracketFailure("no blow-up found for v0 up to 100");
    lo = hi;
    o_lo = o_hi;
    hi = std::min(100.0, 2.0 * hi);
    o_hi = probe(hi);
  }
  while (o_lo == ShotOutcome::blew_up) {
    if (lo < 1e-8) throw BracketFailure("no zero crossing found for small v0");
    hi = lo;
    lo *= 0.5;
    o_lo = probe(lo);
  }

  while (hi - lo > opts.rel_width * 0.5 * (lo + hi)) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (probe(mid) == ShotOutcome::crossed_zero)
      lo = mid;
    else
      hi = mid;
  }
  res.v0_lo = lo;
  res.v0_hi = hi;
  res.v0_star = 0.5 * (lo + hi);

  const Trajectory t_lo = integrate(lo, opts, true);
  const Trajectory t_hi = integrate(hi, opts, true);
  const Trajectory t_mid = integrate(res.v0_star, opts, true);
  const std::size_t common = std::min({t_lo.states.size(), t_hi.states.size(), t_mid.states.size()});
  std::size_t trust = common - 1;
  for (std::size_t k = 1; k < common; ++k) {
    const double a = t_lo.states[k][0];
    const double b = t_hi.states[k][0];
    if (std::abs(b - a) > opts.divergence * 0.5 * std::abs(a + b)) {
      trust = k;
      break;
    }
  }
  // Back off to the last node where both endpoints still agree.
  if (trust > 1) --trust;
  const double dr = opts.step;
  res.trust_radius = static_cast<double>(trust) * dr;
  const State& at = t_mid.states[trust];

  // Tail: with the density negligible beyond r_trust, P(r) = C_v - N_v / r.
  double a_inf = at[2];
  double b_inf = at[3];
  std::vector<double> tail;
  std::size_t tail_count = 0;
  for (int pass = 0; pass < 3; ++pass) {
    res.coulomb_at_origin = four_pi * a_inf;
    res.norm = four_pi * b_inf;
    if (!(res.coulomb_at_origin > 1.0)) throw NoConvergence("threshold solution has no bound-state tail");
    res.kappa = std::sqrt(res.coulomb_at_origin - 1.0);
    tail_count = static_cast<std::size_t>(std::ceil(opts.tail_extent / res.kappa / dr)) + 1;
    tail = decaying_tail(res.trust_radius, tail_count, dr, res.kappa, res.norm);
    const double scale = at[0] / tail[0];
    double da = 0.0;
    double db = 0.0;
    for (std::size_t i = 1; i < tail_count; ++i) {
      const double r = res.trust_radius + static_cast<double>(i) * dr;
      const double u = scale * tail[i];
      const double prev_r = r - dr;
      const double prev_u = scale * tail[i - 1];
      da += 0.5 * dr * (u * u / r + prev_u * prev_u / prev_r);
      db += 0.5 * dr * (u * u + prev_u * prev_u);
    }
    a_inf = at[2] + da;
    b_inf = at[3] + db;
  }

  std::vector<double> v(trust + tail_count);
  v[0] = res.v0_star;
  for (std::size_t k = 1; k <= trust; ++k) v[k] = t_mid.states[k][0] / (static_cast<double>(k) * dr);
  const double scale = at[0] / tail[0];
  for (std::size_t i = 1; i < tail_count; ++i) {
    const double r = res.trust_radius + static_cast<double>(i) * dr;
    v[trust + i] = scale * tail[i] / r;
  }
  res.profile = std::make_shared<const UniformCubic>(0.0, dr, std::move(v), true);
  return res;
}

}  // namespace hartree
