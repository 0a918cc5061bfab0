#include "hartree/validate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include "hartree/coulomb.hpp"
#include "hartree/errors.hpp"
#include "hartree/limits.hpp"
#include "hartree/linops.hpp"
#include "hartree/solve.hpp"
#include "hartree/specfun.hpp"

namespace hartree {

namespace {

struct Measured {
  double value = 0.0;
  bool passed = false;
  std::string detail;
};

class Suite {
 public:
  explicit Suite(const std::function<void(const CheckResult&)>& progress) : progress_(progress) {}

  template <class Fn>
  void run(const std::string& module, const std::string& name, double threshold, Fn&& fn) {
    CheckResult r{module, name, false, std::numeric_limits<double>::quiet_NaN(), threshold, {}};
    try {
      const Measured m = fn();
      r.value = m.value;
      r.passed = m.passed;
      r.detail = m.detail;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    if (progress_) progress_(r);
    results_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  const std::function<void(const CheckResult&)>& progress_;
  std::vector<CheckResult> results_;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

RadialProfile random_profile(const GridPtr& g, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  RadialProfile f(g);
  for (std::size_t k = 0; k < g->n(); ++k) f[k] = normal(rng);
  return f;
}

// Nodes with r <= limit.
Eigen::Index interior_count(const RadialGrid& g, double limit) {
  Eigen::Index m = 0;
  while (static_cast<std::size_t>(m) < g.n() && g.r(static_cast<std::size_t>(m)) <= limit) ++m;
  return m;
}

double spectral_norm(const Eigen::MatrixXd& a) {
  return Eigen::JacobiSVD<Eigen::MatrixXd>(a).singularValues()(0);
}

double cosine(const RadialProfile& a, const RadialProfile& b) { return inner(a, b) / (norm_l2(a) * norm_l2(b)); }

double rel_linf(const RadialProfile& a, const RadialProfile& b) { return max_abs(a - b) / max_abs(b); }

// Grid with twice the spacing of (n, r_max).
std::size_t coarse_n(std::size_t n) { return (n + 1) / 2 - 1; }

void grid_checks(Suite& s, const ValidationOptions& o, std::mt19937_64& rng) {
  s.run("grid", "quadrature_order", 3.5, [] {
    const double exact = std::pow(std::numbers::pi, 1.5);
    auto err = [&](std::size_t n) {
      return std::abs(mass(RadialProfile::sample(make_grid(n, 12.0), [](double r) { return std::exp(-0.5 * r * r); })) - exact);
    };
    const double e1 = err(31);
    const double e2 = err(63);
    const double ratio = e1 / e2;
    const bool roundoff = e2 <= 1e-13 * exact;
    return Measured{ratio, ratio >= 3.5 || roundoff, "errors " + fmt(e1) + " -> " + fmt(e2)};
  });
  s.run("grid", "laplacian_order", 3.5, [] {
    auto err = [](std::size_t n) {
      const GridPtr g = make_grid(n, 10.0);
      const RadialProfile f = RadialProfile::sample(g, [](double r) { return std::exp(-r * r); });
      const RadialProfile exact = RadialProfile::sample(g, [](double r) { return (6.0 - 4.0 * r * r) * std::exp(-r * r); });
      return max_abs(apply_sector_laplacian(f, 0) - exact);
    };
    const double e1 = err(199);
    const double e2 = err(399);
    const double ratio = e1 / e2;
    return Measured{ratio, ratio >= 3.5 && ratio <= 4.5, "window [3.5, 4.5]"};
  });
  const GridPtr g = make_grid(o.n, o.r_max);
  s.run("grid", "laplacian_symmetry", 1e-10, [&] {
    double worst = 0.0;
    for (int l = 0; l <= 3; ++l) {
      const RadialProfile f = random_profile(g, rng);
      const RadialProfile h = random_profile(g, rng);
      const double a = inner(f, apply_sector_laplacian(h, l));
      const double b = inner(apply_sector_laplacian(f, l), h);
      worst = std::max(worst, std::abs(a - b) / (norm_l2(f) * norm_l2(h)));
    }
    return Measured{worst, worst <= 1e-10, ""};
  });
  s.run("grid", "laplacian_psd", -1e-10, [&] {
    double lowest = std::numeric_limits<double>::infinity();
    for (int l = 0; l <= 3; ++l)
      for (int k = 0; k < 20; ++k) {
        const RadialProfile f = random_profile(g, rng);
        lowest = std::min(lowest, inner(f, apply_sector_laplacian(f, l)) / inner(f, f));
      }
    return Measured{lowest, lowest >= -1e-10, "minimum Ritz value"};
  });
}

void coulomb_checks(Suite& s, std::mt19937_64& rng) {
  s.run("coulomb", "far_field_law", 1e-8, [] {
    const GridPtr g = make_grid(2000, 30.0);
    const double R = 5.0;
    const RadialProfile rho = RadialProfile::sample(g, [&](double r) { return r <= R ? 1.0 : 0.0; });
    const RadialProfile phi = newton_potential(rho);
    const double total = mass(RadialProfile::sample(g, [&](double r) { return r <= R ? 1.0 : 0.0; }));
    double worst = 0.0;
    for (std::size_t k = 0; k < g->n(); ++k)
      if (g->r(k) > R) worst = std::max(worst, std::abs(g->r(k) * phi[k] - total) / total);
    return Measured{worst, worst <= 1e-8, ""};
  });
  s.run("coulomb", "monopole_consistency", 1e-10, [&] {
    const GridPtr g = make_grid(128, 10.0);
    std::uniform_real_distribution<double> uni(0.1, 1.0);
    RadialProfile Q(g), f(g);
    for (std::size_t k = 0; k < g->n(); ++k) {
      Q[k] = uni(rng);
      f[k] = uni(rng) - 0.5;
    }
    const double d = max_abs(detail::apply_w_sector_unchecked(0, Q, f) - apply_newton_linearized(Q, f));
    return Measured{d, d <= 1e-10, ""};
  });
  s.run("coulomb", "kernel_symmetry", 0.0, [] {
    const GridPtr g = make_grid(64, 10.0);
    double worst = 0.0;
    for (int l = 0; l <= 4; ++l)
      for (std::size_t i = 0; i < g->n(); ++i)
        for (std::size_t j = 0; j < i; ++j)
          worst = std::max(worst, std::abs(multipole_kernel(l, g->r(i), g->r(j)) - multipole_kernel(l, g->r(j), g->r(i))));
    return Measured{worst, worst == 0.0, ""};
  });
}

void specfun_checks(Suite& s) {
  const GridPtr g = make_grid(128, 10.0);
  s.run("specfun", "heat_kernel_positivity", 0.0, [&] {
    double lowest = std::numeric_limits<double>::infinity();
    for (int l = 0; l <= 2; ++l)
      for (double t : {0.1, 1.0}) lowest = std::min(lowest, heat_kernel_sector(l, t, g).matrix.minCoeff());
    return Measured{lowest, lowest > 0.0, "smallest entry"};
  });
  s.run("specfun", "positivity_improving", 0.0, [&] {
    Eigen::VectorXd f = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(g->n()));
    f[10] = 1.0;
    f[11] = 0.5;
    double lowest = std::numeric_limits<double>::infinity();
    for (int l = 0; l <= 2; ++l) lowest = std::min(lowest, (heat_kernel_sector(l, 0.1, g).matrix * f).minCoeff());
    return Measured{lowest, lowest > 0.0, ""};
  });
  s.run("specfun", "semigroup", 1e-5, [] {
    const GridPtr g = make_grid(256, 40.0);
    const Eigen::MatrixXd a = heat_kernel_sector(1, 0.5, g).matrix;
    const Eigen::MatrixXd b = heat_kernel_sector(1, 1.0, g).matrix;
    const Eigen::Index m = interior_count(*g, 0.5 * g->r_max());
    const Eigen::MatrixXd d = (a * a - b).topLeftCorner(m, m);
    const double rel = spectral_norm(d) / spectral_norm(b.topLeftCorner(m, m));
    return Measured{rel, rel <= 1e-5, "block r <= r_max/2"};
  });
  s.run("specfun", "resolvent_representation", 1e-3, [&] {
    const double mu = 1.0;
    const auto n = static_cast<Eigen::Index>(g->n());
    double worst = 0.0;
    for (int l = 0; l <= 1; ++l) {
      Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
      const double s0 = std::log(1e-8);
      const double s1 = std::log(60.0);
      constexpr int K = 800;
      const double ds = (s1 - s0) / K;
      for (int k = 0; k <= K; ++k) {
        const double t = std::exp(s0 + k * ds);
        const double wgt = (k == 0 || k == K ? 0.5 : 1.0) * ds * t * std::exp(-t * mu);
        acc += wgt * heat_kernel_sector(l, t, g).matrix;
      }
      Eigen::MatrixXd L(n, n);
      RadialProfile e(g);
      for (Eigen::Index j = 0; j < n; ++j) {
        e[static_cast<std::size_t>(j)] = 1.0;
        const RadialProfile col = apply_sector_laplacian(e, l);
        e[static_cast<std::size_t>(j)] = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) L(i, j) = col[static_cast<std::size_t>(i)];
      }
      L += mu * Eigen::MatrixXd::Identity(n, n);
      const Eigen::MatrixXd R = L.inverse();
      const Eigen::Index m = interior_count(*g, 0.5 * g->r_max());
      worst = std::max(worst, spectral_norm((acc - R).topLeftCorner(m, m)) / spectral_norm(R.topLeftCorner(m, m)));
    }
    return Measured{worst, worst <= 1e-3, "block r <= r_max/2, l = 0, 1"};
  });
}


void solve_checks(Suite& s, const ValidationOptions& o, const GroundState& gs, const GroundState& coarse) {
  s.run("solve", "residual", o.tol, [&] {
    return Measured{gs.residual, gs.residual <= o.tol, ""};
  });
  s.run("solve", "solver_agreement", 1e-4, [&] {
    const ShootingResult sh = shoot_threshold();
    const double fine = rel_linf(sh.normalized_profile(gs.grid()), gs.Q);
    const double crude = rel_linf(sh.normalized_profile(coarse.grid()), coarse.Q);
    return Measured{fine, fine <= 1e-4 && fine < crude, "coarse grid " + fmt(crude)};
  });
  s.run("solve", "positive_nonincreasing", 1e-10, [&] {
    double rise = 0.0;
    double lowest = gs.Q[0];
    for (std::size_t k = 0; k < gs.Q.size(); ++k) {
      lowest = std::min(lowest, gs.Q[k]);
      if (k + 1 < gs.Q.size()) rise = std::max(rise, gs.Q[k + 1] - gs.Q[k]);
    }
    return Measured{rise, lowest > 0.0 && rise <= 1e-10, "largest increase"};
  });
  s.run("solve", "decay_rate", -1.0, [&] {
    double sx = 0, sy = 0, sxx = 0, sxy = 0, m = 0;
    for (std::size_t k = 0; k < gs.Q.size(); ++k) {
      const double r = gs.grid()->r(k);
      if (r < 12.0 || r > 20.0) continue;
      const double y = std::log(gs.Q[k]);
      sx += r;
      sy += y;
      sxx += r * r;
      sxy += r * y;
      m += 1;
    }
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    return Measured{slope, slope >= -1.15 && slope <= -0.85, "window [-1.15, -0.85] on [12, 20]"};
  });
  s.run("solve", "multiplier_identity", 10 * o.tol, [&] {
    const Virial v = virial_terms(gs.Q);
    const double d = std::abs(v.kinetic + gs.multiplier * v.mass - v.hartree);
    return Measured{d, d <= 10 * o.tol, ""};
  });
  s.run("solve", "petviashvili_fixed_point", o.tol, [&] {
    const Virial v = virial_terms(gs.Q);
    const double gamma = (v.kinetic + v.mass) / v.hartree;
    return Measured{std::abs(gamma - 1.0), std::abs(gamma - 1.0) <= o.tol, ""};
  });
  s.run("solve", "virial_ratios", 1e-5, [&] {
    const std::size_t n = std::max<std::size_t>(o.n, 4000);
    const GroundState fine = solve_nr_normalized(make_grid(n, o.r_max), o.tol);
    const Virial v = virial_terms(fine.Q);
    const double a = std::abs(v.mass / v.kinetic - 3.0) / 3.0;
    const double b = std::abs(v.hartree / v.kinetic - 4.0) / 4.0;
    return Measured{std::max(a, b), std::max(a, b) <= 1e-5, "n = " + std::to_string(n)};
  });
  s.run("solve", "scaling_derivative", 1e-6, [&] {
    const double d = std::abs(action_scaling_derivative(gs.Q));
    return Measured{d, d <= 1e-6, ""};
  });
}

void linops_checks(Suite& s, const ValidationOptions& o, const GroundState& gs, const GroundState& coarse,
                   std::mt19937_64& rng) {
  std::vector<SpectralReport> reps;
  for (int l = 0; l <= 6; ++l) reps.push_back(eigs(assemble_sector_nr(l, gs), 8));
  s.run("linops", "operator_symmetry", 1e-10, [&] {
    double worst = 0.0;
    for (int l = 0; l <= 1; ++l) worst = std::max(worst, assemble_sector_nr(l, coarse).op.asymmetry());
    return Measured{worst, worst <= 1e-10, "coarse grid, l = 0, 1"};
  });
  s.run("linops", "radial_nondegeneracy", 0.01, [&] {
    const SpectralReport c0 = eigs(assemble_sector_nr(0, coarse), 4);
    auto smallest = [](const SpectralReport& r) {
      double m = std::numeric_limits<double>::infinity();
      for (double e : r.eigenvalues) m = std::min(m, std::abs(e));
      return m;
    };
    const double v = std::min(smallest(reps[0]), smallest(c0));
    return Measured{v, v >= 0.01, "min over two resolutions"};
  });
  s.run("linops", "translation_zero_mode", 5e-3, [&] {
    const SpectralReport c1 = eigs(assemble_sector_nr(1, coarse), 2);
    const double e_fine = std::abs(reps[1].eigenvalues[0]);
    const double ratio = std::abs(c1.eigenvalues[0]) / e_fine;
    const double cs = -cosine(derivative(gs.Q), reps[1].ground());
    return Measured{e_fine, e_fine <= 5e-3 && ratio >= 3.0 && ratio <= 5.0 && cs >= 0.999,
                    "refinement ratio " + fmt(ratio) + ", cosine with -Q' " + fmt(cs)};
  });
  s.run("linops", "sector_positivity", 0.0, [&] {
    double lowest = std::numeric_limits<double>::infinity();
    bool increasing = true;
    for (int l = 2; l <= 6; ++l) {
      lowest = std::min(lowest, reps[static_cast<std::size_t>(l)].eigenvalues[0]);
      if (l > 2 && !(reps[static_cast<std::size_t>(l)].eigenvalues[0] > reps[static_cast<std::size_t>(l - 1)].eigenvalues[0]))
        increasing = false;
    }
    return Measured{lowest, lowest > 0.0 && increasing, increasing ? "increasing in l" : "not increasing in l"};
  });
  s.run("linops", "gap_bound_chain", -1e-6, [&] {
    double worst = std::numeric_limits<double>::infinity();
    bool positive = true;
    for (int l = 2; l <= 6; ++l) {
      const SpectralReport& r = reps[static_cast<std::size_t>(l)];
      const double K = k_ell_gap(l, gs, r.ground());
      positive = positive && K > 0.0;
      worst = std::min(worst, r.eigenvalues[0] - K);
    }
    return Measured{worst, positive && worst >= -1e-6, "min e0 - K over l = 2..6"};
  });
  s.run("linops", "perron_frobenius", 0.0, [&] {
    double margin = std::numeric_limits<double>::infinity();
    bool ok = true;
    for (int l = 1; l <= 6; ++l) {
      const PerronResult p = perron_check(reps[static_cast<std::size_t>(l)]);
      ok = ok && p.ok();
      margin = std::min(margin, p.margin);
    }
    return Measured{margin, ok, "smallest margin over l = 1..6"};
  });
  s.run("linops", "lplus_on_q_complement", -1e-6, [&] {
    const SectorOperator op = assemble_sector_nr(0, gs);
    std::normal_distribution<double> normal;
    double lowest = std::numeric_limits<double>::infinity();
    const double qq = inner(gs.Q, gs.Q);
    for (int trial = 0; trial < 50; ++trial) {
      RadialProfile f(gs.grid());
      for (const RadialProfile& v : reps[0].eigenvectors) f += v * normal(rng);
      f -= gs.Q * (inner(f, gs.Q) / qq);
      lowest = std::min(lowest, inner(f, op.op.apply(f)) / inner(f, f));
    }
    return Measured{lowest, lowest >= -1e-6, "50 trial vectors from the low spectrum"};
  });
  s.run("linops", "hydrogen_like_count", 3.0, [&] {
    int fewest = 1 << 30;
    for (int l = 1; l <= 3; ++l) fewest = std::min(fewest, reps[static_cast<std::size_t>(l)].count_in_unit_interval);
    return Measured{static_cast<double>(fewest), fewest >= 3, "eigenvalues in (0,1), l = 1..3"};
  });
  s.run("linops", "lminus_kernel", 1e-4, [&] {
    const SpectralReport r = eigs(assemble_lminus(gs), 2);
    const double cs = std::abs(cosine(r.ground(), gs.Q));
    const double e0 = std::abs(r.eigenvalues[0]);
    return Measured{e0, e0 <= 1e-4 && cs >= 0.9999 && r.eigenvalues[1] >= 0.01,
                    "cosine " + fmt(cs) + ", second eigenvalue " + fmt(r.eigenvalues[1])};
  });
  s.run("linops", "kernel_count", 3.0, [&] {
    const int a = kernel_count(gs, 4, 1e-2, o.jobs).total;
    const int b = kernel_count(gs, 4, 5e-3, o.jobs).total;
    return Measured{static_cast<double>(a), a == 3 && b == 3, "halved radius gives " + std::to_string(b)};
  });
  s.run("linops", "tau_separation", 0.05, [&] {
    const double t1 = newton_sigma(gs.Q, gs.Q * 2.0 + [&] {
      RadialProfile rq = derivative(gs.Q);
      for (std::size_t k = 0; k < rq.size(); ++k) rq[k] *= gs.grid()->r(k);
      return rq;
    }());
    const double t2 = newton_sigma(coarse.Q, coarse.Q * 2.0 + [&] {
      RadialProfile rq = derivative(coarse.Q);
      for (std::size_t k = 0; k < rq.size(); ++k) rq[k] *= coarse.grid()->r(k);
      return rq;
    }());
    const double sep = std::abs(t1 - 1.0);
    return Measured{sep, sep > 0.05 && std::abs(t1 - t2) <= 1e-4 * std::abs(t1),
                    "tau " + fmt(t1) + ", coarse " + fmt(t2)};
  });
  s.run("linops", "linearized_growth", 1.05, [&] {
    const LinearizedShot shot = linearized_shoot(gs, 2.0 * gs.Q[0]);
    const RadialProfile w = wronskian_residual(gs.Q, shot.v, shot.W);
    double worst = 0.0;
    for (std::size_t k = 0; k + 1 < shot.count; ++k)
      if (gs.grid()->r(k) <= 10.0) worst = std::max(worst, std::abs(w[k]));
    const bool ok = shot.sign_preserving && shot.growth_rate > 0.5 && shot.growth_rate < 1.05 && worst <= 1e-6;
    return Measured{shot.growth_rate, ok, "Wronskian residual " + fmt(worst)};
  });
}

void limits_checks(Suite& s, const ValidationOptions& o) {
  const GridPtr g = make_grid(o.n, o.r_max);
  const double m = 1.0;
  const double N = 1.0;
  RelativisticOptions ro;
  ro.tol = o.tol;
  std::optional<SweepResult> sweep;
  s.run("limits", "sweep_solves", 0.0, [&] {
    sweep = sweep_c({5.0, 10.0, 20.0, 40.0}, m, N, g, ro, o.jobs);
    int failed = 0;
    for (const SweepRecord& r : sweep->records) failed += r.ok() ? 0 : 1;
    return Measured{static_cast<double>(failed), failed == 0, "failed solves"};
  });
  if (!sweep) return;
  const auto& recs = sweep->records;
  const double lambda = sweep->reference.multiplier;
  auto all_ok = [&] { return std::all_of(recs.begin(), recs.end(), [](const SweepRecord& r) { return r.ok(); }); };
  s.run("limits", "multiplier_gap_sign", 0.0, [&] {
    double worst = -std::numeric_limits<double>::infinity();
    for (const SweepRecord& r : recs)
      if (r.ok()) worst = std::max(worst, r.gap);
    return Measured{worst, all_ok() && worst < 0.0, "largest gap"};
  });
  s.run("limits", "nonrelativistic_limit", 3.0, [&] {
    bool mono = all_ok();
    for (std::size_t i = 1; i < recs.size() && mono; ++i)
      mono = std::abs(recs[i].gap + lambda) < std::abs(recs[i - 1].gap + lambda) && recs[i].h1_dist < recs[i - 1].h1_dist;
    const double ratio = std::abs(recs[2].gap + lambda) / std::abs(recs[3].gap + lambda);
    return Measured{ratio, mono && ratio >= 3.0 && ratio <= 5.0, "gap error ratio c = 20 -> 40"};
  });
  s.run("limits", "multiplier_bounds", 0.0, [&] {
    bool ok = all_ok();
    for (const SweepRecord& r : recs) ok = ok && r.flags.herbst_ok && r.flags.delta1_ok && r.flags.delta2_ok;
    return Measured{ok ? 1.0 : 0.0, ok, "Herbst, delta1, delta2 at every c"};
  });
  s.run("limits", "h1_uniform", 0.05, [&] {
    std::vector<SweepRecord> copy = recs;
    const H1Uniform u = h1_uniform_check(copy);
    return Measured{u.bound, u.stable, "M = " + fmt(u.bound)};
  });
  s.run("limits", "richardson_limit", 0.02, [&] {
    const double extrap = (4.0 * recs[3].gap - recs[2].gap) / 3.0;
    const double rel = std::abs(extrap + lambda) / lambda;
    return Measured{rel, all_ok() && rel <= 0.02, "extrapolated gap " + fmt(extrap)};
  });
  s.run("limits", "scaling_equivalence", 1e-3, [&] {
    const double c = 2.0;
    const GroundState direct = solve_rel(g, m, 1.0, N, ro);
    const GroundState scaled = solve_rel(make_grid(o.n, o.r_max / c), m, c, c * N, ro);
    RadialProfile mapped(g, std::vector<double>(scaled.Q.data()));
    mapped *= 1.0 / (c * c);
    const double d = rel_linf(mapped, direct.Q);
    return Measured{d, d <= 1e-3, "c = 2"};
  });
}

}  // namespace

std::vector<CheckResult> run_invariants(const ValidationOptions& o, const std::function<void(const CheckResult&)>& progress) {
  if (o.n < 64) throw InvalidArgument("validation needs n >= 64");
  Suite s(progress);
  std::mt19937_64 rng(o.seed);
  grid_checks(s, o, rng);
  coulomb_checks(s, rng);
  specfun_checks(s);

  std::optional<GroundState> gs;
  std::optional<GroundState> coarse;
  s.run("solve", "normalized_solve", o.tol, [&] {
    gs = solve_nr_normalized(make_grid(o.n, o.r_max), o.tol);
    coarse = solve_nr_normalized(make_grid(coarse_n(o.n), o.r_max), o.tol);
    return Measured{gs->residual, true, std::to_string(gs->iterations) + " iterations"};
  });
  if (gs && coarse) {
    solve_checks(s, o, *gs, *coarse);
    linops_checks(s, o, *gs, *coarse, rng);
  }
  if (o.relativistic) limits_checks(s, o);
  return s.take();
}

}  // namespace hartree
