#include <algorithm>
#include <cmath>
#include <string>

#include "hartree/coulomb.hpp"
#include "hartree/errors.hpp"
#include "hartree/linops.hpp"
#include "hartree/parallel.hpp"
#include "linalg.hpp"

namespace hartree {

SpectralReport eigs(const SectorOperator& op, int k) {
  const std::size_t n = op.op.size();
  if (k < 1 || static_cast<std::size_t>(k) > n) throw InvalidArgument("eigenpair count must lie in [1, n]");
  const linalg::Eigensystem es = linalg::lowest_eigenpairs(op.op.symmetric(), k);
  const Eigen::VectorXd sw = sqrt_weights(*op.op.grid());

  SpectralReport rep;
  rep.l = op.l;
  rep.kind = op.kind;
  rep.eigenvalues.assign(es.values.data(), es.values.data() + es.values.size());
  for (Eigen::Index j = 0; j < es.vectors.cols(); ++j) {
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = es.vectors(static_cast<Eigen::Index>(i), j) / sw[static_cast<Eigen::Index>(i)];
    rep.eigenvectors.emplace_back(op.op.grid(), std::move(f));
  }
  // Sign convention: first entry that is nonzero at working precision is positive.
  RadialProfile& g = rep.eigenvectors.front();
  const double peak = max_abs(g);
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(g[i]) > 1e-12 * peak) {
      if (g[i] < 0.0) g *= -1.0;
      break;
    }
  }
  rep.sign_definite = perron_check(g).sign_definite;
  rep.count_in_unit_interval =
      static_cast<int>(std::count_if(rep.eigenvalues.begin(), rep.eigenvalues.end(), [](double e) { return e > 0.0 && e < 1.0; }));
  return rep;
}

PerronResult perron_check(const RadialProfile& phi) {
  PerronResult res;
  const double peak = max_abs(phi);
  if (!(peak > 0.0)) return res;
  const double sign = phi[0] >= 0.0 ? 1.0 : -1.0;
  double lowest = peak;
  for (double v : phi.values()) lowest = std::min(lowest, sign * v);
  res.sign_definite = lowest > 0.0;
  res.margin = std::max(lowest, 0.0) / peak;
  res.simple = true;
  return res;
}

PerronResult perron_check(const SpectralReport& report) {
  if (report.eigenvectors.empty()) throw InvalidArgument("spectral report carries no eigenfunction");
  PerronResult res = perron_check(report.ground());
  if (report.eigenvalues.size() >= 2) {
    res.gap = report.eigenvalues[1] - report.eigenvalues[0];
    res.simple = res.gap > 1e-6;
  } else {
    res.simple = false;
  }
  return res;
}

double k_ell_gap(int l, const GroundState& state, const RadialProfile& phi) {
  if (l < 2 || l > max_sector) throw InvalidArgument("gap bound is defined for 2 <= l <= max_sector");
  require_same_grid(state.Q, phi);
  const RadialGrid& g = phi.grid();
  const std::size_t n = g.n();
  const double dl = static_cast<double>(l);
  const double cent = dl * (dl + 1.0) - 2.0;

  double norm = 0.0;
  double local = 0.0;
  std::vector<double> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = g.r(i);
    norm += g.w(i) * phi[i] * phi[i];
    local += g.w(i) * cent * phi[i] * phi[i] / (r * r);
    a[i] = g.w(i) * state.Q[i] * phi[i];
  }
  double pair = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ri = g.r(i);
    // Diagonal term: r_< = r_> so the kernel difference is (1/3 - 1/(2l+1)) / r.
    double row = 0.5 * a[i] * (1.0 / 3.0 - 1.0 / (2.0 * dl + 1.0)) / ri;
    for (std::size_t j = 0; j < i; ++j) {
      const double x = g.r(j) / ri;
      row += a[j] * (x / 3.0 - std::pow(x, dl) / (2.0 * dl + 1.0)) / ri;
    }
    pair += 2.0 * a[i] * row;
  }
  return (local + 2.0 * pair) / norm;
}

KernelCount kernel_count(const GroundState& state, int l_max, double r0, int jobs) {
  if (l_max < 2 || l_max > max_sector) throw InvalidArgument("l_max must lie in [2, max_sector]");
  if (!(r0 > 0.0)) throw InvalidArgument("counting radius must be positive");
  constexpr int k = 6;
  const auto sectors = static_cast<std::size_t>(l_max + 1);
  KernelCount out;
  out.per_sector.assign(sectors, 0);
  out.eigenvalues.assign(sectors, {});
  parallel_for(sectors, jobs, [&](std::size_t idx) {
    const int l = static_cast<int>(idx);
    const SectorOperator op =
        state.params.model == Model::relativistic ? assemble_sector_rel(l, state) : assemble_sector_nr(l, state);
    const linalg::Eigensystem es = linalg::lowest_eigenpairs(op.op.symmetric(), std::min<int>(k, static_cast<int>(op.op.size())));
    out.eigenvalues[idx].assign(es.values.data(), es.values.data() + es.values.size());
  });
  for (std::size_t idx = 0; idx < sectors; ++idx) {
    int count = 0;
    for (double e : out.eigenvalues[idx]) {
      if (std::abs(std::abs(e) - r0) < 0.1 * r0)
        throw AmbiguousCount("eigenvalue " + std::to_string(e) + " in sector " + std::to_string(idx) +
                             " lies within 10% of the counting radius");
      if (std::abs(e) < r0) ++count;
    }
    out.per_sector[idx] = count;
    out.total += static_cast<int>(2 * idx + 1) * count;
  }
  return out;
}

double sigma_functional(const GroundState& state, const RadialProfile& xi) { return newton_sigma(state.Q, xi); }

NullspaceDiagnostics nullspace_diagnostics(const GroundState& state, int l_max, double r0) {
  if (state.params.model != Model::nonrelativistic) throw InvalidArgument("diagnostics expect a nonrelativistic state");
  const RadialProfile& Q = state.Q;
  const RadialProfile dQ = derivative(Q);
  NullspaceDiagnostics d{0.0, RadialProfile(Q.grid_ptr()), 0.0, 0.0, {}, false};
  d.resid_translation = norm_l2(apply_lplus_nr(1, state, dQ));

  RadialProfile R = Q * 2.0;
  for (std::size_t i = 0; i < Q.size(); ++i) R[i] += Q.grid().r(i) * dQ[i];
  RadialProfile lr = apply_lplus_nr(0, state, R);
  lr += Q * (2.0 * state.multiplier);
  d.resid_R = norm_l2(lr);
  d.tau = newton_sigma(Q, R);
  d.R_profile = std::move(R);
  d.tau_separated = std::abs(d.tau - 1.0) > 0.05;
  d.kernel_counts = kernel_count(state, l_max, r0).per_sector;
  return d;
}

}  // namespace hartree
