#include "oracles.hpp"

#include <lapacke.h>

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oracle {

namespace {
constexpr double pi = std::numbers::pi;
}

std::vector<double> dense_potential(const RadialGrid& g, const std::vector<double>& rho) {
  const std::size_t n = g.n();
  std::vector<double> phi(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += g.w(j) * rho[j] / std::max(g.r(i), g.r(j));
    phi[i] = s;
  }
  return phi;
}

std::vector<double> laplacian(const RadialGrid& g, const std::vector<double>& f, int l) {
  const std::size_t n = g.n();
  const double h2 = g.h() * g.h();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double um = i > 0 ? g.r(i - 1) * f[i - 1] : 0.0;
    const double up = i + 1 < n ? g.r(i + 1) * f[i + 1] : 0.0;
    const double u = g.r(i) * f[i];
    out[i] = -(up - 2.0 * u + um) / (h2 * g.r(i)) + l * (l + 1.0) / (g.r(i) * g.r(i)) * f[i];
  }
  return out;
}

std::vector<double> sine_sum(const std::vector<double>& x) {
  const std::size_t n = x.size();
  const double scale = std::sqrt(2.0 / static_cast<double>(n + 1));
  const double step = pi / static_cast<double>(n + 1);
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      // Reduce the angle index modulo 2(n+1) to keep sin accurate.
      const std::size_t idx = ((j + 1) * (k + 1)) % (2 * (n + 1));
      s += x[j] * std::sin(step * static_cast<double>(idx));
    }
    out[k] = scale * s;
  }
  return out;
}

std::vector<double> rel_symbol(const RadialGrid& g, double m, double c) {
  const std::size_t n = g.n();
  std::vector<double> out(n);
  const double rest = m * c * c;
  for (std::size_t j = 0; j < n; ++j) {
    const double s = std::sin(static_cast<double>(j + 1) * pi / (2.0 * static_cast<double>(n + 1)));
    const double k = 4.0 / (g.h() * g.h()) * s * s;
    out[j] = c * c * k / (std::sqrt(c * c * k + rest * rest) + rest);
  }
  return out;
}

std::vector<double> rel_kinetic_apply(const RadialGrid& g, const std::vector<double>& f, double m, double c) {
  const std::size_t n = g.n();
  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = g.r(i) * f[i];
  std::vector<double> uh = sine_sum(u);
  const std::vector<double> sym = rel_symbol(g, m, c);
  for (std::size_t i = 0; i < n; ++i) uh[i] *= sym[i];
  u = sine_sum(uh);
  for (std::size_t i = 0; i < n; ++i) u[i] /= g.r(i);
  return u;
}

double weighted_inner(const RadialGrid& g, const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < g.n(); ++i) s += g.w(i) * a[i] * b[i];
  return s;
}

double weighted_norm(const RadialGrid& g, const std::vector<double>& a) { return std::sqrt(weighted_inner(g, a, a)); }

double cosine(const RadialGrid& g, const std::vector<double>& a, const std::vector<double>& b) {
  return std::abs(weighted_inner(g, a, b)) / (weighted_norm(g, a) * weighted_norm(g, b));
}

double residual_nr(const RadialGrid& g, const std::vector<double>& Q, double m, double lambda) {
  std::vector<double> rho(Q.size());
  for (std::size_t i = 0; i < Q.size(); ++i) rho[i] = Q[i] * Q[i];
  const std::vector<double> phi = dense_potential(g, rho);
  std::vector<double> d = laplacian(g, Q, 0);
  for (std::size_t i = 0; i < Q.size(); ++i) d[i] = d[i] / (2.0 * m) + lambda * Q[i] - phi[i] * Q[i];
  return weighted_norm(g, d);
}

double residual_rel(const RadialGrid& g, const std::vector<double>& Q, double m, double c, double mu) {
  std::vector<double> rho(Q.size());
  for (std::size_t i = 0; i < Q.size(); ++i) rho[i] = Q[i] * Q[i];
  const std::vector<double> phi = dense_potential(g, rho);
  std::vector<double> d = rel_kinetic_apply(g, Q, m, c);
  for (std::size_t i = 0; i < Q.size(); ++i) d[i] += (mu + m * c * c) * Q[i] - phi[i] * Q[i];
  return weighted_norm(g, d);
}

double dirichlet(const RadialGrid& g, const std::vector<double>& f) {
  return weighted_inner(g, f, laplacian(g, f, 0));
}

double hartree_term(const RadialGrid& g, const std::vector<double>& f) {
  std::vector<double> rho(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) rho[i] = f[i] * f[i];
  return weighted_inner(g, dense_potential(g, rho), rho);
}

double energy_rel(const RadialGrid& g, const std::vector<double>& f, double m, double c) {
  const double kinetic = weighted_inner(g, f, rel_kinetic_apply(g, f, m, c)) + m * c * c * weighted_inner(g, f, f);
  return kinetic - 0.5 * hartree_term(g, f);
}

double h1_norm(const RadialGrid& g, const std::vector<double>& f) {
  const std::size_t n = g.n();
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double right = i + 1 < n ? f[i + 1] : 0.0;
    d[i] = i == 0 ? (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * g.h()) : (right - f[i - 1]) / (2.0 * g.h());
  }
  return std::sqrt(weighted_inner(g, f, f) + weighted_inner(g, d, d));
}

namespace {

// Nodal-to-symmetric similarity: S = D A D^-1 with D = diag(sqrt(w)).
Eigen::MatrixXd symmetrize(const RadialGrid& g, const Eigen::MatrixXd& nodal) {
  const std::size_t n = g.n();
  Eigen::VectorXd sw(n);
  for (std::size_t i = 0; i < n; ++i) sw[i] = std::sqrt(g.w(i));
  Eigen::MatrixXd s = sw.asDiagonal() * nodal * sw.cwiseInverse().asDiagonal();
  return 0.5 * (s + s.transpose());
}

// Nodal matrix of -(1/2m) Lap_l + diag(shift - phi).
Eigen::MatrixXd local_nodal(const RadialGrid& g, const std::vector<double>& Q, double shift, double kin, int l) {
  const auto n = static_cast<Eigen::Index>(g.n());
  std::vector<double> rho(Q.size());
  for (std::size_t i = 0; i < Q.size(); ++i) rho[i] = Q[i] * Q[i];
  const std::vector<double> phi = dense_potential(g, rho);
  const double h2 = g.h() * g.h();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double r = g.r(i);
    a(i, i) = kin * (2.0 / h2 + l * (l + 1.0) / (r * r)) + shift - phi[i];
    if (i > 0) a(i, i - 1) = -kin * g.r(i - 1) / (h2 * r);
    if (i + 1 < n) a(i, i + 1) = -kin * g.r(i + 1) / (h2 * r);
  }
  return a;
}

// Nodal matrix of the sector nonlocal term -(2/(2l+1)) Q_i w_j Q_j r_<^l / r_>^(l+1).
void add_nonlocal(const RadialGrid& g, const std::vector<double>& Q, int l, Eigen::MatrixXd& a) {
  const auto n = static_cast<Eigen::Index>(g.n());
  const double c = -2.0 / (2.0 * l + 1.0);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const double lo = std::min(g.r(i), g.r(j));
      const double hi = std::max(g.r(i), g.r(j));
      a(i, j) += c * Q[i] * g.w(j) * Q[j] * std::pow(lo / hi, l) / hi;
    }
}

}  // namespace

Eigen::MatrixXd lplus_nr(const RadialGrid& g, const std::vector<double>& Q, double lambda, double m, int l) {
  Eigen::MatrixXd a = local_nodal(g, Q, lambda, 1.0 / (2.0 * m), l);
  add_nonlocal(g, Q, l, a);
  return symmetrize(g, a);
}

Eigen::MatrixXd lminus_nr(const RadialGrid& g, const std::vector<double>& Q, double lambda, double m) {
  return symmetrize(g, local_nodal(g, Q, lambda, 1.0 / (2.0 * m), 0));
}

Eigen::MatrixXd lplus_rel(const RadialGrid& g, const std::vector<double>& Q, double mu, double m, double c, int l) {
  const auto n = static_cast<Eigen::Index>(g.n());
  // Tridiagonal (u-coordinates) sector Laplacian, diagonalized by LAPACK.
  std::vector<double> d(n), e(n - 1);
  const double h2 = g.h() * g.h();
  for (Eigen::Index i = 0; i < n; ++i) d[i] = 2.0 / h2 + l * (l + 1.0) / (g.r(i) * g.r(i));
  std::fill(e.begin(), e.end(), -1.0 / h2);
  Eigen::MatrixXd z(n, n);
  if (LAPACKE_dstev(LAPACK_COL_MAJOR, 'V', n, d.data(), e.data(), z.data(), n) != 0)
    throw std::runtime_error("dstev failed");
  const double rest = m * c * c;
  Eigen::VectorXd f(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double ck = c * c * std::max(d[k], 0.0);
    f[k] = ck / (std::sqrt(ck + rest * rest) + rest);
  }
  // In u = r f the kinetic matrix is Z f Z^T; the symmetric coordinates
  // y = sqrt(4 pi h) u carry the same matrix.
  Eigen::MatrixXd kin = z * f.asDiagonal() * z.transpose();
  Eigen::MatrixXd a = local_nodal(g, Q, mu + rest, 0.0, 0);
  add_nonlocal(g, Q, l, a);
  return symmetrize(g, a) + kin;
}

Eigenpairs lowest(const Eigen::MatrixXd& sym, int k, bool vectors) {
  const auto n = static_cast<lapack_int>(sym.rows());
  Eigen::MatrixXd a = sym;
  Eigen::VectorXd w(n);
  Eigen::MatrixXd z(n, vectors ? k : 1);
  std::vector<lapack_int> support(2 * static_cast<std::size_t>(k));
  lapack_int found = 0;
  const lapack_int info = LAPACKE_dsyevr(LAPACK_COL_MAJOR, vectors ? 'V' : 'N', 'I', 'L', n, a.data(), n, 0.0, 0.0,
                                         1, k, 0.0, &found, w.data(), z.data(), n, support.data());
  if (info != 0 || found != k) throw std::runtime_error("dsyevr failed");
  Eigenpairs out;
  out.values = w.head(k);
  if (vectors) out.vectors = z;
  return out;
}

std::vector<double> brute_force_potential(const RadialGrid& g, const std::vector<double>& rho) {
  // Polar angle substituted as mu = 1 - v^2 so the r = s singularity of
  // 1/|x - y| becomes bounded; Gauss-Legendre in v on [0, sqrt 2].
  const std::size_t n = g.n();
  using Rule = boost::math::quadrature::gauss<double, 150>;
  std::vector<double> phi(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = g.r(i);
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double s = g.r(j);
      const double ang = Rule::integrate(
          [&](double v) { return 2.0 * v / std::sqrt((r - s) * (r - s) + 2.0 * r * s * v * v); }, 0.0,
          std::sqrt(2.0));
      total += 2.0 * pi * ang * s * s * g.h() * rho[j];
    }
    phi[i] = total;
  }
  return phi;
}

double bessel_series(int l, double z) {
  const double nu = l + 0.5;
  const double half = 0.5 * z;
  double term = std::pow(half, nu) / std::tgamma(nu + 1.0);
  double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= half * half / (k * (k + nu));
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

double heat_kernel(int l, double t, double r, double s) {
  const double z = r * s / (2.0 * t);
  return std::exp(-(r * r + s * s) / (4.0 * t) + std::log(std::cyl_bessel_i(l + 0.5, z))) / (2.0 * t * std::sqrt(r * s));
}

double resolvent_kernel(int l, double mu, double r, double s) {
  const double kappa = std::sqrt(mu);
  const double lo = std::min(r, s);
  const double hi = std::max(r, s);
  return std::cyl_bessel_i(l + 0.5, kappa * lo) * std::cyl_bessel_k(l + 0.5, kappa * hi) / std::sqrt(r * s);
}

}  // namespace oracle
