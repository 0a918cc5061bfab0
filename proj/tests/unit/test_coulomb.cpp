#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hartree/coulomb.hpp"
#include "hartree/errors.hpp"
#include "oracles.hpp"

using namespace hartree;

namespace {
RadialProfile density(const GridPtr& g) {
  return RadialProfile::sample(g, [](double r) { return std::exp(-r * r) * (1.0 + 0.5 * r); });
}
}  // namespace

TEST(Coulomb, KernelValuesAndDomain) {
  EXPECT_NEAR(kernel_k(2.0, 1.0), 4.0 * std::numbers::pi * 0.5, 1e-15);
  EXPECT_DOUBLE_EQ(kernel_k(3.0, 3.0), 0.0);
  EXPECT_THROW(kernel_k(1.0, 2.0), DomainError);
  EXPECT_THROW(multipole_kernel(65, 1.0, 1.0), DomainError);
  EXPECT_DOUBLE_EQ(multipole_kernel(3, 1.5, 0.7), multipole_kernel(3, 0.7, 1.5));
}

TEST(Coulomb, PotentialMatchesDenseSum) {
  const GridPtr g = make_grid(400, 10.0);
  const RadialProfile rho = density(g);
  const std::vector<double> ref = oracle::dense_potential(*g, rho.data());
  const RadialProfile phi = newton_potential(rho);
  for (std::size_t i = 0; i < g->n(); ++i) EXPECT_NEAR(phi[i], ref[i], 1e-12 * ref[0]);
}

TEST(Coulomb, PotentialMatchesThreeDimensionalQuadrature) {
  const GridPtr g = make_grid(64, 8.0);
  const RadialProfile rho = density(g);
  const std::vector<double> ref = oracle::brute_force_potential(*g, rho.data());
  const RadialProfile phi = newton_potential(rho);
  for (std::size_t i = 0; i < g->n(); ++i) EXPECT_NEAR(phi[i], ref[i], 1e-3 * ref[0]);
}

TEST(Coulomb, FarFieldIsMonopole) {
  const GridPtr g = make_grid(2000, 40.0);
  const RadialProfile rho = density(g);
  double N = 0.0;
  for (std::size_t k = 0; k < g->n(); ++k) N += g->w(k) * rho[k];
  const RadialProfile phi = newton_potential(rho);
  for (std::size_t k = 1000; k < g->n(); k += 250) EXPECT_NEAR(phi[k] * g->r(k), N, 1e-10 * N);
}

TEST(Coulomb, SectorApplyMatchesDenseKernel) {
  const GridPtr g = make_grid(128, 10.0);
  const RadialProfile Q = RadialProfile::sample(g, [](double r) { return std::exp(-0.4 * r * r); });
  const RadialProfile f = RadialProfile::sample(g, [](double r) { return std::sin(r) / (1.0 + r); });
  for (int l = 1; l <= 10; ++l) {
    const RadialProfile w = apply_w_sector(l, Q, f);
    for (std::size_t i = 0; i < g->n(); ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < g->n(); ++j)
        s += g->w(j) * Q[j] * f[j] * multipole_kernel(l, g->r(i), g->r(j)) / (4.0 * std::numbers::pi);
      EXPECT_NEAR(w[i], -2.0 * Q[i] * s, 1e-13);
    }
  }
  EXPECT_THROW(apply_w_sector(0, Q, f), DomainError);
}

TEST(Coulomb, LinearizedTermIsFullMonopole) {
  const GridPtr g = make_grid(128, 10.0);
  const RadialProfile Q = RadialProfile::sample(g, [](double r) { return std::exp(-0.4 * r * r); });
  const RadialProfile xi = RadialProfile::sample(g, [](double r) { return std::cos(0.7 * r); });
  const RadialProfile a = apply_newton_linearized(Q, xi);
  const RadialProfile b = detail::apply_w_sector_unchecked(0, Q, xi);
  const RadialProfile c = hadamard(newton_potential(hadamard(Q, xi)), Q) * -2.0;
  for (std::size_t i = 0; i < g->n(); ++i) {
    EXPECT_NEAR(a[i], b[i], 1e-13);
    EXPECT_NEAR(a[i], c[i], 1e-13);
  }
}
