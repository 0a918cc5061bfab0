#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hartree/errors.hpp"
#include "hartree/grid.hpp"
#include "oracles.hpp"

using namespace hartree;

TEST(Grid, NodesAndWeights) {
  const GridPtr g = make_grid(99, 10.0);
  EXPECT_DOUBLE_EQ(g->h(), 0.1);
  EXPECT_DOUBLE_EQ(g->r(0), 0.1);
  EXPECT_NEAR(g->r(98), 9.9, 1e-12);
  EXPECT_NEAR(g->w(4), 4.0 * std::numbers::pi * 0.25 * 0.1, 1e-15);
}

TEST(Grid, RejectsBadParameters) {
  EXPECT_THROW(make_grid(8, 10.0), InvalidArgument);
  EXPECT_THROW(make_grid(100, 0.5), InvalidArgument);
}

TEST(Grid, ProfilesOnDifferentGridsDoNotMix) {
  RadialProfile a(make_grid(32, 4.0));
  const RadialProfile b(make_grid(32, 5.0));
  EXPECT_THROW(a += b, InvalidArgument);
  EXPECT_THROW(inner(a, b), InvalidArgument);
}

TEST(Grid, GaussianMass) {
  // int exp(-r^2) d^3x = pi^{3/2}
  const GridPtr g = make_grid(2000, 12.0);
  const RadialProfile f = RadialProfile::sample(g, [](double r) { return std::exp(-0.5 * r * r); });
  EXPECT_NEAR(mass(f), std::pow(std::numbers::pi, 1.5), 1e-10);
}

TEST(Grid, LaplacianSecondOrder) {
  // -Delta exp(-r^2) = (6 - 4 r^2) exp(-r^2)
  auto error = [](std::size_t n) {
    const GridPtr g = make_grid(n, 10.0);
    const RadialProfile f = RadialProfile::sample(g, [](double r) { return std::exp(-r * r); });
    const RadialProfile lf = apply_sector_laplacian(f, 0);
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double r = g->r(k);
      worst = std::max(worst, std::abs(lf[k] - (6.0 - 4.0 * r * r) * std::exp(-r * r)));
    }
    return worst;
  };
  const double ratio = error(199) / error(399);
  EXPECT_GT(ratio, 3.5);
  EXPECT_LT(ratio, 4.5);
}

TEST(Grid, LaplacianMatchesOracleAndIsSymmetric) {
  const GridPtr g = make_grid(300, 15.0);
  const RadialProfile f = RadialProfile::sample(g, [](double r) { return std::exp(-0.3 * r) * std::cos(r); });
  const RadialProfile k = RadialProfile::sample(g, [](double r) { return 1.0 / (1.0 + r * r); });
  for (int l : {0, 1, 3}) {
    const std::vector<double> ref = oracle::laplacian(*g, f.data(), l);
    const RadialProfile lf = apply_sector_laplacian(f, l);
    for (std::size_t i = 0; i < g->n(); ++i) EXPECT_NEAR(lf[i], ref[i], 1e-9 * (1.0 + std::abs(ref[i])));
    EXPECT_NEAR(inner(apply_sector_laplacian(f, l), k), inner(f, apply_sector_laplacian(k, l)), 1e-10);
    EXPECT_GT(inner(f, apply_sector_laplacian(f, l)), 0.0);
    EXPECT_NEAR(dirichlet_form(f, l), inner(f, apply_sector_laplacian(f, l)), 1e-10);
  }
}
