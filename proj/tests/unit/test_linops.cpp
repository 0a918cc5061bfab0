#include <gtest/gtest.h>

#include <cmath>

#include "hartree/errors.hpp"
#include "hartree/linops.hpp"
#include "oracles.hpp"

using namespace hartree;

namespace {
const GroundState& state() {
  static const GroundState gs = solve_nr_normalized(make_grid(600, 30.0), 1e-10);
  return gs;
}
}  // namespace

TEST(Linops, AssembledMatchesDenseOracle) {
  const GroundState& gs = state();
  for (int l : {0, 1, 2, 5}) {
    const SectorOperator op = assemble_sector_nr(l, gs);
    const Eigen::MatrixXd ref = oracle::lplus_nr(*gs.grid(), gs.Q.data(), 1.0, 0.5, l);
    EXPECT_LT((op.op.symmetric() - ref).cwiseAbs().maxCoeff(), 1e-10 * ref.cwiseAbs().maxCoeff()) << "l=" << l;
    EXPECT_LT(op.op.asymmetry(), 1e-9 * ref.cwiseAbs().maxCoeff());
  }
  const Eigen::MatrixXd ref = oracle::lminus_nr(*gs.grid(), gs.Q.data(), 1.0, 0.5);
  EXPECT_LT((assemble_lminus(gs).op.symmetric() - ref).cwiseAbs().maxCoeff(), 1e-10 * ref.cwiseAbs().maxCoeff());
}

TEST(Linops, FastApplyMatchesMatrix) {
  const GroundState& gs = state();
  const RadialProfile f = RadialProfile::sample(gs.grid(), [](double r) { return std::exp(-0.2 * r) * std::sin(r); });
  for (int l : {0, 1, 3}) {
    const RadialProfile a = apply_lplus_nr(l, gs, f);
    const RadialProfile b = assemble_sector_nr(l, gs).op.apply(f);
    for (std::size_t k = 0; k < f.size(); ++k) EXPECT_NEAR(a[k], b[k], 1e-9 * (1.0 + std::abs(a[k])));
  }
}

TEST(Linops, RelativisticMatchesDenseOracle) {
  const GridPtr g = make_grid(300, 60.0);
  const GroundState gs = solve_rel(g, 1.0, 10.0, 1.0);
  for (int l : {0, 2}) {
    const Eigen::MatrixXd ref = oracle::lplus_rel(*g, gs.Q.data(), gs.multiplier, 1.0, 10.0, l);
    const SectorOperator op = assemble_sector_rel(l, gs);
    EXPECT_LT((op.op.symmetric() - ref).cwiseAbs().maxCoeff(), 1e-9 * ref.cwiseAbs().maxCoeff());
    const RadialProfile f = RadialProfile::sample(g, [](double r) { return std::exp(-r); });
    const RadialProfile a = apply_lplus_rel(l, gs, f);
    const RadialProfile b = op.op.apply(f);
    for (std::size_t k = 0; k < f.size(); ++k) EXPECT_NEAR(a[k], b[k], 1e-8 * (1.0 + std::abs(b[k])));
  }
}

TEST(Linops, SpectralStructure) {
  const GroundState& gs = state();
  const SpectralReport s0 = eigs(assemble_sector_nr(0, gs), 3);
  EXPECT_LT(s0.eigenvalues[0], 0.0);
  EXPECT_GT(s0.eigenvalues[1], 0.01);
  const SpectralReport s1 = eigs(assemble_sector_nr(1, gs), 3);
  EXPECT_LT(std::abs(s1.eigenvalues[0]), 5e-3);
  EXPECT_TRUE(s1.sign_definite);
  EXPECT_GT(s1.ground()[0], 0.0);
  const PerronResult p = perron_check(s1);
  EXPECT_TRUE(p.ok());
  for (int l = 2; l <= 4; ++l) {
    const SpectralReport s = eigs(assemble_sector_nr(l, gs), 2);
    const double K = k_ell_gap(l, gs, s.ground());
    EXPECT_GT(K, 0.0);
    EXPECT_GE(s.eigenvalues[0], K - 1e-6);
  }
  EXPECT_THROW(k_ell_gap(1, gs, s1.ground()), InvalidArgument);
}

TEST(Linops, KernelCountAndAmbiguity) {
  const GroundState& gs = state();
  const KernelCount kc = kernel_count(gs, 4, 1e-2, 2);
  EXPECT_EQ(kc.total, 3);
  ASSERT_EQ(kc.per_sector.size(), 5u);
  EXPECT_EQ(kc.per_sector[1], 1);
  // A window edge sitting on the second radial eigenvalue is flagged.
  const SpectralReport s0 = eigs(assemble_sector_nr(0, gs), 2);
  EXPECT_THROW(kernel_count(gs, 2, s0.eigenvalues[1] * 1.01), AmbiguousCount);
}

TEST(Linops, NullspaceDiagnostics) {
  const GroundState& gs = state();
  const NullspaceDiagnostics d = nullspace_diagnostics(gs, 3, 1e-2);
  EXPECT_LT(d.resid_translation, 1e-3);
  EXPECT_LT(d.resid_R, 5e-3);  // O(h^2)
  EXPECT_NEAR(d.tau, 1.938, 5e-3);
  EXPECT_TRUE(d.tau_separated);
}

TEST(Linops, LinearizedShootGrows) {
  const GroundState& gs = state();
  const LinearizedShot shot = linearized_shoot(gs, 1.0);
  EXPECT_TRUE(shot.sign_preserving);
  EXPECT_GT(shot.growth_rate, 0.5);
  EXPECT_LT(shot.growth_rate, 1.05);
  const RadialProfile w = wronskian_residual(gs.Q, shot.v, shot.W);
  for (std::size_t k = 0; k + 1 < shot.count && gs.grid()->r(k) < 10.0; ++k) EXPECT_NEAR(w[k], 0.0, 1e-6);
}

TEST(Linops, SizeLimit) {
  const GroundState big = solve_nr_normalized(make_grid(4001, 30.0), 1e-9);
  EXPECT_THROW(assemble_sector_nr(0, big), SizeExceeded);
}
