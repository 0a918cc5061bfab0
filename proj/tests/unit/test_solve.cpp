#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>

#include "hartree/errors.hpp"
#include "hartree/solve.hpp"
#include "oracles.hpp"

using namespace hartree;

namespace {
const GroundState& normalized() {
  static const GroundState gs = solve_nr_normalized(make_grid(1000, 30.0), 1e-10);
  return gs;
}
}  // namespace

TEST(SolveNr, NormalizedResidualAgainstOracle) {
  const GroundState& gs = normalized();
  EXPECT_DOUBLE_EQ(gs.multiplier, 1.0);
  EXPECT_LE(gs.residual, 1e-10);
  EXPECT_LE(oracle::residual_nr(*gs.grid(), gs.Q.data(), 0.5, 1.0), 1e-9);
}

TEST(SolveNr, ProfileIsPositiveAndNonincreasing) {
  const GroundState& gs = normalized();
  for (std::size_t k = 0; k + 1 < gs.Q.size(); ++k) {
    EXPECT_GT(gs.Q[k], 0.0);
    EXPECT_GE(gs.Q[k], gs.Q[k + 1]);
  }
}

TEST(SolveNr, MatchesGoldenProfile) {
  std::ifstream in(HARTREE_GOLDEN_DIR "/q0.json");
  ASSERT_TRUE(in.good());
  const nlohmann::json golden = nlohmann::json::parse(in);
  const GridPtr g = make_grid(golden["n"].get<std::size_t>(), golden["r_max"].get<double>());
  const GroundState gs = solve_nr_normalized(g, 1e-11);
  EXPECT_NEAR(gs.Q[0], golden["Q0"].get<double>(), 1e-9);
  EXPECT_NEAR(gs.mass, golden["mass"].get<double>(), 1e-9);
  EXPECT_LE(golden["agreement"].get<double>(), 1e-4);
  const double h = g->h();
  for (const auto& sample : golden["samples"]) {
    const auto k = static_cast<std::size_t>(std::llround(sample[0].get<double>() / h)) - 1;
    EXPECT_NEAR(gs.Q[k], sample[1].get<double>(), 1e-9);
  }
}

TEST(SolveNr, PrescribedMassAndMultiplier) {
  const GridPtr g = make_grid(1500, 60.0);
  const GroundState a = solve_nr(g, 1.0, 1.0);
  EXPECT_NEAR(a.mass, 1.0, 1e-9);
  EXPECT_LE(oracle::residual_nr(*g, a.Q.data(), 1.0, a.multiplier), 1e-8);
  const GroundState b = solve_nr_multiplier(g, 1.0, a.multiplier);
  EXPECT_NEAR(b.mass, 1.0, 1e-9);
  EXPECT_LE(b.residual, 1e-8);
}

TEST(SolveNr, ScalingLaw) {
  // lambda ~ N^2 and E ~ N^3. Halving r_max with doubled N keeps the
  // underlying normalized grid, so the discrete relation is exact.
  const GroundState a = solve_nr(make_grid(1000, 60.0), 0.5, 1.0);
  const GroundState b = solve_nr(make_grid(1000, 30.0), 0.5, 2.0);
  EXPECT_NEAR(b.multiplier / a.multiplier, 4.0, 1e-9);
  EXPECT_NEAR(b.energy / a.energy, 8.0, 1e-9);
}

TEST(SolveNr, ExactRescaling) {
  const GroundState& gs = normalized();
  const GroundState r = rescale_exact(gs, 1.5);
  EXPECT_NEAR(r.multiplier, 2.25, 1e-14);
  EXPECT_NEAR(r.mass, 1.5 * gs.mass, 1e-10);
  EXPECT_LE(r.residual, 1e-8);
  EXPECT_THROW(rescale(gs, 0.1), ResampleOutOfRange);
}

TEST(SolveNr, RejectsBadInput) {
  const GridPtr g = make_grid(100, 30.0);
  EXPECT_THROW(solve_nr_normalized(g, 1.0), InvalidArgument);
  EXPECT_THROW(solve_nr(g, -1.0, 1.0), InvalidArgument);
  EXPECT_THROW(solve_nr(g, 1.0, 0.0), InvalidArgument);
  EXPECT_THROW(solve_nr_normalized(g, 1e-12, 2), NoConvergence);
}

TEST(Shooting, ThresholdAgreesWithIteration) {
  const ShootingResult shot = shoot_threshold();
  const GroundState& gs = normalized();
  double worst = 0.0;
  for (std::size_t k = 0; k < gs.Q.size(); ++k)
    worst = std::max(worst, std::abs(shot.normalized(gs.grid()->r(k)) - gs.Q[k]));
  EXPECT_LE(worst / gs.Q[0], 2e-4);
  EXPECT_LT(shot.v0_hi - shot.v0_lo, 1e-11 * shot.v0_star);
  EXPECT_EQ(classify_shot(0.9 * shot.v0_star), ShotOutcome::crossed_zero);
  EXPECT_EQ(classify_shot(1.1 * shot.v0_star), ShotOutcome::blew_up);
  EXPECT_THROW(shoot_threshold({}, {1.0, 0.5}), InvalidArgument);
}

TEST(SolveRel, ResidualAndMass) {
  const GridPtr g = make_grid(1000, 60.0);
  const GroundState gs = solve_rel(g, 1.0, 10.0, 1.0);
  EXPECT_NEAR(gs.mass, 1.0, 1e-8);
  EXPECT_LE(oracle::residual_rel(*g, gs.Q.data(), 1.0, 10.0, gs.multiplier), 1e-8);
  EXPECT_NEAR(gs.energy, oracle::energy_rel(*g, gs.Q.data(), 1.0, 10.0), 1e-10 * std::abs(gs.energy));
  EXPECT_LT(-gs.multiplier, 100.0);
}

TEST(SolveRel, FixedMultiplierReproducesMassSolve) {
  const GridPtr g = make_grid(800, 60.0);
  const GroundState a = solve_rel(g, 1.0, 5.0, 0.8);
  const GroundState b = solve_rel_fixed_multiplier(a.Q, 1.0, 5.0, a.multiplier + 25.0);
  EXPECT_NEAR(b.mass, a.mass, 1e-7);
}

TEST(SolveRel, SupercriticalMassCollapses) {
  const GridPtr g = make_grid(1000, 30.0);
  EXPECT_THROW(solve_rel(g, 1.0, 1.0, 3.5), Error);
}

TEST(Energy, VirialIdentities) {
  const GroundState& gs = normalized();
  const Virial v = virial_terms(gs.Q);
  EXPECT_NEAR(v.mass / v.kinetic, 3.0, 1e-3);
  EXPECT_NEAR(v.hartree / v.kinetic, 4.0, 1e-3);
  EXPECT_NEAR(action_scaling_derivative(gs.Q), 0.0, 1e-6);
}

TEST(Energy, WronskianOfGroundStateWithItself) {
  const GroundState& gs = normalized();
  const RadialProfile zero(gs.grid());
  const RadialProfile w = wronskian_residual(gs.Q, gs.Q, zero);
  for (std::size_t k = 0; k < w.size(); ++k) EXPECT_NEAR(w[k], 0.0, 1e-12);
}
