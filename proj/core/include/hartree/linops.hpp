#pragma once

#include <optional>
#include <vector>

#include "hartree/dense.hpp"
#include "hartree/solve.hpp"

namespace hartree {

enum class OperatorKind { plus_nr, minus_nr, plus_rel };

const char* to_string(OperatorKind kind) noexcept;

struct SectorOperator {
  int l = 0;
  OperatorKind kind = OperatorKind::plus_nr;
  SymmetricOperator op;
  ModelParams provenance;
  double multiplier = 0.0;
};

// Fast (O(n), or O(n^2) for relativistic l >= 1) actions of the sector operators.
//   L+_(l) = (1/2m) L_l + lambda + V + W_l, V = -(|x|^-1 * Q^2),
// with the full radial term -2Q (|x|^-1 * (Q f)) at l = 0.
RadialProfile apply_lplus_nr(int l, const GroundState& state, const RadialProfile& f);
RadialProfile apply_lminus(const GroundState& state, const RadialProfile& f);
RadialProfile apply_lplus_rel(int l, const GroundState& state, const RadialProfile& f);

SectorOperator assemble_sector_nr(int l, const GroundState& state);
SectorOperator assemble_lminus(const GroundState& state);
SectorOperator assemble_sector_rel(int l, const GroundState& state);

struct SpectralReport {
  int l = 0;
  OperatorKind kind = OperatorKind::plus_nr;
  std::vector<double> eigenvalues;         // ascending
  std::vector<RadialProfile> eigenvectors;  // unit weighted L2 norm
  bool sign_definite = false;
  std::optional<double> gap_bound;  // K_(l), filled by callers for l >= 2
  int count_in_unit_interval = 0;

  const RadialProfile& ground() const { return eigenvectors.front(); }
};

// k lowest eigenpairs; the ground eigenfunction is signed so that its first
// nonzero entry is positive.
SpectralReport eigs(const SectorOperator& op, int k);

struct PerronResult {
  bool sign_definite = false;
  double margin = 0.0;  // min |phi| / max |phi|
  bool simple = false;  // e1 - e0 > 1e-6
  double gap = 0.0;
  bool ok() const noexcept { return sign_definite && simple; }
};

PerronResult perron_check(const SpectralReport& report);
// Sign test alone for an arbitrary profile.
PerronResult perron_check(const RadialProfile& phi);

// K_(l) = [ sum w (l(l+1)-2)/r^2 phi^2
//          + 2 sum_ij w_i w_j Q_i phi_i (k_1/3 - k_l/(2l+1)) Q_j phi_j ] / sum w phi^2,
// with k_l = r_<^l / r_>^(l+1). Independent O(n^2) quadrature.
double k_ell_gap(int l, const GroundState& state, const RadialProfile& phi);

struct KernelCount {
  int total = 0;
  std::vector<int> per_sector;                    // eigenvalues in (-r0, r0) for each l
  std::vector<std::vector<double>> eigenvalues;  // lowest eigenvalues for each l
};

// Sum over l <= l_max of (2l+1) #{eigenvalues of L+_(l) in (-r0, r0)}.
// AmbiguousCount if an eigenvalue lies within 10% of +-r0.
KernelCount kernel_count(const GroundState& state, int l_max, double r0, int jobs = 1);

struct NullspaceDiagnostics {
  double resid_translation = 0.0;  // || L+_(1) Q' ||
  RadialProfile R_profile;         // 2Q + r Q'
  double resid_R = 0.0;            // || L+ R + 2Q ||, normalized state
  double tau = 0.0;                // sum w Q R / r
  std::vector<int> kernel_counts;  // per sector
  bool tau_separated = false;      // |tau - 1| > 0.05
};

// Expects a normalized state (lambda = 1, m = 1/2) for resid_R and tau.
NullspaceDiagnostics nullspace_diagnostics(const GroundState& state, int l_max = 4, double r0 = 1e-2);

// sigma(xi) = sum w Q xi / r.
double sigma_functional(const GroundState& state, const RadialProfile& xi);

struct LinearizedShot {
  RadialProfile v;      // zero beyond the stop radius
  RadialProfile W;      // interior nonlocal term 2Q int_0^r K Q v ds
  std::size_t count = 0;  // number of integrated nodes
  double stop_radius = 0.0;
  double growth_rate = 0.0;
  bool sign_preserving = false;
};

// Marches -Delta v + v - (|x|^-1 * Q^2) v + W v = 0 outward with the
// three-point scheme of the discrete Laplacian until |v| > 1e8 or r_max.
LinearizedShot linearized_shoot(const GroundState& state, double v0);

}  // namespace hartree
