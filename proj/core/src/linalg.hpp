#pragma once

// Thin wrappers over LAPACK routines used by the solvers and spectral code.

#include <Eigen/Dense>
#include <span>
#include <vector>

namespace hartree::linalg {

// Solves the symmetric positive definite tridiagonal system (diag, off) x = rhs.
std::vector<double> solve_spd_tridiagonal(std::span<const double> diag, std::span<const double> off,
                                          std::span<const double> rhs);

struct Eigensystem {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // columns
};

// Full eigendecomposition of a symmetric tridiagonal matrix.
Eigensystem tridiagonal_eigensystem(std::span<const double> diag, std::span<const double> off);

// The k lowest eigenpairs of a dense symmetric matrix (lower triangle is read).
Eigensystem lowest_eigenpairs(const Eigen::MatrixXd& a, int k);

// U diag(f) U^T for an orthogonal U.
Eigen::MatrixXd congruence(const Eigen::MatrixXd& u, const Eigen::VectorXd& f);

}  // namespace hartree::linalg
