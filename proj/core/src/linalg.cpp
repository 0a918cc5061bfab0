#include "linalg.hpp"

#include <cblas.h>
#include <lapacke.h>

#include <string>

#include "hartree/errors.hpp"

namespace hartree::linalg {

std::vector<double> solve_spd_tridiagonal(std::span<const double> diag, std::span<const double> off,
                                          std::span<const double> rhs) {
  const auto n = static_cast<lapack_int>(diag.size());
  if (rhs.size() != diag.size() || off.size() + 1 != diag.size())
    throw InvalidArgument("tridiagonal system dimensions do not match");
  std::vector<double> d(diag.begin(), diag.end());
  std::vector<double> e(off.begin(), off.end());
  std::vector<double> x(rhs.begin(), rhs.end());
  const lapack_int info = LAPACKE_dptsv(LAPACK_COL_MAJOR, n, 1, d.data(), e.data(), x.data(), n);
  if (info != 0) throw Error("dptsv failed with info " + std::to_string(info));
  return x;
}

Eigensystem tridiagonal_eigensystem(std::span<const double> diag, std::span<const double> off) {
  const auto n = static_cast<lapack_int>(diag.size());
  if (off.size() + 1 != diag.size()) throw InvalidArgument("tridiagonal dimensions do not match");
  Eigensystem es;
  es.values = Eigen::Map<const Eigen::VectorXd>(diag.data(), n);
  std::vector<double> e(off.begin(), off.end());
  e.push_back(0.0);
  es.vectors.resize(n, n);
  const lapack_int info =
      LAPACKE_dstevd(LAPACK_COL_MAJOR, 'V', n, es.values.data(), e.data(), es.vectors.data(), n);
  if (info != 0) throw EigensolverFailure("dstevd failed with info " + std::to_string(info));
  return es;
}

Eigensystem lowest_eigenpairs(const Eigen::MatrixXd& a, int k) {
  const auto n = static_cast<lapack_int>(a.rows());
  if (a.cols() != a.rows()) throw InvalidArgument("eigenproblem needs a square matrix");
  if (k < 1 || k > n) throw InvalidArgument("requested eigenpair count out of range");
  Eigen::MatrixXd work = a;
  Eigen::VectorXd w(n);
  Eigen::MatrixXd z(n, k);
  std::vector<lapack_int> support(2 * static_cast<std::size_t>(k));
  lapack_int found = 0;
  const lapack_int info = LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'V', 'I', 'L', n, work.data(), n, 0.0, 0.0, 1, k, 0.0,
                                         &found, w.data(), z.data(), n, support.data());
  if (info != 0 || found != k) throw EigensolverFailure("dsyevr failed with info " + std::to_string(info));
  Eigensystem es;
  es.values = w.head(k);
  es.vectors = std::move(z);
  return es;
}

Eigen::MatrixXd congruence(const Eigen::MatrixXd& u, const Eigen::VectorXd& f) {
  const auto n = static_cast<int>(u.rows());
  const auto m = static_cast<int>(u.cols());
  Eigen::MatrixXd scaled = u * f.asDiagonal();
  Eigen::MatrixXd out(n, n);
  cblas_dgemm(CblasColMajor, CblasNoTrans, CblasTrans, n, n, m, 1.0, scaled.data(), n, u.data(), n, 0.0, out.data(),
              n);
  // Restore exact symmetry lost to rounding.
  out = 0.5 * (out + out.transpose()).eval();
  return out;
}

}  // namespace hartree::linalg
