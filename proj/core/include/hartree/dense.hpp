#pragma once

#include <Eigen/Dense>
#include <functional>

#include "hartree/grid.hpp"

namespace hartree {

// sqrt(w_i) for each node.
Eigen::VectorXd sqrt_weights(const RadialGrid& grid);

// Dense operator on radial profiles that is self-adjoint in the weighted inner
// product. It is stored in the coordinates y_i = sqrt(w_i) f_i, where its
// matrix is symmetric.
class SymmetricOperator {
 public:
  using Apply = std::function<RadialProfile(const RadialProfile&)>;

  SymmetricOperator(GridPtr grid, Eigen::MatrixXd symmetric);

  // Builds the matrix column by column from the action on unit vectors. The
  // largest |S - S^T| before symmetrization is stored as asymmetry().
  static SymmetricOperator assemble(GridPtr grid, const Apply& apply);

  const GridPtr& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return grid_->n(); }
  const Eigen::MatrixXd& symmetric() const noexcept { return sym_; }
  double asymmetry() const noexcept { return asymmetry_; }

  // Matrix acting on nodal values f.
  Eigen::MatrixXd nodal_matrix() const;
  RadialProfile apply(const RadialProfile& f) const;

  SymmetricOperator& operator+=(const SymmetricOperator& other);
  // Adds s times the identity.
  SymmetricOperator& shift(double s);
  // Adds a multiplication operator.
  SymmetricOperator& add_diagonal(const RadialProfile& v);

 private:
  GridPtr grid_;
  Eigen::MatrixXd sym_;
  double asymmetry_ = 0.0;
};

}  // namespace hartree
