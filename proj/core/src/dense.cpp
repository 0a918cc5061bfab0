#include "hartree/dense.hpp"

#include <cmath>

#include "hartree/errors.hpp"

namespace hartree {

Eigen::VectorXd sqrt_weights(const RadialGrid& grid) {
  Eigen::VectorXd s(static_cast<Eigen::Index>(grid.n()));
  for (std::size_t k = 0; k < grid.n(); ++k) s[static_cast<Eigen::Index>(k)] = std::sqrt(grid.w(k));
  return s;
}

SymmetricOperator::SymmetricOperator(GridPtr grid, Eigen::MatrixXd symmetric)
    : grid_(std::move(grid)), sym_(std::move(symmetric)) {
  const auto n = static_cast<Eigen::Index>(grid_->n());
  if (sym_.rows() != n || sym_.cols() != n) throw InvalidArgument("operator size does not match grid");
}

SymmetricOperator SymmetricOperator::assemble(GridPtr grid, const Apply& apply) {
  const std::size_t n = grid->n();
  const Eigen::VectorXd sw = sqrt_weights(*grid);
  Eigen::MatrixXd s(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  RadialProfile e(grid);
  for (std::size_t j = 0; j < n; ++j) {
    e[j] = 1.0;
    const RadialProfile col = apply(e);
    e[j] = 0.0;
    const auto jj = static_cast<Eigen::Index>(j);
    for (std::size_t i = 0; i < n; ++i) {
      const auto ii = static_cast<Eigen::Index>(i);
      s(ii, jj) = sw[ii] * col[i] / sw[jj];
    }
  }
  const double asym = (s - s.transpose()).cwiseAbs().maxCoeff();
  Eigen::MatrixXd sym = 0.5 * (s + s.transpose());
  SymmetricOperator op(std::move(grid), std::move(sym));
  op.asymmetry_ = asym;
  return op;
}

Eigen::MatrixXd SymmetricOperator::nodal_matrix() const {
  const Eigen::VectorXd sw = sqrt_weights(*grid_);
  return sw.cwiseInverse().asDiagonal() * sym_ * sw.asDiagonal();
}

RadialProfile SymmetricOperator::apply(const RadialProfile& f) const {
  if (!(f.grid() == *grid_)) throw InvalidArgument("profile grid does not match operator grid");
  const Eigen::VectorXd sw = sqrt_weights(*grid_);
  const Eigen::VectorXd y = sw.cwiseProduct(Eigen::Map<const Eigen::VectorXd>(f.values().data(), sw.size()));
  const Eigen::VectorXd z = (sym_ * y).cwiseQuotient(sw);
  return RadialProfile(grid_, std::vector<double>(z.data(), z.data() + z.size()));
}

SymmetricOperator& SymmetricOperator::operator+=(const SymmetricOperator& other) {
  if (!(*other.grid_ == *grid_)) throw InvalidArgument("operators live on different grids");
  sym_ += other.sym_;
  asymmetry_ = std::max(asymmetry_, other.asymmetry_);
  return *this;
}

SymmetricOperator& SymmetricOperator::shift(double s) {
  sym_.diagonal().array() += s;
  return *this;
}

SymmetricOperator& SymmetricOperator::add_diagonal(const RadialProfile& v) {
  if (!(v.grid() == *grid_)) throw InvalidArgument("potential grid does not match operator grid");
  for (std::size_t k = 0; k < grid_->n(); ++k) sym_(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) += v[k];
  return *this;
}

}  // namespace hartree
