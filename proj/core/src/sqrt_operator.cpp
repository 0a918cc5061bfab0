#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "hartree/coulomb.hpp"
#include "hartree/errors.hpp"
#include "hartree/solve.hpp"
#include "linalg.hpp"

namespace hartree {
namespace {

using Key = std::tuple<std::size_t, double, int, double, double, bool>;

struct Cache {
  std::mutex mutex;
  std::map<Key, std::shared_ptr<const SymmetricOperator>> entries;
};

Cache& cache() {
  static Cache c;
  return c;
}

constexpr std::size_t cache_capacity = 12;

std::shared_ptr<const SymmetricOperator> build(const GridPtr& grid, int l, double m, double c, bool shifted) {
  const std::size_t n = grid->n();
  const double inv_h2 = 1.0 / (grid->h() * grid->h());
  const double cent = static_cast<double>(l) * (l + 1);
  std::vector<double> diag(n);
  std::vector<double> off(n - 1, -inv_h2);
  for (std::size_t k = 0; k < n; ++k) diag[k] = 2.0 * inv_h2 + cent / (grid->r(k) * grid->r(k));
  const linalg::Eigensystem es = linalg::tridiagonal_eigensystem(diag, off);
  const double rest = m * c * c;
  Eigen::VectorXd f(es.values.size());
  for (Eigen::Index i = 0; i < f.size(); ++i) {
    const double ck = c * c * std::max(es.values[i], 0.0);
    const double root = std::sqrt(ck + rest * rest);
    f[i] = shifted ? ck / (root + rest) : root;
  }
  return std::make_shared<const SymmetricOperator>(grid, linalg::congruence(es.vectors, f));
}

std::shared_ptr<const SymmetricOperator> lookup(const GridPtr& grid, int l, double m, double c, bool shifted) {
  if (l < 0 || l > max_sector) throw InvalidArgument("sector index out of range");
  if (!(m >= 0.0) || !(c > 0.0)) throw InvalidArgument("square-root operator needs m >= 0 and c > 0");
  if (grid->n() > max_dense_size)
    throw SizeExceeded("dense square-root operator limited to n <= " + std::to_string(max_dense_size));
  const Key key{grid->n(), grid->r_max(), l, m, c, shifted};
  Cache& store = cache();
  {
    std::lock_guard lock(store.mutex);
    auto it = store.entries.find(key);
    if (it != store.entries.end()) return it->second;
  }
  auto op = build(grid, l, m, c, shifted);
  std::lock_guard lock(store.mutex);
  if (store.entries.size() >= cache_capacity) store.entries.clear();
  // A concurrent builder may have won; keep the first insertion.
  return store.entries.emplace(key, std::move(op)).first->second;
}

}  // namespace

std::shared_ptr<const SymmetricOperator> sqrt_operator_sector(GridPtr grid, int l, double m, double c) {
  return lookup(grid, l, m, c, false);
}

std::shared_ptr<const SymmetricOperator> kinetic_operator_sector(GridPtr grid, int l, double m, double c) {
  return lookup(grid, l, m, c, true);
}

}  // namespace hartree
