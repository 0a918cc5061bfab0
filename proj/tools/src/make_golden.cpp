// Regenerates the reference profile of the normalized ground state used by the tests.
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <nlohmann/json.hpp>

#include "hartree/solve.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: hartree-golden <output.json>\n";
    return 2;
  }
  constexpr std::size_t n = 8192;
  constexpr double r_max = 60.0;
  const hartree::GridPtr grid = hartree::make_grid(n, r_max);
  const hartree::GroundState gs = hartree::solve_nr_normalized(grid, 1e-11);
  const hartree::ShootingResult shot = hartree::shoot_threshold();

  double worst = 0.0;
  const double peak = gs.Q[0];
  for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, std::abs(gs.Q[k] - shot.normalized(grid->r(k))));
  const double agreement = worst / peak;
  if (agreement > 1e-4) {
    std::cerr << "shooting and iteration disagree: " << agreement << "\n";
    return 1;
  }

  // Every 32nd node up to r = 20 keeps the file small.
  nlohmann::json samples = nlohmann::json::array();
  for (std::size_t k = 31; k < n && grid->r(k) <= 20.0; k += 32) samples.push_back({grid->r(k), gs.Q[k]});
  const nlohmann::json doc{{"n", n},
                           {"r_max", r_max},
                           {"Q0", gs.Q[0]},
                           {"mass", gs.mass},
                           {"v0_star", shot.v0_star},
                           {"kappa", shot.kappa},
                           {"agreement", agreement},
                           {"samples", samples}};
  std::ofstream(argv[1]) << std::setprecision(17) << doc.dump(1) << "\n";
  std::cout << "agreement " << agreement << "\n";
  return 0;
}
