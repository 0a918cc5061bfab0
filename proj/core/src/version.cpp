#include <cblas.h>
#include <fftw3.h>

#include <Eigen/Core>
#include <string>

#include "hartree/io.hpp"

namespace hartree::io {

std::string library_version() { return HARTREE_VERSION; }

json build_info() {
  return {{"hartree", HARTREE_VERSION},
          {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                        std::to_string(EIGEN_MINOR_VERSION)},
          {"fftw", std::string(fftw_version)},
          {"blas", std::string(openblas_get_config())},
          {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                                std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                                std::to_string(NLOHMANN_JSON_VERSION_PATCH)},
          {"compiler", __VERSION__}};
}

}  // namespace hartree::io
