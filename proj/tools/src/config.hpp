#pragma once

#include <cstdint>
#include <filesystem>
#include <nlohmann/json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hartree::cli {

// Malformed or out-of-range configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  struct Grid {
    std::size_t n = 2000;
    double r_max = 30.0;
  } grid;
  struct Model {
    std::string kind = "nonrelativistic";  // or "relativistic"
    std::optional<double> m;               // command-specific default when unset
    double c = 1.0;
    std::optional<double> N;
    std::optional<double> multiplier;
  } model;
  struct Solver {
    double tol = 1e-10;
    int max_iter = 5000;
  } solver;
  struct Spectrum {
    int l_max = 4;
    int k_eigs = 8;
    double kernel_radius = 1e-2;
  } spectrum;
  struct Sweep {
    std::vector<double> c_list{5.0, 10.0, 20.0, 40.0};
  } sweep;
  struct Critical {
    double bracket_tol = 0.2;
  } critical;
  struct HeatKernel {
    std::vector<double> times{0.1, 0.5, 1.0};
  } heat_kernel;
  struct Output {
    std::string dir = "hartree_out";
    std::vector<std::string> formats{"json", "csv"};
  } output;
  int jobs = 1;
  std::uint64_t seed = 20240601;

  bool wants(const std::string& format) const;
  bool relativistic() const { return model.kind == "relativistic"; }
};

// Reads an INI-style document ("key = value" lines grouped under [section]
// headers). Unknown sections or keys raise ConfigError.
RunConfig load_config(const std::filesystem::path& path);

// Range checks shared by every subcommand.
void check(const RunConfig& cfg);

nlohmann::json to_json(const RunConfig& cfg);

std::vector<double> parse_list(const std::string& text);

}  // namespace hartree::cli
