#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>
#include <ostream>
#include <string>

#include "hartree/limits.hpp"
#include "hartree/linops.hpp"
#include "hartree/solve.hpp"

namespace hartree::io {

using nlohmann::json;

json to_json(const RadialGrid& grid);
// Array of [r, value] pairs.
json to_json(const RadialProfile& profile);
json to_json(const GroundState& state);
json to_json(const SpectralReport& report);
json to_json(const KernelCount& count);
json to_json(const NullspaceDiagnostics& diag);
json to_json(const ShootingResult& result);
json to_json(const SweepResult& sweep);
json to_json(const EnergyCurve& curve);
json to_json(const CriticalMassEstimate& estimate);

// CSV with header "r,value".
void write_csv(std::ostream& os, const RadialProfile& profile);
// Long format "index,eigenvalue,r,value".
void write_eigenfunctions_csv(std::ostream& os, const SpectralReport& report);
// "c,mu,gap,h1_dist,energy,residual,herbst_ok,delta1_ok,delta2_ok"; failed records are skipped.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& records);
// "N,energy" for the solved points.
void write_energy_csv(std::ostream& os, const EnergyCurve& curve);

std::string library_version();
// Versions of the library and of the numerical backends it was built against.
json build_info();

// Writes text atomically enough for reports: to a temporary sibling, then renamed.
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace hartree::io
