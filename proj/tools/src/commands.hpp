#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "config.hpp"

namespace hartree::cli {

// Collects artifacts written by a subcommand.
class OutputSink {
 public:
  explicit OutputSink(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const noexcept { return dir_; }
  const std::vector<std::string>& written() const noexcept { return written_; }

  void write(const std::string& name, const std::string& text);
  void write_json(const std::string& name, const nlohmann::json& doc);

 private:
  std::filesystem::path dir_;
  std::vector<std::string> written_;
};

// Process exit status, independent of how the command ended.
enum class Status : int { ok = 0, invalid = 2, solver_failure = 3, inconclusive = 4 };

inline const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"solve-nr",  "solve-rel",   "shoot",         "spectrum",
                                              "sweep-c",   "heat-kernel", "critical-mass", "validate"};
  return names;
}

// Runs one subcommand. Library errors propagate to the caller.
Status dispatch(const std::string& subcommand, const RunConfig& cfg, OutputSink& out);

}  // namespace hartree::cli
