#include "config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace hartree::cli {

namespace pt = boost::property_tree;

bool RunConfig::wants(const std::string& format) const {
  return std::find(output.formats.begin(), output.formats.end(), format) != output.formats.end();
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw ConfigError("not a number: '" + item + "'");
    }
    if (used != item.size()) throw ConfigError("not a number: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

namespace {

std::vector<std::string> split_words(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <class T>
T get(const pt::ptree& node, const std::string& key) {
  try {
    return node.get_value<T>();
  } catch (const pt::ptree_error&) {
    throw ConfigError("invalid value for '" + key + "': '" + node.data() + "'");
  }
}

}  // namespace

RunConfig load_config(const std::filesystem::path& path) {
  pt::ptree tree;
  try {
    pt::read_ini(path.string(), tree);
  } catch (const pt::ptree_error& e) {
    throw ConfigError(std::string("cannot parse config: ") + e.what());
  }
  RunConfig cfg;
  using Setter = void (*)(RunConfig&, const pt::ptree&, const std::string&);
  static const std::map<std::string, std::map<std::string, Setter>> schema{
      {"grid",
       {{"n", [](RunConfig& c, const pt::ptree& v, const std::string& k) { c.grid.n = get<std::size_t>(v, k); }},
        {"r_max", [](RunConfig& c, const pt::ptree& v, const std::string& k) { c.grid.r_max = get<double>(v, k); }}}},
      {"model",
       {{"model", [](RunConfig& c, const pt::ptree& v, const std::string& k) { c.model.kind = get<std::string>(v, k); }},
        {"m", [](RunConfig& c, const pt::ptree& v, const std::string& k) { c.model.m = get<double>(v, k); }},
        {"c", [](RunConfig& c, const pt::ptree& v, const std::string& k) { c.model.c = get<double>(v, k); }},
        {"N", [](RunConfig& c, const pt::ptree& v, const std::string& k) { c.model.N = get<double>(v, k); }},
        {"multiplier",
         [](RunConfig& c, const pt::ptree& v, const std::string& k) { c.model.multiplier = get<double>(v, k); }}}},
      {"solver",
       {{"tol", [](RunConfig& c, const pt::ptree& v, const std::string& k) { c.solver.tol = get<double>(v, k); }},
        {"max_iter",
         [](RunConfig& c, const pt::ptree& v, const std::string& k) { c.solver.max_iter = get<int>(v, k); }}}},
      {"spectrum",
       {{"l_max", [](RunConfig& c, const pt::ptree& v, const std::string& k) { c.spectrum.l_max = get<int>(v, k); }},
        {"k_eigs", [](RunConfig& c, const pt::ptree& v, const std::string& k) { c.spectrum.k_eigs = get<int>(v, k); }},
        {"kernel_radius",
         [](RunConfig& c, const pt::ptree& v, const std::string& k) { c.spectrum.kernel_radius = get<double>(v, k); }}}},
      {"sweep",
       {{"c_list", [](RunConfig& c, const pt::ptree& v, const std::string&) { c.sweep.c_list = parse_list(v.data()); }}}},
      {"critical",
       {{"bracket_tol",
         [](RunConfig& c, const pt::ptree& v, const std::string& k) { c.critical.bracket_tol = get<double>(v, k); }}}},
      {"heat_kernel",
       {{"times",
         [](RunConfig& c, const pt::ptree& v, const std::string&) { c.heat_kernel.times = parse_list(v.data()); }}}},
      {"output",
       {{"dir", [](RunConfig& c, const pt::ptree& v, const std::string& k) { c.output.dir = get<std::string>(v, k); }},
        {"formats",
         [](RunConfig& c, const pt::ptree& v, const std::string&) { c.output.formats = split_words(v.data()); }}}},
      {"run",
       {{"jobs", [](RunConfig& c, const pt::ptree& v, const std::string& k) { c.jobs = get<int>(v, k); }},
        {"seed", [](RunConfig& c, const pt::ptree& v, const std::string& k) { c.seed = get<std::uint64_t>(v, k); }}}},
  };
  for (const auto& [section, body] : tree) {
    auto sit = schema.find(section);
    if (sit == schema.end()) {
      if (body.empty()) throw ConfigError("keys must appear inside a [section]: '" + section + "'");
      throw ConfigError("unknown config section [" + section + "]");
    }
    for (const auto& [key, value] : body) {
      auto kit = sit->second.find(key);
      if (kit == sit->second.end()) throw ConfigError("unknown config key '" + section + "." + key + "'");
      kit->second(cfg, value, section + "." + key);
    }
  }
  return cfg;
}

void check(const RunConfig& cfg) {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (cfg.grid.n < 16) throw ConfigError("grid.n must be at least 16");
  if (!(cfg.grid.r_max >= 1.0) || !std::isfinite(cfg.grid.r_max)) throw ConfigError("grid.r_max must be at least 1");
  if (cfg.model.kind != "nonrelativistic" && cfg.model.kind != "relativistic")
    throw ConfigError("model.model must be 'nonrelativistic' or 'relativistic'");
  if (cfg.model.m && !positive(*cfg.model.m)) throw ConfigError("model.m must be positive");
  if (!positive(cfg.model.c)) throw ConfigError("model.c must be positive");
  if (cfg.model.N && cfg.model.multiplier) throw ConfigError("set either model.N or model.multiplier, not both");
  if (cfg.model.N && !positive(*cfg.model.N)) throw ConfigError("model.N must be positive");
  if (!(cfg.solver.tol >= 1e-14 && cfg.solver.tol <= 1e-4)) throw ConfigError("solver.tol must lie in [1e-14, 1e-4]");
  if (cfg.solver.max_iter < 1) throw ConfigError("solver.max_iter must be positive");
  if (cfg.spectrum.l_max < 0 || cfg.spectrum.l_max > 64) throw ConfigError("spectrum.l_max must lie in [0, 64]");
  if (cfg.spectrum.k_eigs < 1 || static_cast<std::size_t>(cfg.spectrum.k_eigs) > cfg.grid.n)
    throw ConfigError("spectrum.k_eigs must lie in [1, n]");
  if (!positive(cfg.spectrum.kernel_radius)) throw ConfigError("spectrum.kernel_radius must be positive");
  if (cfg.sweep.c_list.empty()) throw ConfigError("sweep.c_list must not be empty");
  for (double c : cfg.sweep.c_list)
    if (!positive(c)) throw ConfigError("sweep.c_list entries must be positive");
  if (!positive(cfg.critical.bracket_tol)) throw ConfigError("critical.bracket_tol must be positive");
  for (double t : cfg.heat_kernel.times)
    if (!positive(t)) throw ConfigError("heat_kernel.times entries must be positive");
  if (cfg.output.formats.empty()) throw ConfigError("output.formats must name json and/or csv");
  for (const auto& f : cfg.output.formats)
    if (f != "json" && f != "csv") throw ConfigError("unknown output format '" + f + "'");
  if (cfg.jobs < 1) throw ConfigError("run.jobs must be positive");
}

nlohmann::json to_json(const RunConfig& cfg) {
  auto opt = [](const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  return {{"grid", {{"n", cfg.grid.n}, {"r_max", cfg.grid.r_max}}},
          {"model",
           {{"model", cfg.model.kind},
            {"m", opt(cfg.model.m)},
            {"c", cfg.model.c},
            {"N", opt(cfg.model.N)},
            {"multiplier", opt(cfg.model.multiplier)}}},
          {"solver", {{"tol", cfg.solver.tol}, {"max_iter", cfg.solver.max_iter}}},
          {"spectrum",
           {{"l_max", cfg.spectrum.l_max}, {"k_eigs", cfg.spectrum.k_eigs}, {"kernel_radius", cfg.spectrum.kernel_radius}}},
          {"sweep", {{"c_list", cfg.sweep.c_list}}},
          {"critical", {{"bracket_tol", cfg.critical.bracket_tol}}},
          {"heat_kernel", {{"times", cfg.heat_kernel.times}}},
          {"output", {{"dir", cfg.output.dir}, {"formats", cfg.output.formats}}},
          {"run", {{"jobs", cfg.jobs}, {"seed", cfg.seed}}}};
}

}  // namespace hartree::cli
