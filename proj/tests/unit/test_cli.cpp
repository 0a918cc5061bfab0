#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const fs::path root = fs::temp_directory_path() / "hartree_cli_test";

int run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + HARTREE_LAB_EXE + std::string(" ") + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

nlohmann::json manifest(const fs::path& dir) { return nlohmann::json::parse(slurp(dir / "manifest.json")); }

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    fs::remove_all(root);
    fs::create_directories(root);
  }
  void TearDown() override { fs::remove_all(root); }
};

}  // namespace

TEST_F(Cli, SolveWritesStateAndManifest) {
  const fs::path out = root / "a";
  ASSERT_EQ(run("solve-nr --n 400 --r-max 30 --tol 1e-10 --out " + out.string()), 0);
  const nlohmann::json m = manifest(out);
  EXPECT_EQ(m["subcommand"], "solve-nr");
  EXPECT_EQ(m["config"]["grid"]["n"], 400);
  EXPECT_TRUE(m["versions"].contains("hartree"));
  EXPECT_GE(m["wall_time"].get<double>(), 0.0);
  ASSERT_EQ(m["outputs"].size(), 2u);
  for (const auto& name : m["outputs"]) EXPECT_TRUE(fs::exists(out / name.get<std::string>()));
  // Every file in the directory other than the manifest is listed.
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(out))
    if (e.path().filename() != "manifest.json") ++files;
  EXPECT_EQ(files, m["outputs"].size());
}

TEST_F(Cli, OutputsAreDeterministic) {
  ASSERT_EQ(run("solve-rel --n 300 --r-max 60 --c 10 --out " + (root / "x").string()), 0);
  ASSERT_EQ(run("solve-rel --n 300 --r-max 60 --c 10 --jobs 2 --out " + (root / "y").string()), 0);
  EXPECT_EQ(slurp(root / "x/ground_state.json"), slurp(root / "y/ground_state.json"));
  EXPECT_EQ(slurp(root / "x/profile.csv"), slurp(root / "y/profile.csv"));
  ASSERT_EQ(run("sweep-c --n 300 --r-max 60 --c-list 5,10 --out " + (root / "s1").string()), 0);
  ASSERT_EQ(run("sweep-c --n 300 --r-max 60 --c-list 5,10 --jobs 2 --out " + (root / "s2").string()), 0);
  EXPECT_EQ(slurp(root / "s1/sweep.json"), slurp(root / "s2/sweep.json"));
}

TEST_F(Cli, FormatSelection) {
  const fs::path out = root / "f";
  ASSERT_EQ(run("solve-nr --n 200 --format csv --out " + out.string()), 0);
  EXPECT_TRUE(fs::exists(out / "profile.csv"));
  EXPECT_FALSE(fs::exists(out / "ground_state.json"));
  EXPECT_EQ(run("solve-nr --n 200 --format xml --out " + out.string()), 2);
}

TEST_F(Cli, ConfigFileAndOverrides) {
  const fs::path cfg = root / "run.ini";
  std::ofstream(cfg) << "[grid]\nn = 250\nr_max = 25\n[solver]\ntol = 1e-9\n[output]\ndir = "
                     << (root / "from_config").string() << "\n";
  ASSERT_EQ(run("solve-nr --config " + cfg.string()), 0);
  EXPECT_EQ(manifest(root / "from_config")["config"]["grid"]["n"], 250);
  // Environment beats the config file, the flag beats both.
  ASSERT_EQ(run("solve-nr --config " + cfg.string(), "HARTREE_LAB_OUT=" + (root / "env").string()), 0);
  EXPECT_TRUE(fs::exists(root / "env/manifest.json"));
  ASSERT_EQ(run("solve-nr --n 300 --config " + cfg.string() + " --out " + (root / "flag").string(),
                "HARTREE_LAB_OUT=" + (root / "env2").string()),
            0);
  EXPECT_EQ(manifest(root / "flag")["config"]["grid"]["n"], 300);
  EXPECT_FALSE(fs::exists(root / "env2"));
}

TEST_F(Cli, RejectsInvalidConfiguration) {
  const fs::path cfg = root / "bad.ini";
  std::ofstream(cfg) << "[grid]\nn = 250\nspacing = 2\n";
  EXPECT_EQ(run("solve-nr --config " + cfg.string()), 2);
  std::ofstream(root / "bad2.ini") << "[plotting]\ncolor = red\n";
  EXPECT_EQ(run("solve-nr --config " + (root / "bad2.ini").string()), 2);
  EXPECT_EQ(run("solve-nr --n 4 --out " + (root / "n").string()), 2);
  EXPECT_EQ(run("solve-nr --tol 0.5"), 2);
  EXPECT_EQ(run("not-a-command"), 2);
  EXPECT_EQ(run(""), 2);
}

TEST_F(Cli, SolverFailuresMapToExitCodes) {
  EXPECT_EQ(run("solve-nr --n 300 --max-iter 2 --out " + (root / "nc").string()), 3);
  EXPECT_EQ(manifest(root / "nc")["exit_status"], 3);
  EXPECT_EQ(run("solve-rel --n 300 --c 1 --N 3.5 --out " + (root / "col").string()), 3);
  EXPECT_EQ(run("critical-mass --n 300 --max-iter 3 --out " + (root / "inc").string()), 4);
}

TEST_F(Cli, SpectrumReportsKernel) {
  const fs::path out = root / "sp";
  ASSERT_EQ(run("spectrum --n 500 --l-max 4 --k 8 --jobs 2 --out " + out.string()), 0);
  const nlohmann::json kc = nlohmann::json::parse(slurp(out / "kernel_count.json"));
  EXPECT_EQ(kc["kernel_count"]["total"], 3);
  for (int l = 0; l <= 4; ++l) EXPECT_TRUE(fs::exists(out / ("spectrum_l" + std::to_string(l) + ".json")));
  const nlohmann::json s2 = nlohmann::json::parse(slurp(out / "spectrum_l2.json"));
  EXPECT_EQ(s2["eigenvalues"].size(), 8u);
  EXPECT_GT(s2["gap_bound"].get<double>(), 0.0);
}

TEST_F(Cli, ShootAndHeatKernel) {
  ASSERT_EQ(run("shoot --n 300 --out " + (root / "sh").string()), 0);
  EXPECT_GT(nlohmann::json::parse(slurp(root / "sh/shooting.json"))["v0_star"].get<double>(), 0.0);
  ASSERT_EQ(run("heat-kernel --n 100 --r-max 10 --l-max 1 --t 0.5,1 --out " + (root / "hk").string()), 0);
  const nlohmann::json hk = nlohmann::json::parse(slurp(root / "hk/heat_kernel.json"));
  ASSERT_EQ(hk["entries"].size(), 4u);
  for (const auto& e : hk["entries"]) EXPECT_TRUE(e["positive"].get<bool>());
}
