#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hartree/io.hpp"

using namespace hartree;

TEST(Io, GroundStateJson) {
  const GroundState gs = solve_nr_normalized(make_grid(200, 30.0), 1e-9);
  const io::json j = io::to_json(gs);
  EXPECT_EQ(j["model"], "nonrelativistic");
  EXPECT_EQ(j["grid"]["n"], 200);
  EXPECT_DOUBLE_EQ(j["multiplier"].get<double>(), 1.0);
  EXPECT_TRUE(j["c"].is_null());
  const io::json p = io::to_json(gs.Q);
  ASSERT_EQ(p.size(), 200u);
  EXPECT_DOUBLE_EQ(p[0][1].get<double>(), gs.Q[0]);
}

TEST(Io, CsvLayout) {
  const GridPtr g = make_grid(16, 2.0);
  const RadialProfile f = RadialProfile::sample(g, [](double r) { return r; });
  std::ostringstream os;
  io::write_csv(os, f);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "r,value");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 16);
}

TEST(Io, WriteFileCreatesDirectories) {
  const auto dir = std::filesystem::temp_directory_path() / "hartree_io_test" / "nested";
  std::filesystem::remove_all(dir.parent_path());
  io::write_file(dir / "x.txt", "hello\n");
  std::ifstream in(dir / "x.txt");
  std::string s;
  std::getline(in, s);
  EXPECT_EQ(s, "hello");
  std::filesystem::remove_all(dir.parent_path());
}

TEST(Io, BuildInfoNamesBackends) {
  const io::json b = io::build_info();
  for (const char* key : {"hartree", "eigen", "fftw", "blas", "nlohmann_json", "compiler"})
    EXPECT_TRUE(b.contains(key)) << key;
  EXPECT_EQ(b["hartree"], io::library_version());
}
