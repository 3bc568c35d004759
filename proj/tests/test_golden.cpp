#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "golden.hpp"

using namespace fglab::cli;

namespace {

GoldenRow row(std::string kind, std::string published, std::string reproduced) {
  return {"k", std::move(kind), std::move(published), std::move(reproduced), ""};
}

}  // namespace

TEST(GoldenCells, PolyComparisonIgnoresLayout) {
  EXPECT_TRUE(cells_equal("poly", "2 b1^2 - b2", "-b2 + 2*b1^2"));
  EXPECT_FALSE(cells_equal("poly", "2 b1^2 - b2", "2 b1^2 + b2"));
  EXPECT_TRUE(cells_proportional("poly", "a11 - a12", "2*a11 - 2*a12"));
  EXPECT_FALSE(cells_proportional("poly", "a11 - a12", "2*a11 + 2*a12"));
}

TEST(GoldenCells, MatrixKinds) {
  EXPECT_TRUE(cells_equal("matrix", "1 2; 3 4", "1 2;3 4"));
  EXPECT_FALSE(cells_equal("matrix", "1 2; 3 4", "1 2; 4 3"));
  EXPECT_TRUE(cells_equal("rowspace", "1 0; 0 1", "1 1; 1 -1"));
  EXPECT_FALSE(cells_equal("rowspace", "1 0 0; 0 1 0", "1 0 0; 0 0 1"));
  EXPECT_TRUE(cells_equal("span", "1 0 0; 0 1 0", "1/2 1 0; 1 -1 0"));
  EXPECT_FALSE(cells_equal("span", "1 0 0", "0 1 0"));
  EXPECT_TRUE(cells_equal("text", " 1  3 ", "1 3"));
  EXPECT_TRUE(cells_equal("rat", "2/4", "1/2"));
  EXPECT_THROW(cells_equal("bogus", "1", "1"), fglab::ParseError);
}

TEST(GoldenClassify, Statuses) {
  EXPECT_EQ(classify(row("poly", "x + y", "y + x"), "x + y"), GoldenStatus::kMatch);
  EXPECT_EQ(classify(row("poly", "-", "y + x"), "x + y"), GoldenStatus::kMatch);
  EXPECT_EQ(classify(row("poly", "x + y", "2 x + 2 y"), "2 x + 2 y"), GoldenStatus::kScaled);
  EXPECT_EQ(classify(row("poly", "x + y", "x - y"), "x - y"), GoldenStatus::kErratum);
  EXPECT_EQ(classify(row("poly", "x + y", "x + y"), "x - y"), GoldenStatus::kDiff);
}

TEST(GoldenFiles, RoundTripAndDiffExitStatus) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "fglab_golden_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::ofstream(dir / "index.csv") << "file,tag,description\ndilation.csv,mahler,rows\n";
  write_golden_csv((dir / "dilation.csv").string(), {{"i2", "poly", "9 C2 + 3 C1", "9 C2 + 3 C1", ""}});
  Config cfg;
  EXPECT_EQ(reproduce_tables(cfg, dir.string(), false).status, 0);

  write_golden_csv((dir / "dilation.csv").string(), {{"i2", "poly", "9 C2 + 3 C1", "9 C2", ""}});
  Report r = reproduce_tables(cfg, dir.string(), false);
  EXPECT_EQ(r.status, 3);
  EXPECT_NE(r.text.find("DIFF"), std::string::npos);

  EXPECT_EQ(reproduce_tables(cfg, dir.string(), true).status, 0);
  auto rows = read_golden_csv((dir / "dilation.csv").string());
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_TRUE(cells_equal("poly", rows[0].reproduced, "9 C2 + 3 C1"));
  fs::remove_all(dir);
}
