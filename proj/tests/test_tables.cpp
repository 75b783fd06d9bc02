#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "octowitt/serialize.hpp"
#include "octowitt/tables.hpp"

namespace {

using namespace octowitt;

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(OCTOWITT_GOLDEN_DIR) + "/" + name, std::ios::binary);
  EXPECT_TRUE(in.good()) << name;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

class GoldenTable : public ::testing::TestWithParam<std::string> {};

TEST_P(GoldenTable, TextMatches) {
  EXPECT_EQ(render_table(GetParam(), 1, TableFormat::kText), read_golden(GetParam() + ".txt"));
}

TEST_P(GoldenTable, JsonMatches) {
  EXPECT_EQ(render_table(GetParam(), 1, TableFormat::kJson), read_golden(GetParam() + ".json"));
}

INSTANTIATE_TEST_SUITE_P(Pinned, GoldenTable, ::testing::Values("witt", "twistor", "hermitian", "sigma"));

TEST(Tables, EveryKindRendersValidJson) {
  for (const auto& kind : table_kinds()) {
    for (int n : {1, 2}) {
      const std::string out = render_table(kind, n, TableFormat::kJson);
      const Json j = Json::parse(out);
      EXPECT_EQ(j["kind"], kind);
      EXPECT_FALSE(render_table(kind, n, TableFormat::kText).empty());
    }
  }
}

TEST(Tables, FanoListsSevenTriples) {
  const std::string out = render_table("fano", 1, TableFormat::kText);
  EXPECT_EQ(std::count(out.begin(), out.end(), '\n'), 7);
  EXPECT_NE(out.find("e1 e2 = e3"), std::string::npos);
}

TEST(Tables, SigmaFirstRow) {
  const Json j = Json::parse(render_table("sigma", 1, TableFormat::kJson));
  EXPECT_EQ(j["matrix"][0], Json::array({0, 1, 1, 1, 1, 1, 1, 1}));
}

TEST(Tables, SecondBlockLabels) {
  const std::string out = render_table("witt", 2, TableFormat::kText);
  EXPECT_NE(out.find("f0^1 = e0 g8 - e1 g9"), std::string::npos);
  const Json j = Json::parse(render_table("twistor", 2, TableFormat::kJson));
  EXPECT_EQ(j["blocks"].size(), 2U);
  // Block 1 reads x8..x15 with the same pattern as block 0.
  for (int i = 0; i < 8; ++i) {
    for (int l = 0; l < 8; ++l) {
      EXPECT_EQ(j["blocks"][1]["vars"][i][l].get<int>(), j["blocks"][0]["vars"][i][l].get<int>() + 8);
      EXPECT_EQ(j["blocks"][1]["signs"][i][l], j["blocks"][0]["signs"][i][l]);
    }
  }
}

TEST(Tables, Deterministic) {
  for (const auto& kind : table_kinds()) {
    EXPECT_EQ(render_table(kind, 1, TableFormat::kText), render_table(kind, 1, TableFormat::kText));
  }
}

TEST(Tables, Errors) {
  EXPECT_THROW(render_table("nope", 1, TableFormat::kText), std::invalid_argument);
  EXPECT_THROW(render_table("witt", 0, TableFormat::kText), std::invalid_argument);
}

}  // namespace
