#include "latticelab/config.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>

using namespace latticelab;

TEST(Config, ParsesKeysCommentsAndQuotes) {
  const auto c = parse_config(R"(
# runner settings
precision = 60
guard_digits = "20"   # trailing comment
parallelism=4
timeout_secs = 2.5
)");
  EXPECT_EQ(c.precision, 60U);
  EXPECT_EQ(c.guard_digits, 20U);
  EXPECT_EQ(c.parallelism, 4U);
  EXPECT_DOUBLE_EQ(c.timeout_secs, 2.5);
}

TEST(Config, KeepsBaseForMissingKeys) {
  RunnerConfig base;
  base.parallelism = 3;
  const auto c = parse_config("precision = 50\n", base);
  EXPECT_EQ(c.parallelism, 3U);
  EXPECT_EQ(c.precision, 50U);
  EXPECT_FALSE(c.guard_digits.has_value());
}

TEST(Config, Errors) {
  for (const char* bad : {"colour = 3", "precision = ", "precision = abc", "precision = 5", "parallelism = -1",
                          "precision 40", "timeout_secs = 0"}) {
    EXPECT_THROW(parse_config(bad), ParseError) << bad;
  }
  EXPECT_ANY_THROW(load_config_file("/nonexistent/latticelab.toml"));
}

TEST(Config, FileThenEnvironment) {
  const auto path = std::filesystem::temp_directory_path() / "latticelab_test_config.toml";
  {
    std::ofstream out(path);
    out << "precision = 45\nparallelism = 2\n";
  }
  const auto file = load_config_file(path.string());
  std::filesystem::remove(path);
  EXPECT_EQ(file.precision, 45U);
  const std::map<std::string, std::string> env = {{"LATTICELAB_PRECISION", "70"}, {"LATTICELAB_TIMEOUT_SECS", "9"}};
  const auto c = apply_environment(file, [&env](const char* k) -> const char* {
    const auto it = env.find(k);
    return it == env.end() ? nullptr : it->second.c_str();
  });
  EXPECT_EQ(c.precision, 70U);
  EXPECT_EQ(c.parallelism, 2U);
  EXPECT_DOUBLE_EQ(c.timeout_secs, 9);
  EXPECT_THROW(apply_environment(file, [](const char* k) -> const char* {
                 return std::string_view(k) == "LATTICELAB_PARALLELISM" ? "many" : nullptr;
               }),
               ParseError);
}
