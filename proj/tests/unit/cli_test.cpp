#include <algorithm>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"

namespace ordfuse {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(ORDFUSE_DATA_DIR) + "/" + name; }

std::vector<std::string> ranking(const std::string& json) {
  auto doc = nlohmann::ordered_json::parse(json);
  std::vector<std::pair<double, std::string>> masses;
  for (const auto& entry : doc["final_bpa"]) {
    std::string name;
    for (const auto& label : entry["proposition"]) name += label.get<std::string>();
    masses.emplace_back(entry["mass"].get<double>(), name);
  }
  std::sort(masses.begin(), masses.end(), std::greater<>());
  std::vector<std::string> out;
  for (const auto& [m, n] : masses) out.push_back(n);
  return out;
}

TEST(CliTest, NegateInlineBpa) {
  auto r = run({"negate", "--bpa", "a:0.7,b:0.3", "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = nlohmann::ordered_json::parse(r.out);
  EXPECT_NEAR(doc["bpa"][0]["mass"].get<double>(), 0.3, 1e-15);
  EXPECT_NEAR(doc["bpa"][1]["mass"].get<double>(), 0.7, 1e-15);
}

TEST(CliTest, MrbfTable) {
  auto r = run({"mrbf", "--order", "1", "--mass", "0.4", "--k", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "0.559898 0.223959 0.044792 0.005972\n");
}

TEST(CliTest, FuseFirstExampleRanking) {
  auto r = run({"fuse", data("example1.json"), "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(ranking(r.out), (std::vector<std::string>{"a", "b", "c", "ab"}));

  auto table = run({"fuse", data("example1.json"), "--trace"});
  ASSERT_EQ(table.code, 0) << table.err;
  EXPECT_NE(table.out.find("final"), std::string::npos);
  EXPECT_NE(table.out.find("weights"), std::string::npos);
}

TEST(CliTest, CombineDocument) {
  auto r = run({"combine", data("example1.json"), "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NO_THROW(nlohmann::ordered_json::parse(r.out));
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"fuse", "/nonexistent.json"}).code, 1);
  EXPECT_EQ(run({"negate", "--bpa", "a:0.7,b:0.4"}).code, 1);
  EXPECT_EQ(run({"negate", "--bpa", "a:1"}).code, 2);
  EXPECT_EQ(run({"mrbf", "--order", "1", "--mass", "0.4", "--k", "-1"}).code, 1);
  EXPECT_EQ(run({"fuse", data("example1.json"), "--k-mode", "bogus"}).code, 1);
  auto help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("fuse"), std::string::npos);
}

TEST(CliTest, ErrorsGoToStderr) {
  auto r = run({"negate", "--bpa", "a:1"});
  EXPECT_NE(r.err.find("error:"), std::string::npos);
}

}  // namespace
}  // namespace ordfuse
