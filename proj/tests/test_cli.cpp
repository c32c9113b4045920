#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run eomctl(const std::string& args) {
  std::string command = std::string(EOMCTL_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string data(const std::string& name) { return std::string(TEST_DATA_DIR) + "/" + name; }

void expect_golden(const std::string& args, const std::string& golden) {
  auto run = eomctl(args);
  EXPECT_EQ(run.code, 0) << args;
  EXPECT_EQ(run.out, read_file(data("golden/" + golden))) << args;
}

}  // namespace

TEST(Cli, EnumerateGolden) {
  expect_golden("enumerate --n 3 --r 2", "enumerate_3_2.json");
  expect_golden("enumerate --n 3 --r 2 --format csv", "enumerate_3_2.csv");
  auto doc = nlohmann::json::parse(eomctl("enumerate --n 3 --r 2").out);
  EXPECT_EQ(doc["count"], 6);
}

TEST(Cli, ModelGolden) {
  expect_golden("model --weight be --n 2 --r 2", "model_be_2_2.json");
  expect_golden("model --weight mb --n 2 --r 2 --labels --format csv", "labels_mb_2_2.csv");
  expect_golden("model --weight pc:2 --n 3 --r 2 --order-stats --format csv",
                "order_pc2_3_2.csv");
}

TEST(Cli, UniformMarginals) {
  for (const char* w : {"mb", "be", "fd", "pc:2", "pc:3"}) {
    auto run = eomctl(std::string("model --weight ") + w + " --n 3 --r 3 --marginal 2");
    ASSERT_EQ(run.code, 0) << w;
    auto doc = nlohmann::json::parse(run.out);
    ASSERT_EQ(doc["entries"].size(), 3u);
    for (const auto& entry : doc["entries"]) EXPECT_EQ(entry[1], "1/3") << w;
  }
}

TEST(Cli, TransformMatchesTargetModel) {
  auto k1 = eomctl("transform --op k1 --input " + data("be_2_2.json"));
  EXPECT_EQ(k1.code, 0);
  EXPECT_EQ(k1.out, eomctl("model --weight be --n 2 --r 1").out);
  auto cond = eomctl("transform --op cond:2,1 --weight mb --n 3 --r 2");
  EXPECT_EQ(cond.code, 0);
  EXPECT_EQ(cond.out, eomctl("model --weight mb --n 2 --r 1").out);
  auto piped = eomctl("model --weight be --n 2 --r 2 | " + std::string(EOMCTL_PATH) +
                      " transform --op k1 --input -");
  EXPECT_EQ(piped.out, k1.out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(eomctl("transform --op k2 --weight be --n 1 --r 2").code, 2);
  EXPECT_EQ(eomctl("transform --op cond:1,0 --weight fd --n 2 --r 2").code, 2);
  EXPECT_EQ(eomctl("transform --op k3 --weight be --n 2 --r 2").code, 2);
  EXPECT_EQ(eomctl("enumerate --n 30 --r 30").code, 2);
  EXPECT_EQ(eomctl("enumerate --n 3").code, 2);
  EXPECT_EQ(eomctl("model --weight zz --n 2 --r 2").code, 2);
  EXPECT_EQ(eomctl("model --weight be --n 2 --r 2 --format xml").code, 2);
  EXPECT_EQ(eomctl("verify --suite nothing").code, 2);
  EXPECT_EQ(eomctl("").code, 2);
  EXPECT_EQ(eomctl("--help").code, 0);
}

TEST(Cli, VerifyReport) {
  auto run = eomctl("verify --suite classic --horizon 3");
  EXPECT_EQ(run.code, 0);
  auto doc = nlohmann::json::parse(run.out);
  EXPECT_EQ(doc["suite"], "classic");
  EXPECT_EQ(doc["passed"], true);
  for (const auto& check : doc["checks"]) EXPECT_EQ(check["status"], "pass");
}

TEST(Cli, SampleIsReproducible) {
  const std::string args = "sample --spec " + data("be_process.json") + " --paths 50 --seed 7";
  expect_golden(args, "sample_be_process.csv");
  EXPECT_EQ(eomctl(args).out, eomctl(args).out);
  auto draws = "sample --weight be --n 2 --r 2 --draws 30000 --seed 7";
  auto first = eomctl(draws);
  EXPECT_EQ(first.code, 0);
  EXPECT_EQ(first.out, eomctl(draws).out);
  EXPECT_NE(first.out, eomctl("sample --weight be --n 2 --r 2 --draws 30000 --seed 8").out);
}
