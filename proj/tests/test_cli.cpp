#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(SPTKIT_BINARY) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

int line_count(const std::string& s) {
  int lines = 0;
  for (char c : s) lines += (c == '\n');
  return lines;
}

}  // namespace

TEST(Cli, ExactValues) {
  EXPECT_EQ(run("value spt 4").out, "10\n");
  EXPECT_EQ(run("value p 4").out, "5\n");
  EXPECT_EQ(run("value traceS_exact 4").out, "595\n");
  EXPECT_EQ(run("value p 0").out, "1\n");
  const auto j = nlohmann::json::parse(run("--format json value spt 10").out);
  EXPECT_EQ(j.at("value"), "119");
}

TEST(Cli, TraceJson) {
  const CliRun r = run("trace 1");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("exact"), "35");
  EXPECT_EQ(j.at("rounds_to_exact"), true);
  EXPECT_LE(j.at("tail_bound").get<double>(), 1e-6);
  EXPECT_EQ(j.at("forms"), 3);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("--tolerance 0 trace 1").code, 2);
  EXPECT_EQ(run("table bounds 5..2").code, 2);
  EXPECT_EQ(run("table bounds x..2").code, 2);
  EXPECT_EQ(run("value spt 0").code, 2);
  EXPECT_EQ(run("value q 3").code, 2);
  EXPECT_EQ(run("verify 9").code, 2);
  EXPECT_EQ(run("--prec 8 value spt 3").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, Tables) {
  const CliRun ca = run("table Ca");
  ASSERT_EQ(ca.code, 0);
  EXPECT_EQ(ca.out, "a,C_a\n2,27.87\n3,3.54\n4,1.79\n5,1.20\n");
  const CliRun bounds = run("table bounds 1..10");
  ASSERT_EQ(bounds.code, 0);
  EXPECT_EQ(line_count(bounds.out), 11);
  EXPECT_EQ(bounds.out.find("nan"), std::string::npos);
  EXPECT_EQ(bounds.out.find("inf"), std::string::npos);
  const CliRun text = run("--format text table bounds 1..2");
  EXPECT_NE(text.out.find(" - "), std::string::npos);
}

TEST(Cli, Deterministic) {
  EXPECT_EQ(run("table bounds 4690..4700").out, run("--threads 3 table bounds 4690..4700").out);
  EXPECT_EQ(run("trace 6").out, run("trace 6").out);
}

TEST(Cli, VerifyThree) {
  const CliRun r = run("verify 3");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("status"), "pass");
  EXPECT_FALSE(j.contains("runtime_seconds"));
  const auto timed = nlohmann::json::parse(run("--timing verify 3").out);
  EXPECT_TRUE(timed.contains("runtime_seconds"));
}
