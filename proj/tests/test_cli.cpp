#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>

#include "minsurf/serialize.hpp"
#include "minsurf/families.hpp"

using namespace minsurf;

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult cli(const std::string& args) {
  const std::string cmd = std::string(MINSURF_CLI) + " --theta-nodes 1024 " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = ::pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string dir() {
  const std::string d = std::string(MINSURF_TEST_TMP) + "/cli";
  std::filesystem::create_directories(d);
  return d;
}

std::string make_fig8() {
  const std::string p = dir() + "/fe.json";
  EXPECT_EQ(cli("gen --family figure_eight --a-m1 1,0 --a-1 1,0 --symmetric --out " + p).status, 0);
  return p;
}

}  // namespace

TEST(Cli, GenRoundTrip) {
  const std::string p = make_fig8();
  const WeierstrassData d = data_from_json(parse_json(read_file(p), p));
  EXPECT_TRUE(d == figure_eight(1.0, 1.0));
}

TEST(Cli, ReportStableWaistPasses) {
  const std::string p = make_fig8();
  const std::string out = dir() + "/rep.json";
  EXPECT_EQ(cli("report --scenario theorem_4_3 --data " + p + " --out " + out).status, 0);
  const Json j = parse_json(read_file(out), out);
  for (const auto& [k, v] : j["verdicts"].items()) EXPECT_TRUE(v["pass"].get<bool>()) << k;
}

TEST(Cli, TraceReportsOneCrossing) {
  const std::string p = make_fig8();
  const std::string csv = dir() + "/lvl.csv", svg = dir() + "/lvl.svg";
  const CliResult r = cli("trace --data " + p + " --height 0.02 --csv " + csv + " --svg " + svg);
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(parse_json(r.out, "stdout")["self_intersections"], 1);
  EXPECT_EQ(read_file(csv).rfind("theta,r,x1,x2,x3\n", 0), 0u);
  EXPECT_NE(read_file(svg).find("class=\"crossing\""), std::string::npos);
}

TEST(Cli, ViolatedConstraintExitsOne) {
  Json j = data_to_json(figure_eight(1.0, 1.0));
  j["g_minus"][1] = Json::array({0, 0.0, -std::sqrt(1.9)});
  j["g_plus"][1] = Json::array({0, 0.0, std::sqrt(1.9)});
  const std::string p = dir() + "/bad.json";
  write_file_atomic(p, j.dump());
  const CliResult r = cli("report --scenario theorem_4_1 --data " + p);
  EXPECT_EQ(r.status, 1);
  EXPECT_FALSE(parse_json(r.out, "stdout")["verdicts"]["vertical_flux"]["pass"].get<bool>());
  EXPECT_EQ(cli("check --data " + p).status, 1);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(cli("").status, 2);
  EXPECT_EQ(cli("report --scenario nope").status, 2);
  EXPECT_EQ(cli("gen --family figure_eight --a-m1 oops").status, 2);
  EXPECT_EQ(cli("check --data /nonexistent.json").status, 2);
  EXPECT_EQ(cli("report --scenario theorem_3_5 --param bogus=1").status, 2);
}

TEST(Cli, NumericalFailureExitsThree) {
  const std::string p = make_fig8();
  EXPECT_EQ(cli("trace --data " + p + " --height 50").status, 3);
}

TEST(Cli, MeasureAndCompare) {
  const std::string p = make_fig8();
  const CliResult l = cli("measure --data " + p + " length --r 1.2");
  ASSERT_EQ(l.status, 0);
  const Json j = parse_json(l.out, "stdout");
  EXPECT_NEAR(j["L"].get<double>(), j["L_closed"].get<double>(), 1e-10);
  EXPECT_EQ(cli("measure --data " + p + " area").status, 0);
  EXPECT_EQ(cli("compare --data " + p + " --against cover2").status, 0);
}

TEST(Cli, SweepProducesArray) {
  const CliResult r = cli("sweep --scenario theorem_3_5 --key eps1_re --values 0.02,0.05");
  ASSERT_EQ(r.status, 0);
  const Json j = parse_json(r.out, "stdout");
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[1]["value"], 0.05);
  EXPECT_EQ(j[1]["report"]["scenario"], "theorem_3_5");
}
