#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "curveturn/curve_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

fs::path scratch() {
  const fs::path d = fs::temp_directory_path() / "curveturn_cli_test";
  fs::create_directories(d);
  return d;
}

Run run(const std::string& args, const std::string& env = "") {
  const fs::path err = scratch() / (std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()) + ".err");
  const std::string cmd = env + " \"" CURVETURN_CLI "\" " + args + " 2>\"" + err.string() + "\"";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err);
  return r;
}

}  // namespace

TEST(Cli, GenWritesCurveCsv) {
  const fs::path out = scratch() / "c.csv";
  const auto r = run("gen --family circle --r 1 --samples 4096 --out \"" + out.string() + "\"");
  EXPECT_EQ(r.code, 0) << r.err;
  const auto c = curveturn::load_curve_csv(out.string());
  EXPECT_EQ(c.size(), 4096u);
  EXPECT_TRUE(c.closed());
}

TEST(Cli, ConverseOnBoneCsv) {
  const fs::path bone = scratch() / "bone.csv";
  ASSERT_EQ(run("gen --family bone --samples 2048 --out \"" + bone.string() + "\"").code, 0);
  const auto r = run("verify converse --in \"" + bone.string() + "\"");
  EXPECT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["claim"], "converse");
  EXPECT_EQ(doc["holds"], true);
}

TEST(Cli, SquareVerifyAll) {
  const auto r = run("verify all --family square --samples 400 --format csv");
  EXPECT_NE(r.code, 0);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("forward,hypothesis_failed,false"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("converse,not_applicable,false"), std::string::npos) << r.out;
}

TEST(Cli, InputErrors) {
  auto r = run("turn");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("InputError"), std::string::npos) << r.err;
  r = run("turn --family blob");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("InvalidSpec"), std::string::npos) << r.err;
  r = run("turn --family circle --bogus");
  EXPECT_EQ(r.code, 3);
  r = run("verify nonsense --family circle");
  EXPECT_EQ(r.code, 3);
  r = run("turn --in /nonexistent.csv");
  EXPECT_EQ(r.code, 3);
  r = run("ltb --spec /nonexistent.json");
  EXPECT_EQ(r.code, 3);
}

TEST(Cli, ToleranceFromEnvironmentAndFlag) {
  auto r = run("turn --family circle --samples 64", "CURVETURN_TOL=0.5");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_DOUBLE_EQ(nlohmann::json::parse(r.out)["tolerances"]["tol"].get<double>(), 0.5);
  r = run("turn --family circle --samples 64 --tol 0.25", "CURVETURN_TOL=0.5");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_DOUBLE_EQ(nlohmann::json::parse(r.out)["tolerances"]["tol"].get<double>(), 0.25);
  r = run("turn --family circle --samples 64", "CURVETURN_TOL=oops");
  EXPECT_EQ(r.code, 3);
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  for (const std::string fmt : {"json", "csv"}) {
    const fs::path a = scratch() / ("a." + fmt), b = scratch() / ("b." + fmt);
    const std::string spec = "--spec \"" CURVETURN_FIXTURE_DIR "/ellipse.json\" --format " + fmt;
    ASSERT_EQ(run("verify all " + spec + " --out \"" + a.string() + "\"").code, 0);
    ASSERT_EQ(run("verify all " + spec + " --out \"" + b.string() + "\"").code, 0);
    EXPECT_FALSE(slurp(a).empty());
    EXPECT_EQ(slurp(a), slurp(b));
  }
}

TEST(Cli, AnalysisSubcommands) {
  auto r = run("ltb --family circle --samples 512");
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  for (const auto* key : {"theta", "delta", "witnesses", "resolution", "tolerances"}) EXPECT_TRUE(doc.contains(key));

  r = run("lipschitz --family square --samples 400");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["infinite"], true);

  r = run("reach --family ellipse --samples 1024 --method pairwise");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(nlohmann::json::parse(r.out)["reports"][0]["reach"].get<double>(), 0.5, 0.01);

  r = run("reach --family square --samples 400 --method pairwise");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("CornerPresent"), std::string::npos);

  r = run("parreg --family circle --samples 512 --radius 0.9");
  EXPECT_EQ(r.code, 0);
  r = run("parreg --family circle --samples 512 --radius 1.1 --format csv");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "s,side,clearance");

  r = run("profile --family circle --samples 64");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "s,kappa_cum");
}

TEST(Cli, SvgOutput) {
  const fs::path svg = scratch() / "bone.svg";
  const auto r = run("reach --family bone --samples 1024 --svg \"" + svg.string() + "\"");
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string s = slurp(svg);
  EXPECT_NE(s.find("<svg"), std::string::npos);
  EXPECT_NE(s.find("<circle"), std::string::npos);
}
