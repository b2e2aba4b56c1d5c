#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#ifndef DEJEAN_CLI_PATH
#error "DEJEAN_CLI_PATH must point at the dejean executable"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is discarded unless redirected in args.
Run run(const std::string& args, const std::string& stdin_text = "", bool keep_stderr = false, const std::string& env = "") {
  const std::string cmd = "printf '%s' '" + stdin_text + "' | " + env + " " + DEJEAN_CLI_PATH + " " + args +
                          (keep_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Cli, VerifyAllJson) {
  const auto r = run("verify all --json");
  // n = 15, 16, 18 fail as printed, so the run as a whole exits 1.
  EXPECT_EQ(r.code, 1);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0, expected_n = 15;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j["n"], expected_n++);
    EXPECT_TRUE(j["r"].is_number_unsigned());
    EXPECT_EQ(j["checks"].size(), 8u);
    const int n = j["n"];
    EXPECT_EQ(j["overall"].get<bool>(), n != 15 && n != 16 && n != 18);
    ++count;
  }
  EXPECT_EQ(count, 12);
}

TEST(Cli, VerifyMirrorPasses) {
  EXPECT_EQ(run("verify 15 --mirror").code, 0);
  EXPECT_EQ(run("verify 17").code, 0);
}

TEST(Cli, VerifyTextReport) {
  const auto r = run("verify 15");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("n=15 r=56 overall=FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("FAIL structure"), std::string::npos);
  EXPECT_NE(r.out.find("PASS power_free"), std::string::npos);
}

TEST(Cli, VerifyUsageErrors) {
  EXPECT_EQ(run("verify 14").code, 2);
  EXPECT_EQ(run("verify fifteen").code, 2);
  EXPECT_EQ(run("verify 15 --morphism-file /nonexistent/file").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, VerifyMorphismFile) {
  const std::string path = ::testing::TempDir() + "dejean_cli_morphisms.txt";
  {
    std::ofstream f(path);
    f << "n=3\nr=2\nh0=01\nh1=10\n";
  }
  const auto r = run("verify 3 --morphism-file " + path + " --json");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(nlohmann::json::parse(r.out)["n"], 3);
  EXPECT_EQ(run("verify 3", "", false, "DEJEAN_MORPHISMS=" + path).code, 1);
  EXPECT_EQ(run("verify 3").code, 2);
  {
    std::ofstream f(path);
    f << "n=3\nr=2\nh0=01\nh1=101\n";
  }
  EXPECT_EQ(run("verify 3 --morphism-file " + path).code, 2);
}

TEST(Cli, SearchTooShort) {
  const auto r = run("search 15 --length 3", "", true);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("length=3"), std::string::npos);
}

TEST(Cli, SearchDefaultLengthFor21) {
  // The diagnostic line is written before --limit is validated, so a
  // rejected run still shows the resolved length without searching.
  const auto d = run("search 21 --limit 0", "", true);
  EXPECT_EQ(d.code, 2);
  EXPECT_NE(d.out.find("n=21 length=84"), std::string::npos);
  EXPECT_NE(d.out.find("search: --limit"), std::string::npos);
}

TEST(Cli, EncodeDecode) {
  auto r = run("decode --n 3", "01");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1213\n");
  r = run("encode --n 3", "1213");
  EXPECT_EQ(r.out, "01\n");
  r = run("decode --n 15", "1");
  EXPECT_EQ(r.out, "1.2.3.4.5.6.7.8.9.10.11.12.13.14.15\n");
  EXPECT_EQ(run("encode --n 15 1.2.3.4.5.6.7.8.9.10.11.12.13.14.1").out, "0\n");
  EXPECT_EQ(run("decode --n 3 --prefix 21 01").out, "2123\n");
  EXPECT_EQ(run("decode --n 3", "0x1").code, 2);
  EXPECT_EQ(run("encode --n 3", "1223").code, 2);
  EXPECT_EQ(run("decode", "01").code, 2);
}

TEST(Cli, Exponent) {
  auto r = run("exponent", "010");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 4), "3/2\n");
  EXPECT_EQ(run("exponent", "").code, 2);
  EXPECT_EQ(run("exponent 1.2.1.2.1").out.substr(0, 4), "5/2\n");
}

TEST(Cli, KernelScan) {
  auto r = run("kernel-scan --n 3", "1111");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "start=0 period=3 length=4 exponent=4/3\n");
  EXPECT_EQ(run("kernel-scan --n 3", "111").out, "");
  EXPECT_EQ(run("kernel-scan --n 3", "12").code, 2);
}

TEST(Cli, SearchFindsOneStanza) {
  const auto r = run("search 15 --limit 1 --workers 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("n=15\nr=56\nh0=", 0), 0u) << r.out;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 4);
}
