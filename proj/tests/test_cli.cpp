#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>
#include <sys/wait.h>

#include <gtest/gtest.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ABHARM_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) { return std::string(ABHARM_FIXTURES) + "/" + name; }

std::string strip_timestamp(const std::string& s) {
  std::istringstream is(s);
  std::string line, out;
  while (std::getline(is, line)) {
    if (line.find("\"timestamp\"") == std::string::npos) out += line + "\n";
  }
  return out;
}

}  // namespace

TEST(Cli, SuccessfulCommands) {
  EXPECT_EQ(run("bounds --alpha 0 --beta 0 --p 2").code, 0);
  EXPECT_EQ(run("bounds --alpha 0.5 --beta -0.2 --p inf").code, 0);
  EXPECT_EQ(run("expand " + fixture("mixed.json")).code, 0);
  EXPECT_EQ(run("identities --alpha 1 --beta 1").code, 0);
  EXPECT_EQ(run("audit growth --alpha 0 --beta 0 --p 2 --functions 3").code, 0);
}

TEST(Cli, ViolationsExitOne) { EXPECT_EQ(run("audit lemmas").code, 1); }

TEST(Cli, BadArgumentsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("bounds --alpha -1 --beta 0").code, 2);
  EXPECT_EQ(run("bounds --p 0.5").code, 2);
  EXPECT_EQ(run("audit nope").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("solve " + fixture("constant.json") + " --grid 0x4").code, 2);
}

TEST(Cli, BadFilesExitThree) {
  EXPECT_EQ(run("expand " + fixture("malformed.json")).code, 3);
  EXPECT_EQ(run("expand " + fixture("bad_key.json")).code, 3);
  EXPECT_EQ(run("solve " + fixture("bad_count.json")).code, 3);
  EXPECT_EQ(run("solve " + fixture("no_such_file.json")).code, 3);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> commands{"bounds --alpha 0.3 --beta -0.2 --p 3", "expand " + fixture("mixed.json"),
                                          "audit means --alpha 0.5 --beta 0.5 --p 2 --functions 4 --seed 9"};
  for (const auto& args : commands) {
    const auto a = run(args), b = run(args);
    ASSERT_EQ(a.code, b.code) << args;
    EXPECT_FALSE(a.out.empty());
    EXPECT_EQ(strip_timestamp(a.out), strip_timestamp(b.out)) << args;
  }
}

TEST(Cli, SolveCsv) {
  const auto r = run("solve " + fixture("constant.json") + " --grid 2x4");
  ASSERT_EQ(r.code, 0);
  std::istringstream is(r.out);
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "x,y,re,im");
  int rows = 0;
  while (std::getline(is, line)) {
    ++rows;
    double x, y, re, im;
    char c;
    std::istringstream row(line);
    row >> x >> c >> y >> c >> re >> c >> im;
    EXPECT_NEAR(re, 1.0, 1e-12);
    EXPECT_NEAR(im, 0.0, 1e-12);
  }
  EXPECT_EQ(rows, 8);
}

TEST(Cli, OutFileMatchesStdout) {
  const auto path = std::filesystem::temp_directory_path() / "abharm_cli_out.json";
  const std::string args = "expand " + fixture("exp_it.json");
  ASSERT_EQ(run(args + " --out " + path.string()).code, 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(strip_timestamp(ss.str()), strip_timestamp(run(args).out));
  std::filesystem::remove(path);
}

TEST(Cli, AuditCsv) {
  const auto path = std::filesystem::temp_directory_path() / "abharm_cli_audit.csv";
  ASSERT_EQ(run("audit identities --csv " + path.string()).code, 0);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "id,r,margin,kind");
  std::filesystem::remove(path);
}
