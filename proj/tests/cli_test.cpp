// Runs the lkg binary as a subprocess.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

Run lkg_run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + "'" LKG_CLI_PATH "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() / ("lkg_cli_" + std::to_string(::getpid()) + "_" +
                                       ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }

  std::string write(const std::string& name, const std::string& content) {
    auto path = dir / name;
    std::ofstream(path) << content;
    return path.string();
  }
  static std::string read(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir;
};

}  // namespace

TEST_F(CliTest, ProveTwoAtomExample) {
  auto r = lkg_run("prove --engine full 'p(a)&p(b), ~p(a)|~p(b)'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out,
            "PROVABLE\n"
            "1. p(a), ~p(a), ~p(b)    Succ\n"
            "2. p(a), ~p(a) | ~p(b)    Or from 1\n"
            "3. p(b), ~p(a), ~p(b)    Succ\n"
            "4. p(b), ~p(a) | ~p(b)    Or from 3\n"
            "5. p(a) & p(b), ~p(a) | ~p(b)    And from 2,4\n");
}

TEST_F(CliTest, ProveUnprovableWithCountermodel) {
  auto r = lkg_run("prove --countermodel 'p, q'");
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out, "UNPROVABLE\np=false q=false\n");
  r = lkg_run("prove --countermodel --engine par 'p & q, ~p'");
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out, "UNPROVABLE\np=true q=false\n");
}

TEST_F(CliTest, ProveStats) {
  auto r = lkg_run("prove --engine par --proof none --stats 'p&q, r&s'");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("top_level_branches=4"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("max_batch_width=4"), std::string::npos) << r.out;
  r = lkg_run("prove --proof none --stats --threads 2 --engine par 'p, ~p'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "PROVABLE\nnodes_visited=1 max_batch_width=0 top_level_branches=0\n");
}

TEST_F(CliTest, ProveFromFile) {
  auto path = write("in.txt", "# comment\np | ~p\n\np, q\n");
  auto r = lkg_run("prove --proof none --file " + path);
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out, "# " + path + ":2: p | ~p\nPROVABLE\n# " + path + ":4: p, q\nUNPROVABLE\n");
}

TEST_F(CliTest, JsonProofRoundTripsThroughCheck) {
  auto proof = (dir / "proof.json").string();
  auto r = lkg_run("prove --engine full --proof json --out " + proof + " 'p(a)&p(b), ~p(a)|~p(b)'");
  ASSERT_EQ(r.status, 0);
  r = lkg_run("check " + proof);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "VALID PROOF (5 lines)\n");

  auto j = nlohmann::json::parse(read(proof));
  j["lines"][4]["rule"] = "Or";
  auto bad = write("bad.json", j.dump(2));
  r = lkg_run("check " + bad);
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out.rfind("INVALID PROOF\nline 5: ", 0), 0u) << r.out;

  auto text = read(proof);
  auto truncated = write("truncated.json", text.substr(0, text.size() / 2));
  EXPECT_EQ(lkg_run("check " + truncated).status, 2);
  EXPECT_EQ(lkg_run("check " + (dir / "missing.json").string()).status, 2);
}

TEST_F(CliTest, ExtendedProofsAndStrictChecking) {
  auto proof = (dir / "ext.json").string();
  ASSERT_EQ(lkg_run("prove --proof json --out " + proof + " 'p, ~p, a & b'").status, 0);
  EXPECT_EQ(lkg_run("check " + proof).status, 0);
  EXPECT_EQ(lkg_run("check --strict " + proof).status, 1);
}

TEST_F(CliTest, CompatTopLine) {
  auto r = lkg_run("prove --compat-top 'p, ~p'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "PROVABLE\n0. T    Succ\n1. p, ~p    Succ\n");
}

TEST_F(CliTest, Oracle) {
  auto r = lkg_run("oracle '~p | p'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "VALID\n");
  r = lkg_run("oracle 'p&q, ~p'");
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out, "INVALID p=true q=false\n");
  EXPECT_EQ(lkg_run("oracle F").out, "INVALID\n");

  std::string wide;
  for (int i = 0; i < 25; ++i) wide += (i ? ", x" : "x") + std::to_string(i);
  EXPECT_EQ(lkg_run("oracle '" + wide + "'").status, 2);
  EXPECT_EQ(lkg_run("oracle 'a, b, c'", "LKG_ATOM_LIMIT=2").status, 2);
  EXPECT_EQ(lkg_run("oracle 'a, ~a, b'", "LKG_ATOM_LIMIT=2").status, 0);
  EXPECT_EQ(lkg_run("oracle p", "LKG_ATOM_LIMIT=many").status, 2);
}

TEST_F(CliTest, Diff) {
  auto r = lkg_run("diff --count 0");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "checked 0 sequents, 0 disagreements\n");
  r = lkg_run("diff --count 200 --seed 9 --max-connectives 12 --atoms a,b,c");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "checked 200 sequents, 0 disagreements\n");
}

TEST_F(CliTest, InputErrors) {
  EXPECT_EQ(lkg_run("prove 'p &'").status, 2);
  EXPECT_EQ(lkg_run("prove").status, 2);
  EXPECT_EQ(lkg_run("prove --engine magic p").status, 2);
  EXPECT_EQ(lkg_run("frobnicate").status, 2);
  EXPECT_EQ(lkg_run("").status, 2);
  EXPECT_EQ(lkg_run("--help").status, 0);
}
