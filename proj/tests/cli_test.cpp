#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace zipaut::cli {
namespace {

namespace fs = std::filesystem;

const std::string kFixtures = ZIPAUT_FIXTURES_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "zipaut");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("zipaut_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

TEST_F(CliTest, ParsePrintsCanonicalForm) {
  const auto r = invoke({"parse", kFixtures + "/loop.zp"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "while (true) { x := true; y := false }\n");
  EXPECT_EQ(invoke({"parse", "--ast", kFixtures + "/loop.zp"}).out,
            "While(Val(true), Seq(Assign(x, true), Assign(y, false)))\n");
}

TEST_F(CliTest, ParseErrorsAreUsageErrors) {
  const auto r = invoke({"parse", write("bad.zp", "x :=")});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("1:5"), std::string::npos) << r.err;
}

TEST_F(CliTest, MissingFileIsIoError) { EXPECT_EQ(invoke({"parse", (dir_ / "absent.zp").string()}).code, kIoError); }

TEST_F(CliTest, BadArgumentsAreUsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({"run", kFixtures + "/loop.zp", "--max-steps", "0"}).code, kUsage);
  EXPECT_EQ(invoke({"run", kFixtures + "/loop.zp", "--state", "x=maybe"}).code, kUsage);
  EXPECT_EQ(invoke({"compile", kFixtures + "/loop.zp", "--format", "svg"}).code, kUsage);
  EXPECT_EQ(invoke({"tauclose"}).code, kUsage);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST_F(CliTest, RunStatuses) {
  auto r = invoke({"run", write("skip.zp", "skip")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("status: terminated"), std::string::npos);

  r = invoke({"run", kFixtures + "/loop.zp", "--max-steps", "4"});
  EXPECT_EQ(r.code, kStepLimit);
  EXPECT_NE(r.out.find("4: SFalse"), std::string::npos) << r.out;

  r = invoke({"run", write("stuck.zp", "if (b) { skip } else { skip }")});
  EXPECT_EQ(r.code, kStuck);
  EXPECT_EQ(invoke({"run", write("ok.zp", "if (b) { skip } else { skip }"), "--state", "b=false"}).code, kOk);
}

TEST_F(CliTest, RunJsonTraceToFile) {
  const std::string out = (dir_ / "trace.json").string();
  const auto r = invoke({"run", kFixtures + "/loop.zp", "--max-steps", "4", "--trace-format", "json", "-o", out});
  EXPECT_EQ(r.code, kStepLimit);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("status: step-limit"), std::string::npos);
  std::ifstream in(out);
  const auto j = nlohmann::json::parse(in);
  ASSERT_EQ(j.size(), 5u);
  EXPECT_EQ(j[3]["state"]["x"], "true");
}

TEST_F(CliTest, CompileCounts) {
  auto j = nlohmann::json::parse(invoke({"compile", write("skip.zp", "skip")}).out);
  EXPECT_EQ(j["nodes"].size(), 2u);
  EXPECT_EQ(j["edges"].size(), 1u);
  j = nlohmann::json::parse(invoke({"compile", kFixtures + "/loop.zp", "--numbered"}).out);
  EXPECT_EQ(j["nodes"].size(), 8u);
  EXPECT_EQ(j["legend"][0], "@top↓");
  const auto dot = invoke({"compile", kFixtures + "/loop.zp", "--format", "dot"});
  EXPECT_EQ(dot.code, kOk);
  EXPECT_EQ(dot.out.rfind("digraph", 0), 0u);
}

TEST_F(CliTest, TauCloseOnAutomatonFile) {
  const auto r = invoke({"tauclose", "--automaton", kFixtures + "/silent_fork.json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["nodes"].size(), 5u);
  EXPECT_EQ(j["edges"].size(), 6u);
  EXPECT_EQ(j["nodes"][j["init"].get<int>()]["label"], "{1,2,3}");
  EXPECT_EQ(r.out.find("\"none\""), std::string::npos);
}

TEST_F(CliTest, TauCloseOnProgram) {
  const auto r = invoke({"tauclose", kFixtures + "/loop.zp"});
  ASSERT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["nodes"].size(), 8u);
  EXPECT_EQ(j["legend"].size(), 8u);
  EXPECT_EQ(invoke({"tauclose", kFixtures + "/loop.zp", "--automaton", kFixtures + "/silent_fork.json"}).code,
            kUsage);
}

TEST_F(CliTest, TauCloseWarnsOnIrregularInput) {
  const auto r = invoke({"tauclose", "--automaton", kFixtures + "/irregular.json"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.err.find("not regular"), std::string::npos);
}

TEST_F(CliTest, MalformedAutomatonIsUsageError) {
  EXPECT_EQ(invoke({"tauclose", "--automaton", write("bad.json", "{\"nodes\": []}")}).code, kUsage);
}

TEST_F(CliTest, Checks) {
  const std::string loop = kFixtures + "/loop.zp";
  auto r = invoke({"check", "closure", loop});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);

  r = invoke({"check", "sim", loop, "--max-steps", "100"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("matched: 100"), std::string::npos) << r.out;

  EXPECT_EQ(invoke({"check", "regular", loop}).code, kOk);
  EXPECT_EQ(invoke({"check", "tausim", loop}).code, kOk);
  EXPECT_EQ(invoke({"check", "tausim", "--automaton", kFixtures + "/silent_fork.json"}).code, kOk);

  r = invoke({"check", "regular", "--automaton", kFixtures + "/irregular.json"});
  EXPECT_EQ(r.code, kViolation);
  r = invoke({"check", "tausim", "--automaton", kFixtures + "/irregular.json"});
  EXPECT_EQ(r.code, kViolation);
  EXPECT_NE(r.out.find("not matched"), std::string::npos) << r.out;
  EXPECT_EQ(invoke({"check"}).code, kUsage);
}

}  // namespace
}  // namespace zipaut::cli
