#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

#ifndef LCH_CLI_PATH
#define LCH_CLI_PATH "./lch"
#endif
#ifndef LCH_FIXTURES_DIR
#define LCH_FIXTURES_DIR "tests/fixtures"
#endif

struct RunResult {
  int exitCode = -1;
  std::string output;  // stdout + stderr
};

RunResult runRaw(const std::string& command, const std::string& workdir) {
  const std::string full = "cd '" + workdir + "' && " + command + " 2>&1";
  std::array<char, 4096> buffer{};
  RunResult result;
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) return result;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

RunResult run(const std::string& args, const std::string& workdir = LCH_FIXTURES_DIR) {
  return runRaw(std::string("'") + LCH_CLI_PATH + "' " + args, workdir);
}

std::string fixture(const std::string& name) {
  std::ifstream in(std::filesystem::path(LCH_FIXTURES_DIR) / name, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST(CliCheck, ValidFixtureExitsZero) {
  const auto result = run("check simple.dga");
  EXPECT_EQ(result.exitCode, 0) << result.output;
  EXPECT_NE(result.output.find("ok:"), std::string::npos);
}

TEST(CliCheck, FailingFixtureExitsOneAndReportsSquare) {
  const auto result = run("check failing.dga");
  EXPECT_EQ(result.exitCode, 1);
  EXPECT_NE(result.output.find("d^2(a) = 1"), std::string::npos);
}

TEST(CliCheck, ParseErrorExitsTwo) {
  const auto tmp = std::filesystem::temp_directory_path() / "lch_bad.dga";
  std::ofstream(tmp) << "ring Z\nchord a\n";
  const auto result = run("check '" + tmp.string() + "'");
  EXPECT_EQ(result.exitCode, 2);
  EXPECT_NE(result.output.find("parse error"), std::string::npos);
  const auto missing = run("check no_such_file.dga");
  EXPECT_EQ(missing.exitCode, 2);
}

TEST(CliCheck, UsageErrorExitsTwo) {
  EXPECT_EQ(run("check").exitCode, 2);
  EXPECT_EQ(run("frobnicate").exitCode, 2);
}

TEST(CliMorphismCheck, FixtureChainMaps) {
  EXPECT_EQ(run("morphism-check phi01.cob").exitCode, 0);
  EXPECT_EQ(run("morphism-check phi12.cob").exitCode, 0);
  EXPECT_EQ(run("morphism-check phi02.cob").exitCode, 0);
}

TEST(CliMorphismCheck, CorruptedTableExitsOne) {
  const auto dir = std::filesystem::temp_directory_path() / "lch_cli_corrupt";
  std::filesystem::create_directories(dir);
  for (const char* name : {"dga0.dga", "dga1.dga"})
    std::filesystem::copy_file(std::filesystem::path(LCH_FIXTURES_DIR) / name, dir / name,
                               std::filesystem::copy_options::overwrite_existing);
  std::ofstream(dir / "bad.cob") << "ring Z\nsource dga0.dga\ntarget dga1.dga\n"
                                    "disk a -> a sign -1\ndisk b -> b sign 1\n"
                                    "disk c -> c sign 1\ndisk d -> d sign 1\n";
  const auto result = run("morphism-check bad.cob", dir.string());
  EXPECT_EQ(result.exitCode, 1);
  EXPECT_NE(result.output.find("chain-map failure at a"), std::string::npos);
}

TEST(CliCompose, MatchesShippedFixtureByteForByte) {
  const auto result = run("compose phi01.cob phi12.cob");
  EXPECT_EQ(result.exitCode, 0);
  EXPECT_EQ(result.output, fixture("phi02.cob"));
}

TEST(CliCompose, IdentityIsNeutral) {
  const auto dir = std::filesystem::temp_directory_path() / "lch_cli_identity";
  std::filesystem::create_directories(dir);
  for (const char* name : {"dga0.dga", "dga1.dga", "phi01.cob"})
    std::filesystem::copy_file(std::filesystem::path(LCH_FIXTURES_DIR) / name, dir / name,
                               std::filesystem::copy_options::overwrite_existing);
  std::ofstream(dir / "id0.cob") << "ring Z\nsource dga0.dga\ntarget dga0.dga\n"
                                    "disk a -> a sign 1\ndisk b -> b sign 1\n"
                                    "disk c -> c sign 1\ndisk d -> d sign 1\n";
  std::ofstream(dir / "id1.cob") << "ring Z\nsource dga1.dga\ntarget dga1.dga\n"
                                    "disk a -> a sign 1\ndisk b -> b sign 1\n"
                                    "disk c -> c sign 1\ndisk d -> d sign 1\n";
  const auto left = run("compose id0.cob phi01.cob", dir.string());
  ASSERT_EQ(left.exitCode, 0);
  const auto right = run("compose phi01.cob id1.cob", dir.string());
  ASSERT_EQ(right.exitCode, 0);
  // Both equal phi01 up to the reference lines they carry.
  auto stripRefs = [](std::string text) {
    std::string out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line))
      if (line.rfind("source ", 0) != 0 && line.rfind("target ", 0) != 0)
        out += line + "\n";
    return out;
  };
  EXPECT_EQ(stripRefs(left.output), stripRefs(fixture("phi01.cob")));
  EXPECT_EQ(stripRefs(right.output), stripRefs(fixture("phi01.cob")));
}

TEST(CliCompose, MiddleMismatchExitsTwoNamingBoth) {
  const auto dir = std::filesystem::temp_directory_path() / "lch_cli_mismatch";
  std::filesystem::create_directories(dir);
  for (const char* name : {"dga0.dga", "dga1.dga", "dga2.dga", "phi01.cob"})
    std::filesystem::copy_file(std::filesystem::path(LCH_FIXTURES_DIR) / name, dir / name,
                               std::filesystem::copy_options::overwrite_existing);
  // A second map whose source presentation differs from phi01's target.
  std::ofstream(dir / "other.dga") << "ring Z\nchord a 1\nchord b 0\nchord c 0\nchord d 1\n"
                                      "disk a -> c b sign 1\n";
  std::ofstream(dir / "phiX.cob") << "ring Z\nsource other.dga\ntarget dga2.dga\n"
                                     "disk a -> a sign -1\ndisk b -> b sign 1\n"
                                     "disk c -> c sign 1\ndisk d -> d sign 1\n";
  const auto result = run("compose phi01.cob phiX.cob", dir.string());
  EXPECT_EQ(result.exitCode, 2);
  EXPECT_NE(result.output.find("dga1.dga"), std::string::npos);
  EXPECT_NE(result.output.find("other.dga"), std::string::npos);
}

TEST(CliVerifySigns, SummaryAndDeterminism) {
  const std::string flags = "verify-signs --scenarios 30 --seed 7 --format summary";
  const auto first = run(flags);
  EXPECT_EQ(first.exitCode, 0) << first.output;
  EXPECT_NE(first.output.find("status=ok"), std::string::npos);
  const auto second = run(flags);
  EXPECT_EQ(second.output, first.output);
}

TEST(CliVerifySigns, EnvOverridesMirrorFlags) {
  const auto viaFlag = run("verify-signs --scenarios 25 --seed 3 --format summary");
  const auto viaEnv = runRaw("env LCH_SCENARIOS=25 LCH_SEED=3 LCH_FORMAT=summary "
                             "'" LCH_CLI_PATH "' verify-signs",
                             LCH_FIXTURES_DIR);
  EXPECT_EQ(viaEnv.exitCode, 0);
  EXPECT_EQ(viaEnv.output, viaFlag.output);
}

TEST(CliVerifySigns, TextFormatListsScenarios) {
  const auto result = run("verify-signs --scenarios 5 --conformal-max 3 --format text");
  EXPECT_EQ(result.exitCode, 0);
  EXPECT_NE(result.output.find("conformal_gluing | m1=2 m2=2 k=1"), std::string::npos);
  EXPECT_NE(result.output.find("| ok"), std::string::npos);
}

TEST(CliLinearize, UnitDiskFixture) {
  const auto result = run("linearize unit_disk.dga unit_disk.aug");
  EXPECT_EQ(result.exitCode, 0) << result.output;
  EXPECT_NE(result.output.find("d_lin^2 = 0"), std::string::npos);
  EXPECT_NE(result.output.find("homology rank at grading 0"), std::string::npos);
}

TEST(CliLinearize, StabilizationPairIsAcyclic) {
  const auto result = run("linearize stab_pair.dga stab_pair.aug");
  EXPECT_EQ(result.exitCode, 0) << result.output;
  EXPECT_NE(result.output.find("homology rank at grading 1: 0"), std::string::npos);
  EXPECT_NE(result.output.find("homology rank at grading 2: 0"), std::string::npos);
}

TEST(CliLinearize, FailedAugmentationExitsOne) {
  const auto dir = std::filesystem::temp_directory_path() / "lch_cli_aug";
  std::filesystem::create_directories(dir);
  std::filesystem::copy_file(std::filesystem::path(LCH_FIXTURES_DIR) / "unit_disk.dga",
                             dir / "unit_disk.dga",
                             std::filesystem::copy_options::overwrite_existing);
  std::ofstream(dir / "bad.aug") << "aug b 1\naug c 1\n";
  const auto result = run("linearize unit_disk.dga bad.aug", dir.string());
  EXPECT_EQ(result.exitCode, 1);
  EXPECT_NE(result.output.find("aug(d(a)) = 2"), std::string::npos);
}
