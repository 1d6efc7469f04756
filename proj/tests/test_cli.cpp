#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args)
{
  std::string cmd = std::string(GERM_CONTACT_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p)
    return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p))
    out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string germ(const std::string& name) { return std::string(GERMS_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& text)
{
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST(Cli, TypeqTable)
{
  CliRun r = run("typeq " + germ("example1.germ"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("value   3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("EXACT"), std::string::npos);
}

TEST(Cli, JsonIsDeterministicAndWellFormed)
{
  CliRun a = run("betaq " + germ("example1.germ") + " --format json --seed 9");
  CliRun b = run("betaq " + germ("example1.germ") + " --format json --seed 9");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j.at("schema_version"), 1);
  EXPECT_TRUE(j.at("timing").is_null());
  const auto& rep = j.at("reports").at(0);
  EXPECT_EQ(rep.at("invariant"), "BETAq");
  EXPECT_EQ(rep.at("value"), "4");
  EXPECT_EQ(rep.at("seed"), "9");
}

TEST(Cli, RevalidateSucceeds)
{
  EXPECT_EQ(run("type1 " + germ("cusp.germ") + " --revalidate").code, 0);
  EXPECT_EQ(run("catlinq " + germ("family_m4.germ") + " --revalidate --format json").code, 0);
  EXPECT_EQ(run("hyper " + germ("hyper.germ") + " --revalidate").code, 0);
}

TEST(Cli, HyperAndMult)
{
  CliRun h = run("hyper " + germ("hyper.germ") + " --format json");
  ASSERT_EQ(h.code, 0);
  auto j = nlohmann::json::parse(h.out);
  EXPECT_EQ(j.at("reports").at(0).at("value"), "inf");
  EXPECT_EQ(j.at("reports").at(1).at("value"), "6");
  EXPECT_EQ(j.at("reports").at(2).at("value"), "8");
  CliRun m = run("mult " + germ("mult_chain.germ"));
  EXPECT_EQ(m.code, 0);
  EXPECT_NE(m.out.find("value   6"), std::string::npos);
}

TEST(Cli, BracketExitCode)
{
  std::string f = temp_file("germ_contact_bracket.germ", "ring z1..z3;\nideal = z1^2 + z2^3, z2^2 + z3^3, z3^2 + z1^3;\n");
  CliRun r = run("type1 " + f);
  EXPECT_EQ(r.code, 4) << r.out;
  EXPECT_NE(r.out.find("BRACKET"), std::string::npos);
}

TEST(Cli, VerifyCommandPasses)
{
  CliRun r = run("verify-paper");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("all rows match"), std::string::npos);
}

TEST(Cli, TruncationLimitedExitCode)
{
  CliRun r = run("verify-paper --trunc 4");
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.out.find(" FAIL "), std::string::npos) << r.out;
}

TEST(Cli, InputErrors)
{
  EXPECT_EQ(run("type1 /nonexistent/file.germ").code, 2);
  std::string bad = temp_file("germ_contact_bad.germ", "ring z1..z2;\nideal = z1^3 + , z2;\n");
  EXPECT_EQ(run("type1 " + bad).code, 2);
  std::string constant = temp_file("germ_contact_const.germ", "ring z1..z2;\nideal = 1 + z1, z2;\n");
  EXPECT_EQ(run("type1 " + constant).code, 2);
  EXPECT_EQ(run("type1 " + germ("hyper.germ")).code, 2);
  EXPECT_EQ(run("typeq " + germ("cusp.germ") + " --q 3").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}
