#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "octowitt/diffops.hpp"
#include "octowitt/serialize.hpp"

namespace {

using octowitt::Json;

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(OCTOWITT_CLI) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("octowitt_cli_" + name);
  std::ofstream(path, std::ios::binary) << content;
  return path.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

TEST(CliTables, GoldenOutput) {
  for (const std::string kind : {"witt", "twistor", "hermitian", "sigma"}) {
    const auto text = run("tables " + kind + " --n 1 --format text");
    EXPECT_EQ(text.status, 0);
    EXPECT_EQ(text.out, read_file(std::string(OCTOWITT_GOLDEN_DIR) + "/" + kind + ".txt"));
    const auto json = run("tables " + kind + " --n 1 --format json");
    EXPECT_EQ(json.status, 0);
    EXPECT_EQ(json.out, read_file(std::string(OCTOWITT_GOLDEN_DIR) + "/" + kind + ".json"));
  }
}

TEST(CliTables, UsageErrors) {
  EXPECT_EQ(run("tables bogus").status, 2);
  EXPECT_EQ(run("tables witt --n 0").status, 2);
  EXPECT_EQ(run("tables witt --format yaml").status, 2);
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
}

TEST(CliTables, FanoAndJsonValidity) {
  const auto fano = run("tables fano");
  EXPECT_EQ(fano.status, 0);
  EXPECT_NE(fano.out.find("e3 e6 = e5"), std::string::npos);
  for (const std::string kind : {"fano", "octonion-mul", "sigma", "jsigns", "witt", "twistor", "hermitian", "witt-products"}) {
    const auto r = run("tables " + kind + " --n 2 --format json");
    EXPECT_EQ(r.status, 0) << kind;
    EXPECT_NO_THROW((void)Json::parse(r.out)) << kind;
  }
}

TEST(CliDecompose, UnitVector) {
  const auto path = temp_file("g0.json", "[1,0,0,0,0,0,0,0]");
  const auto r = run("decompose " + path);
  ASSERT_EQ(r.status, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["n"], 1);
  EXPECT_EQ(j["reconstruction_exact"], true);
  // X1 = -g1
  EXPECT_EQ(j["blocks"][0]["twistor"][1], Json::array({"0", "-1", "0", "0", "0", "0", "0", "0"}));
  EXPECT_EQ(j["blocks"][0]["hermitian"].size(), 8U);
}

TEST(CliDecompose, StdinZeroVectorAndBlocks) {
  const auto path = temp_file("zero16.json", "[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0]");
  const auto r = run("decompose - < " + path);
  ASSERT_EQ(r.status, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["blocks"].size(), 2U);
  for (const auto& block : j["blocks"]) {
    for (const auto& z : block["hermitian"]) EXPECT_TRUE(z["terms"].empty());
  }
  EXPECT_EQ(run("decompose --n 2 " + path).status, 0);
  EXPECT_EQ(run("decompose --n 1 " + path).status, 2);
}

TEST(CliDecompose, Errors) {
  EXPECT_EQ(run("decompose " + temp_file("seven.json", "[1,2,3,4,5,6,7]")).status, 2);
  EXPECT_EQ(run("decompose " + temp_file("bad.json", "[1,2,")).status, 2);
  EXPECT_EQ(run("decompose " + temp_file("obj.json", "{\"x\":1}")).status, 2);
  EXPECT_EQ(run("decompose /nonexistent/file.json").status, 2);
  EXPECT_EQ(run("decompose " + temp_file("zden.json", "[\"1/0\",0,0,0,0,0,0,0]")).status, 2);
}

TEST(CliApply, DiracOnX0) {
  const auto path = temp_file(
      "x0.json", R"({"nvars":8,"terms":[{"exps":[1,0,0,0,0,0,0,0],"coeff":{"dim":8,"terms":[{"blade":[],"oct":[1,0,0,0,0,0,0,0]}]}}]})");
  const auto r = run("apply --op dirac " + path);
  ASSERT_EQ(r.status, 0);
  const Json j = Json::parse(r.out);
  const Json want = Json::parse(
      R"({"nvars":8,"terms":[{"exps":[0,0,0,0,0,0,0,0],"coeff":{"dim":8,"terms":[{"blade":[0],"oct":["1","0","0","0","0","0","0","0"]}]}}]})");
  EXPECT_EQ(j, want);
}

TEST(CliApply, HermitianOnSumOfSquaresMatchesLibrary) {
  octowitt::Polynomial p(8, 8);
  for (int k = 0; k < 8; ++k) {
    octowitt::Exponents ex(8, 0);
    ex[static_cast<std::size_t>(k)] = 2;
    p.add_term(ex, octowitt::TensorElement::constant(8, octowitt::Octonion::real(octowitt::Rational(1))));
  }
  const auto path = temp_file("sq.json", octowitt::to_json(p).dump());
  const auto r = run("apply --op hermitian:0 " + path);
  ASSERT_EQ(r.status, 0);
  const auto want = octowitt::op_apply(octowitt::hermitian_derivative(0, 0, 1), p);
  EXPECT_EQ(octowitt::polynomial_from_json(Json::parse(r.out)), want);
  const auto r2 = run("apply --op twistor:3:0 - < " + path);
  ASSERT_EQ(r2.status, 0);
  EXPECT_EQ(octowitt::polynomial_from_json(Json::parse(r2.out)),
            octowitt::op_apply(octowitt::twistor_derivative(3, 0, 1), p));
}

TEST(CliApply, Errors) {
  const auto path = temp_file("empty8.json", R"({"nvars":8,"terms":[]})");
  EXPECT_EQ(run("apply --op laplace " + path).status, 2);
  EXPECT_EQ(run("apply --op twistor:9 " + path).status, 2);
  EXPECT_EQ(run("apply --op twistor:1:1 " + path).status, 2);
  EXPECT_EQ(run("apply --op hermitian: " + path).status, 2);
  EXPECT_EQ(run("apply " + path).status, 2);
  EXPECT_EQ(run("apply --op dirac " + temp_file("n12.json", R"({"nvars":12,"terms":[]})")).status, 2);
}

TEST(CliVerify, ReportAndExitStatus) {
  const auto report = (std::filesystem::temp_directory_path() / "octowitt_cli_report.json").string();
  const auto r = run("verify --n-max 1 --samples 3 --seed 5 --format json --report " + report);
  // The printed twistor table and the literal generator identity disagree
  // with the algebra, so verify reports failures and exits 1.
  EXPECT_EQ(r.status, 1);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(r.out, read_file(report));
  EXPECT_EQ(j["config"]["seed"], 5);
  EXPECT_EQ(j["config"]["n_max"], 1);
  EXPECT_EQ(j["passed"], false);
  EXPECT_EQ(j["total_failures"], 8);
}

TEST(CliVerify, SeedFallbackAndPrecedence) {
  const auto env = run("verify --n-max 1 --samples 1 --format json", "OCTOWITT_SEED=1234");
  EXPECT_EQ(Json::parse(env.out)["config"]["seed"], 1234);
  const auto flag = run("verify --n-max 1 --samples 1 --seed 9 --format json", "OCTOWITT_SEED=1234");
  EXPECT_EQ(Json::parse(flag.out)["config"]["seed"], 9);
  const auto dflt = run("verify --n-max 1 --samples 1 --format json", "env -u OCTOWITT_SEED");
  EXPECT_EQ(Json::parse(dflt.out)["config"]["seed"], 42);
  EXPECT_EQ(run("verify --n-max 1 --samples 1", "OCTOWITT_SEED=abc").status, 2);
  EXPECT_EQ(run("verify --seed -3").status, 2);
  EXPECT_EQ(run("verify --n-max 0").status, 2);
}

TEST(CliVerify, TextFormat) {
  const auto r = run("verify --n-max 1 --samples 1 --seed 3");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("FAIL witt.twistor_table_fidelity"), std::string::npos);
  EXPECT_NE(r.out.find("PASS witt.witt_table_fidelity"), std::string::npos);
}

}  // namespace
