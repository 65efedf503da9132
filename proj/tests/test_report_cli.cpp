#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "apx/cli.hpp"
#include "apx/errors.hpp"
#include "apx/report.hpp"

using namespace apx;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Report, RationalAndRealFormatting) {
  EXPECT_EQ(rational_json(make_rational(1)), "1/1");
  EXPECT_EQ(rational_json(make_rational(0)), "0/1");
  EXPECT_EQ(rational_json(make_rational(6, 8)), "3/4");
  EXPECT_EQ(real_json(0.1 + 0.2).dump(), "0.3");
  EXPECT_EQ(real_json(1.0 / 3).dump(), "0.333333333333");
}

TEST(Cli, ComputeWorkedExample) {
  Result r = run_cli({"compute", "--group", "5", "--set", "1,2,3,4"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["prob_direct"], "3/4");
  EXPECT_EQ(j["triangles_direct"], 10);
  EXPECT_EQ(j["triangles_formula"], "10/1");
  EXPECT_EQ(j["symmetric"], true);
  EXPECT_EQ(j["t3_direct"], 12);
  EXPECT_EQ(j["size_profile"]["q"], 1);
  EXPECT_EQ(j["size_profile"]["alpha"], "1/4");
}

TEST(Cli, ComputeSubgroupAndAsymmetric) {
  json j = json::parse(run_cli({"compute", "--group", "6", "--set", "0,2,4"}).out);
  EXPECT_EQ(j["prob_direct"], "1/1");
  Result r = run_cli({"compute", "--group", "6", "--set", "1,2"});
  ASSERT_EQ(r.code, 0);
  j = json::parse(r.out);
  EXPECT_EQ(j["symmetric"], false);
  EXPECT_EQ(j["prob_direct"], "1/4");
  EXPECT_EQ(j["triangles_direct"], "invalid");
  EXPECT_TRUE(j["prob_spectral"].is_null());
  EXPECT_TRUE(j["t3_spectral"].is_null());
}

TEST(Cli, ComputeWithStructure) {
  Result r = run_cli({"compute", "--group", "7", "--set", "0,1,6", "--structure", "--gamma", "0.9"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["structure"]["m0"], 1);
  EXPECT_EQ(j["structure"]["k"], 7);
}

TEST(Cli, MalformedInputIsUsageError) {
  EXPECT_EQ(run_cli({"compute", "--group", "0", "--set", "1"}).code, 2);
  EXPECT_EQ(run_cli({"compute", "--group", "5", "--set", "9"}).code, 2);
  EXPECT_EQ(run_cli({"compute", "--group", "5"}).code, 2);
  EXPECT_EQ(run_cli({"bogus"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"verify", "lemma2", "--q-max", "1"}).code, 2);
  EXPECT_EQ(run_cli({"--format", "xml", "verify", "lemma1"}).code, 2);
}

TEST(Cli, VerifyExitCodes) {
  Result r = run_cli({"verify", "theorem2", "--max-order", "12"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["cases"], 119);

  r = run_cli({"verify", "lemma1", "--d-max", "9", "--radius", "1", "--eps", "2/9"});
  EXPECT_NE(r.code, 0);
  bool listed = false;
  const json report = json::parse(r.out);
  for (const auto& v : report["violations"]) listed |= v["weights"] == json::array({3, 3, 3});
  EXPECT_TRUE(listed);

  r = run_cli({"verify", "lemma2", "--q-max", "6", "--alpha-steps", "11", "--eta-steps", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_FALSE(json::parse(r.out)["equalities"].empty());
}

TEST(Cli, JsonRoundTripIsIdentical) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"compute", "--group", "3,3", "--set", "0,1,2,3,6"},
           {"search", "--group", "15", "--d", "5", "--objective", "t3density"},
           {"structure", "--group", "12", "--set", "1,4,8,11", "--gamma", "0.8", "--spectrum"},
           {"verify", "gls", "--max-order", "9"},
           {"bound", "--q", "5", "--alpha", "0", "--k", "2", "--eta", "9/10"}}) {
    Result r = run_cli(args);
    ASSERT_EQ(r.code, 0) << args[0] << ' ' << r.err;
    json parsed = json::parse(r.out);
    EXPECT_EQ(parsed.dump(2) + "\n", r.out);
  }
}

TEST(Cli, ThreadsDoNotChangeOutput) {
  Result one = run_cli({"--threads", "1", "verify", "theorem1", "--max-order", "9"});
  Result many = run_cli({"--threads", "4", "verify", "theorem1", "--max-order", "9"});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, many.out);
}

TEST(Cli, CsvAndOutFile) {
  Result r = run_cli({"--format", "csv", "verify", "lemma1", "--d-max", "9", "--radius", "1", "--eps", "2/9"});
  EXPECT_NE(r.out.find("\"3,3,3\",9,63,63/1"), std::string::npos) << r.out;
  auto path = std::filesystem::temp_directory_path() / "apx_cli_out_test.json";
  r = run_cli({"compute", "--group", "5", "--set", "1,4", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  json j = json::parse(in);
  EXPECT_EQ(j["set"], "{1,4}");
  std::filesystem::remove(path);
}

TEST(Config, ParsesKeyValueFile) {
  std::istringstream in("# suite limits\nmax_order = 9\ntolerance_spectral=1e-8\ngamma0=19/20\nthreads=auto\noutput_format=text\n");
  cli::RunConfig c = cli::parse_config(in, {});
  EXPECT_EQ(c.max_order, 9);
  EXPECT_DOUBLE_EQ(c.tolerance_spectral, 1e-8);
  EXPECT_EQ(c.gamma0, make_rational(19, 20));
  EXPECT_EQ(c.threads, 0u);
  EXPECT_EQ(c.output_format, cli::OutputFormat::text);
}

TEST(Config, RejectsBadInput) {
  std::istringstream unknown("colour=blue\n");
  EXPECT_THROW(cli::parse_config(unknown, {}), InvalidArgument);
  std::istringstream zero("max_order=0\n");
  EXPECT_THROW(cli::parse_config(zero, {}), InvalidArgument);
  std::istringstream tol("tolerance_spectral=-1\n");
  EXPECT_THROW(cli::parse_config(tol, {}), InvalidArgument);
  std::istringstream noeq("max_order 3\n");
  EXPECT_THROW(cli::parse_config(noeq, {}), InvalidArgument);
}

TEST(Config, FileDrivesDefaultMaxOrder) {
  auto path = std::filesystem::temp_directory_path() / "apx_cli_config_test.cfg";
  {
    std::ofstream out(path);
    out << "max_order=9\n";
  }
  Result r = run_cli({"--config", path.string(), "verify", "theorem2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["max_order"], 9);
  std::filesystem::remove(path);
}

TEST(Config, EnvironmentOverridesThreads) {
  cli::RunConfig c;
  c.threads = 3;
  ::setenv("APX_THREADS", "2", 1);
  cli::apply_environment(c);
  EXPECT_EQ(c.threads, 2u);
  ::setenv("APX_THREADS", "nope", 1);
  EXPECT_THROW(cli::apply_environment(c), InvalidArgument);
  ::unsetenv("APX_THREADS");
}
