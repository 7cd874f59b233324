#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <vector>

#include "crys/acceptance.hpp"
#include "crys/cli.hpp"
#include "crys/errors.hpp"
#include "crys/records.hpp"

using namespace crys;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "crys");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> records(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(nlohmann::json::parse(line));
  return out;
}

const nlohmann::json* find_kind(const std::vector<nlohmann::json>& recs, const std::string& kind) {
  for (const auto& r : recs)
    if (r.at("kind") == kind) return &r;
  return nullptr;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kData = CRYS_TEST_DATA_DIR;

}  // namespace

TEST(Cli, ParseMu) {
  auto gl2 = build_root_datum("GL(2)");
  auto m = parse_mu(gl2, "2,0;1,1");
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m.per_embedding[0].coords, (IntVec{2, 0}));
  EXPECT_EQ(m.per_embedding[1].coords, (IntVec{1, 1}));
  // PGL(2) accepts ambient GL coordinates.
  EXPECT_EQ(parse_mu(build_root_datum("PGL(2)"), "2,0").per_embedding[0].coords, (IntVec{2}));
  EXPECT_THROW(parse_mu(gl2, ""), UsageError);
  EXPECT_THROW(parse_mu(gl2, "1,x"), UsageError);
  EXPECT_THROW(parse_mu(gl2, "1,2,3"), UsageError);
}

TEST(Cli, FlcheckPgl2Example) {
  auto r = invoke({"--format", "records", "flcheck", "--group", "PGL(2)", "--mu", "2,0", "--p", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto recs = records(r.out);
  const auto* f = find_kind(recs, "flcheck");
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->at("fl"), true);
  EXPECT_EQ(f->at("strongly_fl"), false);
  EXPECT_EQ(f->at("certificate"), false);
  for (const auto& rec : recs) EXPECT_EQ(rec.at("schema_version"), kRecordSchemaVersion);
}

TEST(Cli, NablaSmoothExample) {
  auto r = invoke({"--format", "records", "nabla-smooth", "--group", "GL(2)", "--mu", "2,0", "--p", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto recs = records(r.out);
  std::size_t strata = 0;
  for (const auto& rec : recs)
    if (rec.at("kind") == "stratum") {
      ++strata;
      EXPECT_EQ(rec.at("pass"), true);
    }
  EXPECT_EQ(strata, 2u);
  EXPECT_EQ(find_kind(recs, "nabla_smooth")->at("all_pass"), true);
}

TEST(Cli, NablaSmoothOutsideRangeFails) {
  EXPECT_EQ(invoke({"nabla-smooth", "--group", "GL(2)", "--mu", "5,0", "--p", "5"}).code, 1);
}

TEST(Cli, ZvalsExample) {
  auto r = invoke({"--format", "records", "zvals", "--p", "5", "--n-max", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::vector<std::int64_t> vals;
  for (const auto& rec : records(r.out))
    if (rec.at("kind") == "zval") vals.push_back(rec.at("valuation").get<std::int64_t>());
  EXPECT_EQ(vals, (std::vector<std::int64_t>{0, -1, 3, 2, 1}));
}

TEST(Cli, KisinFromInstanceFile) {
  auto r = invoke({"--format", "records", "kisin-variety", "--instance", kData + "/pgl2_p5.json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto recs = records(r.out);
  EXPECT_GE(find_kind(recs, "kisin_variety")->at("classes").get<int>(), 2);
  auto gl = invoke({"kisin-variety", "--group", "GL(2)", "--p", "7", "--cbar", "1,0", "--mu", "1,0"});
  EXPECT_EQ(gl.code, 0);
  EXPECT_NE(gl.out.find("classes=1"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"flcheck", "--group", "Foo", "--mu", "1,0", "--p", "5"}).code, 2);
  EXPECT_EQ(invoke({"flcheck", "--group", "GL(2)", "--mu", "1;0", "--p", "5"}).code, 2);
  EXPECT_EQ(invoke({"flcheck", "--group", "GL(2)", "--mu", "1,0", "--p", "6"}).code, 2);
  EXPECT_EQ(invoke({"bogus"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
  EXPECT_EQ(invoke({"kisin-variety", "--p", "5", "--cbar", "2,0", "--mu", "2,0", "--k", "3"}).code, 2);
  EXPECT_EQ(invoke({"kisin-variety", "--p", "5", "--cbar", "2,0", "--mu", "2,0", "--k", "2", "--budget", "10"}).code,
            2);
  EXPECT_EQ(invoke({"modp-mono", "--p", "5", "--instance", kData + "/missing.json"}).code, 2);
}

TEST(Cli, ModpMonoFlagsPoles) {
  const std::string path = ::testing::TempDir() + "/pole.json";
  {
    // [[u, u^-1], [0, 1]]: u C' C^-1 has (0,1) entry -2 u^-1.
    std::ofstream f(path);
    f << R"J({"group":"GL(2)","q":5,"matrices":[[[0,0,1,1],[0,1,-1,1],[1,1,0,1]]]})J";
  }
  auto r = invoke({"modp-mono", "--instance", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("pole"), std::string::npos);
  EXPECT_EQ(invoke({"modp-mono", "--p", "5", "--cbar", "3,0"}).code, 0);
}

TEST(Cli, RemainingSubcommandsRun) {
  EXPECT_EQ(invoke({"group-info", "--group", "G2"}).code, 0);
  EXPECT_EQ(invoke({"minuscule", "--group", "PGL(3)"}).code, 0);
  EXPECT_EQ(invoke({"certificate", "--group", "SL(2)", "--mu", "1,-1", "--p", "5"}).code, 0);
  EXPECT_EQ(invoke({"dimcheck", "--group", "GL(3)", "--mu", "2,1,0", "--mu-prime", "1,1,1"}).code, 0);
  EXPECT_EQ(invoke({"schubert-tangent", "--group", "GL(2)", "--mu", "1,0", "--p", "5"}).code, 0);
  EXPECT_EQ(invoke({"lambda", "--p", "3", "--D", "12", "--i", "1"}).code, 0);
  EXPECT_EQ(invoke({"telescope", "--count", "2", "--D", "20", "--i-max", "2"}).code, 0);
  EXPECT_EQ(invoke({"shape", "--p", "5", "--cbar", "2,0;0,1"}).code, 0);
  auto c = invoke({"cartan-test", "--n", "2", "--p", "3", "--samples", "30", "--mu", "1,0", "--mu-prime", "1,0"});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("shapes=[[1,1],[2,0]]"), std::string::npos);
}

TEST(Cli, RecordsAreDeterministic) {
  const std::vector<std::string> args = {"--format", "records", "--seed", "9", "cartan-test", "--n", "3",
                                         "--p",      "3",       "--samples", "40"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
  const std::vector<std::string> tel = {"--format", "records", "telescope", "--count", "3", "--D", "20"};
  EXPECT_EQ(invoke(tel).out, invoke(tel).out);
}

TEST(Cli, GoldenRecords) {
  EXPECT_EQ(invoke({"--format", "records", "flcheck", "--group", "PGL(2)", "--mu", "2,0", "--p", "5"}).out,
            read_file(kData + "/golden_flcheck.jsonl"));
  EXPECT_EQ(invoke({"--format", "records", "zvals", "--p", "7", "--n-max", "6"}).out,
            read_file(kData + "/golden_zvals.jsonl"));
}

TEST(Records, RunConfigRoundTrip) {
  RunConfig c;
  c.subcommand = "kisin-variety";
  c.group = "PGL(2)";
  c.mu = "2,0;1,0";
  c.cbar = "2,0";
  c.p = 7;
  c.D = 33;
  c.budget = 99;
  c.format = OutputFormat::Records;
  c.seed = 123456789012345ULL;
  c.i = 2;
  c.h = 3;
  c.h_max = 2;
  c.k = 2;
  c.instance = "x.json";
  EXPECT_EQ(run_config_from_json(run_config_to_json(c)), c);
  EXPECT_EQ(run_config_from_json(nlohmann::json::parse(run_config_to_json(c).dump())), c);
  EXPECT_THROW(run_config_from_json(nlohmann::json::object()), UsageError);
  EXPECT_THROW(run_config_from_json({{"subcommand", "x"}, {"format", "xml"}}), UsageError);
}

TEST(Records, TableFormat) {
  std::ostringstream os;
  RecordWriter w(os, OutputFormat::Table);
  w.emit("row", {{"a", 1}, {"b", "x"}, {"c", {1, 2}}});
  EXPECT_EQ(os.str(), "row a=1 b=x c=[1,2]\n");
}

TEST(Acceptance, ResultLineFormat) {
  CriterionResult r;
  r.id = 5;
  r.name = "example";
  r.pass = true;
  r.detail = "2 classes";
  r.seconds = 0.25;
  r.time_limit = 60;
  EXPECT_EQ(format_result_line(r), "PASS [5] example: 2 classes (0.2s of 60s)");
  r.pass = false;
  r.time_limit = 0;
  EXPECT_EQ(format_result_line(r).substr(0, 8), "FAIL [5]");
}
