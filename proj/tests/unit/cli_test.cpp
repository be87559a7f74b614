#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "taumackey/characters.hpp"
#include "taumackey/jobs.hpp"

using namespace taumackey;

namespace {

JobSpec job(const std::string& command, const std::string& group_json) {
  JobSpec j;
  j.command = command;
  if (!group_json.empty()) j.group = Json::parse(group_json);
  j.seed = kDefaultTableSeed;
  return j;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(TAUMACKEY_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::filesystem::path temp_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("taumackey_test_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace

TEST(SpecIo, GroupForms) {
  EXPECT_EQ(group_from_json(Json::parse(R"j({"family":"symmetric","n":4})j"))->order(), 24u);
  EXPECT_EQ(group_from_json(Json::parse(R"j({"group":{"family":"quaternion8"}})j"))->order(), 8u);
  EXPECT_EQ(group_from_json(Json::parse(R"j({"generators":["(1 2)","(1 2 3 4 5)"],"degree":5})j"))->order(), 120u);
  EXPECT_EQ(group_from_json(Json::parse(R"j({"product":[{"family":"cyclic","n":2},{"family":"cyclic","n":3}]})j"))
                ->order(),
            6u);
  EXPECT_EQ(group_from_json(Json::parse(R"j({"semidirect":{"base":{"family":"cyclic","n":3},"tau":"identity"}})j"))
                ->is_abelian(),
            false);
}

TEST(SpecIo, ErrorsNameTheField) {
  try {
    group_from_json(Json::parse(R"j({"family":"symmetric"})j"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidSpec);
    EXPECT_NE(std::string(e.what()).find("\"n\""), std::string::npos);
  }
  try {
    tau_from_json(make_symmetric(3), Json("sideways"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("tau"), std::string::npos);
  }
}

TEST(SpecIo, ArgumentParsing) {
  EXPECT_EQ(parse_json_argument("inverse"), Json("inverse"));
  EXPECT_EQ(parse_json_argument(R"j({"inner":"(1 2)"})j")["inner"], "(1 2)");
  const auto dir = temp_dir("arg");
  std::ofstream(dir / "g.json") << R"j({"family":"cyclic","n":4})j";
  EXPECT_EQ(parse_json_argument("@" + (dir / "g.json").string())["n"], 4);
  EXPECT_THROW(parse_json_argument("{broken"), Error);
}

TEST(Jobs, RoundTrip) {
  JobSpec j = job("gelfand", R"j({"family":"symmetric","n":4})j");
  j.subgroup = Json::parse(R"j({"generators":["(1 2)"]})j");
  j.tau = "inverse";
  j.n = 3;
  j.seed = 12345678901234ULL;
  j.budget.max_pairs = 77;
  const JobSpec back = JobSpec::from_json(j.to_json());
  EXPECT_EQ(back.to_json(), j.to_json());
  EXPECT_EQ(job_cache_key(back), job_cache_key(j));
  EXPECT_EQ(job_cache_key(j).size(), 64u);
  JobSpec other = j;
  other.seed = 1;
  EXPECT_NE(job_cache_key(other), job_cache_key(j));
}

TEST(Jobs, ExitCodes) {
  EXPECT_EQ(run_job(job("simply-reducible", R"j({"family":"quaternion8"})j")).exit_code, kExitOk);
  EXPECT_EQ(run_job(job("char-table", R"j({"family":"nope","n":2})j")).exit_code, kExitUsage);
  EXPECT_EQ(run_job(job("frobnicate", R"j({"family":"cyclic","n":2})j")).exit_code, kExitUsage);
  EXPECT_EQ(run_job(job("power-sums", R"j({"family":"cyclic","n":2})j")).exit_code, kExitUsage);
}

TEST(Jobs, ReportsExactSumsAsStrings) {
  JobSpec j = job("power-sums", R"j({"family":"symmetric","n":3})j");
  j.tau = "inverse";
  j.n = 2;
  const JobResult r = run_job(j);
  ASSERT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.report["payload"]["sum_v_n"], "66");
  EXPECT_EQ(r.report["payload"]["sum_zeta_n1"], "66");
  EXPECT_EQ(r.report["status"], "ok");
  EXPECT_EQ(r.report["tool"]["version"], kToolVersion);
}

TEST(Jobs, TrivialTable) {
  const JobResult r = run_job(job("char-table", R"j({"family":"cyclic","n":1})j"));
  ASSERT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.report["payload"]["rows"].size(), 1u);
  EXPECT_EQ(r.report["payload"]["rows"][0][0][0], 1.0);
}

TEST(Jobs, Deterministic) {
  const JobSpec j = job("fs", R"j({"family":"symmetric","n":4})j");
  EXPECT_EQ(run_job(j).report.dump(), run_job(j).report.dump());
}

TEST(Batch, EmptyManifest) {
  const BatchResult r = run_batch(Json::array(), {});
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_TRUE(r.report["jobs"].empty());
}

TEST(Batch, CacheAndIsolation) {
  const auto dir = temp_dir("batch");
  const Json manifest = Json::parse(R"j({"jobs":[
    {"command":"fs","group":{"family":"quaternion8"}},
    {"command":"char-table","group":{"family":"bogus","n":1}},
    {"command":"power-sums","group":{"family":"cyclic","n":5},"tau":"identity","n":3}]})j");
  BatchOptions opt;
  opt.cache_dir = dir;
  opt.workers = 3;
  const BatchResult first = run_batch(manifest, opt);
  EXPECT_EQ(first.exit_code, kExitUsage);
  EXPECT_EQ(first.cache_misses, 3u);
  EXPECT_EQ(first.report["jobs"][0]["exit_code"], 0);
  EXPECT_EQ(first.report["jobs"][1]["exit_code"], 1);
  EXPECT_EQ(first.report["jobs"][2]["report"]["payload"]["sum_v_n"], "625");
  const BatchResult second = run_batch(manifest, opt);
  EXPECT_EQ(second.cache_hits, 3u);
  EXPECT_EQ(second.report.dump(), first.report.dump());
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(run_cli("simply-reducible --group '{\"family\":\"quaternion8\"}' --tau inverse"), 0);
  EXPECT_EQ(run_cli("char-table --group '{\"family\":\"cyclic\",\"n\":1}'"), 0);
  EXPECT_EQ(run_cli("char-table --group '{\"family\":\"nope\",\"n\":1}'"), 1);
  EXPECT_EQ(run_cli("char-table"), 1);
  EXPECT_EQ(run_cli("fs --group '{\"family\":\"cyclic\",\"n\":3}' --format xml"), 1);
  EXPECT_EQ(run_cli("no-such-command"), 1);
}

TEST(Binary, OutFileAndTextFormat) {
  const auto dir = temp_dir("out");
  const auto out = dir / "r.txt";
  ASSERT_EQ(run_cli("power-sums --group '{\"family\":\"symmetric\",\"n\":3}' --n 2 --format text --out " +
                    out.string()),
            0);
  std::ifstream in(out);
  const std::string text((std::istreambuf_iterator<char>(in)), {});
  EXPECT_NE(text.find("sum_v_n: 66"), std::string::npos);
}

TEST(Binary, SeedFromEnvironment) {
  setenv("TAUMACKEY_SEED", "4242", 1);
  EXPECT_EQ(default_seed(), 4242u);
  unsetenv("TAUMACKEY_SEED");
  EXPECT_EQ(default_seed(), kDefaultTableSeed);
}
