#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <semihilbert/semihilbert.hpp>

using namespace semihilbert;
using M = Matrix<double>;
using C = Complex<double>;

namespace {

std::string strip_wall_time(ordered_json j) {
  j["wall_time_seconds"] = 0;
  return j.dump(2);
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(CLI_PATH) + " " + args + " > cli_stdout.txt 2> cli_stderr.txt";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("suite runs are reproducible and aggregate cleanly") {
  SuiteConfig cfg;
  cfg.dims = {2, 3};
  cfg.trials = 4;
  cfg.cases = {CaseId::C01, CaseId::C02, CaseId::C15};
  cfg.seed = 42;

  auto r1 = run_suite<double>(cfg);
  auto r2 = run_suite<double>(cfg);
  CHECK(strip_wall_time(report_to_json(r1)) == strip_wall_time(report_to_json(r2)));

  CHECK(r1.cases.size() == 3);
  CHECK(r1.total_trials + r1.total_skipped == 3 * (2 + 3) * 4);
  CHECK(r1.total_violations == 0);
  CHECK(r1.violations_total == 0);
  for (const auto& c : r1.cases) {
    CHECK(c.trials + c.skipped == (2 + 3) * 4);
    CHECK(c.violations == 0);
    for (const auto& l : c.links) CHECK(l.min_margin >= 0);
  }

  CHECK(r1.structure.soundness_pass == r1.structure.soundness_total);
  CHECK(r1.structure.raw_membership_accepted == 0);
  CHECK(r1.structure.double_sharp_max_residual <= 1e-9);
  CHECK(r1.structure.triple_sharp_vs_sharp_max <= 1e-9);
  CHECK(r1.structure.triple_sharp_vs_op_min > 1e-3);
  CHECK_FALSE(r1.structure.triple_sharp_outcome.empty());

  SuiteConfig bad = cfg;
  bad.cases.clear();
  CHECK_THROWS_AS(run_suite<double>(bad), InvalidConfig);
}

TEST_CASE("violations are counted and archived with their operands") {
  SuiteConfig cfg;
  cfg.dims = {2};
  cfg.ranks = {2};
  cfg.trials = 5;
  cfg.cases = {CaseId::C10};
  cfg.seed = 11;

  auto rep = run_suite<double>(cfg);
  CHECK(rep.total_violations == 5);  // the alpha = 1 endpoint fails on every generic draw
  CHECK(rep.violations_total == 5);
  CHECK(rep.violations.size() == 5);
  for (const auto& v : rep.violations) {
    CHECK(v.id == CaseId::C10);
    CHECK(v.link == "alpha=1.00");
    CHECK(v.lhs > v.rhs);
    CHECK(v.operands.operators.size() == 1);
    CHECK_FALSE(v.digest.empty());
  }
  const auto& agg = rep.cases.front();
  CHECK(agg.violations == 5);
  bool found = false;
  for (const auto& l : agg.links)
    if (l.label == "alpha=1.00") {
      found = true;
      CHECK(l.violations == 5);
    }
  CHECK(found);
}

TEST_CASE("matrix json round trip is exact") {
  SplitRng rng(31415);
  M m(3, 4);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = rng.cnormal();
  M back = matrix_from_json(nlohmann::json::parse(matrix_to_json(m).dump()));
  CHECK((back - m).norm() == 0.0);
}

TEST_CASE("matrix json rejects malformed input") {
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse("{\"rows\":1}")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse("{\"rows\":0,\"cols\":1,\"data\":[]}")),
                  ParseError);
  CHECK_THROWS_AS(
      matrix_from_json(nlohmann::json::parse("{\"rows\":1,\"cols\":1,\"data\":[[1]]}")),
      ParseError);
  CHECK_THROWS_AS(
      matrix_from_json(nlohmann::json::parse("{\"rows\":2,\"cols\":1,\"data\":[[1,0]]}")),
      ParseError);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(
                      "{\"rows\":1,\"cols\":1,\"data\":[[1,\"x\"]]}")),
                  ParseError);
}

TEST_CASE("operand bundles survive a serialization round trip") {
  SplitRng rng(2718);
  for (CaseId id : {CaseId::C13, CaseId::C15, CaseId::C19}) {
    const CaseInfo& info = case_info(id);
    auto w = std::make_shared<const Weight<double>>(gen_weight<double>(3, 2, rng));
    Operands<double> ops = draw_operands<double>(info, w, rng, 4);
    ordered_json j = operands_to_json(info, ops);
    Operands<double> back = operands_from_json(info, nlohmann::json::parse(j.dump()));
    CatalogOptions<double> opt;
    opt.grid = 64;
    auto r1 = evaluate(id, ops, opt);
    auto r2 = evaluate(id, back, opt);
    CHECK(r1.operand_digest == r2.operand_digest);
    CHECK(r1.lhs == doctest::Approx(r2.lhs).epsilon(1e-14));
  }
}

TEST_CASE("csv report has a header and one row per case") {
  SuiteConfig cfg;
  cfg.dims = {2};
  cfg.trials = 2;
  cfg.cases = {CaseId::C01, CaseId::C11};
  cfg.seed = 3;
  auto rep = run_suite<double>(cfg);
  const std::string csv = report_to_csv(rep);
  CHECK(csv.rfind("case,name,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}

TEST_CASE("search drives the sandwich case toward attainment") {
  EnsembleSpec spec;
  spec.dim = 2;
  spec.rank = 2;
  spec.seed = 2024;
  auto res = search_extremal<double>(CaseId::C01, spec, 400, "upper");
  CHECK(res.best_ratio <= 1.0 + 1e-7);
  CHECK(res.best_ratio > 0.9);
  CHECK(res.witness.operators.size() == 1);
  CHECK_THROWS_AS(search_extremal<double>(CaseId::C01, spec, 10, "nope"), InvalidConfig);
  CHECK_THROWS_AS(search_extremal<double>(CaseId::C01, spec, 0), InvalidConfig);
}

TEST_CASE("cli computes known values and honors exit codes") {
  const std::string w = std::string(DATA_DIR) + "/weight_diag10.json";
  const std::string t = std::string(DATA_DIR) + "/op_2035.json";

  CHECK(run_cli("compute --weight " + w + " --op " + t + " --what seminorm") == 0);
  CHECK(slurp("cli_stdout.txt").substr(0, 2) == "2\n");

  CHECK(run_cli("compute --weight " + w + " --op " + t + " --what rA --algo eigen") == 0);
  CHECK(slurp("cli_stdout.txt").substr(0, 2) == "2\n");

  CHECK(run_cli("compute --weight " + w + " --op " + t + " --what sharp") == 0);
  const auto sharp_json = nlohmann::json::parse(slurp("cli_stdout.txt"));
  CHECK(sharp_json["data"][0][0].get<double>() == doctest::Approx(2.0));

  CHECK(run_cli("compute --weight " + w + " --op " + t + " --what wA --algo limit") == 2);
  CHECK(run_cli("compute --weight " + w + " --op " + t + " --what bogus") == 2);
  CHECK(run_cli("bogus-subcommand") == 2);
  CHECK(run_cli("check --dims banana --cases C01 --out junk.json") == 2);
  CHECK(run_cli("check --dims 2 --cases C77 --out junk.json") == 2);
}

TEST_CASE("cli check reports violations through its exit status") {
  CHECK(run_cli("check --dims 2 --ranks 1,2 --trials 2 --cases C01,C06 --seed 7 "
                "--out smoke_report.json") == 0);
  const auto rep = nlohmann::json::parse(slurp("smoke_report.json"));
  CHECK(rep["totals"]["violations"].get<long>() == 0);
  CHECK(rep["config"]["seed"].get<std::uint64_t>() == 7);

  CHECK(run_cli("check --dims 2 --ranks 2 --trials 3 --cases C10 --seed 5 "
                "--out c10_report.json") == 1);
  const auto bad = nlohmann::json::parse(slurp("c10_report.json"));
  CHECK(bad["totals"]["violations"].get<long>() == 3);

  CHECK(run_cli("check --dims 2 --ranks 1 --trials 2 --cases C01 --format csv "
                "--out smoke_report.csv") == 0);
  CHECK(slurp("smoke_report.csv").rfind("case,name,", 0) == 0);
}

TEST_CASE("cli seed resolution prefers flags over the environment") {
  CHECK(std::system(("SEMIHILBERT_SEED=banana " + std::string(CLI_PATH) +
                     " check --dims 2 --ranks 1 --trials 1 --cases C01 --out env_junk.json "
                     "> /dev/null 2>&1")
                        .c_str()) != 0);

  CHECK(std::system(("SEMIHILBERT_SEED=99 " + std::string(CLI_PATH) +
                     " check --dims 2 --ranks 1 --trials 1 --cases C01 --out env_seed.json "
                     "> /dev/null 2>&1")
                        .c_str()) == 0);
  const auto env_rep = nlohmann::json::parse(slurp("env_seed.json"));
  CHECK(env_rep["config"]["seed"].get<std::uint64_t>() == 99);

  CHECK(std::system(("SEMIHILBERT_SEED=99 " + std::string(CLI_PATH) +
                     " check --dims 2 --ranks 1 --trials 1 --cases C01 --seed 5 "
                     "--out flag_seed.json > /dev/null 2>&1")
                        .c_str()) == 0);
  const auto flag_rep = nlohmann::json::parse(slurp("flag_seed.json"));
  CHECK(flag_rep["config"]["seed"].get<std::uint64_t>() == 5);
}

TEST_CASE("cli search writes a witness bundle") {
  CHECK(run_cli("search --case C01 --dim 2 --rank 2 --iters 60 --seed 9 "
                "--out witness_test.json") == 0);
  const auto wj = nlohmann::json::parse(slurp("witness_test.json"));
  CHECK(wj["case"].get<std::string>() == "C01");
  CHECK(wj["best_ratio"].get<double>() <= 1.0 + 1e-7);
  CHECK(wj["operands"]["operators"].contains("T"));
}

TEST_CASE("cli compare reports the exact coefficient ratio") {
  CHECK(run_cli("compare --case C09 --baseline three_halves --dims 2 --ranks 2 "
                "--trials 3 --seed 4") == 0);
  const std::string out = slurp("cli_stdout.txt");
  CHECK(out.find("0.6666") != std::string::npos);
}
