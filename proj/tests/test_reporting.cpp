#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "aoicoex/commands.hpp"
#include "aoicoex/config.hpp"
#include "aoicoex/report.hpp"

using namespace aoicoex;

namespace {

std::filesystem::path fresh_dir(const std::string& name) {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / ("aoicoex_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  REQUIRE(file.good());
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("double formatting") {
  CHECK(format_double(0.25, false) == "0.25");
  CHECK(format_double(1.0 / 3.0, false) == "0.333333");
  CHECK(format_double(123456789.0, false) == "1.23457e+08");
  CHECK(format_double(std::numeric_limits<double>::quiet_NaN(), false) ==
        "nan");
  // Full precision round-trips exactly.
  const double value = 0.1234567890123456789;
  const std::string text = format_double(value, true);
  CHECK(std::stod(text) == value);
}

TEST_CASE("csv rendering") {
  Table table;
  table.columns = {"a", "b", "label"};
  table.rows.push_back({1.5, std::numeric_limits<double>::quiet_NaN(),
                        std::string("x")});
  table.rows.push_back({-2.0, 0.001, std::string("y")});
  const std::string csv = to_csv(table, false);
  CHECK(csv == "a,b,label\n1.5,nan,x\n-2,0.001,y\n");
  CHECK(csv.find('\r') == std::string::npos);

  Table bad = table;
  bad.rows.push_back({1.0});
  CHECK_THROWS_AS(to_csv(bad, false), std::logic_error);
}

TEST_CASE("json mirror") {
  Table table;
  table.columns = {"x", "name"};
  table.rows.push_back({2.5, std::string("row")});
  table.rows.push_back({std::numeric_limits<double>::quiet_NaN(),
                        std::string("hole")});
  const std::string json = to_json(table);
  CHECK(json.find("\"x\": 2.5") != std::string::npos);
  CHECK(json.find("\"name\": \"row\"") != std::string::npos);
  CHECK(json.find("\"x\": null") != std::string::npos);
}

TEST_CASE("csv files written with lf endings") {
  const std::filesystem::path dir = fresh_dir("csv");
  Table table;
  table.columns = {"v"};
  table.rows.push_back({3.25});
  write_csv(dir / "t.csv", table, false);
  CHECK(slurp(dir / "t.csv") == "v\n3.25\n");
}

TEST_CASE("config parsing") {
  SUBCASE("full round trip") {
    const SimulateJob job = parse_config_text(R"({
      "scenario": "aon-ton",
      "n_first": 3,
      "n_second": 4,
      "beta": 0.05,
      "rate": 2.0,
      "alphas": [0.5, 0.9],
      "runs": 12,
      "stages": 77,
      "seed": 99,
      "age_reset": "node",
      "out_dir": "results",
      "trace_runs": 2,
      "full_precision": true,
      "json_mirror": true
    })");
    CHECK(job.spec.pairing == Pairing::aon_ton);
    CHECK(job.spec.n_first == 3);
    CHECK(job.spec.n_second == 4);
    CHECK(job.spec.beta == doctest::Approx(0.05));
    CHECK(job.spec.rate == doctest::Approx(2.0));
    CHECK(job.spec.alphas == std::vector<double>{0.5, 0.9});
    CHECK(job.spec.runs == 12);
    CHECK(job.spec.stages == 77);
    CHECK(job.spec.master_seed == 99);
    CHECK(job.spec.age_reset == AgeReset::node);
    CHECK(job.out_dir == "results");
    CHECK(job.trace_runs == 2);
    CHECK(job.full_precision);
    CHECK(job.json_mirror);
  }
  SUBCASE("defaults") {
    const SimulateJob job = parse_config_text(R"({"scenario": "ton-ton"})");
    CHECK(job.spec.n_first == 5);
    CHECK(job.spec.runs == 2000);
    CHECK(job.spec.stages == 1000);
    CHECK(job.spec.age_reset == AgeReset::network);
    CHECK(job.out_dir == "out");
    CHECK(job.trace_runs == 1);
    CHECK_FALSE(job.full_precision);
  }
  SUBCASE("rejections") {
    CHECK_THROWS_AS(parse_config_text("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text("[1,2]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text(R"({"scenaro": "aon-ton"})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text(R"({"scenario": "foo"})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text(R"({"beta": 1.5})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text(R"({"runs": 0})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text(R"({"alphas": [0.0]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text(R"({"age_reset": "sometimes"})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text(R"({"runs": 2, "trace_runs": 3})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text(R"({"n_first": "five"})"),
                    std::invalid_argument);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(load_config("/nonexistent/config.json"),
                    std::invalid_argument);
  }
}

TEST_CASE("config echo") {
  SimulateJob job;
  job.spec.pairing = Pairing::aon_aon;
  job.spec.master_seed = 31337;
  const std::string echo = config_echo_json(job, 4);
  CHECK(echo.find("\"scenario\": \"aon-aon\"") != std::string::npos);
  CHECK(echo.find("\"seed\": 31337") != std::string::npos);
  CHECK(echo.find("\"threads\": 4") != std::string::npos);
  CHECK(echo.find("\"age_reset\": \"network\"") != std::string::npos);
}

TEST_CASE("msne and stage commands") {
  MsneArgs msne_args;
  msne_args.n_aon = 2;
  msne_args.n_ton = 5;
  msne_args.age = 3.01;
  const std::string msne_out = cmd_msne(msne_args);
  CHECK(msne_out.find("tau_aon_star") != std::string::npos);
  CHECK(msne_out.find("0.25124") != std::string::npos);
  CHECK(msne_out.find("tau_ton_star") != std::string::npos);
  CHECK(msne_out.find("0.2\n") != std::string::npos);
  CHECK(msne_out.find("age_threshold") != std::string::npos);

  StageArgs stage_args;
  stage_args.n_aon = 2;
  stage_args.n_ton = 2;
  stage_args.age = 3.01;
  stage_args.tau_aon = 0.25124378109452735;
  stage_args.tau_ton = 0.5;
  stage_args.verify = true;
  const std::string stage_out = cmd_stage(stage_args);
  CHECK(stage_out.find("u_ton") != std::string::npos);
  CHECK(stage_out.find("0.14156") != std::string::npos);
  CHECK(stage_out.find("u_aon") != std::string::npos);
  CHECK(stage_out.find("oracle_max_dev") != std::string::npos);
}

TEST_CASE("simulate command writes the documented artifacts") {
  const std::filesystem::path dir = fresh_dir("simulate");
  SimulateJob job;
  job.spec.pairing = Pairing::aon_ton;
  job.spec.runs = 4;
  job.spec.stages = 30;
  job.spec.alphas = {0.5, 0.9};
  job.spec.master_seed = 3;
  job.out_dir = (dir / "out").string();
  job.trace_runs = 1;
  job.json_mirror = true;

  const auto written = cmd_simulate(job, 1);
  REQUIRE(written.size() == 7);  // 3 csv + 3 json mirrors + manifest

  const std::string aggregate = slurp(dir / "out" / "aggregate.csv");
  CHECK(aggregate.rfind("alpha,U_ton_mean,U_ton_se,U_aon_mean,U_aon_se\n",
                        0) == 0);
  const std::string frequencies = slurp(dir / "out" / "frequencies.csv");
  CHECK(frequencies.rfind(
            "scenario,freq_success_net1_per_node,freq_success_net2_per_node,"
            "freq_collision,freq_tau_zero_net1,freq_tau_zero_net2\n",
            0) == 0);
  CHECK(frequencies.find("aon-ton") != std::string::npos);
  const std::string trace = slurp(dir / "out" / "trace_run0.csv");
  CHECK(trace.rfind("stage,tau_net1,tau_net2,slot_type,u_ton,u_aon,avg_age\n",
                    0) == 0);
  CHECK(slurp(dir / "out" / "manifest.json").find("\"seed\": 3") !=
        std::string::npos);
  CHECK(std::filesystem::exists(dir / "out" / "aggregate.json"));
}

TEST_CASE("simulate command is byte-identical across thread counts") {
  const std::filesystem::path dir = fresh_dir("threads");
  SimulateJob job;
  job.spec.pairing = Pairing::aon_aon;
  job.spec.runs = 10;
  job.spec.stages = 40;
  job.spec.alphas = {0.9};
  job.spec.master_seed = 8;
  job.trace_runs = 1;
  job.full_precision = true;

  job.out_dir = (dir / "serial").string();
  cmd_simulate(job, 1);
  job.out_dir = (dir / "parallel").string();
  cmd_simulate(job, 8);

  for (const char* name :
       {"aggregate.csv", "frequencies.csv", "trace_run0.csv"}) {
    CHECK(slurp(dir / "serial" / name) == slurp(dir / "parallel" / name));
  }
}

TEST_CASE("reproduce command") {
  const std::filesystem::path dir = fresh_dir("reproduce");
  SimulateJob job;
  job.out_dir = dir.string();

  SUBCASE("unknown target") {
    CHECK_THROWS_AS(cmd_reproduce("fig9", job, 1), std::invalid_argument);
  }
  SUBCASE("fig2 is instant and carries the spot values") {
    const auto written = cmd_reproduce("fig2", job, 1);
    REQUIRE(written.size() == 2);  // csv + manifest
    const std::string csv = slurp(dir / "access_probability.csv");
    CHECK(csv.rfind("n_nodes,tau_ton_star,age_state,tau_aon_star\n", 0) == 0);
    CHECK(csv.find("0.00495") != std::string::npos);
    CHECK(csv.find("0.251244") != std::string::npos);
  }
  SUBCASE("fig3 table") {
    cmd_reproduce("fig3", job, 1);
    const std::string csv = slurp(dir / "stage_payoffs.csv");
    CHECK(csv.rfind("n_ton,n_aon,age_state,tau_aon_star,tau_ton_star,u_ton,"
                    "u_aon\n",
                    0) == 0);
    CHECK(csv.find("0.141561") != std::string::npos);
  }
  SUBCASE("table1 layout at tiny scale") {
    job.spec.runs = 3;
    job.spec.stages = 25;
    job.spec.alphas = {0.9};
    cmd_reproduce("table1", job, 1);
    const std::string csv = slurp(dir / "frequencies.csv");
    CHECK(csv.find("aon-aon") != std::string::npos);
    CHECK(csv.find("aon-ton") != std::string::npos);
    CHECK(csv.find("ton-ton") != std::string::npos);
  }
  SUBCASE("fig4 trace at tiny scale") {
    job.spec.stages = 25;
    job.spec.alphas = {0.9};
    cmd_reproduce("fig4", job, 1);
    const std::string csv = slurp(dir / "trace_run0.csv");
    CHECK(csv.rfind("stage,", 0) == 0);
  }
}
