#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "cli_app.hpp"
#include "lgsim/records.hpp"

using namespace lgsim;
constexpr double pi = std::numbers::pi;

namespace {

struct RunResult {
  int code;
  std::string data;
  std::string log;
};

RunResult run(const RunConfig& cfg) {
  std::ostringstream data, log;
  const int code = run_command(cfg, data, log);
  return {code, data.str(), log.str()};
}

int parse_args(RunConfig& cfg, const std::vector<std::string>& args) {
  CLI::App app{"lgsim"};
  build_cli(app, cfg);
  std::vector<const char*> argv{"lgsim"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError&) {
    return kExitConfig;
  }
  return kExitOk;
}

RunConfig fig1a_config() {
  RunConfig cfg;
  cfg.command = "sweep";
  cfg.channel = "rtn";
  cfg.a = 0.05;
  cfg.tau = 500.0;
  cfg.dt_range = {0.0, 3000.0};
  cfg.steps = 500;
  return cfg;
}

}  // namespace

TEST_CASE("channel construction from config") {
  RunConfig cfg;
  cfg.channel = "rtn";
  CHECK_THROWS_AS(channel_from_config(cfg), ConfigError);  // missing a
  cfg.a = 0.05;
  CHECK_THROWS_AS(channel_from_config(cfg), ConfigError);  // neither tau nor gamma-rtn
  cfg.tau = 500.0;
  CHECK(std::get<RtnParams>(channel_from_config(cfg)).gamma == Catch::Approx(0.001));
  cfg.gamma_rtn = 0.001;
  CHECK_THROWS_AS(channel_from_config(cfg), ConfigError);  // both given

  RunConfig oun;
  oun.channel = "oun";
  oun.big_gamma = 0.1;
  CHECK_THROWS_AS(channel_from_config(oun), ConfigError);
  oun.gamma = 0.01;
  CHECK(std::get<OunParams>(channel_from_config(oun)).gamma == 0.01);

  RunConfig bad;
  bad.channel = "thermal";
  CHECK_THROWS_AS(channel_from_config(bad), ConfigError);
}

TEST_CASE("sweep writes one record per grid point and finds the violation") {
  const RunResult r = run(fig1a_config());
  REQUIRE(r.code == kExitOk);
  std::istringstream is(r.data);
  const auto rows = read_csv(is);
  REQUIRE(rows.size() == 500);
  double best = -10.0;
  for (const OutputRecord& row : rows) best = std::max(best, row.k3);
  CHECK(best > 1.0);
  CHECK(rows[0].time_axis == "nu");
}

TEST_CASE("sweep is byte-deterministic") {
  const RunResult a = run(fig1a_config());
  const RunResult b = run(fig1a_config());
  CHECK(a.code == kExitOk);
  CHECK(a.data == b.data);

  RunConfig jsonl = fig1a_config();
  jsonl.format = "jsonl";
  const RunResult c = run(jsonl);
  const RunResult d = run(jsonl);
  CHECK(c.code == kExitOk);
  CHECK(c.data == d.data);
  std::istringstream is(c.data);
  CHECK(read_jsonl(is).size() == 500);
}

TEST_CASE("sweep at vanishing spacings yields K3 near 1") {
  RunConfig cfg = fig1a_config();
  cfg.dt_range = {0.0, 2e-9};
  cfg.steps = 2;
  const RunResult r = run(cfg);
  REQUIRE(r.code == kExitOk);
  std::istringstream is(r.data);
  for (const OutputRecord& row : read_csv(is)) CHECK(row.k3 == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("sweep config validation failures exit with the config status") {
  RunConfig cfg = fig1a_config();
  cfg.dt_range.clear();
  CHECK(run(cfg).code == kExitConfig);
  cfg = fig1a_config();
  cfg.steps = 1;
  CHECK(run(cfg).code == kExitConfig);
  cfg = fig1a_config();
  cfg.format = "xml";
  CHECK(run(cfg).code == kExitConfig);
  cfg = fig1a_config();
  cfg.command = "simulate";
  CHECK(run(cfg).code == kExitConfig);
}

TEST_CASE("extrema command renders root rows") {
  RunConfig cfg;
  cfg.command = "extrema";
  cfg.channel = "oun";
  cfg.big_gamma = 0.1;
  cfg.gamma = 0.01;
  const RunResult r = run(cfg);
  REQUIRE(r.code == kExitOk);
  std::istringstream is(r.data);
  std::string line;
  std::getline(is, line);
  CHECK(line == "axis,root,residual,k3,k3_slope,origin");
  int rows = 0;
  while (std::getline(is, line))
    if (!line.empty() && line[0] != '#') ++rows;
  CHECK(rows == 1);
}

TEST_CASE("extrema command converts dt ranges to the nu axis for rtn") {
  RunConfig cfg;
  cfg.command = "extrema";
  cfg.channel = "rtn";
  cfg.a = 0.05;
  cfg.gamma_rtn = 0.001;
  cfg.dt_range = {0.0, 1000.0};  // nu in (0, 1]
  const RunResult r = run(cfg);
  REQUIRE(r.code == kExitOk);
  std::istringstream is(r.data);
  std::string line;
  std::getline(is, line);
  int condition_rows = 0, sin_rows = 0;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    CHECK(line.rfind("nu,", 0) == 0);
    if (line.find(",condition") != std::string::npos) ++condition_rows;
    if (line.find(",sin-family") != std::string::npos) ++sin_rows;
  }
  CHECK(condition_rows > 5);
  CHECK(sin_rows > 5);
}

TEST_CASE("extrema command reports an empty bracket as a note, exit 0") {
  RunConfig cfg;
  cfg.command = "extrema";
  cfg.channel = "rtn";
  cfg.a = 0.05;
  cfg.tau = 0.5;                  // Markovian, gamma = 1
  cfg.dt_range = {10.0, 20.0};    // past the single crossing
  const RunResult r = run(cfg);
  REQUIRE(r.code == kExitOk);
  CHECK(r.data.find("# no extrema") != std::string::npos);
  CHECK(r.log.find("no extrema") != std::string::npos);
}

TEST_CASE("extrema command rejects the unitary baseline") {
  RunConfig cfg;
  cfg.command = "extrema";
  cfg.channel = "unitary";
  cfg.omega = 1.0;
  CHECK(run(cfg).code == kExitConfig);
}

TEST_CASE("surface over theta x phi reports the +-pi/2 argmax and flat phi") {
  RunConfig cfg;
  cfg.command = "surface";
  cfg.channel = "rtn";
  cfg.a = 0.05;
  cfg.tau = 500.0;
  cfg.dt = 10.5;  // near the first K3 peak
  cfg.theta_range = {-pi, pi};
  cfg.phi_range = {-pi / 2, pi / 2};
  cfg.steps = 37;
  const RunResult r = run(cfg);
  REQUIRE(r.code == kExitOk);
  std::istringstream is(r.data);
  const auto rows = read_csv(is);
  REQUIRE(rows.size() == 37u * 37u);

  int best = 0;
  for (int i = 1; i < static_cast<int>(rows.size()); ++i)
    if (rows[i].k3 > rows[best].k3) best = i;
  const double cell = 2.0 * pi / 36.0;
  CHECK(std::abs(std::abs(rows[best].theta) - pi / 2) < cell + 1e-12);
  CHECK(r.data.find("# argmax") != std::string::npos);

  // phi variation at fixed theta row
  for (double theta_probe : {rows[best].theta, 0.0}) {
    double lo = 1e300, hi = -1e300;
    for (const OutputRecord& row : rows) {
      if (row.theta != theta_probe) continue;
      lo = std::min(lo, row.k3);
      hi = std::max(hi, row.k3);
    }
    CHECK(hi - lo < 1e-10);
  }

  // theta = 0 row is constant 1
  for (const OutputRecord& row : rows)
    if (row.theta == 0.0) CHECK(row.k3 == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("surface validation") {
  RunConfig cfg;
  cfg.command = "surface";
  cfg.channel = "rtn";
  cfg.a = 0.05;
  cfg.tau = 500.0;
  CHECK(run(cfg).code == kExitConfig);  // no ranges at all
  cfg.phi_range = {-pi / 2, pi / 2};
  CHECK(run(cfg).code == kExitConfig);  // neither theta-range nor dt-range
  cfg.theta_range = {-pi, pi};
  cfg.dt_range = {0.0, 10.0};
  CHECK(run(cfg).code == kExitConfig);  // both
  cfg.dt_range.clear();
  CHECK(run(cfg).code == kExitConfig);  // theta mode without --dt
  cfg.dt = 10.5;
  cfg.steps = 5;
  CHECK(run(cfg).code == kExitOk);
}

TEST_CASE("oracle-check passes and is seed-deterministic") {
  RunConfig cfg;
  cfg.command = "oracle-check";
  cfg.channel = "rtn";
  cfg.a = 0.05;
  cfg.gamma_rtn = 0.001;
  cfg.samples = 200;
  const RunResult a = run(cfg);
  REQUIRE(a.code == kExitOk);
  CHECK(a.data.find("status=pass") != std::string::npos);
  const RunResult b = run(cfg);
  CHECK(a.data == b.data);

  cfg.samples = 0;
  const RunResult trivial = run(cfg);
  CHECK(trivial.code == kExitOk);
  CHECK(trivial.data.find("samples=0") != std::string::npos);

  cfg.channel = "unitary";
  cfg.omega = 1.0;
  cfg.samples = 100;
  CHECK(run(cfg).code == kExitOk);
}

TEST_CASE("output path resolution honors the environment directory") {
  CHECK(resolve_output_path("-", "/data") == "-");
  CHECK(resolve_output_path("/abs/x.csv", "/data") == "/abs/x.csv");
  CHECK(resolve_output_path("x.csv", "/data") == "/data/x.csv");
  CHECK(resolve_output_path("x.csv", "/data/") == "/data/x.csv");
  CHECK(resolve_output_path("x.csv", nullptr) == "x.csv");
  CHECK(resolve_output_path("x.csv", "") == "x.csv");
}

TEST_CASE("unwritable output path exits with the io status") {
  RunConfig cfg = fig1a_config();
  cfg.out = "/nonexistent-dir/out.csv";
  std::ostringstream log;
  CHECK(open_and_run(cfg, log) == kExitIo);
  CHECK(log.str().find("cannot open") != std::string::npos);
}

TEST_CASE("file output round-trips through open_and_run") {
  RunConfig cfg = fig1a_config();
  cfg.steps = 10;
  cfg.out = "/tmp/lgsim_test_sweep_out.csv";
  std::ostringstream log;
  REQUIRE(open_and_run(cfg, log) == kExitOk);
  std::ifstream is(cfg.out);
  REQUIRE(is.good());
  CHECK(read_csv(is).size() == 10);
  std::remove(cfg.out.c_str());
}

TEST_CASE("flag parsing fills the config") {
  RunConfig cfg;
  REQUIRE(parse_args(cfg, {"sweep", "--channel", "rtn", "--a", "0.05", "--tau", "500",
                           "--dt-range", "0", "3000", "--steps", "250", "--seed", "42"}) == kExitOk);
  CHECK(cfg.command == "sweep");
  CHECK(cfg.channel == "rtn");
  CHECK(cfg.a == 0.05);
  CHECK(cfg.tau == 500.0);
  REQUIRE(cfg.dt_range.size() == 2);
  CHECK(cfg.dt_range[1] == 3000.0);
  CHECK(cfg.steps == 250);
  CHECK(cfg.seed == 42);
}

TEST_CASE("unknown flags and unknown channels are parse errors") {
  RunConfig cfg;
  CHECK(parse_args(cfg, {"sweep", "--channel", "rtn", "--bogus", "1"}) == kExitConfig);
  RunConfig cfg2;
  CHECK(parse_args(cfg2, {"sweep", "--channel", "maser"}) == kExitConfig);
  RunConfig cfg3;
  CHECK(parse_args(cfg3, {"--channel", "rtn"}) == kExitConfig);  // missing subcommand
}

TEST_CASE("config file supplies defaults, flags win, unknown keys rejected") {
  const std::string path = "/tmp/lgsim_test_config.ini";
  {
    std::ofstream f(path);
    f << "channel=rtn\n"
      << "a=0.05\n"
      << "tau=500\n"
      << "steps=100\n";
  }
  RunConfig cfg;
  REQUIRE(parse_args(cfg, {"sweep", "--config", path, "--steps", "7"}) == kExitOk);
  CHECK(cfg.channel == "rtn");
  CHECK(cfg.tau == 500.0);
  CHECK(cfg.steps == 7);  // command line beats the file

  {
    std::ofstream f(path);
    f << "channel=rtn\nnonsense_key=1\n";
  }
  RunConfig cfg2;
  CHECK(parse_args(cfg2, {"sweep", "--config", path}) == kExitConfig);
  std::remove(path.c_str());
}

TEST_CASE("Gamma and gamma are distinct options") {
  RunConfig cfg;
  REQUIRE(parse_args(cfg, {"sweep", "--channel", "oun", "--Gamma", "0.1", "--gamma", "0.01",
                           "--dt-range", "0", "400"}) == kExitOk);
  CHECK(cfg.big_gamma == 0.1);
  CHECK(cfg.gamma == 0.01);
}
