#include "lgsim/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <utility>

#include "lgsim/records.hpp"
#include "lgsim/sweep.hpp"

namespace lgsim {

namespace {

bool given(double v) { return !std::isnan(v); }

std::optional<std::pair<double, double>> range_pair(const std::vector<double>& r,
                                                    const char* name) {
  if (r.empty()) return std::nullopt;
  if (r.size() != 2) throw ConfigError(std::string(name) + " needs exactly two values");
  if (!(r[1] > r[0])) throw ConfigError(std::string(name) + " needs hi > lo");
  return std::make_pair(r[0], r[1]);
}

void require_steps(int steps) {
  if (steps < 2) throw ConfigError("steps must be >= 2 for a ranged axis");
}

void write_records(std::ostream& data, const std::string& format,
                   const std::vector<OutputRecord>& recs) {
  if (format == "jsonl")
    write_jsonl(data, recs);
  else
    write_csv(data, recs);
}

const char* axis_name(const NoiseChannel& ch) {
  return std::holds_alternative<RtnParams>(ch) ? "nu" : "t";
}

int cmd_sweep(const RunConfig& cfg, std::ostream& data, std::ostream& log) {
  const NoiseChannel ch = channel_from_config(cfg);
  const auto dt = range_pair(cfg.dt_range, "dt-range");
  if (!dt) throw ConfigError("sweep requires --dt-range");
  if (!(dt->first >= 0.0)) throw ConfigError("dt-range must be non-negative");
  require_steps(cfg.steps);

  const GridSpec grid{Range::open_closed(dt->first, dt->second, cfg.steps),
                      Range::fixed(cfg.theta), Range::fixed(cfg.phi)};
  const std::vector<LGResult> results = evaluate_grid(ch, grid);
  std::vector<OutputRecord> recs;
  recs.reserve(results.size());
  for (const LGResult& r : results) recs.push_back(make_record(ch, r));
  write_records(data, cfg.format, recs);

  double best = recs.empty() ? 0.0 : recs[0].k3;
  for (const OutputRecord& r : recs) best = std::max(best, r.k3);
  log << "sweep: " << recs.size() << " records, max k3 = " << format_double(best) << '\n';
  return kExitOk;
}

int cmd_extrema(const RunConfig& cfg, std::ostream& data, std::ostream& log) {
  const NoiseChannel ch = channel_from_config(cfg);
  const ExtremumCondition cond = ExtremumCondition::for_channel(ch);

  Interval bracket = default_bracket(cond);
  if (const auto dt = range_pair(cfg.dt_range, "dt-range")) {
    double lo = dt->first;
    double hi = dt->second;
    if (const auto* p = std::get_if<RtnParams>(&ch)) {
      lo *= p->gamma;
      hi *= p->gamma;
    }
    bracket = Interval{lo > 0.0 ? lo : hi * 1e-9, hi};
  }

  const std::vector<ExtremumRoot> roots = solve_extremum(cond, bracket);
  const char* axis = axis_name(ch);

  if (cfg.format == "jsonl") {
    for (const ExtremumRoot& r : roots) {
      data << "{\"axis\":\"" << axis << "\",\"root\":" << format_double(r.x)
           << ",\"residual\":" << format_double(r.residual)
           << ",\"k3\":" << format_double(r.k3_value)
           << ",\"k3_slope\":" << format_double(r.k3_slope) << ",\"origin\":\""
           << (r.origin == RootOrigin::ConditionEquation ? "condition" : "sin-family")
           << "\"}\n";
    }
  } else {
    data << "axis,root,residual,k3,k3_slope,origin\n";
    for (const ExtremumRoot& r : roots) {
      data << axis << ',' << format_double(r.x) << ',' << format_double(r.residual) << ','
           << format_double(r.k3_value) << ',' << format_double(r.k3_slope) << ','
           << (r.origin == RootOrigin::ConditionEquation ? "condition" : "sin-family") << '\n';
    }
  }
  if (roots.empty()) {
    data << "# no extrema in bracket (" << format_double(bracket.lo) << ", "
         << format_double(bracket.hi) << "]\n";
    log << "extrema: no extrema found in bracket\n";
  } else {
    log << "extrema: " << roots.size() << " roots\n";
  }
  return kExitOk;
}

int cmd_surface(const RunConfig& cfg, std::ostream& data, std::ostream& log) {
  const NoiseChannel ch = channel_from_config(cfg);
  const auto phi = range_pair(cfg.phi_range, "phi-range");
  if (!phi) throw ConfigError("surface requires --phi-range");
  const auto theta = range_pair(cfg.theta_range, "theta-range");
  const auto dtr = range_pair(cfg.dt_range, "dt-range");
  if (static_cast<bool>(theta) == static_cast<bool>(dtr))
    throw ConfigError("surface needs exactly one of --theta-range or --dt-range");
  require_steps(cfg.steps);

  GridSpec grid;
  grid.phi = Range::closed(phi->first, phi->second, cfg.steps);
  if (theta) {
    if (!given(cfg.dt) || !(cfg.dt > 0.0))
      throw ConfigError("surface over theta x phi requires a positive --dt");
    grid.dt = Range::fixed(cfg.dt);
    grid.theta = Range::closed(theta->first, theta->second, cfg.steps);
  } else {
    if (!(dtr->first >= 0.0)) throw ConfigError("dt-range must be non-negative");
    grid.dt = Range::open_closed(dtr->first, dtr->second, cfg.steps);
    grid.theta = Range::fixed(cfg.theta);
  }

  // The surface runs the full measurement chain so the phi dependence of the
  // projectors is actually exercised (the closed form never sees phi).
  const std::vector<LGResult> results = evaluate_grid_chain(ch, grid, DensityMatrix::plus());
  std::vector<OutputRecord> recs;
  recs.reserve(results.size());
  int best = 0;
  for (int i = 0; i < static_cast<int>(results.size()); ++i) {
    recs.push_back(make_record(ch, results[i]));
    if (results[i].k3 > results[best].k3) best = i;
  }
  write_records(data, cfg.format, recs);

  const OutputRecord& b = recs[best];
  if (cfg.format == "jsonl") {
    data << "{\"argmax\":{\"dt\":" << format_double(b.dt) << ",\"theta\":"
         << format_double(b.theta) << ",\"phi\":" << format_double(b.phi)
         << ",\"k3\":" << format_double(b.k3) << "}}\n";
  } else {
    data << "# argmax dt=" << format_double(b.dt) << " theta=" << format_double(b.theta)
         << " phi=" << format_double(b.phi) << " k3=" << format_double(b.k3) << '\n';
  }
  log << "surface: " << recs.size() << " records, argmax theta = " << format_double(b.theta)
      << ", k3 = " << format_double(b.k3) << '\n';
  return kExitOk;
}

int cmd_oracle_check(const RunConfig& cfg, std::ostream& data, std::ostream& log) {
  const NoiseChannel ch = channel_from_config(cfg);
  if (cfg.samples < 0) throw ConfigError("samples must be >= 0");
  const std::vector<OracleTuple> tuples = random_tuples(ch, cfg.samples, cfg.seed);
  const OracleReport report = oracle_scan(ch, tuples);
  constexpr double threshold = 1e-9;
  const bool pass = report.max_dev_closed < threshold;

  data << "samples=" << report.samples << '\n';
  data << "max_abs_deviation_chain_vs_closed=" << format_double(report.max_dev_closed) << '\n';
  data << "max_abs_deviation_chain_vs_reduced=" << format_double(report.max_dev_reduced) << '\n';
  data << "threshold=" << format_double(threshold) << '\n';
  if (report.worst_index >= 0) {
    const OracleTuple& w = tuples[report.worst_index];
    data << "worst theta=" << format_double(w.theta) << " phi=" << format_double(w.phi)
         << " ti=" << format_double(w.ti) << " tj=" << format_double(w.tj) << '\n';
  }
  data << "status=" << (pass ? "pass" : "fail") << '\n';
  log << "oracle-check: max deviation " << format_double(report.max_dev_closed) << " over "
      << report.samples << " samples -> " << (pass ? "pass" : "fail") << '\n';
  return pass ? kExitOk : kExitCheck;
}

}  // namespace

NoiseChannel channel_from_config(const RunConfig& cfg) {
  if (cfg.channel == "rtn") {
    if (!given(cfg.a)) throw ConfigError("rtn channel requires --a");
    const bool has_tau = given(cfg.tau);
    const bool has_gamma = given(cfg.gamma_rtn);
    if (has_tau == has_gamma)
      throw ConfigError("rtn channel requires exactly one of --tau or --gamma-rtn");
    return has_tau ? RtnParams::from_tau(cfg.a, cfg.tau) : RtnParams(cfg.a, cfg.gamma_rtn);
  }
  if (cfg.channel == "oun") {
    if (!given(cfg.big_gamma)) throw ConfigError("oun channel requires --Gamma");
    if (!given(cfg.gamma)) throw ConfigError("oun channel requires --gamma");
    return OunParams(cfg.big_gamma, cfg.gamma);
  }
  if (cfg.channel == "unitary") {
    if (!given(cfg.omega)) throw ConfigError("unitary channel requires --Omega");
    return UnitaryParams(cfg.omega);
  }
  throw ConfigError("unknown channel '" + cfg.channel + "' (want rtn, oun or unitary)");
}

std::string resolve_output_path(const std::string& out, const char* env_dir) {
  if (out.empty() || out == "-") return out;
  if (out.front() == '/') return out;
  if (env_dir == nullptr || *env_dir == '\0') return out;
  std::string dir(env_dir);
  if (dir.back() != '/') dir += '/';
  return dir + out;
}

int run_command(const RunConfig& cfg, std::ostream& data, std::ostream& log) {
  try {
    if (cfg.format != "csv" && cfg.format != "jsonl")
      throw ConfigError("unknown format '" + cfg.format + "' (want csv or jsonl)");
    int rc;
    if (cfg.command == "sweep")
      rc = cmd_sweep(cfg, data, log);
    else if (cfg.command == "extrema")
      rc = cmd_extrema(cfg, data, log);
    else if (cfg.command == "surface")
      rc = cmd_surface(cfg, data, log);
    else if (cfg.command == "oracle-check")
      rc = cmd_oracle_check(cfg, data, log);
    else
      throw ConfigError("unknown command '" + cfg.command + "'");
    data.flush();
    if (rc == kExitOk && data.fail()) {
      log << "error: write failure on output stream\n";
      return kExitIo;
    }
    return rc;
  } catch (const std::invalid_argument& e) {
    log << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
}

int open_and_run(const RunConfig& cfg, std::ostream& log) {
  if (cfg.out.empty() || cfg.out == "-") return run_command(cfg, std::cout, log);
  const std::string path = resolve_output_path(cfg.out, std::getenv("LGSIM_OUT_DIR"));
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    log << "error: cannot open output file '" << path << "'\n";
    return kExitIo;
  }
  const int rc = run_command(cfg, file, log);
  file.flush();
  if (rc == kExitOk && file.fail()) {
    log << "error: write failure on '" << path << "'\n";
    return kExitIo;
  }
  return rc;
}

}  // namespace lgsim
