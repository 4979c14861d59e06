#pragma once
// Command layer behind the CLI front end. Each command is a deterministic
// function of its RunConfig; the binary in tools/ only parses flags, opens
// the output stream and dispatches here.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lgsim/noise.hpp"

namespace lgsim {

// Stable exit-status contract.
enum ExitStatus : int {
  kExitOk = 0,
  kExitConfig = 1,
  kExitIo = 2,
  kExitCheck = 3,
};

struct RunConfig {
  std::string command;  // sweep | extrema | surface | oracle-check
  std::string channel;  // rtn | oun | unitary

  // Channel parameters; NaN means "not given".
  double a = nan_;
  double tau = nan_;
  double gamma_rtn = nan_;
  double big_gamma = nan_;
  double gamma = nan_;
  double omega = nan_;

  double theta = 1.5707963267948966;  // pi/2
  double phi = 0.0;
  double dt = nan_;  // fixed dt (surface over theta x phi)

  std::vector<double> theta_range;  // empty or {lo, hi}
  std::vector<double> phi_range;
  std::vector<double> dt_range;

  int steps = 500;
  int samples = 200;
  std::uint64_t seed = 12345;

  std::string format = "csv";  // csv | jsonl
  std::string out = "-";       // "-" = stdout

 private:
  static constexpr double nan_ = __builtin_nan("");
};

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Builds the channel from the config; throws ConfigError naming the missing
// or conflicting field.
NoiseChannel channel_from_config(const RunConfig& cfg);

// Joins a relative output path onto the directory given by the LGSIM_OUT_DIR
// environment value (passed in by the caller; may be null).
std::string resolve_output_path(const std::string& out, const char* env_dir);

// Runs cfg.command, writing data to `data` and human notes to `log`.
int run_command(const RunConfig& cfg, std::ostream& data, std::ostream& log);

// Opens the output stream per cfg.out (respecting LGSIM_OUT_DIR) and runs the
// command; returns the exit status.
int open_and_run(const RunConfig& cfg, std::ostream& log);

}  // namespace lgsim
