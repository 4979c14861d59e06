#pragma once
// CLI11 wiring for the lgsim binary, kept in a header so the option/config
// behavior is testable without spawning a process.

#include <CLI11.hpp>

#include "lgsim/commands.hpp"

namespace lgsim {

inline void build_cli(CLI::App& app, RunConfig& cfg) {
  app.description("Leggett-Garg temporal-correlation simulator for a qubit under dephasing noise");
  app.set_config("--config", "", "read options from a key=value config file (flags win)");
  app.allow_config_extras(false);
  app.require_subcommand(1);

  app.add_option("--channel", cfg.channel, "noise channel: rtn, oun or unitary")
      ->check(CLI::IsMember({"rtn", "oun", "unitary"}));
  app.add_option("--a", cfg.a, "rtn coupling strength");
  app.add_option("--tau", cfg.tau, "rtn fluctuator correlation time (gamma = 1/(2 tau))");
  app.add_option("--gamma-rtn", cfg.gamma_rtn, "rtn switching rate (alternative to --tau)");
  app.add_option("--Gamma", cfg.big_gamma, "oun effective relaxation rate");
  app.add_option("--gamma", cfg.gamma, "oun noise bandwidth");
  app.add_option("--Omega", cfg.omega, "unitary level splitting");

  app.add_option("--theta", cfg.theta, "detector angle theta (default pi/2)");
  app.add_option("--phi", cfg.phi, "detector angle phi (default 0)");
  app.add_option("--dt", cfg.dt, "fixed measurement spacing (surface over theta x phi)");
  app.add_option("--theta-range", cfg.theta_range, "theta range: lo hi")->expected(2);
  app.add_option("--phi-range", cfg.phi_range, "phi range: lo hi")->expected(2);
  app.add_option("--dt-range", cfg.dt_range, "dt range (lo, hi], raw channel time")->expected(2);
  app.add_option("--steps", cfg.steps, "points per ranged axis (default 500)");
  app.add_option("--samples", cfg.samples, "random tuples for oracle-check (default 200)");
  app.add_option("--seed", cfg.seed, "seed for random-state draws");

  app.add_option("--out", cfg.out, "output file, '-' for stdout; relative paths land in $LGSIM_OUT_DIR");
  app.add_option("--format", cfg.format, "output format: csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}));

  const auto add_cmd = [&](const char* name, const char* desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    sub->callback([&cfg, name]() { cfg.command = name; });
    return sub;
  };
  add_cmd("sweep", "K3 and K3' over a dt grid at fixed detector angles");
  add_cmd("extrema", "roots of the extremum condition with stationarity checks");
  add_cmd("surface", "K3 over (theta or dt) x phi via the full measurement chain");
  add_cmd("oracle-check", "randomized chain-vs-closed-form cross check");
}

}  // namespace lgsim
