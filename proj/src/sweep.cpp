#include "lgsim/sweep.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace lgsim {

namespace {

template <class F>
void run_cells_serial(int n, F&& f) {
  for (int i = 0; i < n; ++i) f(i);
}

template <class F>
void run_cells_parallel(int n, F&& f) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) f(i);
#else
  for (int i = 0; i < n; ++i) f(i);
#endif
}

template <class F>
void run_cells(ExecutionPolicy policy, int n, F&& f) {
  if (policy == ExecutionPolicy::Parallel)
    run_cells_parallel(n, f);
  else
    run_cells_serial(n, f);
}

// Golden-section maximization; returns (x, f(x)) once the bracket shrinks to
// tol_abs.
template <class F>
std::pair<double, double> golden_max(F&& f, double a, double b, double tol_abs) {
  const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol_abs) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return fc > fd ? std::make_pair(c, fc) : std::make_pair(d, fd);
}

int count_runs_above(const std::vector<double>& values, double threshold) {
  int count = 0;
  bool inside = false;
  for (double v : values) {
    const bool above = v > threshold;
    if (above && !inside) ++count;
    inside = above;
  }
  return count;
}

double to_axis(const NoiseChannel& ch, double dt) {
  if (const auto* p = std::get_if<RtnParams>(&ch)) return p->gamma * dt;
  return dt;
}

// Residual against the nearest stationary-point family at the given axis
// location; NaN for the unitary baseline.
double family_residual(const NoiseChannel& ch, double axis_x) {
  if (std::holds_alternative<UnitaryParams>(ch)) return std::numeric_limits<double>::quiet_NaN();
  const ExtremumCondition cond = ExtremumCondition::for_channel(ch);
  double r = std::abs(condition_lhs(cond, axis_x) - 1.0);
  if (cond.kind == ConditionKind::RtnNonMarkov) {
    const RtnParams& p = std::get<RtnParams>(ch);
    const double ratio = 2.0 * p.a / p.gamma;
    const double m = std::sqrt(ratio * ratio - 1.0);
    r = std::min(r, std::abs(std::sin(m * axis_x)));
  }
  return r;
}

double axis_slope(const NoiseChannel& ch, double dt) {
  if (std::holds_alternative<UnitaryParams>(ch)) {
    const double omega = std::get<UnitaryParams>(ch).omega;
    const double h = 1e-5 / std::max(1.0, omega);
    const auto f = [&](double v) { return lg_bracket(ch, v); };
    return (-f(dt + 2 * h) + 8 * f(dt + h) - 8 * f(dt - h) + f(dt - 2 * h)) / (12 * h);
  }
  const ExtremumCondition cond = ExtremumCondition::for_channel(ch);
  return k3_slope_fd(cond, to_axis(ch, dt));
}

// Golden search resolves a quadratic maximum only to about sqrt(eps / K3''),
// leaving a residual slope of order 1e-6 for strongly oscillating channels.
// A few secant steps on the finite-difference slope pin the stationary point
// itself.
double refine_stationary(const NoiseChannel& ch, double x, double lo, double hi) {
  double x_prev = x * (1.0 + 1e-8) + 1e-12;
  double s_prev = axis_slope(ch, x_prev);
  double best = x;
  for (int i = 0; i < 5; ++i) {
    const double s = axis_slope(ch, best);
    if (std::abs(s) < 1e-10 || s == s_prev) break;
    const double next = best - s * (best - x_prev) / (s - s_prev);
    if (!(next > lo) || !(next < hi)) break;
    x_prev = best;
    s_prev = s;
    best = next;
  }
  return best;
}

}  // namespace

Range Range::closed(double lo, double hi, int steps) {
  if (!(hi > lo) || steps < 2) throw std::invalid_argument("closed range needs hi > lo and steps >= 2");
  return Range{lo, hi, steps, false};
}

Range Range::open_closed(double lo, double hi, int steps) {
  if (!(hi > lo) || steps < 1) throw std::invalid_argument("open range needs hi > lo and steps >= 1");
  return Range{lo, hi, steps, true};
}

Range Range::fixed(double v) { return Range{v, v, 1, false}; }

std::vector<LGResult> evaluate_grid(const NoiseChannel& ch, const GridSpec& grid,
                                    ExecutionPolicy policy) {
  const int n = grid.cells();
  std::vector<LGResult> out(n);
  const int n_theta = grid.theta.steps;
  const int n_phi = grid.phi.steps;
  run_cells(policy, n, [&](int i) {
    const int i_phi = i % n_phi;
    const int i_theta = (i / n_phi) % n_theta;
    const int i_dt = i / (n_phi * n_theta);
    out[i] = lg_parameters(ch, grid.theta.at(i_theta), grid.phi.at(i_phi), grid.dt.at(i_dt));
  });
  return out;
}

std::vector<LGResult> evaluate_grid_chain(const NoiseChannel& ch, const GridSpec& grid,
                                          const DensityMatrix& rho0, ExecutionPolicy policy) {
  const int n = grid.cells();
  std::vector<LGResult> out(n);
  const int n_theta = grid.theta.steps;
  const int n_phi = grid.phi.steps;
  const RegimeTag regime = classify_regime(ch);
  run_cells(policy, n, [&](int i) {
    const int i_phi = i % n_phi;
    const int i_theta = (i / n_phi) % n_theta;
    const int i_dt = i / (n_phi * n_theta);
    const double dt = grid.dt.at(i_dt);
    const MeasurementSetting setting{grid.theta.at(i_theta), grid.phi.at(i_phi)};
    const double c01 = correlator_chain(ch, setting, rho0, 0.0, dt);
    const double c12 = correlator_chain(ch, setting, rho0, dt, 2.0 * dt);
    const double c02 = correlator_chain(ch, setting, rho0, 0.0, 2.0 * dt);
    LGResult r;
    r.dt = dt;
    r.theta = setting.theta;
    r.phi = setting.phi;
    r.triple = CorrelatorTriple{c01, c12, c02, 0.0, dt, 2.0 * dt};
    r.k3 = c01 + c12 - c02;
    r.k3_prime = -c01 - c12 - c02;
    r.regime = regime;
    out[i] = r;
  });
  return out;
}

SweepReport max_k3(const NoiseChannel& ch, Range dt, Range theta, Range phi,
                   ExecutionPolicy policy) {
  if (dt.steps < 2) throw std::invalid_argument("dt range needs at least 2 steps");
  SweepReport report;
  report.grid = GridSpec{dt, theta, phi};
  report.records = evaluate_grid(ch, report.grid, policy);

  int best = 0;
  for (int i = 1; i < static_cast<int>(report.records.size()); ++i)
    if (report.records[i].k3 > report.records[best].k3) best = i;
  const int n_phi = phi.steps;
  const int n_theta = theta.steps;
  const int best_theta_i = (best / n_phi) % n_theta;
  const int best_phi_i = best % n_phi;
  report.best_theta = theta.at(best_theta_i);
  report.best_phi = phi.at(best_phi_i);

  std::vector<double> line(dt.steps);
  for (int i = 0; i < dt.steps; ++i)
    line[i] = report.records[(i * n_theta + best_theta_i) * n_phi + best_phi_i].k3;
  report.violation_count = count_runs_above(line, 1.0);

  const auto k3_at = [&](double dtv) {
    return lg_parameters(ch, report.best_theta, report.best_phi, dtv).k3;
  };

  report.best_dt = dt.at(best / (n_phi * n_theta));
  report.best_k3 = report.records[best].k3;
  const double sin_best = std::sin(report.best_theta);
  for (int i = 1; i + 1 < dt.steps; ++i) {
    if (line[i] >= line[i - 1] && line[i] >= line[i + 1] &&
        (line[i] > line[i - 1] || line[i] > line[i + 1])) {
      auto [x, fx] = golden_max(k3_at, dt.at(i - 1), dt.at(i + 1), 1e-10);
      const double refined = refine_stationary(ch, x, dt.at(i - 1), dt.at(i + 1));
      const double f_refined = k3_at(refined);
      if (f_refined >= fx - 1e-12) {
        x = refined;
        fx = f_refined;
      }
      Maximum m;
      m.dt = x;
      m.k3 = fx;
      m.slope = std::abs(axis_slope(ch, x));
      m.condition_residual = (sin_best * sin_best > 1e-12)
                                 ? family_residual(ch, to_axis(ch, x))
                                 : std::numeric_limits<double>::quiet_NaN();
      report.maxima.push_back(m);
      if (fx > report.best_k3) {
        report.best_k3 = fx;
        report.best_dt = x;
      }
    }
  }
  return report;
}

CensusResult violation_census(const NoiseChannel& ch, Range dt, ExecutionPolicy policy) {
  if (dt.steps < 1) throw std::invalid_argument("empty dt range");
  std::vector<double> k3(dt.steps);
  std::vector<double> k3p(dt.steps);
  run_cells(policy, dt.steps, [&](int i) {
    const double v = dt.at(i);
    k3[i] = lg_bracket(ch, v);
    k3p[i] = lg_bracket_prime(ch, v);
  });
  CensusResult out;
  out.count_k3 = count_runs_above(k3, 1.0);
  out.count_k3_prime = count_runs_above(k3p, 1.0);
  for (int i = 0; i < dt.steps; ++i)
    if (k3[i] > 1.0 && k3p[i] > 1.0) out.simultaneous_violation = true;
  return out;
}

std::vector<OracleTuple> random_tuples(const NoiseChannel& ch, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double horizon = natural_time_scale(ch);
  constexpr double pi = 3.14159265358979323846;

  std::vector<OracleTuple> tuples;
  tuples.reserve(n);
  for (int i = 0; i < n; ++i) {
    double x = gauss(rng), y = gauss(rng), z = gauss(rng);
    const double norm = std::sqrt(x * x + y * y + z * z);
    const double radius = std::cbrt(unit(rng));
    if (norm > 0.0) {
      x *= radius / norm;
      y *= radius / norm;
      z *= radius / norm;
    } else {
      x = y = z = 0.0;
    }
    const double theta = -pi + 2.0 * pi * unit(rng);
    const double phi = -0.5 * pi + pi * unit(rng);
    const double ta = horizon * unit(rng);
    const double tb = horizon * unit(rng);
    tuples.push_back(OracleTuple{DensityMatrix::from_bloch(x, y, z), theta, phi,
                                 std::min(ta, tb), std::max(ta, tb)});
  }
  return tuples;
}

OracleReport oracle_scan(const NoiseChannel& ch, const std::vector<OracleTuple>& tuples,
                         ExecutionPolicy policy) {
  const int n = static_cast<int>(tuples.size());
  std::vector<double> dev_closed(n, 0.0);
  std::vector<double> dev_reduced(n, 0.0);
  run_cells(policy, n, [&](int i) {
    const OracleTuple& t = tuples[i];
    const MeasurementSetting setting{t.theta, t.phi};
    const double chain = correlator_chain(ch, setting, t.rho0, t.ti, t.tj);
    dev_closed[i] = std::abs(chain - correlator_closed(ch, t.theta, t.ti, t.tj));
    dev_reduced[i] = std::abs(chain - correlator_reduced(ch, setting, t.rho0, t.ti, t.tj));
  });
  OracleReport report;
  report.samples = n;
  for (int i = 0; i < n; ++i) {
    if (dev_closed[i] > report.max_dev_closed) {
      report.max_dev_closed = dev_closed[i];
      report.worst_index = i;
    }
    report.max_dev_reduced = std::max(report.max_dev_reduced, dev_reduced[i]);
  }
  return report;
}

}  // namespace lgsim
