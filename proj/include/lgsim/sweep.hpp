#pragma once
// Grid evaluation of the LG parameters over (dt, theta, phi), violation
// census, and sweep maximization. Every kernel exists in two forms: a plain
// serial loop (the reference) and an OpenMP loop over grid cells. Cells are
// written by index, so both produce bit-identical output; the tests assert
// this and the bench target compares their speed.

#include <cstdint>
#include <vector>

#include "lgsim/correlators.hpp"
#include "lgsim/extrema.hpp"

namespace lgsim {

enum class ExecutionPolicy { Serial, Parallel };

struct Range {
  double lo = 0.0;
  double hi = 0.0;
  int steps = 1;
  bool half_open = false;  // true: points lo + (i+1)(hi-lo)/steps, i.e. (lo, hi]

  static Range closed(double lo, double hi, int steps);
  static Range open_closed(double lo, double hi, int steps);
  static Range fixed(double v);

  double at(int i) const {
    if (half_open) return lo + (i + 1) * (hi - lo) / steps;
    if (steps == 1) return lo;
    return lo + i * (hi - lo) / (steps - 1);
  }
};

struct GridSpec {
  Range dt;
  Range theta;
  Range phi;
  int cells() const { return dt.steps * theta.steps * phi.steps; }
};

// Closed-form LG parameters on every grid cell, ordered dt-major then theta
// then phi.
std::vector<LGResult> evaluate_grid(const NoiseChannel& ch, const GridSpec& grid,
                                    ExecutionPolicy policy = ExecutionPolicy::Parallel);

// Same grid evaluated through the full measurement chain starting from rho0.
// Slower, but exercises the projector machinery (including phi).
std::vector<LGResult> evaluate_grid_chain(const NoiseChannel& ch, const GridSpec& grid,
                                          const DensityMatrix& rho0,
                                          ExecutionPolicy policy = ExecutionPolicy::Parallel);

struct Maximum {
  double dt = 0.0;
  double k3 = 0.0;
  double slope = 0.0;               // finite-difference |dK3/d(axis)| at the polished point
  double condition_residual = 0.0;  // distance of the nearest extremum-condition family from
                                    // its target; NaN for the unitary baseline / cos^2 = 1
};

struct SweepReport {
  GridSpec grid;
  std::vector<LGResult> records;
  std::vector<Maximum> maxima;  // polished local maxima along dt at the best (theta, phi)
  double best_k3 = 0.0;
  double best_dt = 0.0;
  double best_theta = 0.0;
  double best_phi = 0.0;
  int violation_count = 0;  // contiguous dt-intervals with K3 > 1 at the best (theta, phi)
};

// Global maximum of K3 over the grid; the dt axis at the winning (theta, phi)
// is polished by golden-section search to 1e-10 in dt.
SweepReport max_k3(const NoiseChannel& ch, Range dt, Range theta, Range phi,
                   ExecutionPolicy policy = ExecutionPolicy::Parallel);

struct CensusResult {
  int count_k3 = 0;        // contiguous grid intervals with K3  > 1 at theta = pi/2
  int count_k3_prime = 0;  // contiguous grid intervals with K3' > 1
  bool simultaneous_violation = false;  // any dt with both above 1
};

CensusResult violation_census(const NoiseChannel& ch, Range dt,
                              ExecutionPolicy policy = ExecutionPolicy::Parallel);

// Randomized cross-check material for the oracle scan.
struct OracleTuple {
  DensityMatrix rho0;
  double theta = 0.0;
  double phi = 0.0;
  double ti = 0.0;
  double tj = 0.0;
};

struct OracleReport {
  int samples = 0;
  double max_dev_closed = 0.0;   // max |chain - closed|
  double max_dev_reduced = 0.0;  // max |chain - reduced|
  int worst_index = -1;          // tuple achieving max_dev_closed
};

// Deterministic tuples: states uniform in the Bloch ball, angles uniform in
// their domains, 0 <= ti <= tj within the channel's natural time scale.
std::vector<OracleTuple> random_tuples(const NoiseChannel& ch, int n, std::uint64_t seed);

OracleReport oracle_scan(const NoiseChannel& ch, const std::vector<OracleTuple>& tuples,
                         ExecutionPolicy policy = ExecutionPolicy::Parallel);

}  // namespace lgsim
