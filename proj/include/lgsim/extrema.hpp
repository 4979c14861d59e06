#pragma once
// Stationary points of K3(dt) at theta = pi/2. The transcendental extremum
// conditions are solved by dense scanning for sign changes followed by
// bisection; every root is cross-checked as a stationary point of K3 by a
// finite-difference derivative.

#include <vector>

#include "lgsim/correlators.hpp"

namespace lgsim {

enum class ConditionKind {
  RtnMarkov,     // 2 e^{-nu} cosh(mu0 nu) = 1      (axis: nu = gamma t)
  RtnNonMarkov,  // 2 e^{-nu} cos(mu nu) = 1        (axis: nu = gamma t)
  Oun,           // (1 + e^{-gamma dt}) q(2 dt)/q(dt) = 1   (axis: dt)
};

struct ExtremumCondition {
  ConditionKind kind;
  NoiseChannel channel;

  // Picks the RTN branch from the regime; throws for the unitary baseline.
  static ExtremumCondition for_channel(const NoiseChannel& ch);
};

// Left-hand side of the condition; a stationary point of K3 sits where this
// crosses 1. Evaluated in log space for OUN so large exponents cannot
// overflow.
double condition_lhs(const ExtremumCondition& cond, double x);

// K3 at theta = pi/2 as a function of the condition's own axis.
double k3_on_axis(const ExtremumCondition& cond, double x);

// Five-point finite-difference derivative of k3_on_axis, with a step scaled
// to the channel's oscillation rate.
double k3_slope_fd(const ExtremumCondition& cond, double x);

enum class RootOrigin {
  ConditionEquation,  // crossing of condition_lhs through 1
  SinFamily,          // sin(mu nu) = 0, the stationary family the RTN
                      // derivative factorization produces in addition to the
                      // condition equation (non-Markovian regime only)
};

struct ExtremumRoot {
  double x = 0.0;         // location on the condition's axis
  double residual = 0.0;  // |condition - target| at the root
  double k3_value = 0.0;
  double k3_slope = 0.0;  // finite-difference |dK3/dx| witness
  RootOrigin origin = RootOrigin::ConditionEquation;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// All roots in the bracket, sorted by location. An empty result is a valid
// outcome (the Markovian condition has no crossing once the scan window lies
// past the single crossing of its decreasing left-hand side).
std::vector<ExtremumRoot> solve_extremum(const ExtremumCondition& cond, Interval bracket,
                                         int scan_points = 10000);

Interval default_bracket(const ExtremumCondition& cond);

}  // namespace lgsim
