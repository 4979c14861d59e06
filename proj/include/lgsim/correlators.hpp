#pragma once
// Two-time correlators of a dichotomic observable measured sequentially with
// projective collapse, and the Leggett-Garg parameters built from them.
//
// Three independent routes to the same correlator are provided:
//   correlator_chain   - explicit evolve/project/renormalize/evolve/project
//                        sum over all four outcome branches (trusted oracle)
//   correlator_reduced - the algebraically reduced form
//                        1 - 2 p(+,ti) - 2 p(+,tj) + 4 Re g
//   correlator_closed  - closed form cos^2(theta) + sin^2(theta) D(tj - ti)
// The redundancy is deliberate; the fast paths are cross-checked against the
// chain in the test suites.

#include "lgsim/noise.hpp"
#include "lgsim/qubit.hpp"

namespace lgsim {

struct MeasurementSetting {
  double theta;
  double phi;
};

struct CorrelatorTriple {
  double c01 = 0.0, c12 = 0.0, c02 = 0.0;
  double t0 = 0.0, t1 = 0.0, t2 = 0.0;
};

struct LGResult {
  double dt = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  CorrelatorTriple triple;
  double k3 = 0.0;
  double k3_prime = 0.0;
  RegimeTag regime = RegimeTag::Markovian;
};

// <Q(ti) Q(tj)> via the full measurement chain. A zero-probability
// intermediate outcome contributes 0 (the limit of p * q as p -> 0 with q
// bounded). Requires 0 <= ti <= tj.
double correlator_chain(const NoiseChannel& ch, const MeasurementSetting& setting,
                        const DensityMatrix& rho0, double ti, double tj);

// Same correlator through 1 - 2 p(+,ti) - 2 p(+,tj) + 4 Re g, where g is the
// overlap of the propagated +-branch with the + projector.
double correlator_reduced(const NoiseChannel& ch, const MeasurementSetting& setting,
                          const DensityMatrix& rho0, double ti, double tj);

// cos^2(theta) + sin^2(theta) * D(tj - ti). State- and phi-independent.
double correlator_closed(const NoiseChannel& ch, double theta, double ti, double tj);

// Equal-spacing LG parameters at t0 = 0, t1 = dt, t2 = 2 dt:
//   K3  =  C01 + C12 - C02
//   K3' = -C01 - C12 - C02
// computed from the closed-form correlators. The K3' sign pattern is the one
// obtained by reversing the observable's sign at the middle measurement time
// (Q(t1) -> -Q(t1) flips C01 and C12 and leaves C02).
LGResult lg_parameters(const NoiseChannel& ch, double theta, double phi, double dt);

// K3 at theta = pi/2: 2 D(dt) - D(2 dt).
double lg_bracket(const NoiseChannel& ch, double dt);

// K3' at theta = pi/2: -2 D(dt) - D(2 dt).
double lg_bracket_prime(const NoiseChannel& ch, double dt);

// Noiseless baseline 2 cos(omega dt) - cos(2 omega dt).
double k3_unitary(double omega, double dt);

}  // namespace lgsim
