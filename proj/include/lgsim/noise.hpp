#pragma once
// Dephasing noise channels: random telegraph noise (RTN), Ornstein-Uhlenbeck
// noise (OUN), and the noiseless unitary baseline. Provides the closed-form
// coherence factors, Kraus sets, and regime classification.

#include <complex>
#include <variant>

#include "lgsim/qubit.hpp"

namespace lgsim {

struct RtnParams {
  double a;      // system-environment coupling strength (inverse time)
  double gamma;  // fluctuator switching rate, gamma = 1/(2 tau) (inverse time)

  RtnParams(double a_, double gamma_);
  static RtnParams from_tau(double a_, double tau_);
  // Picks the coupling so that mu() equals the requested value at this gamma.
  static RtnParams from_mu(double mu_, double gamma_);

  double tau() const { return 1.0 / (2.0 * gamma); }
};

struct OunParams {
  double big_gamma;  // effective relaxation rate (inverse time)
  double gamma;      // noise bandwidth (inverse time)

  OunParams(double big_gamma_, double gamma_);
};

struct UnitaryParams {
  double omega;  // level splitting; H = omega sz / 2

  explicit UnitaryParams(double omega_);
};

using NoiseChannel = std::variant<RtnParams, OunParams, UnitaryParams>;

enum class RegimeTag { Markovian, NonMarkovian, Intermediate };
const char* to_string(RegimeTag tag);

// RTN coherence factor at dimensionless time nu = gamma * t:
//   exp(-nu) [cos(mu nu) + sin(mu nu)/mu],
// mu = sqrt((2a/gamma)^2 - 1); equivalently sqrt((4 a tau)^2 - 1) with
// tau = 1/(2 gamma). For 2a/gamma < 1 the cos/sin pair continues
// analytically to cosh/sinh of mu0 = sqrt(1 - (2a/gamma)^2); near the
// boundary a uniform series in mu^2 is used so the function stays smooth.
double lambda_rtn_nu(const RtnParams& p, double nu);
double lambda_rtn(const RtnParams& p, double t);

// OUN coherence factor exp[-(Gamma/2)(t + (e^{-gamma t} - 1)/gamma)].
double q_oun(const OunParams& p, double t);

// sqrt((2a/gamma)^2 - 1): real and positive when the switching is slow
// (non-Markovian), pure imaginary when fast (Markovian), zero on the
// boundary 2a/gamma = 1.
std::complex<double> mu(const RtnParams& p);

KrausSet kraus_rtn(const RtnParams& p, double t);
KrausSet kraus_oun(const OunParams& p, double t);
KrausSet kraus_unitary(const UnitaryParams& p, double t);

// Kraus set evolving a state for the given duration under the channel.
KrausSet channel_kraus(const NoiseChannel& ch, double duration);

// Closed-form decay of the off-diagonal element over the given duration:
// Lambda for RTN, q for OUN, cos(omega * duration) for the unitary baseline.
double coherence_factor(const NoiseChannel& ch, double duration);

// RTN: non-Markovian iff 2a/gamma > 1 (mu real; boundary counts as
// Markovian). OUN: non-Markovian for gamma/Gamma < 1, Markovian for
// gamma/Gamma >= 100, Intermediate between (no sharp boundary exists).
// The unitary baseline is memoryless and classified Markovian.
RegimeTag classify_regime(const NoiseChannel& ch);

const char* channel_kind(const NoiseChannel& ch);  // "rtn" | "oun" | "unitary"

// Channel parameters as a flat (p1, p2) pair for reporting:
// rtn -> (a, gamma), oun -> (Gamma, gamma), unitary -> (omega, 0).
std::pair<double, double> channel_params(const NoiseChannel& ch);

// Rough duration over which the channel's dynamics play out; used to pick
// sensible default time ranges.
double natural_time_scale(const NoiseChannel& ch);

}  // namespace lgsim
