#include "lgsim/correlators.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace lgsim {

namespace {

void require_times(double ti, double tj) {
  if (!(ti >= 0.0) || !(tj >= ti)) throw std::invalid_argument("need 0 <= ti <= tj");
}

}  // namespace

double correlator_chain(const NoiseChannel& ch, const MeasurementSetting& setting,
                        const DensityMatrix& rho0, double ti, double tj) {
  require_times(ti, tj);
  const Observable obs = observable(setting.theta, setting.phi);
  const DensityMatrix rho_i = apply_channel(rho0, channel_kraus(ch, ti));
  const KrausSet segment = channel_kraus(ch, tj - ti);

  const std::array<std::pair<double, const Projector*>, 2> outcomes{
      {{+1.0, &obs.plus}, {-1.0, &obs.minus}}};

  double corr = 0.0;
  for (const auto& [a, proj_a] : outcomes) {
    const Measurement first = measure(rho_i, *proj_a);
    if (!first.post_state) continue;  // zero-probability branch contributes 0
    const DensityMatrix rho_j = apply_channel(*first.post_state, segment);
    for (const auto& [b, proj_b] : outcomes)
      corr += a * b * first.probability * measure(rho_j, *proj_b).probability;
  }
  return corr;
}

double correlator_reduced(const NoiseChannel& ch, const MeasurementSetting& setting,
                          const DensityMatrix& rho0, double ti, double tj) {
  require_times(ti, tj);
  const Observable obs = observable(setting.theta, setting.phi);
  const DensityMatrix rho_i = apply_channel(rho0, channel_kraus(ch, ti));
  const KrausSet segment = channel_kraus(ch, tj - ti);

  const double p1 = measure(rho_i, obs.plus).probability;
  const double p2 = measure(apply_channel(rho_i, segment), obs.plus).probability;

  // g = Tr{ P+ sum_k K (P+ rho_i) K^dag }; note the single-sided projection.
  const Mat2 branch = obs.plus.mat() * rho_i.mat();
  Mat2 propagated = Mat2::zero();
  for (const Mat2& k : segment.ops) propagated = propagated + k * branch * k.adjoint();
  const cplx g = (obs.plus.mat() * propagated).trace();

  return 1.0 - 2.0 * p1 - 2.0 * p2 + 4.0 * g.real();
}

double correlator_closed(const NoiseChannel& ch, double theta, double ti, double tj) {
  require_times(ti, tj);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return c * c + s * s * coherence_factor(ch, tj - ti);
}

LGResult lg_parameters(const NoiseChannel& ch, double theta, double phi, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  const double c01 = correlator_closed(ch, theta, 0.0, dt);
  const double c12 = correlator_closed(ch, theta, dt, 2.0 * dt);
  const double c02 = correlator_closed(ch, theta, 0.0, 2.0 * dt);
  LGResult r;
  r.dt = dt;
  r.theta = theta;
  r.phi = phi;
  r.triple = CorrelatorTriple{c01, c12, c02, 0.0, dt, 2.0 * dt};
  r.k3 = c01 + c12 - c02;
  r.k3_prime = -c01 - c12 - c02;
  r.regime = classify_regime(ch);
  return r;
}

double lg_bracket(const NoiseChannel& ch, double dt) {
  return 2.0 * coherence_factor(ch, dt) - coherence_factor(ch, 2.0 * dt);
}

double lg_bracket_prime(const NoiseChannel& ch, double dt) {
  return -2.0 * coherence_factor(ch, dt) - coherence_factor(ch, 2.0 * dt);
}

double k3_unitary(double omega, double dt) {
  return 2.0 * std::cos(omega * dt) - std::cos(2.0 * omega * dt);
}

}  // namespace lgsim
