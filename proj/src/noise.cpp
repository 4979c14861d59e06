#include "lgsim/noise.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lgsim {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument(std::string(name) + " must be positive and finite");
}

// sin(x)/x with the removable singularity handled by series.
double sinc(double x) {
  if (std::abs(x) < 1e-6) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

}  // namespace

RtnParams::RtnParams(double a_, double gamma_) : a(a_), gamma(gamma_) {
  require_positive(a, "a");
  require_positive(gamma, "gamma");
}

RtnParams RtnParams::from_tau(double a_, double tau_) {
  require_positive(tau_, "tau");
  return RtnParams(a_, 1.0 / (2.0 * tau_));
}

RtnParams RtnParams::from_mu(double mu_, double gamma_) {
  require_positive(mu_, "mu");
  require_positive(gamma_, "gamma");
  return RtnParams(0.5 * gamma_ * std::sqrt(mu_ * mu_ + 1.0), gamma_);
}

OunParams::OunParams(double big_gamma_, double gamma_) : big_gamma(big_gamma_), gamma(gamma_) {
  require_positive(big_gamma, "Gamma");
  require_positive(gamma, "gamma");
}

UnitaryParams::UnitaryParams(double omega_) : omega(omega_) {
  require_positive(omega, "Omega");
}

const char* to_string(RegimeTag tag) {
  switch (tag) {
    case RegimeTag::Markovian: return "markovian";
    case RegimeTag::NonMarkovian: return "non-markovian";
    case RegimeTag::Intermediate: return "intermediate";
  }
  return "?";
}

double lambda_rtn_nu(const RtnParams& p, double nu) {
  const double ratio = 2.0 * p.a / p.gamma;  // = 4 a tau
  const double s = ratio * ratio - 1.0;      // mu^2, negative in the Markovian regime

  if (s > 1e-8) {
    const double m = std::sqrt(s);
    const double x = m * nu;
    return std::exp(-nu) * (std::cos(x) + nu * sinc(x));
  }
  if (s < -1e-8) {
    const double m0 = std::sqrt(-s);
    if (nu <= 700.0) {
      const double x = m0 * nu;
      const double sinhc = x < 1e-8 ? 1.0 + x * x / 6.0 : std::sinh(x) / x;
      return std::exp(-nu) * (std::cosh(x) + nu * sinhc);
    }
    // Past this point cosh(m0 nu) can overflow while the product stays
    // finite; split into pure exponentials with non-positive exponents.
    return 0.5 * ((1.0 + 1.0 / m0) * std::exp(-(1.0 - m0) * nu) +
                  (1.0 - 1.0 / m0) * std::exp(-(1.0 + m0) * nu));
  }
  // |mu| <= 1e-4: series in s = mu^2, valid on both sides of the boundary.
  const double n2 = nu * nu;
  const double cos_part = 1.0 - s * n2 / 2.0 + s * s * n2 * n2 / 24.0 - s * s * s * n2 * n2 * n2 / 720.0;
  const double sin_part = 1.0 - s * n2 / 6.0 + s * s * n2 * n2 / 120.0 - s * s * s * n2 * n2 * n2 / 5040.0;
  return std::exp(-nu) * (cos_part + nu * sin_part);
}

double lambda_rtn(const RtnParams& p, double t) { return lambda_rtn_nu(p, p.gamma * t); }

double q_oun(const OunParams& p, double t) {
  return std::exp(-0.5 * p.big_gamma * (t + std::expm1(-p.gamma * t) / p.gamma));
}

std::complex<double> mu(const RtnParams& p) {
  const double ratio = 2.0 * p.a / p.gamma;
  const double s = ratio * ratio - 1.0;
  return s >= 0.0 ? std::complex<double>(std::sqrt(s), 0.0)
                  : std::complex<double>(0.0, std::sqrt(-s));
}

KrausSet kraus_rtn(const RtnParams& p, double t) {
  const double lam = lambda_rtn(p, t);
  const double kp = std::sqrt(std::max(0.0, 0.5 * (1.0 + lam)));
  const double km = std::sqrt(std::max(0.0, 0.5 * (1.0 - lam)));
  return KrausSet{{Mat2::identity() * cplx(kp), Mat2::sigma_z() * cplx(km)}};
}

KrausSet kraus_oun(const OunParams& p, double t) {
  const double q = q_oun(p, t);
  return KrausSet{{Mat2::diag(1.0, q), Mat2::diag(0.0, std::sqrt(std::max(0.0, 1.0 - q * q)))}};
}

KrausSet kraus_unitary(const UnitaryParams& p, double t) {
  const double half = 0.5 * p.omega * t;
  return KrausSet{{Mat2::diag(std::polar(1.0, -half), std::polar(1.0, half)), Mat2::zero()}};
}

KrausSet channel_kraus(const NoiseChannel& ch, double duration) {
  return std::visit(
      [&](const auto& p) -> KrausSet {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, RtnParams>) return kraus_rtn(p, duration);
        else if constexpr (std::is_same_v<T, OunParams>) return kraus_oun(p, duration);
        else return kraus_unitary(p, duration);
      },
      ch);
}

double coherence_factor(const NoiseChannel& ch, double duration) {
  return std::visit(
      [&](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, RtnParams>) return lambda_rtn(p, duration);
        else if constexpr (std::is_same_v<T, OunParams>) return q_oun(p, duration);
        else return std::cos(p.omega * duration);
      },
      ch);
}

RegimeTag classify_regime(const NoiseChannel& ch) {
  return std::visit(
      [](const auto& p) -> RegimeTag {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, RtnParams>) {
          return 2.0 * p.a / p.gamma > 1.0 ? RegimeTag::NonMarkovian : RegimeTag::Markovian;
        } else if constexpr (std::is_same_v<T, OunParams>) {
          const double r = p.gamma / p.big_gamma;
          if (r < 1.0) return RegimeTag::NonMarkovian;
          if (r >= 100.0) return RegimeTag::Markovian;
          return RegimeTag::Intermediate;
        } else {
          return RegimeTag::Markovian;
        }
      },
      ch);
}

const char* channel_kind(const NoiseChannel& ch) {
  return std::visit(
      [](const auto& p) -> const char* {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, RtnParams>) return "rtn";
        else if constexpr (std::is_same_v<T, OunParams>) return "oun";
        else return "unitary";
      },
      ch);
}

std::pair<double, double> channel_params(const NoiseChannel& ch) {
  return std::visit(
      [](const auto& p) -> std::pair<double, double> {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, RtnParams>) return {p.a, p.gamma};
        else if constexpr (std::is_same_v<T, OunParams>) return {p.big_gamma, p.gamma};
        else return {p.omega, 0.0};
      },
      ch);
}

double natural_time_scale(const NoiseChannel& ch) {
  return std::visit(
      [](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, RtnParams>) return 3.0 / p.gamma;
        else if constexpr (std::is_same_v<T, OunParams>) return 3.0 / p.big_gamma;
        else return 3.0 * std::numbers::pi / p.omega;
      },
      ch);
}

}  // namespace lgsim
