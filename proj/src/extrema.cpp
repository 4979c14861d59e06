#include "lgsim/extrema.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lgsim {

namespace {

const RtnParams& rtn_of(const ExtremumCondition& cond) { return std::get<RtnParams>(cond.channel); }
const OunParams& oun_of(const ExtremumCondition& cond) { return std::get<OunParams>(cond.channel); }

double rtn_mu_abs(const RtnParams& p) {
  const double ratio = 2.0 * p.a / p.gamma;
  return std::sqrt(std::abs(ratio * ratio - 1.0));
}

double bisect(const ExtremumCondition& cond, double lo, double hi, double f_lo) {
  for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = condition_lhs(cond, mid) - 1.0;
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ExtremumCondition ExtremumCondition::for_channel(const NoiseChannel& ch) {
  if (std::holds_alternative<UnitaryParams>(ch))
    throw std::invalid_argument("no extremum condition for the unitary baseline");
  if (const auto* p = std::get_if<RtnParams>(&ch)) {
    const bool non_markov = 2.0 * p->a / p->gamma > 1.0;
    return {non_markov ? ConditionKind::RtnNonMarkov : ConditionKind::RtnMarkov, ch};
  }
  return {ConditionKind::Oun, ch};
}

double condition_lhs(const ExtremumCondition& cond, double x) {
  switch (cond.kind) {
    case ConditionKind::RtnMarkov: {
      // 2 e^{-nu} cosh(mu0 nu) as a sum of decaying exponentials.
      const double m0 = rtn_mu_abs(rtn_of(cond));
      return std::exp(-(1.0 - m0) * x) + std::exp(-(1.0 + m0) * x);
    }
    case ConditionKind::RtnNonMarkov: {
      const double m = rtn_mu_abs(rtn_of(cond));
      return 2.0 * std::exp(-x) * std::cos(m * x);
    }
    case ConditionKind::Oun: {
      const OunParams& p = oun_of(cond);
      const double xg = p.gamma * x;
      const double log_f = std::log1p(std::exp(-xg)) -
                           0.5 * p.big_gamma * (x - (std::exp(-xg) - std::exp(-2.0 * xg)) / p.gamma);
      return std::exp(log_f);
    }
  }
  return 0.0;
}

double k3_on_axis(const ExtremumCondition& cond, double x) {
  switch (cond.kind) {
    case ConditionKind::RtnMarkov:
    case ConditionKind::RtnNonMarkov: {
      const RtnParams& p = rtn_of(cond);
      return 2.0 * lambda_rtn_nu(p, x) - lambda_rtn_nu(p, 2.0 * x);
    }
    case ConditionKind::Oun: {
      const OunParams& p = oun_of(cond);
      return 2.0 * q_oun(p, x) - q_oun(p, 2.0 * x);
    }
  }
  return 0.0;
}

double k3_slope_fd(const ExtremumCondition& cond, double x) {
  double rate = 1.0;
  if (cond.kind == ConditionKind::Oun) {
    rate = oun_of(cond).gamma;
  } else {
    rate = rtn_mu_abs(rtn_of(cond));
  }
  double h = 1e-4 / std::max(1.0, rate);
  h = std::min(h, x / 4.0);
  h = std::max(h, 1e-9);
  const auto f = [&](double v) { return k3_on_axis(cond, v); };
  return (-f(x + 2.0 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2.0 * h)) / (12.0 * h);
}

std::vector<ExtremumRoot> solve_extremum(const ExtremumCondition& cond, Interval bracket,
                                         int scan_points) {
  if (!(bracket.lo > 0.0) || !(bracket.hi > bracket.lo) || !std::isfinite(bracket.hi))
    throw std::invalid_argument("bracket must satisfy 0 < lo < hi < inf");
  if (scan_points < 2) throw std::invalid_argument("need at least 2 scan points");

  std::vector<ExtremumRoot> roots;
  const auto push = [&](double x, double residual, RootOrigin origin) {
    ExtremumRoot r;
    r.x = x;
    r.residual = residual;
    r.k3_value = k3_on_axis(cond, x);
    r.k3_slope = std::abs(k3_slope_fd(cond, x));
    r.origin = origin;
    roots.push_back(r);
  };

  const double step = (bracket.hi - bracket.lo) / scan_points;
  double x_prev = bracket.lo;
  double f_prev = condition_lhs(cond, x_prev) - 1.0;
  for (int i = 1; i <= scan_points; ++i) {
    const double x = bracket.lo + i * step;
    const double f = condition_lhs(cond, x) - 1.0;
    if (f == 0.0) {
      push(x, 0.0, RootOrigin::ConditionEquation);
    } else if ((f < 0.0) != (f_prev < 0.0)) {
      const double root = bisect(cond, x_prev, x, f_prev);
      push(root, std::abs(condition_lhs(cond, root) - 1.0), RootOrigin::ConditionEquation);
    }
    x_prev = x;
    f_prev = f;
  }

  if (cond.kind == ConditionKind::RtnNonMarkov) {
    const double m = rtn_mu_abs(rtn_of(cond));
    const double pi = std::numbers::pi;
    for (long k = std::max(1L, static_cast<long>(std::floor(bracket.lo * m / pi)) + 1);; ++k) {
      const double x = k * pi / m;
      if (x > bracket.hi) break;
      if (x <= bracket.lo) continue;
      push(x, std::abs(std::sin(m * x)), RootOrigin::SinFamily);
    }
  }

  std::sort(roots.begin(), roots.end(),
            [](const ExtremumRoot& a, const ExtremumRoot& b) { return a.x < b.x; });
  return roots;
}

Interval default_bracket(const ExtremumCondition& cond) {
  switch (cond.kind) {
    case ConditionKind::RtnMarkov: return {1e-9, 50.0};
    case ConditionKind::RtnNonMarkov: return {1e-9, 5.0};
    case ConditionKind::Oun: return {1e-9, 20.0 / oun_of(cond).big_gamma};
  }
  return {1e-9, 1.0};
}

}  // namespace lgsim
