#include "lgsim/qubit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace lgsim {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

}  // namespace

DensityMatrix::DensityMatrix(const Mat2& m) : m_(m) {
  if (std::abs(m.trace() - cplx(1.0)) > tol::validity)
    fail("density matrix trace differs from 1 by more than " + std::to_string(tol::validity));
  if (!m.is_hermitian()) fail("density matrix is not Hermitian");
  if (hermitian_eigenvalues(m)[0] < -tol::validity)
    fail("density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::pure(cplx alpha, cplx beta) {
  const double n = std::norm(alpha) + std::norm(beta);
  if (n <= 0.0) fail("zero state vector");
  return DensityMatrix(Mat2{{alpha * std::conj(alpha) / n, alpha * std::conj(beta) / n,
                             beta * std::conj(alpha) / n, beta * std::conj(beta) / n}});
}

DensityMatrix DensityMatrix::from_bloch(double x, double y, double z) {
  Mat2 m = Mat2::identity() + Mat2::sigma_x() * cplx(x) + Mat2::sigma_y() * cplx(y) +
           Mat2::sigma_z() * cplx(z);
  return DensityMatrix(m * cplx(0.5));
}

Projector::Projector(const Mat2& m) : m_(m) {
  if (!m.is_hermitian()) fail("projector is not Hermitian");
  if ((m * m).max_abs_diff(m) > tol::validity) fail("projector is not idempotent");
  const double tr = m.trace().real();
  const double rounded = std::round(tr);
  if (std::abs(tr - rounded) > tol::validity || rounded < 0.0 || rounded > 2.0)
    fail("projector trace is not in {0, 1, 2}");
}

double KrausSet::completeness_residual() const {
  Mat2 sum = Mat2::zero();
  for (const Mat2& k : ops) sum = sum + k.adjoint() * k;
  return sum.max_abs_diff(Mat2::identity());
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausSet& ks) {
  const double residual = ks.completeness_residual();
  if (!(residual <= tol::kraus_reject))
    fail("incomplete Kraus set: completeness residual " + std::to_string(residual));
  Mat2 out = Mat2::zero();
  for (const Mat2& k : ks.ops) out = out + k * rho.mat() * k.adjoint();
  return DensityMatrix(out);
}

Measurement measure(const DensityMatrix& rho, const Projector& p) {
  double prob = (p.mat() * rho.mat()).trace().real();
  prob = std::clamp(prob, 0.0, 1.0);
  if (prob <= 0.0) return {0.0, std::nullopt};
  const int rank = static_cast<int>(std::round(p.mat().trace().real()));
  if (rank == 0) return {0.0, std::nullopt};
  if (rank == 2) return {prob, rho};
  // Rank-1 collapse: P rho P = Tr(P rho) P identically, so the renormalized
  // post-state is the projector itself. Dividing the sandwich by a tiny
  // probability instead would amplify rounding noise past the validity
  // tolerances.
  return {prob, DensityMatrix(p.mat())};
}

std::pair<double, double> wrap_angles(double theta, double phi) {
  constexpr double pi = std::numbers::pi;
  theta = std::remainder(theta, 2.0 * pi);
  phi = std::remainder(phi, 2.0 * pi);
  if (phi > pi / 2.0) {
    phi -= pi;
    theta = -theta;
  } else if (phi < -pi / 2.0) {
    phi += pi;
    theta = -theta;
  }
  if (theta == pi) theta = -pi;
  return {theta, phi};
}

Observable observable(double theta, double phi) {
  const auto [th, ph] = wrap_angles(theta, phi);
  const double c = std::cos(th);
  const double s = std::sin(th);
  const cplx phase = std::polar(1.0, ph);
  const Mat2 o{{cplx(c), phase * s, std::conj(phase) * s, cplx(-c)}};
  const Mat2 plus = (Mat2::identity() + o) * cplx(0.5);
  const Mat2 minus = (Mat2::identity() - o) * cplx(0.5);
  return Observable{o, Projector(plus), Projector(minus)};
}

}  // namespace lgsim
