#pragma once
// Qubit states, Kraus channels and projective measurement.

#include <optional>
#include <utility>
#include <vector>

#include "lgsim/mat2.hpp"

namespace lgsim {

// Trace-one positive Hermitian 2x2 matrix. Construction validates all
// invariants and throws std::invalid_argument on violation.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Mat2& m);

  // |psi><psi| from amplitudes (alpha, beta); normalizes internally.
  static DensityMatrix pure(cplx alpha, cplx beta);
  // (I + x sx + y sy + z sz) / 2; requires |r| <= 1.
  static DensityMatrix from_bloch(double x, double y, double z);
  static DensityMatrix ground() { return pure(1.0, 0.0); }
  static DensityMatrix plus() { return pure(1.0, 1.0); }

  const Mat2& mat() const { return m_; }
  cplx coherence() const { return m_.e[1]; }
  double population0() const { return m_.e[0].real(); }
  double population1() const { return m_.e[3].real(); }

 private:
  Mat2 m_;
};

// Hermitian idempotent with integer trace in {0, 1, 2}.
class Projector {
 public:
  explicit Projector(const Mat2& m);
  const Mat2& mat() const { return m_; }

 private:
  Mat2 m_;
};

struct KrausSet {
  std::vector<Mat2> ops;

  // Max-norm of sum K^dag K - I.
  double completeness_residual() const;
  bool is_complete(double t = tol::validity) const { return completeness_residual() <= t; }
};

struct Measurement {
  double probability = 0.0;
  // Empty when the outcome has zero probability (undefined post-state).
  std::optional<DensityMatrix> post_state;
};

struct Observable {
  Mat2 op;          // dichotomic operator with eigenvalues +-1
  Projector plus;   // outcome +1
  Projector minus;  // outcome -1
};

// rho -> sum K rho K^dag. Refuses Kraus sets whose completeness residual
// exceeds tol::kraus_reject.
DensityMatrix apply_channel(const DensityMatrix& rho, const KrausSet& ks);

// Born probability Tr(P rho) and the renormalized post-measurement state.
Measurement measure(const DensityMatrix& rho, const Projector& p);

// Dichotomic observable at detector angles (theta, phi):
//   [[cos t, e^{i p} sin t], [e^{-i p} sin t, -cos t]]
// together with its +-1 spectral projectors (I +- O)/2. Angles are wrapped
// into theta in [-pi, pi), phi in [-pi/2, pi/2] using the exact symmetry
// O(-theta, phi + pi) = O(theta, phi).
Observable observable(double theta, double phi);

// Wrapped (theta, phi) as used by observable().
std::pair<double, double> wrap_angles(double theta, double phi);

}  // namespace lgsim
