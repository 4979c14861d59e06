#pragma once
// 2x2 complex linear algebra for single-qubit simulation. Fixed dimension,
// value semantics, no allocation.

#include <array>
#include <cmath>
#include <complex>

namespace lgsim {

using cplx = std::complex<double>;

namespace tol {
// Type invariants: trace, hermiticity, idempotency, completeness of Kraus
// sets produced by this library.
inline constexpr double validity = 1e-12;
// Completeness residual above which channel application is refused.
inline constexpr double kraus_reject = 1e-9;
// Agreement between independent correlator routes.
inline constexpr double cross_check = 1e-10;
}  // namespace tol

struct Mat2 {
  std::array<cplx, 4> e{};  // row-major: e[0]=m00, e[1]=m01, e[2]=m10, e[3]=m11

  static Mat2 zero() { return Mat2{}; }
  static Mat2 identity() { return Mat2{{cplx(1.0), cplx(0.0), cplx(0.0), cplx(1.0)}}; }
  static Mat2 diag(cplx d0, cplx d1) { return Mat2{{d0, cplx(0.0), cplx(0.0), d1}}; }
  static Mat2 sigma_x() { return Mat2{{cplx(0.0), cplx(1.0), cplx(1.0), cplx(0.0)}}; }
  static Mat2 sigma_y() { return Mat2{{cplx(0.0), cplx(0.0, -1.0), cplx(0.0, 1.0), cplx(0.0)}}; }
  static Mat2 sigma_z() { return Mat2{{cplx(1.0), cplx(0.0), cplx(0.0), cplx(-1.0)}}; }

  cplx operator()(int r, int c) const { return e[2 * r + c]; }

  friend Mat2 operator+(const Mat2& a, const Mat2& b) {
    return Mat2{{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2], a.e[3] + b.e[3]}};
  }
  friend Mat2 operator-(const Mat2& a, const Mat2& b) {
    return Mat2{{a.e[0] - b.e[0], a.e[1] - b.e[1], a.e[2] - b.e[2], a.e[3] - b.e[3]}};
  }
  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return Mat2{{a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
                 a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]}};
  }
  friend Mat2 operator*(const Mat2& a, cplx s) {
    return Mat2{{a.e[0] * s, a.e[1] * s, a.e[2] * s, a.e[3] * s}};
  }
  friend Mat2 operator*(cplx s, const Mat2& a) { return a * s; }

  Mat2 adjoint() const {
    return Mat2{{std::conj(e[0]), std::conj(e[2]), std::conj(e[1]), std::conj(e[3])}};
  }
  cplx trace() const { return e[0] + e[3]; }
  cplx det() const { return e[0] * e[3] - e[1] * e[2]; }

  double max_abs() const {
    double m = 0.0;
    for (const cplx& v : e) m = std::max(m, std::abs(v));
    return m;
  }
  double max_abs_diff(const Mat2& o) const { return (*this - o).max_abs(); }
  bool is_hermitian(double t = tol::validity) const {
    return max_abs_diff(adjoint()) <= t;
  }
};

// Eigenvalues of a Hermitian 2x2 matrix, ascending. Closed form from trace
// and determinant; no iterative solver.
inline std::array<double, 2> hermitian_eigenvalues(const Mat2& m) {
  const double mean = 0.5 * (m.e[0].real() + m.e[3].real());
  const double det = m.e[0].real() * m.e[3].real() - std::norm(m.e[1]);
  const double r = std::sqrt(std::max(0.0, mean * mean - det));
  return {mean - r, mean + r};
}

}  // namespace lgsim
