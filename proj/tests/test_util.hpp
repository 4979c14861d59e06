#pragma once
// Shared helpers for the unit suites: reference-loop oracles kept independent
// of the library's own operator implementations, and seeded random inputs.

#include <cmath>
#include <random>

#include "lgsim/mat2.hpp"
#include "lgsim/qubit.hpp"

namespace testutil {

using lgsim::cplx;
using lgsim::Mat2;

// Brute-force product: c[i][j] = sum_k a[i][k] b[k][j] with raw loops.
inline Mat2 ref_mul(const Mat2& a, const Mat2& b) {
  Mat2 c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      cplx s(0.0);
      for (int k = 0; k < 2; ++k) s += a.e[2 * i + k] * b.e[2 * k + j];
      c.e[2 * i + j] = s;
    }
  return c;
}

// Brute-force Tr(P R) = sum_ij P[i][j] R[j][i].
inline cplx ref_trace_product(const Mat2& p, const Mat2& r) {
  cplx s(0.0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) s += p.e[2 * i + j] * r.e[2 * j + i];
  return s;
}

inline Mat2 random_matrix(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat2 m;
  for (cplx& v : m.e) v = cplx(u(rng), u(rng));
  return m;
}

inline Mat2 random_hermitian(std::mt19937_64& rng) {
  const Mat2 m = random_matrix(rng);
  return (m + m.adjoint()) * cplx(0.5);
}

// Uniform over the Bloch ball (pure and mixed states alike).
inline lgsim::DensityMatrix random_density(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::normal_distribution<double> g(0.0, 1.0);
  const double x = g(rng), y = g(rng), z = g(rng);
  const double n = std::sqrt(x * x + y * y + z * z);
  if (n == 0.0) return lgsim::DensityMatrix::ground();
  const double r = std::cbrt(u(rng));
  return lgsim::DensityMatrix::from_bloch(x * r / n, y * r / n, z * r / n);
}

}  // namespace testutil
