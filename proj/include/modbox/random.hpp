#pragma once

#include <cstdint>
#include <random>

#include "matrix.hpp"

// Seeded generators for the randomized property checks and the self test
// suites.  Same seed, same sequence, same report bytes.

namespace modbox {

inline constexpr std::uint64_t kDefaultSeed = 12345;

inline Complex randn_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  double re = g(rng);
  double im = g(rng);
  return Complex(re, im) / std::sqrt(2.0);
}

inline Matrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  Matrix out(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) out(i, j) = randn_complex(rng);
  return out;
}

inline Vector random_vector(std::mt19937_64& rng, int n) {
  Vector out(n);
  for (int i = 0; i < n; ++i) out[i] = randn_complex(rng);
  return out;
}

inline Matrix random_hermitian(std::mt19937_64& rng, int n) {
  Matrix g = random_matrix(rng, n, n);
  return 0.5 * (g + g.adjoint());
}

// At most rank r: product of n x r and r x n factors.
inline Matrix random_rank(std::mt19937_64& rng, int n, int r) {
  return random_matrix(rng, n, r) * random_matrix(rng, r, n);
}

// Haar-style unitary: QR of a Gaussian matrix with the R diagonal rephased.
inline Matrix random_unitary(std::mt19937_64& rng, int n) {
  Matrix g = random_matrix(rng, n, n);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    Complex d = r(i, i);
    q.col(i) *= std::abs(d) > 0 ? d / std::abs(d) : Complex(1.0);
  }
  return q;
}

}  // namespace modbox
