#pragma once

// Finite truncations of the planar Landau problem: ladder matrices on a
// two-parameter basis cut, the diagonal Hamiltonian and angular momentum,
// the radial position-squared operator with its tridiagonal blocks, and
// the counting functions for a finite box.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace modbox::landau {

// Single oscillator state. Admissible labels satisfy n >= 0 and m >= -n.
struct BasisState {
  long long n = 0;
  long long m = 0;

  friend bool operator==(const BasisState&, const BasisState&) = default;
};

// States with n <= n_max and 2n + m <= k_max, ordered by (2n + m, n) so
// each line 2n + m = k occupies a contiguous index range.
struct TruncatedBasis {
  long long n_max = 0;
  long long k_max = 0;
  std::vector<BasisState> states;
  std::map<std::pair<long long, long long>, int> position;

  int dim() const { return int(states.size()); }
};

inline TruncatedBasis make_basis(long long n_max, long long k_max) {
  if (n_max < 0) throw std::invalid_argument("make_basis: n_max must be >= 0");
  if (k_max < 0) throw std::invalid_argument("make_basis: k_max must be >= 0");
  TruncatedBasis basis;
  basis.n_max = n_max;
  basis.k_max = k_max;
  for (long long k = 0; k <= k_max; ++k) {
    for (long long n = 0; n <= std::min(k, n_max); ++n) {
      basis.position[{n, k - 2 * n}] = int(basis.states.size());
      basis.states.push_back({n, k - 2 * n});
    }
  }
  return basis;
}

// Every line 2n + m = k is complete (n runs over 0..k), so the cut is the
// box cut by diagonal lines alone.
inline TruncatedBasis full_basis(long long k_max) { return make_basis(k_max, k_max); }

inline std::optional<int> index_of(const TruncatedBasis& basis, long long n, long long m) {
  auto it = basis.position.find({n, m});
  if (it == basis.position.end()) return std::nullopt;
  return it->second;
}

// Positions of the states on the line 2n + m = k, ordered by n.
inline std::vector<int> line_indices(const TruncatedBasis& basis, long long k) {
  std::vector<int> out;
  for (long long n = 0; n <= std::min(k, basis.n_max); ++n)
    if (auto idx = index_of(basis, n, k - 2 * n)) out.push_back(*idx);
  return out;
}

// A state is interior when all four ladder images stay inside the cut.
inline bool is_interior(const TruncatedBasis& basis, const BasisState& s) {
  return s.n + 1 <= basis.n_max && 2 * s.n + s.m + 1 <= basis.k_max;
}

struct LadderMatrices {
  Matrix a;
  Matrix a_dag;
  Matrix b;
  Matrix b_dag;
};

// a sends (n, m) to (n-1, m+1) with weight sqrt(n); b sends (n, m) to
// (n, m-1) with weight sqrt(n+m). Both images stay inside the cut, so the
// lowering matrices are exact; the raising matrices are their adjoints,
// and columns whose raised image leaves the cut are zero.
inline LadderMatrices ladder_matrices(const TruncatedBasis& basis) {
  const int d = basis.dim();
  Matrix a = Matrix::Zero(d, d);
  Matrix b = Matrix::Zero(d, d);
  for (int s = 0; s < d; ++s) {
    const auto [n, m] = basis.states[s];
    if (n >= 1) {
      if (auto t = index_of(basis, n - 1, m + 1)) a(*t, s) = std::sqrt(double(n));
    }
    if (n + m >= 1) {
      if (auto t = index_of(basis, n, m - 1)) b(*t, s) = std::sqrt(double(n + m));
    }
  }
  Matrix a_dag = a.adjoint();
  Matrix b_dag = b.adjoint();
  return {std::move(a), std::move(a_dag), std::move(b), std::move(b_dag)};
}

// Diagonal with entry n + 1/2 at state (n, m).
inline Matrix hamiltonian(const TruncatedBasis& basis) {
  Matrix h = Matrix::Zero(basis.dim(), basis.dim());
  for (int s = 0; s < basis.dim(); ++s) h(s, s) = double(basis.states[s].n) + 0.5;
  return h;
}

// Diagonal with entry -m at state (n, m).
inline Matrix angular_momentum(const TruncatedBasis& basis) {
  Matrix l = Matrix::Zero(basis.dim(), basis.dim());
  for (int s = 0; s < basis.dim(); ++s) l(s, s) = double(-basis.states[s].m);
  return l;
}

// x^2 + y^2 in the oscillator basis: diagonal 4n + 2m + 2 plus the
// symmetric coupling (n, m) <-> (n+1, m-2) with weight 2 sqrt(n+1) sqrt(n+m).
// Both partners share the line value 2n + m, so the matrix is block
// diagonal over the lines.
inline Matrix radius_squared(const TruncatedBasis& basis) {
  const int d = basis.dim();
  Matrix r = Matrix::Zero(d, d);
  for (int s = 0; s < d; ++s) {
    const auto [n, m] = basis.states[s];
    r(s, s) = double(4 * n + 2 * m + 2);
    if (n + m >= 1) {
      if (auto t = index_of(basis, n + 1, m - 2)) {
        // Single square root of the integer product, the same expression
        // the tridiagonal blocks use, so the block identity is exact.
        double w = 2.0 * std::sqrt(double((n + 1) * (n + m)));
        r(*t, s) = w;
        r(s, *t) = w;
      }
    }
  }
  return r;
}

// Symmetric tridiagonal block of radius_squared on a complete line
// 2n + m = k: constant diagonal 2k + 2, off-diagonal 2 sqrt((j+1)(k-j)).
struct JacobiBlock {
  long long k = 0;
  RealVector diagonal;
  RealVector off_diagonal;

  int size() const { return int(diagonal.size()); }
};

inline JacobiBlock jacobi_block(long long k) {
  if (k < 0) throw std::invalid_argument("jacobi_block: k must be >= 0");
  JacobiBlock block;
  block.k = k;
  block.diagonal = RealVector::Constant(k + 1, double(2 * k + 2));
  block.off_diagonal = RealVector::Zero(std::max<long long>(k, 0));
  for (long long j = 0; j < k; ++j)
    block.off_diagonal[j] = 2.0 * std::sqrt(double((j + 1) * (k - j)));
  return block;
}

inline RealMatrix to_dense(const JacobiBlock& block) {
  const int d = block.size();
  RealMatrix out = RealMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) out(i, i) = block.diagonal[i];
  for (int i = 0; i + 1 < d; ++i) {
    out(i, i + 1) = block.off_diagonal[i];
    out(i + 1, i) = block.off_diagonal[i];
  }
  return out;
}

// Ascending eigenvalues of the line-k block, computed by the dedicated
// symmetric-tridiagonal path.
inline RealVector block_spectrum(long long k) {
  JacobiBlock block = jacobi_block(k);
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver;
  solver.computeFromTridiagonal(block.diagonal, block.off_diagonal, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("block_spectrum: eigenvalue iteration failed");
  return solver.eigenvalues();
}

// Largest k whose whole line fits inside radius squared r_sq, i.e. the
// largest k with 2 + 4k <= r_sq. Empty when even the k = 0 line is out.
inline std::optional<long long> box_cutoff(double r_sq) {
  if (!(r_sq > 0.0)) throw std::invalid_argument("box_cutoff: r_sq must be > 0");
  if (r_sq < 2.0) return std::nullopt;
  auto fits = [r_sq](long long k) { return 2.0 + 4.0 * double(k) <= r_sq; };
  long long k = (long long)(std::floor((r_sq - 2.0) / 4.0));
  if (k < 0) k = 0;
  while (fits(k + 1)) ++k;
  while (k > 0 && !fits(k)) --k;
  return k;
}

// Number of states with level index n on the lines up to k.
inline long long degeneracy(long long k, long long n) {
  if (n < 0) throw std::invalid_argument("degeneracy: n must be >= 0");
  if (n > k) throw std::invalid_argument("degeneracy: n must be <= k");
  return k - n + 1;
}

// Total number of states on the lines up to k.
inline long long state_count(long long k) {
  if (k < 0) throw std::invalid_argument("state_count: k must be >= 0");
  return (k + 1) * (k + 2) / 2;
}

}  // namespace modbox::landau
