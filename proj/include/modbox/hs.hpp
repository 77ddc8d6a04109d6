#pragma once

#include <limits>

#include "matrix.hpp"

// The Hilbert-Schmidt space of n x n complex matrices together with the
// sandwich operators that act on it.  The inner product is conjugate-linear
// in the first slot; rank-one operators follow (e o f) x = <e, x> f.

namespace modbox::hs {

// ------------------------------ rank one ------------------------------

// (e o f) x = <e, x> f  ->  matrix f e†.
inline Matrix rank_one(const Vector& e, const Vector& f) {
  if (e.size() != f.size() || e.size() == 0)
    throw std::invalid_argument("rank_one: vectors must have equal nonzero length");
  return f * e.adjoint();
}

// <X, Y> = tr(X† Y).
inline Complex hs_inner(const Matrix& x, const Matrix& y) {
  require_same_dim(x, y, "hs_inner");
  return (x.adjoint() * y).trace();
}

inline double hs_norm(const Matrix& x) { return x.norm(); }

// ------------------------------ sandwich operators ------------------------------

// (A v B) X = A X B†.
struct SandwichOp {
  Matrix left;
  Matrix right;
};

inline SandwichOp sandwich(Matrix a, Matrix b) {
  require_square(a, "sandwich");
  require_square(b, "sandwich");
  require_same_dim(a, b, "sandwich");
  return {std::move(a), std::move(b)};
}

inline Matrix sandwich_apply(const SandwichOp& op, const Matrix& x) {
  require_same_dim(op.left, x, "sandwich_apply");
  return op.left * x * op.right.adjoint();
}

// (A v B)(C v D) = AC v BD.
inline SandwichOp sandwich_compose(const SandwichOp& f, const SandwichOp& g) {
  require_same_dim(f.left, g.left, "sandwich_compose");
  return {f.left * g.left, f.right * g.right};
}

// Adjoint with respect to hs_inner: (A v B)* = A† v B†.
inline SandwichOp sandwich_adjoint(const SandwichOp& op) {
  return {op.left.adjoint(), op.right.adjoint()};
}

// ------------------------------ Schatten norms ------------------------------

// p in [1, inf]; computed from singular values.
inline double schatten_norm(const Matrix& x, double p) {
  require_square(x, "schatten_norm");
  if (std::isnan(p) || p < 1.0)
    throw std::invalid_argument("schatten_norm: p must lie in [1, inf]");
  RealVector sv = singular_values(x);
  if (std::isinf(p)) return sv.size() ? sv[0] : 0.0;
  double acc = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) acc += std::pow(sv[i], p);
  return std::pow(acc, 1.0 / p);
}

// ------------------------------ trace inequalities ------------------------------

// |tr(AB)| <= tr|AB| <= ||A||_op tr|B|, with slack tol * max(1, rhs).
struct TraceInequalityReport {
  double lhs;
  double mid;
  double rhs;
  bool holds;
};

inline TraceInequalityReport trace_inequality_check(const Matrix& a, const Matrix& b,
                                                    double tol = 1e-10) {
  require_square(a, "trace_inequality_check");
  require_same_dim(a, b, "trace_inequality_check");
  const double lhs = std::abs((a * b).trace());
  const double mid = singular_values(a * b).sum();
  const double rhs = singular_values(a)[0] * singular_values(b).sum();
  const double slack = tol * std::max(1.0, rhs);
  return {lhs, mid, rhs, lhs <= mid + slack && mid <= rhs + slack};
}

// ------------------------------ polar decomposition ------------------------------

// T = U P with U unitary and P = |T| = (T† T)^(1/2).
struct PolarDecomposition {
  Matrix u;
  Matrix p;
};

inline PolarDecomposition polar_decompose(const Matrix& t, double tol = 1e-12) {
  require_square(t, "polar_decompose");
  Eigen::JacobiSVD<Matrix> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RealVector& sv = svd.singularValues();
  const double smax = sv[0];
  const double smin = sv[sv.size() - 1];
  if (smax <= 0.0 || smin < tol * smax)
    throw RankDeficiencyError("polar_decompose: matrix is numerically singular", smin, smax);
  Matrix u = svd.matrixU() * svd.matrixV().adjoint();
  Matrix p = svd.matrixV() * sv.asDiagonal() * svd.matrixV().adjoint();
  return {std::move(u), std::move(p)};
}

// ------------------------------ commutant dimension ------------------------------

// Dimension of the commutant of the right-multiplication algebra inside the
// bounded maps on HS(C^n), computed from the stacked commutation constraints
// [K, X -> X E†] = 0 over all matrix units E.  The unknown K has n^4 entries.
inline int commutant_dimension(int n) {
  if (n < 1) throw std::invalid_argument("commutant_dimension: n must be >= 1");
  if (n > 4)
    throw std::length_error("commutant_dimension: dense solve limited to n <= 4");
  const int d = n * n;
  const int d2 = d * d;
  const Matrix id = Matrix::Identity(d, d);
  Matrix stacked(n * n * d2, d2);
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix e = unit_matrix(n, i, j);
      Matrix s = superop_matrix(n, [&](const Matrix& x) { return Matrix(x * e.adjoint()); });
      stacked.block(row, 0, d2, d2) = kron(s.transpose(), id) - kron(id, s);
      row += d2;
    }
  RealVector sv = Eigen::BDCSVD<Matrix>(stacked).singularValues();
  const double smax = sv[0];
  if (smax <= 0.0) return d2;
  int null_dim = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] < 1e-8 * smax) ++null_dim;
  return null_dim;
}

}  // namespace modbox::hs
