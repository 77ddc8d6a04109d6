#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

// Shared dense-matrix aliases, validation helpers and Hermitian spectral
// calculus used by every module in this library.

namespace modbox {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Thrown when an operation requires an invertible matrix and the smallest
// singular value falls below tolerance.
struct RankDeficiencyError : std::runtime_error {
  double sigma_min;
  double sigma_max;
  RankDeficiencyError(const std::string& what, double smin, double smax)
      : std::runtime_error(what), sigma_min(smin), sigma_max(smax) {}
};

// ------------------------------ validation ------------------------------

inline void require_square(const Matrix& x, const char* fn) {
  if (x.rows() != x.cols() || x.rows() == 0)
    throw std::invalid_argument(std::string(fn) + ": matrix must be square and non-empty, got " +
                                std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
}

inline void require_same_dim(const Matrix& x, const Matrix& y, const char* fn) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument(std::string(fn) + ": dimension mismatch, " +
                                std::to_string(x.rows()) + "x" + std::to_string(x.cols()) + " vs " +
                                std::to_string(y.rows()) + "x" + std::to_string(y.cols()));
}

inline void require_finite(const Matrix& x, const char* fn) {
  for (Eigen::Index j = 0; j < x.cols(); ++j)
    for (Eigen::Index i = 0; i < x.rows(); ++i)
      if (!std::isfinite(x(i, j).real()) || !std::isfinite(x(i, j).imag()))
        throw std::invalid_argument(std::string(fn) + ": non-finite entry at [" +
                                    std::to_string(i) + "][" + std::to_string(j) + "]");
}

// ------------------------------ basic helpers ------------------------------

inline double max_abs(const Matrix& x) {
  return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff();
}

// Matrix unit with a single 1 at (i, j).
inline Matrix unit_matrix(int n, int i, int j) {
  Matrix e = Matrix::Zero(n, n);
  e(i, j) = 1.0;
  return e;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Matrix of a linear map on n x n matrices; columns follow Eigen's
// column-major vec ordering, so column s acts on the unit at (s % n, s / n).
template <class F>
inline Matrix superop_matrix(int n, F&& map) {
  Matrix out(n * n, n * n);
  for (int s = 0; s < n * n; ++s) {
    Matrix image = map(unit_matrix(n, s % n, s / n));
    out.col(s) = Eigen::Map<const Vector>(image.data(), n * n);
  }
  return out;
}

// ------------------------------ spectral calculus ------------------------------

inline RealVector singular_values(const Matrix& x) {
  return Eigen::JacobiSVD<Matrix>(x).singularValues();
}

// h = V diag(values) V†, eigenvalues ascending.
struct HermEig {
  RealVector values;
  Matrix vectors;
};

inline HermEig herm_eig(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("herm_eig: eigensolver did not converge");
  return {es.eigenvalues(), es.eigenvectors()};
}

// f lifted through the spectral decomposition: V diag(f(w_i)) V†.
template <class F>
inline Matrix herm_apply(const HermEig& e, F&& f) {
  Vector fw(e.values.size());
  for (Eigen::Index i = 0; i < e.values.size(); ++i) fw[i] = f(e.values[i]);
  return e.vectors * fw.asDiagonal() * e.vectors.adjoint();
}

// z-th power of a positive-definite matrix given by its eigensystem.
inline Matrix pos_power(const HermEig& e, Complex z) {
  for (Eigen::Index i = 0; i < e.values.size(); ++i)
    if (e.values[i] <= 0.0)
      throw std::domain_error("pos_power: matrix must be positive definite");
  return herm_apply(e, [z](double w) { return std::exp(z * std::log(w)); });
}

}  // namespace modbox
