#pragma once

#include "hs.hpp"
#include "matrix.hpp"

// Modular data attached to a cyclic and separating vector of HS(C^n).
// A vector with coefficient matrix a acts as the operator T = a^T (column i
// holds the components of T e_i), and the whole structure is read off the
// singular value decomposition T = W S V†:
//
//   U = W V†,  |T| = V S V†,  |T†| = W S W†,  h = -2 log |T|,
//   Delta X = (T T†) X (T† T)^(-1),  J X = U X† U,  S = J Delta^(1/2).

namespace modbox::modular {

// ------------------------------ cyclic vectors ------------------------------

struct CyclicVector {
  Matrix coeffs;

  explicit CyclicVector(Matrix a) : coeffs(std::move(a)) {
    require_square(coeffs, "CyclicVector");
    require_finite(coeffs, "CyclicVector");
  }

  int dim() const { return int(coeffs.rows()); }

  // The vector as an operator on C^n.
  Matrix to_operator() const { return coeffs.transpose(); }
};

struct ClassificationReport {
  bool is_cs;
  RealVector singular_values;  // of the coefficient matrix, descending
};

// Cyclic and separating exactly when the coefficient matrix is invertible
// at the given relative tolerance.
inline ClassificationReport check_cyclic_separating(const CyclicVector& omega,
                                                    double tol = 1e-12) {
  if (tol <= 0.0) throw std::invalid_argument("check_cyclic_separating: tol must be > 0");
  RealVector sv = singular_values(omega.coeffs);
  bool is_cs = sv[sv.size() - 1] > tol * sv[0];
  return {is_cs, std::move(sv)};
}

// ------------------------------ modular structure ------------------------------

struct ModularStructure {
  Matrix t;           // the vector as an operator
  Matrix u;           // unitary polar factor, T = U |T|
  Matrix abs_t;       // |T|
  Matrix abs_t_star;  // |T†| = U |T| U†
  Matrix h;           // -2 log |T|
  HermEig left;       // spectral data of T T†
  HermEig right;      // spectral data of T† T

  int dim() const { return int(t.rows()); }
};

inline ModularStructure build_modular(const CyclicVector& omega, double tol = 1e-12) {
  Matrix t = omega.to_operator();
  Eigen::JacobiSVD<Matrix> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RealVector& s = svd.singularValues();
  const double smax = s[0];
  const double smin = s[s.size() - 1];
  if (smax <= 0.0 || smin < tol * smax)
    throw RankDeficiencyError("build_modular: vector is not cyclic and separating", smin, smax);

  const Matrix& w = svd.matrixU();
  const Matrix& v = svd.matrixV();
  ModularStructure m;
  m.t = std::move(t);
  m.u = w * v.adjoint();
  m.abs_t = v * s.asDiagonal() * v.adjoint();
  m.abs_t_star = w * s.asDiagonal() * w.adjoint();
  RealVector log_s(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) log_s[i] = -2.0 * std::log(s[i]);
  m.h = v * log_s.asDiagonal() * v.adjoint();
  RealVector s_sq = s.array().square();
  m.left = {s_sq, w};
  m.right = {s_sq, v};
  return m;
}

// Delta^z X = (T T†)^z X (T† T)^(-z), spectral calculus on both factors.
inline Matrix modular_power_apply(const ModularStructure& m, Complex z, const Matrix& x) {
  require_same_dim(m.t, x, "modular_power_apply");
  return pos_power(m.left, z) * x * pos_power(m.right, -z);
}

// J X = U X† U; antilinear, J o J = identity.
inline Matrix modular_conjugation_apply(const ModularStructure& m, const Matrix& x) {
  require_same_dim(m.t, x, "modular_conjugation_apply");
  return m.u * x.adjoint() * m.u;
}

// S = J Delta^(1/2); sends A Omega to A† Omega.
inline Matrix s_apply(const ModularStructure& m, const Matrix& x) {
  return modular_conjugation_apply(m, modular_power_apply(m, 0.5, x));
}

// Flow of the left algebra: A(t) = |T†|^(2it) A |T†|^(-2it).
inline Matrix modular_flow_left(const ModularStructure& m, double t, const Matrix& a) {
  require_same_dim(m.t, a, "modular_flow_left");
  return pos_power(m.left, Complex(0.0, t)) * a * pos_power(m.left, Complex(0.0, -t));
}

// ------------------------------ structure checks ------------------------------

// J (A v 1) J lands in the right-multiplication algebra; extracts the unique
// B with J (A v 1) J = (1 v B) and reports its distance to U† A U.
struct ConjugationAlgebraReport {
  Matrix b;
  double distance;
};

inline ConjugationAlgebraReport modular_conjugation_algebra_check(const ModularStructure& m,
                                                                  const Matrix& a) {
  require_same_dim(m.t, a, "modular_conjugation_algebra_check");
  const int n = m.dim();
  // (1 v B) applied to the identity is B†.
  Matrix image_of_id =
      modular_conjugation_apply(m, a * modular_conjugation_apply(m, Matrix::Identity(n, n)));
  Matrix b = image_of_id.adjoint();
  Matrix expected = m.u.adjoint() * a * m.u;
  double distance = max_abs(b - expected);
  return {std::move(b), distance};
}

// Compares log Delta, assembled from the spectral data of T T† and T† T,
// against gen v 1 - J (gen v 1) J with gen = 2 log |T†|, the generator of
// the left flow.  (The stored h = -2 log |T| satisfies gen = -U h U†.)
// Returns the largest entrywise difference over all matrix units.
inline double full_modular_hamiltonian_check(const ModularStructure& m) {
  const int n = m.dim();
  Matrix log_left = herm_apply(m.left, [](double w) { return std::log(w); });    // log(T T†)
  Matrix log_right = herm_apply(m.right, [](double w) { return std::log(w); });  // log(T† T)
  const Matrix& gen = log_left;  // 2 log |T†|
  double defect = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix e = unit_matrix(n, i, j);
      Matrix h1 = log_left * e - e * log_right;
      Matrix h2 = gen * e - modular_conjugation_apply(m, gen * modular_conjugation_apply(m, e));
      defect = std::max(defect, max_abs(h1 - h2));
    }
  return defect;
}

}  // namespace modbox::modular
