#include <catch2/catch_amalgamated.hpp>

#include "modbox/hs.hpp"
#include "test_util.hpp"

using namespace modbox;
using testutil::basis_vector;
using testutil::dist;

namespace {

// Null-space dimension of the stacked commutation system, via the Gram
// matrix of the constraints.  Independent route used to cross-check the
// library's stacked SVD.
int commutant_dimension_gram_oracle(int n) {
  const int d = n * n;
  const int d2 = d * d;
  const Matrix id = Matrix::Identity(d, d);
  Matrix gram = Matrix::Zero(d2, d2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix e = unit_matrix(n, i, j);
      Matrix s = superop_matrix(n, [&](const Matrix& x) { return Matrix(x * e.adjoint()); });
      Matrix m = kron(s.transpose(), id) - kron(id, s);
      gram += m.adjoint() * m;
    }
  RealVector w = herm_eig(gram).values;
  const double wmax = w[w.size() - 1];
  if (wmax <= 0.0) return d2;
  int null_dim = 0;
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (w[i] < 1e-10 * wmax) ++null_dim;
  return null_dim;
}

}  // namespace

TEST_CASE("rank_one_basis_examples", "[hs]") {
  Vector e1 = basis_vector(2, 0), e2 = basis_vector(2, 1);

  Matrix m11 = hs::rank_one(e1, e1);
  CHECK(m11(0, 0) == Complex(1.0));
  CHECK(dist(m11, unit_matrix(2, 0, 0)) == 0.0);

  // e1 -> e2, every other column zero.
  Matrix m12 = hs::rank_one(e1, e2);
  CHECK(dist(m12, unit_matrix(2, 1, 0)) == 0.0);
  Vector x = Vector::Zero(2);
  x << Complex(3.0, 1.0), Complex(0.0);
  CHECK((m12 * x - Complex(3.0, 1.0) * e2).norm() == 0.0);
}

TEST_CASE("rank_one_action_matches_inner_product", "[hs]") {
  std::mt19937_64 rng(101);
  for (int rep = 0; rep < 20; ++rep) {
    Vector e = random_vector(rng, 3), f = random_vector(rng, 3), x = random_vector(rng, 3);
    Matrix m = hs::rank_one(e, f);
    Complex coeff = e.dot(x);  // Eigen dot conjugates the first argument
    CHECK((m * x - coeff * f).norm() < 1e-12);
  }
}

TEST_CASE("rank_one_hs_norm_is_product_of_norms", "[hs]") {
  std::mt19937_64 rng(102);
  for (int rep = 0; rep < 20; ++rep) {
    Vector e = random_vector(rng, 4), f = random_vector(rng, 4);
    Matrix m = hs::rank_one(e, f);
    double norm_sq = testutil::naive_hs_inner(m, m).real();
    double expected = e.squaredNorm() * f.squaredNorm();
    CHECK(std::abs(norm_sq - expected) < 1e-10 * std::max(1.0, expected));
  }
}

TEST_CASE("rank_one_rejects_length_mismatch", "[hs]") {
  CHECK_THROWS_AS(hs::rank_one(Vector::Zero(2), Vector::Zero(3)), std::invalid_argument);
}

TEST_CASE("hs_inner_examples_and_oracle", "[hs]") {
  CHECK(hs::hs_inner(Matrix::Identity(2, 2), Matrix::Identity(2, 2)) == Complex(2.0));

  // Distinct matrix units are orthogonal.
  Vector e1 = basis_vector(3, 0), e2 = basis_vector(3, 1), e3 = basis_vector(3, 2);
  CHECK(std::abs(hs::hs_inner(hs::rank_one(e1, e2), hs::rank_one(e1, e3))) == 0.0);

  std::mt19937_64 rng(103);
  for (int rep = 0; rep < 20; ++rep) {
    Matrix x = random_matrix(rng, 4, 4), y = random_matrix(rng, 4, 4);
    CHECK(std::abs(hs::hs_inner(x, y) - testutil::naive_hs_inner(x, y)) < 1e-12);
  }
}

TEST_CASE("hs_inner_is_sesquilinear_and_positive", "[hs]") {
  std::mt19937_64 rng(104);
  Matrix x = random_matrix(rng, 3, 3), y = random_matrix(rng, 3, 3), z = random_matrix(rng, 3, 3);
  Complex a = randn_complex(rng), b = randn_complex(rng);
  Complex lhs = hs::hs_inner(a * x + b * y, z);
  Complex rhs = std::conj(a) * hs::hs_inner(x, z) + std::conj(b) * hs::hs_inner(y, z);
  CHECK(std::abs(lhs - rhs) < 1e-12);
  Complex lin = hs::hs_inner(z, a * x + b * y);
  CHECK(std::abs(lin - a * hs::hs_inner(z, x) - b * hs::hs_inner(z, y)) < 1e-12);

  CHECK(hs::hs_inner(x, x).real() > 0.0);
  CHECK(std::abs(hs::hs_inner(x, x).imag()) < 1e-14);
  CHECK(std::abs(hs::hs_inner(Matrix::Zero(3, 3), Matrix::Zero(3, 3))) == 0.0);
  CHECK_THROWS_AS(hs::hs_inner(x, Matrix::Zero(2, 2)), std::invalid_argument);
}

TEST_CASE("sandwich_apply_examples_and_oracle", "[hs]") {
  std::mt19937_64 rng(105);
  Matrix x = random_matrix(rng, 2, 2);

  // Identity pair acts trivially.
  auto id_op = hs::sandwich(Matrix::Identity(2, 2), Matrix::Identity(2, 2));
  CHECK(dist(hs::sandwich_apply(id_op, x), x) == 0.0);

  // Left factor diag(1,2) scales rows.
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = 2.0;
  Matrix ones = Matrix::Ones(2, 2);
  Matrix scaled = hs::sandwich_apply(hs::sandwich(d, Matrix::Identity(2, 2)), ones);
  CHECK(scaled(0, 0) == Complex(1.0));
  CHECK(scaled(1, 0) == Complex(2.0));

  for (int rep = 0; rep < 10; ++rep) {
    Matrix a = random_matrix(rng, 4, 4), b = random_matrix(rng, 4, 4), y = random_matrix(rng, 4, 4);
    Matrix got = hs::sandwich_apply(hs::sandwich(a, b), y);
    Matrix want = testutil::naive_mul(testutil::naive_mul(a, y), b.adjoint());
    CHECK(dist(got, want) < 1e-12);
  }
}

TEST_CASE("sandwich_compose_law", "[hs]") {
  std::mt19937_64 rng(106);
  auto id2 = hs::sandwich(Matrix::Identity(3, 3), Matrix::Identity(3, 3));
  Matrix a = random_matrix(rng, 3, 3), b = random_matrix(rng, 3, 3);
  auto op = hs::sandwich(a, b);
  CHECK(dist(hs::sandwich_compose(op, id2).left, a) == 0.0);

  // (A v 1)(1 v B) = (A v B).
  auto left = hs::sandwich(a, Matrix::Identity(3, 3));
  auto right = hs::sandwich(Matrix::Identity(3, 3), b);
  auto prod = hs::sandwich_compose(left, right);
  CHECK(dist(prod.left, a) == 0.0);
  CHECK(dist(prod.right, b) == 0.0);

  for (int rep = 0; rep < 10; ++rep) {
    auto f = hs::sandwich(random_matrix(rng, 3, 3), random_matrix(rng, 3, 3));
    auto g = hs::sandwich(random_matrix(rng, 3, 3), random_matrix(rng, 3, 3));
    Matrix x = random_matrix(rng, 3, 3);
    Matrix seq = hs::sandwich_apply(f, hs::sandwich_apply(g, x));
    Matrix fused = hs::sandwich_apply(hs::sandwich_compose(f, g), x);
    double scale = std::max(1.0, max_abs(seq));
    CHECK(dist(seq, fused) < 1e-12 * scale);
  }
}

TEST_CASE("sandwich_adjoint_matches_inner_product", "[hs]") {
  std::mt19937_64 rng(107);
  auto id2 = hs::sandwich(Matrix::Identity(2, 2), Matrix::Identity(2, 2));
  auto adj_id = hs::sandwich_adjoint(id2);
  CHECK(dist(adj_id.left, Matrix::Identity(2, 2)) == 0.0);

  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = Complex(0.0, 1.0);
  auto adj = hs::sandwich_adjoint(hs::sandwich(d, Matrix::Identity(2, 2)));
  CHECK(adj.left(0, 0) == Complex(0.0, -1.0));

  for (int rep = 0; rep < 10; ++rep) {
    auto op = hs::sandwich(random_matrix(rng, 3, 3), random_matrix(rng, 3, 3));
    Matrix x = random_matrix(rng, 3, 3), y = random_matrix(rng, 3, 3);
    Complex lhs = hs::hs_inner(hs::sandwich_apply(op, x), y);
    Complex rhs = hs::hs_inner(x, hs::sandwich_apply(hs::sandwich_adjoint(op), y));
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("schatten_norm_examples", "[hs]") {
  CHECK(hs::schatten_norm(Matrix::Identity(3, 3), 1.0) == Catch::Approx(3.0).margin(1e-12));

  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = 4.0;
  CHECK(hs::schatten_norm(d, 2.0) == Catch::Approx(5.0).margin(1e-12));
  CHECK(hs::schatten_norm(d, std::numeric_limits<double>::infinity()) ==
        Catch::Approx(4.0).margin(1e-12));

  CHECK_THROWS_AS(hs::schatten_norm(d, 0.5), std::invalid_argument);
}

TEST_CASE("schatten_norm_matches_eigenvalue_oracle", "[hs]") {
  std::mt19937_64 rng(108);
  for (int rep = 0; rep < 10; ++rep) {
    Matrix x = random_matrix(rng, 4, 4);
    RealVector sv = testutil::eig_singular_values(x);
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      double want = 0.0;
      for (Eigen::Index i = 0; i < sv.size(); ++i) want += std::pow(sv[i], p);
      want = std::pow(want, 1.0 / p);
      CHECK(std::abs(hs::schatten_norm(x, p) - want) < 1e-9 * std::max(1.0, want));
    }
    CHECK(std::abs(hs::schatten_norm(x, 2.0) - std::sqrt(hs::hs_inner(x, x).real())) < 1e-10);
  }
}

TEST_CASE("schatten_minkowski_inequality", "[hs]") {
  std::mt19937_64 rng(109);
  const double ps[] = {1.0, 1.5, 2.0, 3.0, std::numeric_limits<double>::infinity()};
  for (int rep = 0; rep < 50; ++rep) {
    Matrix a = random_matrix(rng, 4, 4), b = random_matrix(rng, 4, 4);
    for (double p : ps) {
      double sum = hs::schatten_norm(a + b, p);
      double split = hs::schatten_norm(a, p) + hs::schatten_norm(b, p);
      CHECK(sum <= split + 1e-10 * std::max(1.0, split));
    }
  }
}

TEST_CASE("trace_inequality_examples", "[hs]") {
  auto idrep = hs::trace_inequality_check(Matrix::Identity(2, 2), Matrix::Identity(2, 2));
  CHECK(idrep.lhs == Catch::Approx(2.0).margin(1e-12));
  CHECK(idrep.mid == Catch::Approx(2.0).margin(1e-12));
  CHECK(idrep.rhs == Catch::Approx(2.0).margin(1e-12));
  CHECK(idrep.holds);

  Matrix a = Matrix::Zero(2, 2), b = Matrix::Identity(2, 2);
  a(0, 0) = 2.0;
  auto rep = hs::trace_inequality_check(a, b);
  CHECK(rep.lhs == Catch::Approx(2.0).margin(1e-12));
  CHECK(rep.mid == Catch::Approx(2.0).margin(1e-12));
  CHECK(rep.rhs == Catch::Approx(4.0).margin(1e-12));
  CHECK(rep.holds);
}

TEST_CASE("trace_inequality_random_chain", "[hs]") {
  std::mt19937_64 rng(110);
  for (int rep = 0; rep < 200; ++rep) {
    int n = 2 + int(rng() % 4);
    Matrix a = random_matrix(rng, n, n), b = random_matrix(rng, n, n);
    CHECK(hs::trace_inequality_check(a, b).holds);
  }
}

TEST_CASE("polar_decompose_examples", "[hs]") {
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 2.0;
  d(1, 1) = 3.0;
  auto pd = hs::polar_decompose(d);
  CHECK(dist(pd.u, Matrix::Identity(2, 2)) < 1e-12);
  CHECK(dist(pd.p, d) < 1e-12);

  Matrix rot = Matrix::Zero(2, 2);
  rot(0, 1) = -1.0;
  rot(1, 0) = 1.0;
  auto pr = hs::polar_decompose(rot);
  CHECK(dist(pr.u, rot) < 1e-12);
  CHECK(dist(pr.p, Matrix::Identity(2, 2)) < 1e-12);
}

TEST_CASE("polar_decompose_random_properties", "[hs]") {
  std::mt19937_64 rng(111);
  for (int rep = 0; rep < 20; ++rep) {
    Matrix t = random_matrix(rng, 4, 4);
    auto pd = hs::polar_decompose(t);
    double scale = std::max(1.0, max_abs(t));
    CHECK(dist(pd.u * pd.p, t) < 1e-10 * scale);
    CHECK(dist(pd.u.adjoint() * pd.u, Matrix::Identity(4, 4)) < 1e-12);
    // |T†| = U |T| U†.
    Matrix abs_t_star = herm_apply(herm_eig(Matrix(t * t.adjoint())),
                                   [](double w) { return std::sqrt(std::max(0.0, w)); });
    CHECK(dist(abs_t_star, pd.u * pd.p * pd.u.adjoint()) < 1e-10 * scale);
  }
}

TEST_CASE("polar_decompose_singular_input_errors", "[hs]") {
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 1.0;
  try {
    hs::polar_decompose(d);
    FAIL("expected RankDeficiencyError");
  } catch (const RankDeficiencyError& err) {
    CHECK(err.sigma_min < 1e-12);
    CHECK(err.sigma_max == Catch::Approx(1.0));
  }
}

TEST_CASE("commutant_dimension_small_cases", "[hs]") {
  CHECK(hs::commutant_dimension(1) == 1);
  CHECK(hs::commutant_dimension(2) == 4);
  CHECK(hs::commutant_dimension(3) == 9);
}

TEST_CASE("commutant_dimension_matches_gram_oracle", "[hs]") {
  for (int n = 1; n <= 3; ++n)
    CHECK(hs::commutant_dimension(n) == commutant_dimension_gram_oracle(n));
}

TEST_CASE("commutant_dimension_rejects_large_n", "[hs]") {
  CHECK_THROWS_AS(hs::commutant_dimension(5), std::length_error);
  CHECK_THROWS_AS(hs::commutant_dimension(0), std::invalid_argument);
}
