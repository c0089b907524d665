#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bubble/matrix.hpp"
#include "bubble/params.hpp"

using namespace bubble;

namespace {

Matrix<Laurent> int_matrix(const std::vector<std::vector<long>>& rows) {
  const long n = static_cast<long>(rows.size());
  const long c = n ? static_cast<long>(rows[0].size()) : 0;
  Matrix<Laurent> m(n, c, Laurent(1));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < c; ++j) m.at(i, j) = Laurent::constant(1, rows[i][j]);
  return m;
}

Matrix<Laurent> random_int_matrix(std::mt19937& rng, long n) {
  std::uniform_int_distribution<long> entry(-4, 4);
  Matrix<Laurent> m(n, n, Laurent(1));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) m.at(i, j) = Laurent::constant(1, entry(rng));
  return m;
}

// independent oracle: rational Gaussian elimination
std::pair<long, Rat> reference_rank_det(const Matrix<Laurent>& m) {
  const long rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) {
      const auto& terms = m.at(i, j).terms();
      a[i][j] = terms.empty() ? Rat(0) : Rat(terms.begin()->second);
    }
  Rat det(1);
  long r = 0;
  for (long c = 0; c < cols && r < rows; ++c) {
    long pivot = -1;
    for (long i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) {
      det = 0;
      continue;
    }
    if (pivot != r) {
      std::swap(a[pivot], a[r]);
      det = -det;
    }
    det *= a[r][c];
    const Rat inv = Rat(1) / a[r][c];
    for (long i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const Rat f = a[i][c] * inv;
      for (long j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  if (r < rows) det = 0;
  return {r, det};
}

Matrix<Algebraic> rational_matrix(const Matrix<Laurent>& m) {
  const FieldPtr f = NumberField::rationals();
  Matrix<Algebraic> out(m.rows(), m.cols(), Algebraic::from_rational(f, Rat(0)));
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j) {
      const auto& terms = m.at(i, j).terms();
      out.at(i, j) = Algebraic::from_rational(
          f, terms.empty() ? Rat(0) : Rat(terms.begin()->second));
    }
  return out;
}

}  // namespace

TEST_CASE("determinant basics") {
  const Laurent zero1(1);
  CHECK(determinant(Matrix<Laurent>::identity(3, zero1, Laurent::one(1))) ==
        Laurent::one(1));

  Matrix<Laurent> diag(2, 2, Laurent(2));
  diag.at(0, 0) = Laurent::variable(2, 0);
  diag.at(1, 1) = Laurent::variable(2, 1);
  CHECK(determinant(diag) ==
        Laurent::variable(2, 0) * Laurent::variable(2, 1));

  Matrix<Laurent> g(2, 2, Laurent(1));
  g.at(0, 0) = Laurent::variable(1, 0);
  g.at(0, 1) = Laurent::one(1);
  g.at(1, 0) = Laurent::one(1);
  g.at(1, 1) = Laurent::variable(1, 0);
  CHECK(determinant(g) ==
        Laurent::variable(1, 0, 2) - Laurent::one(1));

  Matrix<Laurent> rect(2, 3, Laurent(1));
  CHECK_THROWS_AS(determinant(rect), std::invalid_argument);
}

TEST_CASE("determinant is multiplicative on random integer matrices") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> size(1, 5);
  for (int i = 0; i < 200; ++i) {
    const long n = size(rng);
    const Matrix<Laurent> a = random_int_matrix(rng, n);
    const Matrix<Laurent> b = random_int_matrix(rng, n);
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
  }
}

TEST_CASE("row swaps flip the determinant sign") {
  std::mt19937 rng(29);
  for (int i = 0; i < 100; ++i) {
    const Matrix<Laurent> a = random_int_matrix(rng, 4);
    Matrix<Laurent> b = a;
    for (long j = 0; j < 4; ++j) std::swap(b.at(1, j), b.at(2, j));
    CHECK(determinant(b) == Laurent(1) - determinant(a));
  }
}

TEST_CASE("rank basics") {
  const FieldPtr f = NumberField::cosine(4);
  const Algebraic zero = Algebraic::from_rational(f, Rat(0));
  const Algebraic one = Algebraic::from_rational(f, Rat(1));

  Matrix<Algebraic> d(2, 2, zero);
  d.at(1, 1) = Algebraic::generator(f);  // diag(0, sqrt 2)
  CHECK(rank(d) == 1);

  CHECK(rank(Matrix<Algebraic>(4, 4, zero)) == 0);
  CHECK(rank(Matrix<Algebraic>::identity(5, zero, one)) == 5);

  CHECK_THROWS_AS(rank(Matrix<Laurent>(2, 2, Laurent(1))),
                  std::invalid_argument);
}

TEST_CASE("rank agrees with the transpose") {
  std::mt19937 rng(31);
  const auto point = ParameterSpec::parse({"root:2", "root:4"});
  const Evaluator eval(point);
  std::uniform_int_distribution<int> exp(0, 2), pick(0, 3);
  for (int t = 0; t < 60; ++t) {
    Matrix<Algebraic> m(4, 5, Algebraic::from_rational(eval.field(), Rat(0)));
    for (long i = 0; i < 4; ++i)
      for (long j = 0; j < 5; ++j)
        if (pick(rng) != 0)
          m.at(i, j) = eval(Laurent::monomial(2, {exp(rng), exp(rng)}, 1));
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("rank and determinant agree with a rational reference elimination") {
  std::mt19937 rng(37);
  std::uniform_int_distribution<long> size(1, 6);
  const FieldPtr q = NumberField::rationals();
  for (int t = 0; t < 150; ++t) {
    const long n = size(rng);
    const Matrix<Laurent> m = random_int_matrix(rng, n);
    const auto [ref_rank, ref_det] = reference_rank_det(m);
    CHECK(rank(rational_matrix(m)) == ref_rank);
    const Laurent det = determinant(m);
    const Rat got = det.is_zero() ? Rat(0) : Rat(det.terms().begin()->second);
    CHECK(got == ref_det);
  }
}

TEST_CASE("symbolic determinant guard") {
  Matrix<Laurent> big(65, 65, Laurent(1));
  CHECK_THROWS_AS(determinant(big), std::invalid_argument);
  CHECK_NOTHROW(determinant(big, 65));
  CHECK(symbolic_dim_limit() == 64);

  setenv("BUBBLE_MAX_SYMBOLIC_DIM", "8", 1);
  CHECK(symbolic_dim_limit() == 8);
  Matrix<Laurent> nine(9, 9, Laurent(1));
  CHECK_THROWS_AS(determinant(nine), std::invalid_argument);
  setenv("BUBBLE_MAX_SYMBOLIC_DIM", "not-a-number", 1);
  CHECK(symbolic_dim_limit() == 64);
  unsetenv("BUBBLE_MAX_SYMBOLIC_DIM");
  CHECK(symbolic_dim_limit() == 64);
}

TEST_CASE("algebraic determinant") {
  const FieldPtr f = NumberField::cosine(4);
  const Algebraic s2 = Algebraic::generator(f);
  const Algebraic one = Algebraic::from_rational(f, Rat(1));
  Matrix<Algebraic> m(2, 2, Algebraic::from_rational(f, Rat(0)));
  m.at(0, 0) = s2;
  m.at(0, 1) = one;
  m.at(1, 0) = one;
  m.at(1, 1) = s2;
  CHECK(determinant(m) == one);  // 2 - 1
}
