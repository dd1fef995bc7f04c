#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arh/fp.hpp"

using namespace arh;

namespace {

Mat random_mat(const Fp& F, int r, int c, std::mt19937_64& g) {
  Mat m(F, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = (uint32_t)(g() % F.p());
  return m;
}

}  // namespace

TEST_CASE("field arithmetic") {
  Fp F(10007);
  CHECK(F.add(10006, 5) == 4);
  CHECK(F.sub(3, 5) == 10005);
  CHECK(F.mul(F.inv(123), 123) == 1);
  CHECK(F.reduce(-1) == 10006);
  CHECK_THROWS_AS(Fp(10), Error);
}

TEST_CASE("rank basics") {
  Fp F(10007);
  CHECK(rank(Mat::identity(F, 3)) == 3);
  CHECK(rank(Mat(F, 2, 5)) == 0);
  // row2 = 2 * row1
  CHECK(rank(Mat::from_rows(F, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("nullspace basics") {
  Fp F(10007);
  CHECK(nullspace(Mat::identity(F, 3)).dim() == 0);
  CHECK(nullspace(Mat(F, 2, 3)).dim() == 3);
  Subspace s = nullspace(Mat::from_rows(F, {{1, 1}}));
  REQUIRE(s.dim() == 1);
  CHECK(s.basis()(0, 0) == 1);
  CHECK(s.basis()(1, 0) == F.neg(1));
}

TEST_CASE("rank-nullity on random matrices") {
  Fp F(10007);
  std::mt19937_64 g(12345);
  for (int t = 0; t < 50; ++t) {
    int r = 1 + (int)(g() % 6), c = 1 + (int)(g() % 6);
    Mat A = random_mat(F, r, c, g);
    CHECK(rank(A) + nullspace(A).dim() == c);
    // A annihilates its nullspace
    CHECK((A * nullspace(A).basis()).is_zero());
  }
}

TEST_CASE("subspace canonical form is span-independent") {
  Fp F(10007);
  std::mt19937_64 g(99);
  for (int t = 0; t < 30; ++t) {
    Mat v = random_mat(F, 5, 3, g);
    Subspace s1 = Subspace::span_of(v);
    // shuffle/extend the spanning set: same space, same data
    Mat w = Mat::hstack(v.col(2), Mat::hstack(v, v.col(1)));
    Subspace s2 = Subspace::span_of(w);
    CHECK(s1 == s2);
    for (int k = 0; k < s1.dim(); ++k) CHECK(s1.contains(s1.basis().col(k)));
  }
}

TEST_CASE("quotient_data basics") {
  Fp F(10007);
  // U = 0 in k^2: projection is the identity
  QuotientData q0 = quotient_data(Subspace(F, 2));
  CHECK(q0.projection == Mat::identity(F, 2));
  // U = k^2 in k^2: quotient has dimension 0
  QuotientData q2 = quotient_data(column_space(Mat::identity(F, 2)));
  CHECK(q2.projection.rows() == 0);
  // U = span{(1,0)}: quotient dim 1, projection (0,1)
  Mat u(F, 2, 1);
  u(0, 0) = 1;
  QuotientData q1 = quotient_data(column_space(u));
  CHECK(q1.projection == Mat::from_rows(F, {{0, 1}}));
}

TEST_CASE("quotient_data identities") {
  Fp F(10007);
  std::mt19937_64 g(7);
  for (int t = 0; t < 40; ++t) {
    int n = 1 + (int)(g() % 6);
    int k = (int)(g() % (n + 1));
    Subspace U = Subspace::span_of(random_mat(F, n, k, g));
    QuotientData q = quotient_data(U);
    CHECK(q.projection.rows() == n - U.dim());
    CHECK((q.projection * q.section).is_identity());
    if (U.dim() > 0) CHECK((q.projection * U.basis()).is_zero());
  }
}

TEST_CASE("solve_exact") {
  Fp F(10007);
  std::mt19937_64 g(5);
  for (int t = 0; t < 30; ++t) {
    int n = 2 + (int)(g() % 4);
    int k = 1 + (int)(g() % n);
    Mat A = random_mat(F, n, k, g);
    if (rank(A) < k) continue;
    Mat X = random_mat(F, k, 2, g);
    Mat S = solve_exact(A, A * X);
    CHECK(S == X);
  }
}

TEST_CASE("determinism: identical inputs, identical outputs") {
  Fp F(10007);
  std::mt19937_64 g(2024);
  Mat A = random_mat(F, 6, 4, g);
  CHECK(nullspace(A).basis() == nullspace(A).basis());
  CHECK(quotient_data(column_space(A)).projection == quotient_data(column_space(A)).projection);
}
