#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "hopf/matrix.hpp"

using namespace hopf;

namespace {

Matrix column(const Field& f, std::initializer_list<long long> xs) {
  Matrix b(static_cast<int>(xs.size()), 1, f);
  int i = 0;
  for (long long x : xs) b.at(i++, 0) = Scalar::from_int(f, x);
  return b;
}

}  // namespace

TEST_CASE("solve against the identity") {
  Field Q = Field::rationals();
  Matrix I = Matrix::identity(3, Q);
  auto x = solve_linear(I, column(Q, {1, 2, 3}));
  REQUIRE(x);
  CHECK(*x == column(Q, {1, 2, 3}));
}

TEST_CASE("inconsistent system returns none") {
  Field Q = Field::rationals();
  Matrix A(2, 2, Q);
  A.at(0, 0) = Scalar::from_int(Q, 1);
  A.at(0, 1) = Scalar::from_int(Q, 1);
  A.at(1, 0) = Scalar::from_int(Q, 2);
  A.at(1, 1) = Scalar::from_int(Q, 2);
  CHECK(!solve_linear(A, column(Q, {1, 3})));
  CHECK(rank(A) == 1);
}

TEST_CASE("underdetermined system sets free variables to zero") {
  Field Q = Field::rationals();
  Matrix A(1, 3, Q);
  A.at(0, 0) = Scalar::from_int(Q, 1);
  A.at(0, 1) = Scalar::from_int(Q, 2);
  A.at(0, 2) = Scalar::from_int(Q, 5);
  auto x = solve_linear(A, column(Q, {7}));
  REQUIRE(x);
  CHECK(*x == column(Q, {7, 0, 0}));
}

TEST_CASE("random invertible solve round trip over GF(7)") {
  Field F = Field::gf(7);
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<int> d(0, 6);
  int done = 0;
  while (done < 25) {
    Matrix A(6, 6, F);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) A.at(i, j) = Scalar::from_int(F, d(rng));
    auto Ainv = invert_matrix(A);
    if (!Ainv) continue;
    ++done;
    CHECK(*Ainv * A == Matrix::identity(6, F));
    CHECK(A * *Ainv == Matrix::identity(6, F));
    Matrix x(6, 1, F);
    for (int i = 0; i < 6; ++i) x.at(i, 0) = Scalar::from_int(F, d(rng));
    auto sol = solve_linear(A, A * x);
    REQUIRE(sol);
    CHECK(*sol == x);
  }
}

TEST_CASE("swap matrix is its own inverse") {
  Field Q = Field::rationals();
  Matrix P(2, 2, Q);
  P.at(0, 1) = Scalar::one(Q);
  P.at(1, 0) = Scalar::one(Q);
  auto Pi = invert_matrix(P);
  REQUIRE(Pi);
  CHECK(*Pi == P);
  CHECK(invert_matrix(Matrix::identity(4, Q)).value() == Matrix::identity(4, Q));
}

TEST_CASE("nullspace basis is deterministic") {
  Field Q = Field::rationals();
  Matrix A(1, 3, Q);
  A.at(0, 0) = Scalar::from_int(Q, 1);
  A.at(0, 1) = Scalar::from_int(Q, -1);
  A.at(0, 2) = Scalar::from_int(Q, 2);
  auto ns = nullspace_basis(A);
  REQUIRE(ns.size() == 2);
  CHECK(ns[0][0] == Scalar::from_int(Q, 1));
  CHECK(ns[0][1] == Scalar::from_int(Q, 1));
  CHECK(ns[0][2].is_zero());
  CHECK(ns[1][0] == Scalar::from_int(Q, -2));
  CHECK(ns[1][2] == Scalar::from_int(Q, 1));
}

TEST_CASE("kron flat index convention") {
  Field Q = Field::rationals();
  Matrix A(2, 2, Q), B(2, 2, Q);
  A.at(0, 1) = Scalar::from_int(Q, 2);
  B.at(1, 0) = Scalar::from_int(Q, 3);
  Matrix K = A.kron(B);
  CHECK(K.at(0 * 2 + 1, 1 * 2 + 0) == Scalar::from_int(Q, 6));
}

TEST_CASE("solve over Q(t)") {
  Field K = Field::rational_functions();
  Scalar t = Scalar::variable(K);
  Matrix A(2, 2, K);
  A.at(0, 0) = t;
  A.at(0, 1) = Scalar::one(K);
  A.at(1, 0) = Scalar::one(K);
  A.at(1, 1) = t;
  auto Ai = invert_matrix(A);
  REQUIRE(Ai);
  CHECK(*Ai * A == Matrix::identity(2, K));
}
