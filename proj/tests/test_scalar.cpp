#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "hopf/scalar.hpp"

using namespace hopf;

TEST_CASE("rational arithmetic normalizes") {
  Field Q = Field::rationals();
  Scalar a = Scalar::from_rat(Q, BigRat(1) / 2);
  Scalar b = Scalar::from_rat(Q, BigRat(1) / 3);
  CHECK((a + b) == Scalar::from_rat(Q, BigRat(5) / 6));
  CHECK((a * b) == Scalar::from_rat(Q, BigRat(1) / 6));
  CHECK((a - a).is_zero());
}

TEST_CASE("GF(5) inverses") {
  Field F5 = Field::gf(5);
  Scalar two = Scalar::from_int(F5, 2);
  CHECK(two.inv() == Scalar::from_int(F5, 3));
  CHECK((two * two.inv()).is_one());
  CHECK_THROWS_AS(Scalar::zero(F5).inv(), division_by_zero);
  CHECK_THROWS_AS(Field::gf(6), structure_invalid);
}

TEST_CASE("rational function reduction: (t^2-1)/(t-1) = t+1") {
  QPoly t = QPoly::variable();
  QPoly num = t * t - QPoly(BigRat(1));
  QPoly den = t - QPoly(BigRat(1));
  Scalar s = Scalar::ratfun(num, den);
  CHECK(s.den() == QPoly(BigRat(1)));
  CHECK(s.num() == t + QPoly(BigRat(1)));
}

TEST_CASE("ratfun field ops keep the denominator monic and reduced") {
  Field K = Field::rational_functions();
  Scalar t = Scalar::variable(K);
  Scalar x = (t * t - Scalar::one(K)) / (t + Scalar::one(K));  // = t-1
  CHECK(x == t - Scalar::one(K));
  Scalar y = Scalar::one(K) / (t - Scalar::one(K));
  CHECK((y * (t - Scalar::one(K))).is_one());
  // denominator monic: 1/(2t-2) = (1/2)/(t-1)
  Scalar z = Scalar::one(K) / (Scalar::from_int(K, 2) * t - Scalar::from_int(K, 2));
  CHECK(z.den() == (QPoly::variable() - QPoly(BigRat(1))));
}

TEST_CASE("field mismatch is rejected") {
  Scalar q = Scalar::one(Field::rationals());
  Scalar f = Scalar::one(Field::gf(7));
  CHECK_THROWS_AS((void)(q + f), field_mismatch);
  Scalar t = Scalar::variable(Field::rational_functions());
  CHECK_THROWS_AS((void)(q * t), field_mismatch);
}

TEST_CASE("evaluation homomorphism Q(t) -> Q") {
  Field K = Field::rational_functions();
  Scalar t = Scalar::variable(K);
  Scalar s = (t * t + Scalar::from_int(K, 3)) / (t - Scalar::from_int(K, 2));
  Scalar v = s.eval_at(BigRat(4));
  CHECK(v == Scalar::from_rat(Field::rationals(), BigRat(19) / 2));
  CHECK_THROWS_AS(s.eval_at(BigRat(2)), division_by_zero);
}

TEST_CASE("scalar string round-trips visually") {
  Field K = Field::rational_functions();
  Scalar t = Scalar::variable(K);
  Scalar s = (t * t - Scalar::one(K)) / (t + Scalar::from_int(K, 2));
  CHECK(s.str() == "(t^2-1)/(t+2)");
  CHECK(Scalar::from_rat(Field::rationals(), BigRat(-3) / 2).str() == "-3/2");
  CHECK((t - t).str() == "0");
}

TEST_CASE("pow including negative exponents") {
  Field Q = Field::rationals();
  Scalar two = Scalar::from_int(Q, 2);
  CHECK(two.pow(10) == Scalar::from_int(Q, 1024));
  CHECK(two.pow(-2) == Scalar::from_rat(Q, BigRat(1) / 4));
  CHECK(two.pow(0).is_one());
}
