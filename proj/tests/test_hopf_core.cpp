#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "hopf/catalog.hpp"

using namespace hopf;

namespace {

HopfPtr kz2(const Field& f) { return make_group_algebra(f, cyclic_group_table(2), {"1", "g"}); }

}  // namespace

TEST_CASE("kZ2 passes all axioms") {
  auto H = kz2(Field::rationals());
  AxiomReport rep = check_axioms(*H);
  CHECK(rep.all_pass());
  CHECK(rep.checks.size() == 8);
}

TEST_CASE("H4 passes all axioms over Q") {
  auto H = make_h4(Field::rationals());
  AxiomReport rep = check_axioms(*H);
  INFO(rep.summary(*H));
  CHECK(rep.all_pass());
  // g h = gh, h g = -gh
  Vec gh = H->product(H->basis(1), H->basis(2));
  CHECK(gh == H->basis(3));
  Vec hg = H->product(H->basis(2), H->basis(1));
  Vec minus_gh = H->basis(3);
  minus_gh[3] = -minus_gh[3];
  CHECK(hg == minus_gh);
  // Delta(gh) = gh (x) 1 + g (x) gh
  Vec dgh = H->coproduct(H->basis(3));
  Vec expect = zero_vec(16, H->field());
  expect[3 * 4 + 0] = Scalar::one(H->field());
  expect[1 * 4 + 3] = Scalar::one(H->field());
  CHECK(vec_eq(dgh, expect));
}

TEST_CASE("H4 rejects characteristic 2") {
  CHECK_THROWS_AS(make_h4(Field::gf(2)), char_two_unsupported);
}

TEST_CASE("corrupting Delta(h) breaks an axiom with a witness") {
  auto H = make_h4(Field::rationals());
  int n = 4;
  std::vector<Scalar> comult(n * n * n, Scalar::zero(H->field()));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        comult[(static_cast<size_t>(k) * n + i) * n + j] = H->comult(i, j, k);
  // Delta(h) := h (x) 1 + 1 (x) h  (primitive instead of twisted-primitive)
  auto set = [&](int k, int i, int j, long long v) {
    comult[(static_cast<size_t>(k) * n + i) * n + j] = Scalar::from_int(H->field(), v);
  };
  set(2, 2, 1, 0);
  set(2, 2, 0, 1);
  set(2, 0, 2, 1);
  std::vector<Scalar> mult(n * n * n, Scalar::zero(H->field()));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        mult[(static_cast<size_t>(i) * n + j) * n + k] = H->mult(k, i, j);
  FinHopf bad(H->field(), H->labels(), mult, comult, H->unit(), H->counit(), H->antipode());
  AxiomReport rep = check_axioms(bad);
  CHECK(!rep.all_pass());
  bool witnessed = false;
  for (const auto& c : rep.checks)
    if (!c.pass && c.witness) witnessed = true;
  CHECK(witnessed);
}

TEST_CASE("dual of kZ2 passes axioms; dual of dual is the identity") {
  auto H = kz2(Field::rationals());
  FinHopf Hd = dual(*H);
  CHECK(check_axioms(Hd).all_pass());
  CHECK(same_structure(dual(Hd), *H));

  auto H4 = make_h4(Field::rationals());
  FinHopf H4d = dual(*H4);
  CHECK(check_axioms(H4d).all_pass());
  FinHopf H4dd = dual(H4d);
  CHECK(same_structure(H4dd, *H4));
  CHECK(H4dd.labels() == H4->labels());
}

TEST_CASE("variants are involutions and kZ2 is fixed by op") {
  auto H4 = make_h4(Field::rationals());
  FinHopf op = variant(*H4, VariantKind::op);
  CHECK(check_axioms(op).all_pass());
  CHECK(same_structure(variant(op, VariantKind::op), *H4));
  FinHopf cop = variant(*H4, VariantKind::cop);
  CHECK(check_axioms(cop).all_pass());
  CHECK(same_structure(variant(cop, VariantKind::cop), *H4));
  CHECK(same_structure(variant(*H4, VariantKind::opcop),
                       variant(variant(*H4, VariantKind::op), VariantKind::cop)));

  auto Z2 = kz2(Field::rationals());
  CHECK(same_structure(variant(*Z2, VariantKind::op), *Z2));
}

TEST_CASE("dual-op compatibility: dual(op) = cop(dual)") {
  auto H4 = make_h4(Field::gf(7));
  FinHopf a = dual(variant(*H4, VariantKind::op));
  FinHopf b = variant(dual(*H4), VariantKind::cop);
  CHECK(same_structure(a, b));
}

TEST_CASE("H4 product tensor differs from its opposite exactly at the g-h mixed pairs") {
  auto H = make_h4(Field::rationals());
  FinHopf op = variant(*H, VariantKind::op);
  std::vector<std::pair<int, int>> diff;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        if (H->mult(k, i, j) != op.mult(k, i, j)) {
          diff.emplace_back(i, j);
          break;
        }
  // anticommutation shows up where g meets h or gh; h-gh products vanish
  std::vector<std::pair<int, int>> expect{{1, 2}, {1, 3}, {2, 1}, {3, 1}};
  CHECK(diff == expect);
}

TEST_CASE("antipode of H4: S^2 != id, S^4 = id, invertible") {
  auto H = make_h4(Field::rationals());
  const Matrix& S = H->antipode();
  Matrix S2 = S * S;
  Matrix I = Matrix::identity(4, H->field());
  CHECK(S2 != I);
  CHECK(S2 * S2 == I);
  CHECK(invert_matrix(S).has_value());
}

TEST_CASE("derive_antipode recovers stored antipodes") {
  auto Z2 = kz2(Field::rationals());
  auto S = derive_antipode(Z2->without_antipode());
  REQUIRE(S);
  CHECK(*S == Matrix::identity(2, Z2->field()));

  auto H4 = make_h4(Field::rationals());
  auto S4 = derive_antipode(H4->without_antipode());
  REQUIRE(S4);
  CHECK(*S4 == H4->antipode());

  auto H4gf = make_h4(Field::gf(7));
  auto S4gf = derive_antipode(H4gf->without_antipode());
  REQUIRE(S4gf);
  CHECK(*S4gf == H4gf->antipode());

  // the rest of the catalog
  Field Q = Field::rationals();
  std::vector<HopfPtr> catalog = {
      make_group_algebra(Q, cyclic_group_table(3)),
      make_group_algebra(Q, klein_four_table()),
      make_group_algebra(Field::gf(5), symmetric3_table()),
      std::make_shared<const FinHopf>(dual(*make_h4(Q))),
  };
  for (const auto& H : catalog) {
    auto S = derive_antipode(H->without_antipode());
    REQUIRE(S);
    CHECK(*S == H->antipode());
  }
}

TEST_CASE("the 2-element monoid algebra has no antipode") {
  // basis {1, z}, z^2 = z, Delta z = z (x) z: a bialgebra, not Hopf
  Field Q = Field::rationals();
  int n = 2;
  std::vector<Scalar> mult(8, Scalar::zero(Q));
  std::vector<Scalar> comult(8, Scalar::zero(Q));
  auto M = [&](int i, int j, int k) {
    mult[(static_cast<size_t>(i) * n + j) * n + k] = Scalar::one(Q);
  };
  M(0, 0, 0);
  M(0, 1, 1);
  M(1, 0, 1);
  M(1, 1, 1);
  comult[(0 * 2 + 0) * 2 + 0] = Scalar::one(Q);
  comult[(1 * 2 + 1) * 2 + 1] = Scalar::one(Q);
  Vec unit = zero_vec(2, Q);
  unit[0] = Scalar::one(Q);
  Vec counit(2, Scalar::one(Q));
  FinHopf B(Q, {"1", "z"}, mult, comult, unit, counit);
  CHECK(check_bialgebra_axioms(B).all_pass());
  CHECK(!derive_antipode(B).has_value());
}

TEST_CASE("is_morphism: identity and antipode properties") {
  auto H = make_h4(Field::rationals());
  Matrix id = Matrix::identity(4, H->field());
  CHECK(is_morphism(id, *H, *H, MorphKind::hopf).ok);

  // S(1) = 1, eps(S(x)) = eps(x)
  CHECK(vec_eq(H->apply_antipode(H->unit()), H->unit()));
  for (int k = 0; k < 4; ++k)
    CHECK(H->counit_of(H->apply_antipode(H->basis(k))) == H->counit()[k]);

  // S is an algebra morphism H -> H^op for every catalog algebra
  Field Q = Field::rationals();
  std::vector<HopfPtr> catalog = {
      H,
      std::make_shared<const FinHopf>(dual(*H)),
      make_group_algebra(Q, cyclic_group_table(3)),
      make_group_algebra(Q, klein_four_table()),
      make_group_algebra(Q, symmetric3_table()),
  };
  for (const auto& A : catalog) {
    FinHopf Aop = variant(*A, VariantKind::op, false);
    CHECK(is_morphism(A->antipode(), *A, Aop, MorphKind::algebra).ok);
  }
  // and an anti-coalgebra morphism, i.e. a coalgebra morphism H -> H^cop
  FinHopf cop = variant(*H, VariantKind::cop);
  CHECK(is_morphism(H->antipode(), *H, cop, MorphKind::coalgebra).ok);
  // a genuinely wrong map is rejected with a witness
  Matrix bad = Matrix::identity(4, H->field());
  bad.at(2, 2) = Scalar::from_int(H->field(), 2);
  CheckResult r = is_morphism(bad, *H, *H, MorphKind::hopf);
  CHECK(!r.ok);
  CHECK(!r.witness.empty());
}

TEST_CASE("H4 self-duality matrix is a Hopf isomorphism") {
  for (Field f : {Field::rationals(), Field::gf(5), Field::gf(7)}) {
    auto H = make_h4(f);
    FinHopf Hd = dual(*H);
    Matrix theta = h4_self_duality(*H, Hd);
    CHECK(is_morphism(theta, *H, Hd, MorphKind::hopf).ok);
    CHECK(invert_matrix(theta).has_value());
    // image of g is f_1 - f_g, image of 1 is f_1 + f_g
    CHECK(theta.at(0, 1) == Scalar::one(f));
    CHECK(theta.at(1, 1) == Scalar::from_int(f, -1));
    CHECK(theta.at(0, 0) == Scalar::one(f));
    CHECK(theta.at(1, 0) == Scalar::one(f));
  }
}

TEST_CASE("group algebra constructor rejects non-groups") {
  Field Q = Field::rationals();
  // z^2 = z monoid table
  CHECK_THROWS_AS(make_group_algebra(Q, {{0, 1}, {1, 1}}), not_a_group);
  // non-associative magma
  CHECK_THROWS_AS(make_group_algebra(Q, {{0, 1, 2}, {1, 2, 1}, {2, 0, 0}}), not_a_group);
  // Z3 over GF(7) passes axioms
  auto Z3 = make_group_algebra(Field::gf(7), cyclic_group_table(3));
  CHECK(check_axioms(*Z3).all_pass());
  // S3 is noncommutative and still a Hopf algebra
  auto S3 = make_group_algebra(Q, symmetric3_table());
  CHECK(check_axioms(*S3).all_pass());
}

TEST_CASE("iterated coproduct is left-nested and coassociative on H4") {
  auto H = make_h4(Field::rationals());
  Vec d3 = H->iterated_coproduct(H->basis(2), 3);
  // Delta^2(h) = h(x)g(x)g + 1(x)h(x)g + 1(x)1(x)h
  Vec expect = zero_vec(64, H->field());
  auto idx = [](int a, int b, int c) { return (static_cast<size_t>(a) * 4 + b) * 4 + c; };
  expect[idx(2, 1, 1)] = Scalar::one(H->field());
  expect[idx(0, 2, 1)] = Scalar::one(H->field());
  expect[idx(0, 0, 2)] = Scalar::one(H->field());
  CHECK(vec_eq(d3, expect));
}
