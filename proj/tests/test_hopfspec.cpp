#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "hopf/hopfspec.hpp"

using namespace hopf;

namespace {

HopfSpecDoc catalog_doc() {
  Field K = Field::rational_functions();
  auto H = make_h4(K);
  Scalar t = Scalar::variable(K);
  H4Family fam = h4_family(H, t);
  HopfSpecDoc doc;
  doc.field = K;
  doc.hopfs.push_back({"H4", H});
  doc.functionals.push_back({"r", "H4", fam.r});
  doc.functionals.push_back({"sigma", "H4", fam.sigma});
  doc.rmatrices.push_back({"R", "H4", fam.R});
  doc.ydmodules.push_back({"V", "H4", graded_comodule_v(H, fam.r)});
  YDAlgebra E = end_algebra(graded_comodule_v(H, fam.r), EndSide::standard);
  doc.ydalgebras.push_back({"EndV", "H4", E});
  return doc;
}

}  // namespace

TEST_CASE("scalar literal grammar") {
  Field Q = Field::rationals();
  CHECK(parse_scalar("5/6", Q) == Scalar::from_rat(Q, BigRat(5) / 6));
  CHECK(parse_scalar("-3/2", Q) == Scalar::from_rat(Q, BigRat(-3) / 2));
  CHECK(parse_scalar("2^10", Q) == Scalar::from_int(Q, 1024));
  Field K = Field::rational_functions();
  Scalar t = Scalar::variable(K);
  CHECK(parse_scalar("t^2-1", K) == t * t - Scalar::one(K));
  CHECK(parse_scalar("(t^2-1)/(t+2)", K) ==
        (t * t - Scalar::one(K)) / (t + Scalar::from_int(K, 2)));
  CHECK(parse_scalar("1/2*t", K) == t / Scalar::from_int(K, 2));
  Field F5 = Field::gf(5);
  CHECK(parse_scalar("3/2", F5) == Scalar::from_int(F5, 4));  // 3 * inv(2) = 3 * 3 = 9 = 4
  CHECK_THROWS_AS(parse_scalar("t", Q), parse_error);
  CHECK_THROWS_AS(parse_scalar("1+", Q), parse_error);
  CHECK_THROWS_AS(parse_scalar("(1", Q), parse_error);
}

TEST_CASE("round trip: parse(serialize(doc)) reproduces every catalog object") {
  HopfSpecDoc doc = catalog_doc();
  std::string text = serialize_hopfspec(doc);
  HopfSpecDoc back = parse_hopfspec(text);
  REQUIRE(back.hopfs.size() == 1);
  CHECK(same_structure(*back.hopfs[0].algebra, *doc.hopfs[0].algebra));
  CHECK(back.hopfs[0].algebra->labels() == doc.hopfs[0].algebra->labels());
  REQUIRE(back.functionals.size() == 2);
  CHECK(vec_eq(back.functionals[0].value.coef, doc.functionals[0].value.coef));
  CHECK(vec_eq(back.functionals[1].value.coef, doc.functionals[1].value.coef));
  REQUIRE(back.rmatrices.size() == 1);
  CHECK(vec_eq(back.rmatrices[0].value.coef, doc.rmatrices[0].value.coef));
  REQUIRE(back.ydmodules.size() == 1);
  CHECK(vec_eq(back.ydmodules[0].value.act_, doc.ydmodules[0].value.act_));
  CHECK(vec_eq(back.ydmodules[0].value.coact_, doc.ydmodules[0].value.coact_));
  REQUIRE(back.ydalgebras.size() == 1);
  CHECK(vec_eq(back.ydalgebras[0].value.mult_, doc.ydalgebras[0].value.mult_));
  CHECK(vec_eq(back.ydalgebras[0].value.unit, doc.ydalgebras[0].value.unit));
  // serialization is stable
  CHECK(serialize_hopfspec(back) == text);
}

TEST_CASE("round trip over GF(7) and Q") {
  for (Field f : {Field::rationals(), Field::gf(7)}) {
    auto H = make_h4(f);
    HopfSpecDoc doc;
    doc.field = f;
    doc.hopfs.push_back({"H4", H});
    HopfSpecDoc back = parse_hopfspec(serialize_hopfspec(doc));
    CHECK(same_structure(*back.hopfs[0].algebra, *H));
    CHECK(check_axioms(*back.hopfs[0].algebra).all_pass());
  }
  // the 16-dimensional double round-trips too
  auto H = make_h4(Field::rationals());
  DoubleResult dr = build_double(H, false);
  HopfSpecDoc doc;
  doc.field = Field::rationals();
  doc.hopfs.push_back({"DH4", dr.double_algebra});
  doc.rmatrices.push_back({"R", "DH4", dr.R});
  HopfSpecDoc back = parse_hopfspec(serialize_hopfspec(doc));
  CHECK(same_structure(*back.hopfs[0].algebra, *dr.double_algebra));
  CHECK(vec_eq(back.rmatrices[0].value.coef, dr.R.coef));
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_hopfspec("hopfspec 1\nfield rationals\nhopf X\n  dim 1\n  basis e\n  mult e e q 1\nend\n");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line == 6);
    CHECK(e.column > 0);
    CHECK(std::string(e.what()).find("unknown basis label") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_hopfspec(""), parse_error);
  CHECK_THROWS_AS(parse_hopfspec("hopfspec 2\nfield rationals\n"), parse_error);
  CHECK_THROWS_AS(parse_hopfspec("hopfspec 1\nfield gf 6\n"), parse_error);
  CHECK_THROWS_AS(parse_hopfspec("hopfspec 1\nfield rationals\nhopf X\n  dim 1\n  basis e\n"),
                  parse_error);
  // functional referencing an unknown host
  CHECK_THROWS_AS(
      parse_hopfspec("hopfspec 1\nfield rationals\nfunctional f\n  host X\n  arity 1\nend\n"),
      parse_error);
}

TEST_CASE("comments and blank lines are ignored") {
  std::string text = R"(hopfspec 1
# a comment
field gf 3

hopf Z2   # trailing comment
  dim 2
  basis 1 g
  unit 1 1
  counit 1 1
  counit g 1
  mult 1 1 1 1
  mult 1 g g 1
  mult g 1 g 1
  mult g g 1 1
  comult 1 1 1 1
  comult g g g 1
  antipode 1 1 1
  antipode g g 1
end
)";
  HopfSpecDoc doc = parse_hopfspec(text);
  REQUIRE(doc.hopfs.size() == 1);
  CHECK(check_axioms(*doc.hopfs[0].algebra).all_pass());
}
