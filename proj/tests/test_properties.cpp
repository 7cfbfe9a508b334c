#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "property_suites.hpp"

using namespace hopf_props;

TEST_CASE("field axioms on random samples") {
  SuiteResult r = suite_field_axioms();
  INFO(r.detail);
  CHECK(r.ok);
  CHECK(r.cases >= 200);
}

TEST_CASE("solver round trips on random invertible systems") {
  SuiteResult r = suite_solver_roundtrip();
  INFO(r.detail);
  CHECK(r.ok);
  CHECK(r.cases >= 200);
}

TEST_CASE("dual and variant involutions on random hosts") {
  SuiteResult r = suite_involutions();
  INFO(r.detail);
  CHECK(r.ok);
  CHECK(r.cases >= 200);
}

TEST_CASE("every constructor output passes its checker") {
  SuiteResult r = suite_constructor_closure();
  INFO(r.detail);
  CHECK(r.ok);
  CHECK(r.cases >= 200);
}

TEST_CASE("braiding naturality for solved YD morphisms") {
  SuiteResult r = suite_braiding_naturality();
  INFO(r.detail);
  CHECK(r.ok);
  CHECK(r.cases >= 200);
}
