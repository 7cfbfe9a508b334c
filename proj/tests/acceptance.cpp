// Acceptance runner: executes the verification checks P1..P12 over
// Q(t) (the canonical configuration) plus the randomized property suites,
// and prints one pass/fail line per criterion.  Exit status 0 iff all pass.

#include <cstdio>
#include <iostream>

#include "property_suites.hpp"

using namespace hopf;

namespace {

bool report_line(const std::string& id, bool pass, const std::string& title,
                 const std::string& detail, double ms) {
  std::printf("%-4s %-4s %s", id.c_str(), pass ? "PASS" : "FAIL", title.c_str());
  if (ms > 0) std::printf("  [%.0f ms]", ms);
  std::printf("\n");
  if (!detail.empty()) std::printf("     %s\n", detail.c_str());
  return pass;
}

}  // namespace

int main() {
  bool all = true;

  ReportConfig cfg;
  cfg.field = Field::rational_functions();
  VerificationReport rep = verification_report(cfg);
  std::printf("== verification checks over Q(t), exact arithmetic ==\n");
  for (const auto& item : rep.items)
    all = report_line(item.id, item.pass && !item.skipped, item.title, item.detail, item.ms) && all;

  std::printf("== property suites (seeded, >= 200 cases each) ==\n");
  using namespace hopf_props;
  struct Named {
    const char* id;
    const char* title;
    SuiteResult (*fn)(long);
  };
  const Named suites[] = {
      {"PS1", "field axioms", [](long n) { return suite_field_axioms(n); }},
      {"PS2", "solver round-trips", [](long n) { return suite_solver_roundtrip(n); }},
      {"PS3", "dual/op involutions", [](long n) { return suite_involutions(n); }},
      {"PS4", "constructor outputs pass their checkers",
       [](long n) { return suite_constructor_closure(n); }},
      {"PS5", "braiding naturality", [](long n) { return suite_braiding_naturality(n); }},
  };
  for (const auto& s : suites) {
    SuiteResult r = s.fn(200);
    all = report_line(s.id, r.ok && r.cases >= 200, s.title, r.detail, 0) && all;
  }

  std::printf("%s\n", all ? "ACCEPTANCE: all criteria passed"
                          : "ACCEPTANCE: some criteria FAILED");
  return all ? 0 : 1;
}
