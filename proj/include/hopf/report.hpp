#pragma once

#include <string>
#include <vector>

#include "hopf/catalog.hpp"

namespace hopf {

struct ReportConfig {
  Field field = Field::rational_functions();
  BigRat t = BigRat(1);  // parameter value when the field is Q or GF(p)
  bool parallel = false;
};

struct ReportItem {
  std::string id;
  std::string title;
  bool pass = false;
  bool skipped = false;
  std::string detail;
  double ms = 0.0;
};

struct VerificationReport {
  ReportConfig cfg;
  std::vector<ReportItem> items;
  bool all_pass() const;
};

// Runs the twelve named checks P1..P12.  Univariate identities run over
// the configured field (symbolically when it is Q(t)); the bivariate twist
// identity always runs on the rational grid plus symbolic passes; checks
// without a parameter run over Q unless the field is a prime field.
// Individual failures are recorded, never thrown.
VerificationReport verification_report(const ReportConfig& cfg);

std::string report_text(const VerificationReport& rep);
std::string report_json(const VerificationReport& rep);  // deterministic modulo timing_ms

}  // namespace hopf
