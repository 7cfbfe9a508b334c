#pragma once

#include <stdexcept>
#include <string>

namespace hopf {

// All library errors derive from error so callers can catch the lot.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct field_mismatch : error {
  explicit field_mismatch(const std::string& what = "operands live in different fields")
      : error(what) {}
};

struct division_by_zero : error {
  explicit division_by_zero(const std::string& what = "division by zero") : error(what) {}
};

struct dimension_mismatch : error {
  explicit dimension_mismatch(const std::string& what) : error(what) {}
};

struct host_mismatch : error {
  explicit host_mismatch(const std::string& what = "operands have different host algebras")
      : error(what) {}
};

struct axiom_failure : error {
  explicit axiom_failure(const std::string& what) : error(what) {}
};

struct not_a_cocycle : error {
  explicit not_a_cocycle(const std::string& what) : error(what) {}
};

struct not_invertible : error {
  explicit not_invertible(const std::string& what) : error(what) {}
};

// conv_inverse found a one-sided inverse that is not two-sided.  Cannot
// happen over a field (finite dimension forces two-sidedness) but the
// checker distinguishes it from plain non-invertibility anyway.
struct one_sided_inverse : error {
  explicit one_sided_inverse(const std::string& what) : error(what) {}
};

struct char_two_unsupported : error {
  explicit char_two_unsupported(const std::string& what = "characteristic 2 not supported here")
      : error(what) {}
};

struct not_a_group : error {
  explicit not_a_group(const std::string& what) : error(what) {}
};

struct precondition_violated : error {
  explicit precondition_violated(const std::string& what) : error(what) {}
};

struct structure_invalid : error {
  explicit structure_invalid(const std::string& what) : error(what) {}
};

struct parse_error : error {
  int line = 0;
  int column = 0;
  parse_error(int line_, int col_, const std::string& what)
      : error("line " + std::to_string(line_) + ", column " + std::to_string(col_) + ": " + what),
        line(line_),
        column(col_) {}
};

}  // namespace hopf
