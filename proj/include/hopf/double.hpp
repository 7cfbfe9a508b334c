#pragma once

#include "hopf/functional.hpp"

namespace hopf {

// An element of A (x) A, used as a candidate R-matrix.
struct RMatrix {
  HopfPtr host;
  Vec coef;  // length dim(A)^2

  RMatrix() = default;
  RMatrix(HopfPtr h, Vec c);
  const Scalar& at(int i, int j) const { return coef[static_cast<size_t>(i) * host->dim() + j]; }
  Scalar& at(int i, int j) { return coef[static_cast<size_t>(i) * host->dim() + j]; }
};

// D(H) on the basis f_i (x) e_j (flat index i*dim(H)+j), with the standard
// R-matrix and the two subalgebra embeddings.
struct DoubleResult {
  HopfPtr double_algebra;
  RMatrix R;
  Matrix embed_alg;       // H -> D(H),        e_j |-> eps (x) e_j
  Matrix embed_dual_cop;  // H*^cop -> D(H),   f_i |-> f_i (x) 1
};

// Builds D(H); with validate the output is certified against every Hopf
// axiom and quasitriangularity of the standard R-matrix (a convention
// error fails loudly here).
DoubleResult build_double(HopfPtr H, bool validate = true);

CheckResult check_quasitriangular(const FinHopf& A, const RMatrix& R);

// (tau R) R = 1 (x) 1.
bool check_triangular(const FinHopf& A, const RMatrix& R);

struct ExponentResult {
  Vec u;                      // element of D(H)
  bool u_equals_unit_part;    // u == eps (x) 1
  std::optional<int> order;   // smallest k <= bound with u^k = 1, if found
};

// u = sum S*^{-1}(h_j^*) (x) h_j in D(H) and its multiplicative order.
ExponentResult exponent_element(HopfPtr H, int bound);

struct CheckItem {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool all_pass() const;
  std::string summary() const;
};

// The structural isomorphisms of the quantum double:
//   (a) tau (S*^{-1} (x) S) : D(H) -> D(H*)^op,   R |-> tau R'
//   (b) S* (x) id           : D(H^cop) -> D(H)^cop, tau R'^{-1} |-> tau R
//   (c) S*^{-1} (x) S       : D(H^op) -> D(H^cop),  R-matrix invariant
CheckReport verify_double_isos(HopfPtr H);

}  // namespace hopf
