#pragma once

#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hopf/matrix.hpp"

namespace hopf {

// A finite-dimensional (bi/Hopf) algebra given by structure constants on a
// fixed ordered basis e_0..e_{n-1}:
//
//   mult(k,i,j)    coefficient of e_k        in e_i * e_j
//   comult(i,j,k)  coefficient of e_i (x) e_j in Delta(e_k)
//   unit[i]        coefficients of 1
//   counit[k]      eps(e_k)
//   antipode       optional matrix, S[i][j] = coefficient of e_i in S(e_j)
//
// Instances are immutable after construction; all element operations are
// pure, so concurrent reads are safe.
class FinHopf {
 public:
  FinHopf(Field field, std::vector<std::string> labels, std::vector<Scalar> mult,
          std::vector<Scalar> comult, Vec unit, Vec counit,
          std::optional<Matrix> antipode = std::nullopt);

  int dim() const { return n_; }
  const Field& field() const { return field_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }

  const Scalar& mult(int k, int i, int j) const {
    return mult_[(static_cast<size_t>(i) * n_ + j) * n_ + k];
  }
  const Scalar& comult(int i, int j, int k) const {
    return comult_[(static_cast<size_t>(k) * n_ + i) * n_ + j];
  }
  const Vec& unit() const { return unit_; }
  const Vec& counit() const { return counit_; }

  bool has_antipode() const { return antipode_.has_value(); }
  const Matrix& antipode() const;
  bool antipode_invertible() const { return antipode_inv_.has_value(); }
  const Matrix& antipode_inv() const;

  FinHopf with_antipode(Matrix S) const;
  FinHopf without_antipode() const;
  FinHopf with_labels(std::vector<std::string> labels) const;

  // Element operations (Vec of length dim, or dim^k for tensors).
  Vec basis(int i) const;
  Vec zero() const { return zero_vec(n_, field_); }
  Vec product(const Vec& x, const Vec& y) const;
  Vec coproduct(const Vec& x) const;             // length n^2
  Vec iterated_coproduct(const Vec& x, int k) const;  // length n^k, left-nested
  Scalar counit_of(const Vec& x) const;
  Vec apply_antipode(const Vec& x) const;

  // Sparse structure-constant views, fixed iteration order.
  const std::vector<std::pair<int, Scalar>>& prod_terms(int i, int j) const {
    return prod_sparse_[static_cast<size_t>(i) * n_ + j];
  }
  const std::vector<std::tuple<int, int, Scalar>>& cop_terms(int k) const {
    return cop_sparse_[k];
  }

 private:
  int n_;
  Field field_;
  std::vector<std::string> labels_;
  std::vector<Scalar> mult_;    // [(i*n+j)*n+k]
  std::vector<Scalar> comult_;  // [(k*n+i)*n+j]
  Vec unit_, counit_;
  std::optional<Matrix> antipode_;
  std::optional<Matrix> antipode_inv_;
  std::vector<std::vector<std::pair<int, Scalar>>> prod_sparse_;
  std::vector<std::vector<std::tuple<int, int, Scalar>>> cop_sparse_;
  void build_sparse();
};

using HopfPtr = std::shared_ptr<const FinHopf>;

// --------------------------------------------------------------- reports

struct AxiomWitness {
  std::vector<int> indices;
  Vec lhs, rhs;
};

struct AxiomCheck {
  std::string name;
  bool pass = true;
  long fail_count = 0;
  std::optional<AxiomWitness> witness;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_pass() const;
  std::string summary(const FinHopf& h) const;
};

struct CheckResult {
  bool ok = true;
  std::string witness;
};

// ------------------------------------------------------------ operations

// The eight Hopf axiom families: associativity, unit, coassociativity,
// counit, comultiplication and counit as algebra maps, the antipode
// convolution identity, and invertibility of S.
AxiomReport check_axioms(const FinHopf& h);

// Families 1-6 only (no antipode); used by derive_antipode.
AxiomReport check_bialgebra_axioms(const FinHopf& h);

// H* on the dual basis.  Labels gain a trailing '*' (stripped again on a
// second dual, so dual(dual(H)) == H including labels).
FinHopf dual(const FinHopf& h, bool validate = true);

enum class VariantKind { op, cop, opcop };
FinHopf variant(const FinHopf& h, VariantKind kind, bool validate = true);

// Solve the n^2-unknown linear system for the convolution inverse of the
// identity.  Returns nothing when no antipode exists.
std::optional<Matrix> derive_antipode(const FinHopf& bialgebra);

enum class MorphKind { algebra, coalgebra, hopf };
CheckResult is_morphism(const Matrix& f, const FinHopf& A, const FinHopf& B, MorphKind kind);

// Tensor equality (structure constants, unit, counit, antipode); labels
// are not part of the comparison.
bool same_structure(const FinHopf& a, const FinHopf& b);

// ------------------------------------------------- tensor-power algebra

// Componentwise product on H^(k) for flat-indexed tensors.
Vec tensor_mul(const FinHopf& h, int k, const Vec& x, const Vec& y);
Vec tensor_unit(const FinHopf& h, int k);
std::optional<Vec> tensor_inverse(const FinHopf& h, int k, const Vec& x);

// Smallest m <= bound with x^m = 1 in H^(k), if any.
std::optional<int> element_order(const FinHopf& h, int k, const Vec& x, int bound);

// Flip legs a and b of an n^2 tensor.
Vec flip_tensor(const Vec& x, int n);

std::string tensor_label(const FinHopf& h, int k, size_t flat);

}  // namespace hopf
