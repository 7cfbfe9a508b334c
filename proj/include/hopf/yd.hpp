#pragma once

#include "hopf/double.hpp"
#include "hopf/functional.hpp"

namespace hopf {

// A left module / right comodule over a fixed FinHopf:
//   act(j,a,i)   coefficient of v_j        in e_a . v_i
//   coact(j,b,i) coefficient of v_j (x) e_b in chi(v_i)
struct YDModule {
  HopfPtr host;
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<Scalar> act_;    // [(a*m+i)*m+j]
  std::vector<Scalar> coact_;  // [(i*m+j)*n+b]

  YDModule() = default;
  YDModule(HopfPtr h, int m, std::vector<std::string> lbls);

  const Scalar& act(int j, int a, int i) const {
    return act_[(static_cast<size_t>(a) * dim + i) * dim + j];
  }
  Scalar& act(int j, int a, int i) {
    return act_[(static_cast<size_t>(a) * dim + i) * dim + j];
  }
  const Scalar& coact(int j, int b, int i) const {
    return coact_[(static_cast<size_t>(i) * dim + j) * host->dim() + b];
  }
  Scalar& coact(int j, int b, int i) {
    return coact_[(static_cast<size_t>(i) * dim + j) * host->dim() + b];
  }

  // matrix of e_a acting on the module
  Matrix action_matrix(int a) const;
};

// A YDModule carrying an associative unital product:
//   mult(k,i,j)  coefficient of v_k in v_i v_j
struct YDAlgebra {
  YDModule mod;
  std::vector<Scalar> mult_;  // [(i*m+j)*m+k]
  Vec unit;

  const Scalar& mult(int k, int i, int j) const {
    return mult_[(static_cast<size_t>(i) * mod.dim + j) * mod.dim + k];
  }
  Scalar& mult(int k, int i, int j) {
    return mult_[(static_cast<size_t>(i) * mod.dim + j) * mod.dim + k];
  }
  Vec product(const Vec& x, const Vec& y) const;
};

// ---------------------------------------------------------------- checks

// Module axioms, comodule axioms and the compatibility
//   sum h1.m0 (x) h2 m1 = sum (h2.m)0 (x) (h2.m)1 h1.
CheckResult check_yd(const YDModule& M);

// check_yd plus: associative unital product, left H-module algebra, right
// H^op-comodule algebra (chi(ab) = sum a0 b0 (x) b1 a1).
CheckResult check_yd_algebra(const YDAlgebra& A);

// f: M -> N (dim N x dim M) commuting with actions and coactions.
CheckResult yd_morphism(const Matrix& f, const YDModule& M, const YDModule& N);

// Multiplicative unital map between YD algebras.
CheckResult algebra_map(const Matrix& f, const YDAlgebra& A, const YDAlgebra& B);

// ----------------------------------------------------------- constructors

YDModule trivial_module(HopfPtr h);

// Complete a comodule to a YD module along an R-form: h.a = sum a0 r(h (x) a1).
YDModule induce_yd_from_comodule(HopfPtr h, int dim, std::vector<std::string> labels,
                                 std::vector<Scalar> coact, const Functional& r,
                                 bool validate = true);

// Complete a module to a YD module along an R-matrix: chi(a) = sum R2.a (x) R1.
YDModule induce_yd_from_module(HopfPtr h, int dim, std::vector<std::string> labels,
                               std::vector<Scalar> act, const RMatrix& R, bool validate = true);

// M (x)~ N with chi(a (x) b) = a0 (x) b0 (x) b1 a1, h.(a (x) b) = h1.a (x) h2.b.
YDModule yd_tensor(const YDModule& M, const YDModule& N);

// phi_MN: M (x) N -> N (x) M, m (x) n |-> sum n0 (x) n1.m, as a matrix.
Matrix braiding(const YDModule& M, const YDModule& N);

// flip M (x) N -> N (x) M
Matrix tau_matrix(int dimM, int dimN, const Field& f);

// (phi_NP (x) id)(id (x) phi_MP)(phi_MN (x) id) = (id (x) phi_MN)(phi_MP (x) id)(id (x) phi_NP)
bool yang_baxter_holds(const YDModule& M, const YDModule& N, const YDModule& P);

// phi_{M(x)N,P} and phi_{M,N(x)P} against the composites of leg braidings
bool hexagons_hold(const YDModule& M, const YDModule& N, const YDModule& P);

// Smash product A # B on A (x)~ B with (a#c)(b#d) = sum a b0 # (b1.c) d.
YDAlgebra smash(const YDAlgebra& A, const YDAlgebra& B);

// Braided opposite: product m o phi_AA, same unit.
YDAlgebra yd_opposite(const YDAlgebra& A);

enum class EndSide { standard, op };

// End(P) (or End(P)^op) with the module/comodule structure of the internal
// hom; certified by check_yd_algebra in tests.
YDAlgebra end_algebra(const YDModule& P, EndSide side);

struct FGMaps {
  Matrix F, G;
  CheckResult F_algebra, G_algebra;  // F: A#Abar -> End(A), G: Abar#A -> End(A)^op
  CheckResult F_yd, G_yd;
};

// F(a # bbar)(c) = sum a c0 (c1.b), G(abar # b)(c) = sum a0 (a1.c) b.
// With certify the maps are also verified to be YD-algebra morphisms.
FGMaps map_FG(const YDAlgebra& A, bool certify = true);

bool is_azumaya(const YDAlgebra& A);

// k a direct YD-summand of A via a splitting of the unit.
bool has_unit_summand(const YDAlgebra& A);

// ------------------------------------------------------------ duality

// The duality functor: swap action and coaction tensors, host becomes H*.
YDModule dualize_yd(const YDModule& M);

// On algebras additionally pass to the opposite product.
YDAlgebra dualize_alg(const YDAlgebra& A);

// tau o psi^op = D(phi) o tau, psi the braiding over H* of the dualized pair.
bool duality_braiding_compatible(const YDModule& M, const YDModule& N);

// ------------------------------------------------------------- twisting

struct TwistedAlgebra {
  HopfPtr twisted_host;
  YDAlgebra algebra;
  Functional r_sigma;
};

// The functor A |-> A_{sigma^{-1} tau}: product a.b = sum a0 b0
// sigma^{-1}(b1 (x) a1), coaction unchanged, action re-induced via the
// twisted R-form.  Requires a comodule-induced A.
TwistedAlgebra twist_alg(const YDAlgebra& A, const Functional& r, const Functional& sigma);

// Deterministic basis of Hom_YD(M, N).
std::vector<Matrix> yd_hom_basis(const YDModule& M, const YDModule& N);

}  // namespace hopf
