#pragma once

#include "hopf/double.hpp"
#include "hopf/functional.hpp"
#include "hopf/yd.hpp"

namespace hopf {

// Sweedler's four-dimensional Hopf algebra on the basis (1, g, h, gh):
// g^2 = 1, h^2 = 0, gh = -hg, Delta g = g (x) g, Delta h = h (x) g + 1 (x) h,
// S(g) = g, S(h) = gh.  Rejects characteristic 2.
HopfPtr make_h4(const Field& f);

// Group algebra k[G] from a Cayley table (table[i][j] = index of g_i g_j).
HopfPtr make_group_algebra(const Field& f, const std::vector<std::vector<int>>& table,
                           std::vector<std::string> labels = {});

std::vector<std::vector<int>> cyclic_group_table(int n);
std::vector<std::vector<int>> klein_four_table();
std::vector<std::vector<int>> symmetric3_table();

// The one-parameter family of structures on H4: the universal R-form r_t,
// the R-matrix R_t, the 2-cocycle sigma_t and its convolution inverse nu_t.
struct H4Family {
  Functional r;
  RMatrix R;
  Functional sigma;
  Functional nu;
};

H4Family h4_family(HopfPtr h4, const Scalar& t);

// The Hopf isomorphism H4 -> H4* sending g to f_1 - f_g and h to f_h + f_gh.
Matrix h4_self_duality(const FinHopf& h4, const FinHopf& h4_dual);

// Transport of an R-matrix along f: H -> H* into a bilinear form on H.
Functional transport_rmatrix(const Matrix& f, const RMatrix& R, HopfPtr domain);

// H as a YD module over itself: conjugation action h.m = sum h2 m S^{-1}(h1),
// coaction Delta.
YDModule adjoint_module(HopfPtr h);

// The 2-dimensional graded comodule chi(v0) = v0 (x) 1, chi(v1) = v1 (x) g
// over H4, completed to a YD module along r.
YDModule graded_comodule_v(HopfPtr h4, const Functional& r);

// k[x]/(x^2) with trivial action and coaction; F is singular here.
YDAlgebra kx2_trivial_algebra(HopfPtr h);

}  // namespace hopf
