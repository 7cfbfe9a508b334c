#pragma once

#include <memory>
#include <optional>

#include "hopf/hopf_algebra.hpp"

namespace hopf {

// An element of (H^(x)k)* as the coefficient vector of its values on the
// flat tensor basis.
struct Functional {
  HopfPtr host;
  int arity = 1;
  Vec coef;  // length dim(H)^arity

  Functional() = default;
  Functional(HopfPtr h, int k);
  Functional(HopfPtr h, int k, Vec c);

  size_t size() const { return coef.size(); }
  const Scalar& at(int i) const { return coef[i]; }
  const Scalar& at(int i, int j) const { return coef[static_cast<size_t>(i) * host->dim() + j]; }
  Scalar& at(int i, int j) { return coef[static_cast<size_t>(i) * host->dim() + j]; }

  // Value on a (tensor) element given by a flat coefficient vector.
  Scalar value_on(const Vec& x) const;
};

bool same_host(const HopfPtr& a, const HopfPtr& b);
bool functional_eq(const Functional& f, const Functional& g);

Functional counit_power(HopfPtr h, int k);

// (f*g)(x) = sum f(x_(1)) g(x_(2)) through the k-fold tensor coproduct.
Functional convolve(const Functional& f, const Functional& g);

// sigma o tau for arity-2 functionals.
Functional flip_args(const Functional& f);

// Solves f*x = eps^(x)k, then verifies x*f; a strictly one-sided inverse
// raises one_sided_inverse (cannot occur over a field, checked anyway).
std::optional<Functional> conv_inverse(const Functional& f);

enum class CocycleSide { left, right };
CheckResult check_2cocycle(const Functional& sigma, CocycleSide side);

// The double twist _sigma H _sigma^{-1}: deformed product and antipode,
// unchanged coalgebra.  Requires an invertible left 2-cocycle.
FinHopf cocycle_twist(const FinHopf& h, const Functional& sigma);

struct RFormItem {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct RFormReport {
  std::vector<RFormItem> items;
  bool all_pass() const;
  std::string summary() const;
};

// Dual-quasitriangularity axioms for a bilinear form, plus (optionally)
// cotriangularity r * (r tau) = eps (x) eps = (r tau) * r.
RFormReport check_rform(const FinHopf& h, const Functional& r, bool cotriangular);

// (sigma tau) * r * sigma^{-1}.  The result is attached to twisted_host
// when given (the coalgebra, and hence the convolution, is unchanged by
// twisting); otherwise it keeps r's host.
Functional twist_rform(const Functional& r, const Functional& sigma,
                       HopfPtr twisted_host = nullptr);

// u = sigma (id (x) S) Delta, the unit used by the twisted antipode.
Functional cocycle_unit_functional(const FinHopf& h, const Functional& sigma);

}  // namespace hopf
