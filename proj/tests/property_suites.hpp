#pragma once

// Seeded randomized suites shared by test_properties and the acceptance
// runner.  Each suite runs at least 200 cases and reports the count.

#include <random>
#include <sstream>
#include <string>

#include "hopf/hopfspec.hpp"
#include "hopf/report.hpp"

namespace hopf_props {

using namespace hopf;

struct SuiteResult {
  bool ok = true;
  long cases = 0;
  std::string detail;
};

inline Scalar random_scalar(std::mt19937_64& rng, const Field& f, bool nonzero = false) {
  std::uniform_int_distribution<long long> small(-9, 9);
  std::uniform_int_distribution<long long> dend(1, 9);
  for (;;) {
    Scalar s = Scalar::zero(f);
    switch (f.kind) {
      case FieldKind::rationals:
        s = Scalar::from_rat(f, BigRat(small(rng), dend(rng)));
        break;
      case FieldKind::prime: {
        std::uniform_int_distribution<long long> d(0, f.p - 1);
        s = Scalar::from_int(f, d(rng));
        break;
      }
      case FieldKind::ratfun: {
        Scalar t = Scalar::variable(f);
        s = Scalar::from_int(f, small(rng)) + Scalar::from_int(f, small(rng)) * t +
            Scalar::from_int(f, small(rng)) * t * t;
        Scalar den = Scalar::from_int(f, dend(rng)) + Scalar::from_int(f, small(rng)) * t;
        if (!den.is_zero()) s = s / den;
        break;
      }
    }
    if (!nonzero || !s.is_zero()) return s;
  }
}

// field axioms on random triples, plus the evaluation homomorphism
inline SuiteResult suite_field_axioms(long target = 240) {
  std::mt19937_64 rng(0x5eed0001);
  SuiteResult res;
  Field fields[] = {Field::rationals(), Field::gf(5), Field::gf(31), Field::rational_functions()};
  while (res.cases < target) {
    const Field& f = fields[res.cases % 4];
    Scalar a = random_scalar(rng, f), b = random_scalar(rng, f), c = random_scalar(rng, f);
    bool ok = ((a + b) + c == a + (b + c)) && ((a * b) * c == a * (b * c)) && (a + b == b + a) &&
              (a * b == b * a) && (a * (b + c) == a * b + a * c) &&
              (a + Scalar::zero(f) == a) && (a * Scalar::one(f) == a) && ((a - a).is_zero());
    Scalar nz = random_scalar(rng, f, true);
    ok = ok && (nz * nz.inv()).is_one();
    if (f.kind == FieldKind::ratfun) {
      // evaluation homomorphism at a random rational point
      std::uniform_int_distribution<long long> d(-5, 5);
      BigRat q(d(rng), 1);
      try {
        Scalar lhs = (a * b + c).eval_at(q);
        Scalar rhs = a.eval_at(q) * b.eval_at(q) + c.eval_at(q);
        ok = ok && (lhs == rhs);
      } catch (const division_by_zero&) {
        // pole at q: nothing to compare
      }
    }
    if (!ok) {
      res.ok = false;
      res.detail = "field axiom failure over " + f.name();
      return res;
    }
    ++res.cases;
  }
  res.detail = std::to_string(res.cases) + " cases over Q, GF(5), GF(31), Q(t)";
  return res;
}

inline SuiteResult suite_solver_roundtrip(long target = 200) {
  std::mt19937_64 rng(0x5eed0002);
  SuiteResult res;
  Field fields[] = {Field::gf(7), Field::gf(13), Field::rationals()};
  std::uniform_int_distribution<int> dim(3, 6);
  while (res.cases < target) {
    const Field& f = fields[res.cases % 3];
    int n = dim(rng);
    Matrix A(n, n, f);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) A.at(i, j) = random_scalar(rng, f);
    auto Ainv = invert_matrix(A);
    if (!Ainv) continue;  // singular sample; try again
    Matrix x(n, 1, f);
    for (int i = 0; i < n; ++i) x.at(i, 0) = random_scalar(rng, f);
    auto sol = solve_linear(A, A * x);
    bool ok = (*Ainv * A == Matrix::identity(n, f)) && (A * *Ainv == Matrix::identity(n, f)) &&
              sol && (*sol == x);
    if (!ok) {
      res.ok = false;
      res.detail = "solver round-trip failure over " + f.name();
      return res;
    }
    ++res.cases;
  }
  res.detail = std::to_string(res.cases) + " invertible systems over GF(7), GF(13), Q";
  return res;
}

inline SuiteResult suite_involutions(long target = 200) {
  std::mt19937_64 rng(0x5eed0003);
  SuiteResult res;
  std::uniform_int_distribution<int> hostd(0, 5), fieldd(0, 4);
  while (res.cases < target) {
    Field f;
    switch (fieldd(rng)) {
      case 0: f = Field::rationals(); break;
      case 1: f = Field::gf(5); break;
      case 2: f = Field::gf(7); break;
      case 3: f = Field::gf(11); break;
      default: f = Field::gf(13); break;
    }
    HopfPtr H;
    switch (hostd(rng)) {
      case 0: H = make_group_algebra(f, cyclic_group_table(2)); break;
      case 1: H = make_group_algebra(f, cyclic_group_table(3)); break;
      case 2: H = make_group_algebra(f, cyclic_group_table(4)); break;
      case 3: H = make_group_algebra(f, klein_four_table()); break;
      case 4: H = make_group_algebra(f, symmetric3_table()); break;
      default: H = make_h4(f); break;
    }
    FinHopf d = dual(*H, false);
    FinHopf o = variant(*H, VariantKind::op, false);
    FinHopf c = variant(*H, VariantKind::cop, false);
    bool ok = same_structure(dual(d, false), *H) &&
              same_structure(variant(o, VariantKind::op, false), *H) &&
              same_structure(variant(c, VariantKind::cop, false), *H) &&
              same_structure(dual(o, false), variant(d, VariantKind::cop, false)) &&
              check_axioms(d).all_pass() && check_axioms(o).all_pass();
    if (!ok) {
      res.ok = false;
      res.detail = "involution failure over " + f.name();
      return res;
    }
    ++res.cases;
  }
  res.detail = std::to_string(res.cases) + " host/field samples";
  return res;
}

inline SuiteResult suite_constructor_closure(long target = 200) {
  std::mt19937_64 rng(0x5eed0004);
  SuiteResult res;
  const std::uint32_t primes[] = {3, 5, 7, 11, 13};
  std::uniform_int_distribution<int> pd(0, 4), opd(0, 7);
  while (res.cases < target) {
    Field f = Field::gf(primes[pd(rng)]);
    if (f.p == 2) continue;
    std::uniform_int_distribution<long long> td(0, f.p - 1);
    Scalar t = Scalar::from_int(f, td(rng));
    Scalar s = Scalar::from_int(f, td(rng));
    auto H = make_h4(f);
    H4Family famt = h4_family(H, t);
    H4Family fams = h4_family(H, s);
    bool ok = true;
    std::string what;
    switch (opd(rng)) {
      case 0: {
        what = "cocycle_twist";
        FinHopf tw = cocycle_twist(*H, famt.sigma);
        ok = check_axioms(tw).all_pass() && same_structure(tw, *H);
        break;
      }
      case 1: {
        what = "twist_rform";
        auto tw = std::make_shared<const FinHopf>(cocycle_twist(*H, famt.sigma));
        Functional out = twist_rform(fams.r, famt.sigma, tw);
        ok = check_rform(*tw, out, true).all_pass();
        break;
      }
      case 2: {
        what = "build_double";
        // group algebras and H4; the builder itself validates axioms + QT
        HopfPtr base = (res.cases % 2 == 0)
                           ? H
                           : make_group_algebra(f, cyclic_group_table(2 + res.cases % 3));
        ok = build_double(base, true).double_algebra->dim() == base->dim() * base->dim();
        break;
      }
      case 3: {
        what = "yd_tensor";
        YDModule V = graded_comodule_v(H, famt.r);
        YDModule adj = adjoint_module(H);
        ok = check_yd(yd_tensor(V, adj)).ok && check_yd(yd_tensor(adj, V)).ok;
        break;
      }
      case 4: {
        what = "end_algebra";
        YDModule V = graded_comodule_v(H, famt.r);
        ok = check_yd_algebra(end_algebra(V, EndSide::standard)).ok &&
             check_yd_algebra(end_algebra(V, EndSide::op)).ok;
        break;
      }
      case 5: {
        what = "smash+opposite";
        YDModule V = graded_comodule_v(H, famt.r);
        YDAlgebra E = end_algebra(V, EndSide::standard);
        ok = check_yd_algebra(yd_opposite(E)).ok && check_yd_algebra(smash(E, yd_opposite(E))).ok;
        break;
      }
      case 6: {
        what = "dualize";
        YDModule V = graded_comodule_v(H, famt.r);
        YDAlgebra E = end_algebra(V, EndSide::standard);
        ok = check_yd(dualize_yd(V)).ok && check_yd_algebra(dualize_alg(E)).ok;
        break;
      }
      default: {
        what = "twist_alg";
        YDModule V = graded_comodule_v(H, fams.r);
        YDAlgebra E = end_algebra(V, EndSide::standard);
        TwistedAlgebra tw = twist_alg(E, fams.r, famt.sigma);
        ok = check_yd_algebra(tw.algebra).ok && is_azumaya(tw.algebra);
        break;
      }
    }
    if (!ok) {
      res.ok = false;
      res.detail = what + " closure failure over " + f.name();
      return res;
    }
    ++res.cases;
  }
  res.detail = std::to_string(res.cases) + " constructor outputs re-checked over GF(p)";
  return res;
}

inline SuiteResult suite_braiding_naturality(long target = 200) {
  std::mt19937_64 rng(0x5eed0005);
  SuiteResult res;
  const std::uint32_t primes[] = {5, 7, 11, 13};
  std::uniform_int_distribution<int> pd(0, 3);
  while (res.cases < target) {
    Field f = Field::gf(primes[pd(rng)]);
    std::uniform_int_distribution<long long> td(0, f.p - 1);
    auto H = make_h4(f);
    H4Family fam = h4_family(H, Scalar::from_int(f, td(rng)));
    YDModule mods[] = {graded_comodule_v(H, fam.r), adjoint_module(H), trivial_module(H)};
    std::uniform_int_distribution<int> md(0, 2);
    const YDModule& M = mods[md(rng)];
    const YDModule& N = mods[md(rng)];
    auto homM = yd_hom_basis(M, M);
    auto homN = yd_hom_basis(N, N);
    if (homM.empty() || homN.empty()) continue;
    auto combo = [&](const std::vector<Matrix>& basis, const YDModule& X) {
      Matrix fm(X.dim, X.dim, f);
      for (const Matrix& b : basis) {
        Scalar c = random_scalar(rng, f);
        for (int i = 0; i < X.dim; ++i)
          for (int j = 0; j < X.dim; ++j) fm.at(i, j) += c * b.at(i, j);
      }
      return fm;
    };
    Matrix fm = combo(homM, M);
    Matrix gm = combo(homN, N);
    Matrix lhs = gm.kron(fm) * braiding(M, N);
    Matrix rhs = braiding(M, N) * fm.kron(gm);
    if (!(lhs == rhs)) {
      res.ok = false;
      res.detail = "naturality failure over " + f.name();
      return res;
    }
    ++res.cases;
  }
  res.detail = std::to_string(res.cases) + " random YD-morphism pairs";
  return res;
}

}  // namespace hopf_props
