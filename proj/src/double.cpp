#include "hopf/double.hpp"

#include <sstream>

namespace hopf {

RMatrix::RMatrix(HopfPtr h, Vec c) : host(std::move(h)), coef(std::move(c)) {
  if (coef.size() != static_cast<size_t>(host->dim()) * host->dim())
    throw dimension_mismatch("R-matrix coefficient length");
}

bool CheckReport::all_pass() const {
  for (const auto& i : items)
    if (!i.pass) return false;
  return true;
}

std::string CheckReport::summary() const {
  std::ostringstream os;
  for (const auto& i : items) {
    os << (i.pass ? "  ok   " : "  FAIL ") << i.name;
    if (!i.pass && !i.witness.empty()) os << " -- " << i.witness;
    os << "\n";
  }
  return os.str();
}

namespace {

std::string star_label(const std::string& s) {
  if (!s.empty() && s.back() == '*') return s.substr(0, s.size() - 1);
  return s + "*";
}

}  // namespace

DoubleResult build_double(HopfPtr Hp, bool validate) {
  const FinHopf& H = *Hp;
  if (!H.has_antipode() || !H.antipode_invertible())
    throw structure_invalid("build_double needs a bijective antipode");
  int n = H.dim();
  int N = n * n;
  const Field& F = H.field();
  const Matrix& S = H.antipode();
  const Matrix& Sinv = H.antipode_inv();

  // triple-product coefficients: tp[j][r] -> list of (p, q, coeff of e_j in e_p e_q e_r)
  std::vector<std::vector<std::vector<std::tuple<int, int, Scalar>>>> tp(
      n, std::vector<std::vector<std::tuple<int, int, Scalar>>>(n));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (const auto& [m, c1] : H.prod_terms(p, q))
        for (int r = 0; r < n; ++r)
          for (const auto& [x, c2] : H.prod_terms(m, r)) tp[x][r].emplace_back(p, q, c1 * c2);

  size_t N3 = static_cast<size_t>(N) * N * N;
  std::vector<Scalar> mult(N3, Scalar::zero(F));
  auto midx = [N](int i, int j, int k) { return (static_cast<size_t>(i) * N + j) * N + k; };

  // (f_i (x) e_a)(f_j (x) e_b) =
  //   sum <eta1, S^{-1}(a3)> <eta3, a1> (f_i eta2) (x) (a2 b),  eta = f_j
  for (int a = 0; a < n; ++a) {
    Vec da = H.iterated_coproduct(H.basis(a), 3);
    for (size_t ia = 0; ia < da.size(); ++ia) {
      if (da[ia].is_zero()) continue;
      int a1 = static_cast<int>(ia / (n * n));
      int a2 = static_cast<int>((ia / n) % n);
      int a3 = static_cast<int>(ia % n);
      for (int j = 0; j < n; ++j) {
        for (const auto& [p, q, cT] : tp[j][a1]) {
          const Scalar& w = Sinv.at(p, a3);
          if (w.is_zero()) continue;
          Scalar scal = da[ia] * cT * w;
          for (int i = 0; i < n; ++i) {
            for (int x = 0; x < n; ++x) {
              const Scalar& cx = H.comult(i, q, x);  // f_i f_q = sum_x <.., Delta e_x> f_x
              if (cx.is_zero()) continue;
              Scalar s2 = scal * cx;
              for (int b = 0; b < n; ++b)
                for (const auto& [y, cy] : H.prod_terms(a2, b))
                  mult[midx(i * n + a, j * n + b, x * n + y)] += s2 * cy;
            }
          }
        }
      }
    }
  }

  // coalgebra H*^cop (x) H
  std::vector<Scalar> comult(N3, Scalar::zero(F));
  auto cidx = [N](int k, int i, int j) { return (static_cast<size_t>(k) * N + i) * N + j; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          const Scalar& cm = H.mult(i, p, q);  // Delta_{H*} f_i = sum mult(i,p,q) f_p (x) f_q
          if (cm.is_zero()) continue;
          for (const auto& [j1, j2, cj] : H.cop_terms(j))
            comult[cidx(i * n + j, q * n + j1, p * n + j2)] += cm * cj;
        }
    }

  Vec unit = zero_vec(N, F);
  Vec counit = zero_vec(N, F);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      unit[static_cast<size_t>(i) * n + j] = H.counit()[i] * H.unit()[j];
      counit[static_cast<size_t>(i) * n + j] = H.unit()[i] * H.counit()[j];
    }

  std::vector<std::string> labels(N);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      labels[static_cast<size_t>(i) * n + j] = star_label(H.label(i)) + "." + H.label(j);

  FinHopf D0(F, labels, mult, comult, unit, counit);

  // S_D(f_i (x) e_j) = (eps (x) S e_j) (S*^{-1} f_i (x) 1)
  Matrix SD(N, N, F);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec x = zero_vec(N, F), y = zero_vec(N, F);
      for (int u = 0; u < n; ++u)
        for (int k = 0; k < n; ++k) {
          Scalar cx = H.counit()[u] * S.at(k, j);
          if (!cx.is_zero()) x[static_cast<size_t>(u) * n + k] += cx;
          Scalar cy = Sinv.at(i, u) * H.unit()[k];
          if (!cy.is_zero()) y[static_cast<size_t>(u) * n + k] += cy;
        }
      Vec col = D0.product(x, y);
      for (int m = 0; m < N; ++m) SD.at(m, i * n + j) = col[m];
    }

  auto Dp = std::make_shared<const FinHopf>(D0.with_antipode(std::move(SD)));

  Vec rco = zero_vec(N * N, F);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a)
      for (int u = 0; u < n; ++u) {
        Scalar c = H.counit()[a] * H.unit()[u];
        if (c.is_zero()) continue;
        rco[static_cast<size_t>(a * n + i) * N + (i * n + u)] += c;
      }
  RMatrix R(Dp, std::move(rco));

  Matrix embed_alg(N, n, F);
  Matrix embed_dual(N, n, F);
  for (int j = 0; j < n; ++j)
    for (int u = 0; u < n; ++u) {
      embed_alg.at(u * n + j, j) = H.counit()[u];
      embed_dual.at(j * n + u, j) = H.unit()[u];
    }

  if (validate) {
    AxiomReport rep = check_axioms(*Dp);
    if (!rep.all_pass())
      throw axiom_failure("build_double: output fails Hopf axioms:\n" + rep.summary(*Dp));
    CheckResult qt = check_quasitriangular(*Dp, R);
    if (!qt.ok)
      throw axiom_failure("build_double: standard R-matrix fails quasitriangularity: " +
                          qt.witness);
  }
  return DoubleResult{Dp, std::move(R), std::move(embed_alg), std::move(embed_dual)};
}

CheckResult check_quasitriangular(const FinHopf& A, const RMatrix& R) {
  int n = A.dim();
  const Field& F = A.field();
  if (!tensor_inverse(A, 2, R.coef)) return {false, "R is not invertible in A (x) A"};

  size_t n3 = static_cast<size_t>(n) * n * n;
  Vec r13 = zero_vec(static_cast<int>(n3), F);
  Vec r23 = zero_vec(static_cast<int>(n3), F);
  Vec r12 = zero_vec(static_cast<int>(n3), F);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const Scalar& c = R.at(p, q);
      if (c.is_zero()) continue;
      for (int u = 0; u < n; ++u) {
        if (A.unit()[u].is_zero()) continue;
        Scalar cu = c * A.unit()[u];
        r13[(static_cast<size_t>(p) * n + u) * n + q] += cu;
        r23[(static_cast<size_t>(u) * n + p) * n + q] += cu;
        r12[(static_cast<size_t>(p) * n + q) * n + u] += cu;
      }
    }

  Vec lhs1 = zero_vec(static_cast<int>(n3), F);
  Vec lhs2 = zero_vec(static_cast<int>(n3), F);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Scalar& c = R.at(i, j);
      if (c.is_zero()) continue;
      for (const auto& [a, b, cc] : A.cop_terms(i))
        lhs1[(static_cast<size_t>(a) * n + b) * n + j] += c * cc;
      for (const auto& [a, b, cc] : A.cop_terms(j))
        lhs2[(static_cast<size_t>(i) * n + a) * n + b] += c * cc;
    }
  if (!vec_eq(lhs1, tensor_mul(A, 3, r13, r23)))
    return {false, "(Delta (x) id) R != R13 R23"};
  if (!vec_eq(lhs2, tensor_mul(A, 3, r13, r12)))
    return {false, "(id (x) Delta) R != R13 R12"};

  for (int k = 0; k < n; ++k) {
    Vec d = A.coproduct(A.basis(k));
    Vec lhs = tensor_mul(A, 2, R.coef, d);
    Vec rhs = tensor_mul(A, 2, flip_tensor(d, n), R.coef);
    if (!vec_eq(lhs, rhs))
      return {false, "R Delta(a) != Delta^cop(a) R at a = " + A.label(k)};
  }
  return {true, ""};
}

bool check_triangular(const FinHopf& A, const RMatrix& R) {
  Vec prod = tensor_mul(A, 2, flip_tensor(R.coef, A.dim()), R.coef);
  return vec_eq(prod, tensor_unit(A, 2));
}

ExponentResult exponent_element(HopfPtr H, int bound) {
  DoubleResult dr = build_double(H, false);
  const FinHopf& D = *dr.double_algebra;
  int n = H->dim();
  const Matrix& Sinv = H->antipode_inv();
  Vec u = D.zero();
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l) u[static_cast<size_t>(l) * n + j] = Sinv.at(j, l);
  ExponentResult res;
  res.u = u;
  res.u_equals_unit_part = vec_eq(u, D.unit());
  res.order = element_order(D, 1, u, bound);
  return res;
}

CheckReport verify_double_isos(HopfPtr Hp) {
  const FinHopf& H = *Hp;
  int n = H.dim();
  int N = n * n;
  const Field& F = H.field();
  const Matrix& S = H.antipode();
  const Matrix& Sinv = H.antipode_inv();

  auto Hd = std::make_shared<const FinHopf>(dual(H, false));
  auto Hcop = std::make_shared<const FinHopf>(variant(H, VariantKind::cop, false));
  auto Hop = std::make_shared<const FinHopf>(variant(H, VariantKind::op, false));

  DoubleResult DH = build_double(Hp, false);
  DoubleResult DHd = build_double(Hd, false);
  DoubleResult DHcop = build_double(Hcop, false);
  DoubleResult DHop = build_double(Hop, false);

  CheckReport rep;

  // (a) tau (S*^{-1} (x) S): D(H) -> D(H*)^op
  {
    FinHopf target = variant(*DHd.double_algebra, VariantKind::op, false);
    Matrix f(N, N, F);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            Scalar c = S.at(k, j) * Sinv.at(i, l);
            if (!c.is_zero()) f.at(k * n + l, i * n + j) = c;
          }
    CheckItem item{"flip iso D(H) -> D(H*)^op"};
    CheckResult m = is_morphism(f, *DH.double_algebra, target, MorphKind::hopf);
    if (!m.ok) {
      item.pass = false;
      item.witness = m.witness;
    } else if (!invert_matrix(f)) {
      item.pass = false;
      item.witness = "map is not bijective";
    }
    rep.items.push_back(item);

    CheckItem ritem{"R-matrix correspondence: R |-> tau R'"};
    Matrix ff = f.kron(f);
    Vec image = ff.apply(DH.R.coef);
    Vec expected = flip_tensor(DHd.R.coef, N);
    if (!vec_eq(image, expected)) {
      ritem.pass = false;
      ritem.witness = "(f (x) f)(R) != tau R'";
    }
    rep.items.push_back(ritem);
  }

  // (b) S* (x) id: D(H^cop) -> D(H)^cop
  {
    FinHopf target = variant(*DH.double_algebra, VariantKind::cop, false);
    Matrix f(N, N, F);
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        const Scalar& c = S.at(i, l);
        if (c.is_zero()) continue;
        for (int j = 0; j < n; ++j) f.at(l * n + j, i * n + j) = c;
      }
    CheckItem item{"S* (x) id: D(H^cop) -> D(H)^cop"};
    CheckResult m = is_morphism(f, *DHcop.double_algebra, target, MorphKind::hopf);
    if (!m.ok) {
      item.pass = false;
      item.witness = m.witness;
    } else if (!invert_matrix(f)) {
      item.pass = false;
      item.witness = "map is not bijective";
    }
    rep.items.push_back(item);

    CheckItem ritem{"R-matrix correspondence: tau R^{-1} |-> tau R"};
    auto rinv = tensor_inverse(*DHcop.double_algebra, 2, DHcop.R.coef);
    if (!rinv) {
      ritem.pass = false;
      ritem.witness = "standard R-matrix of D(H^cop) not invertible";
    } else {
      Matrix ff = f.kron(f);
      Vec image = ff.apply(flip_tensor(*rinv, N));
      Vec expected = flip_tensor(DH.R.coef, N);
      if (!vec_eq(image, expected)) {
        ritem.pass = false;
        ritem.witness = "(f (x) f)(tau R^{-1}) != tau R";
      }
    }
    rep.items.push_back(ritem);
  }

  // (c) S*^{-1} (x) S: D(H^op) -> D(H^cop), R-matrix invariant
  {
    Matrix f(N, N, F);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            Scalar c = Sinv.at(i, l) * S.at(k, j);
            if (!c.is_zero()) f.at(l * n + k, i * n + j) = c;
          }
    CheckItem item{"S*^{-1} (x) S: D(H^op) -> D(H^cop)"};
    CheckResult m = is_morphism(f, *DHop.double_algebra, *DHcop.double_algebra, MorphKind::hopf);
    if (!m.ok) {
      item.pass = false;
      item.witness = m.witness;
    } else if (!invert_matrix(f)) {
      item.pass = false;
      item.witness = "map is not bijective";
    }
    rep.items.push_back(item);

    CheckItem ritem{"R-matrix invariance"};
    Matrix ff = f.kron(f);
    Vec image = ff.apply(DHop.R.coef);
    if (!vec_eq(image, DHcop.R.coef)) {
      ritem.pass = false;
      ritem.witness = "(f (x) f)(R) != R";
    }
    rep.items.push_back(ritem);
  }

  return rep;
}

}  // namespace hopf
