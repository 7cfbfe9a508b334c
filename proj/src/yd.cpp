#include "hopf/yd.hpp"

#include <sstream>

namespace hopf {

YDModule::YDModule(HopfPtr h, int m, std::vector<std::string> lbls)
    : host(std::move(h)), dim(m), labels(std::move(lbls)) {
  if (dim <= 0) throw dimension_mismatch("YD module needs positive dimension");
  if (labels.empty())
    for (int i = 0; i < dim; ++i) labels.push_back("v" + std::to_string(i));
  if (static_cast<int>(labels.size()) != dim) throw dimension_mismatch("label count");
  const Field& f = host->field();
  act_ = zero_vec(host->dim() * dim * dim, f);
  coact_ = zero_vec(dim * dim * host->dim(), f);
}

Matrix YDModule::action_matrix(int a) const {
  Matrix m(dim, dim, host->field());
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m.at(j, i) = act(j, a, i);
  return m;
}

Vec YDAlgebra::product(const Vec& x, const Vec& y) const {
  int m = mod.dim;
  Vec r = zero_vec(m, mod.host->field());
  for (int i = 0; i < m; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < m; ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (int k = 0; k < m; ++k) {
        const Scalar& c = mult(k, i, j);
        if (!c.is_zero()) r[k] += xy * c;
      }
    }
  }
  return r;
}

namespace {

std::string pair_label(const std::string& a, const std::string& b) { return a + "." + b; }

}  // namespace

// ----------------------------------------------------------------- checks

CheckResult check_yd(const YDModule& M) {
  const FinHopf& H = *M.host;
  int n = H.dim(), m = M.dim;
  const Field& f = H.field();
  std::ostringstream w;

  // 1 . v = v
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Scalar s = Scalar::zero(f);
      for (int a = 0; a < n; ++a)
        if (!H.unit()[a].is_zero()) s += H.unit()[a] * M.act(j, a, i);
      Scalar expect = i == j ? Scalar::one(f) : Scalar::zero(f);
      if (s != expect) {
        w << "unit action fails at " << M.labels[i];
        return {false, w.str()};
      }
    }
  // (ab) . v = a . (b . v)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          Scalar lhs = Scalar::zero(f);
          for (const auto& [k, c] : H.prod_terms(a, b)) lhs += c * M.act(j, k, i);
          Scalar rhs = Scalar::zero(f);
          for (int t = 0; t < m; ++t) {
            const Scalar& bt = M.act(t, b, i);
            if (!bt.is_zero()) rhs += bt * M.act(j, a, t);
          }
          if (lhs != rhs) {
            w << "action associativity fails at (" << H.label(a) << ", " << H.label(b) << ", "
              << M.labels[i] << ")";
            return {false, w.str()};
          }
        }
  // (id (x) eps) chi = id
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Scalar s = Scalar::zero(f);
      for (int b = 0; b < n; ++b)
        if (!M.coact(j, b, i).is_zero()) s += M.coact(j, b, i) * H.counit()[b];
      Scalar expect = i == j ? Scalar::one(f) : Scalar::zero(f);
      if (s != expect) {
        w << "comodule counit fails at " << M.labels[i];
        return {false, w.str()};
      }
    }
  // (chi (x) id) chi = (id (x) Delta) chi
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int b1 = 0; b1 < n; ++b1)
        for (int b2 = 0; b2 < n; ++b2) {
          Scalar lhs = Scalar::zero(f);
          for (int t = 0; t < m; ++t) {
            const Scalar& c = M.coact(t, b2, i);
            if (!c.is_zero()) lhs += c * M.coact(j, b1, t);
          }
          Scalar rhs = Scalar::zero(f);
          for (int b = 0; b < n; ++b) {
            const Scalar& c = M.coact(j, b, i);
            if (!c.is_zero()) rhs += c * H.comult(b1, b2, b);
          }
          if (lhs != rhs) {
            w << "comodule coassociativity fails at " << M.labels[i];
            return {false, w.str()};
          }
        }
  // compatibility: sum h1.m0 (x) h2 m1 = sum (h2.m)0 (x) (h2.m)1 h1
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < m; ++i) {
      Vec lhs = zero_vec(m * n, f), rhs = zero_vec(m * n, f);
      for (const auto& [a1, a2, c] : H.cop_terms(a)) {
        for (int j0 = 0; j0 < m; ++j0)
          for (int b = 0; b < n; ++b) {
            const Scalar& cb = M.coact(j0, b, i);
            if (cb.is_zero()) continue;
            for (int j = 0; j < m; ++j) {
              const Scalar& ca = M.act(j, a1, j0);
              if (ca.is_zero()) continue;
              Scalar base = c * cb * ca;
              for (const auto& [y, cy] : H.prod_terms(a2, b))
                lhs[static_cast<size_t>(j) * n + y] += base * cy;
            }
          }
        for (int j0 = 0; j0 < m; ++j0) {
          const Scalar& ca = M.act(j0, a2, i);
          if (ca.is_zero()) continue;
          for (int j = 0; j < m; ++j)
            for (int b = 0; b < n; ++b) {
              const Scalar& cb = M.coact(j, b, j0);
              if (cb.is_zero()) continue;
              Scalar base = c * ca * cb;
              for (const auto& [y, cy] : H.prod_terms(b, a1))
                rhs[static_cast<size_t>(j) * n + y] += base * cy;
            }
        }
      }
      if (!vec_eq(lhs, rhs)) {
        w << "YD compatibility fails at (" << H.label(a) << ", " << M.labels[i]
          << "): lhs=" << vec_str(lhs) << " rhs=" << vec_str(rhs);
        return {false, w.str()};
      }
    }
  return {true, ""};
}

CheckResult check_yd_algebra(const YDAlgebra& A) {
  CheckResult base = check_yd(A.mod);
  if (!base.ok) return base;
  const FinHopf& H = *A.mod.host;
  int n = H.dim(), m = A.mod.dim;
  const Field& f = H.field();
  std::ostringstream w;

  // associativity and unit
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        Vec lhs = zero_vec(m, f), rhs = zero_vec(m, f);
        for (int t = 0; t < m; ++t) {
          const Scalar& c1 = A.mult(t, i, j);
          if (!c1.is_zero())
            for (int u = 0; u < m; ++u) lhs[u] += c1 * A.mult(u, t, k);
          const Scalar& c2 = A.mult(t, j, k);
          if (!c2.is_zero())
            for (int u = 0; u < m; ++u) rhs[u] += c2 * A.mult(u, i, t);
        }
        if (!vec_eq(lhs, rhs))
          return {false, "product associativity fails at (" + A.mod.labels[i] + ", " +
                             A.mod.labels[j] + ", " + A.mod.labels[k] + ")"};
      }
  for (int i = 0; i < m; ++i) {
    Vec ei = zero_vec(m, f);
    ei[i] = Scalar::one(f);
    if (!vec_eq(A.product(A.unit, ei), ei) || !vec_eq(A.product(ei, A.unit), ei))
      return {false, "unit fails at " + A.mod.labels[i]};
  }
  // module algebra: h.(xy) = sum (h1.x)(h2.y), h.1 = eps(h) 1
  for (int a = 0; a < n; ++a) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Vec lhs = zero_vec(m, f);
        for (int t = 0; t < m; ++t) {
          const Scalar& c = A.mult(t, i, j);
          if (c.is_zero()) continue;
          for (int u = 0; u < m; ++u) lhs[u] += c * A.mod.act(u, a, t);
        }
        Vec rhs = zero_vec(m, f);
        for (const auto& [a1, a2, c] : H.cop_terms(a)) {
          Vec xi = zero_vec(m, f), yj = zero_vec(m, f);
          for (int u = 0; u < m; ++u) {
            xi[u] = A.mod.act(u, a1, i);
            yj[u] = A.mod.act(u, a2, j);
          }
          Vec prod = A.product(xi, yj);
          for (int u = 0; u < m; ++u) rhs[u] += c * prod[u];
        }
        if (!vec_eq(lhs, rhs)) {
          w << "module-algebra law fails at (" << H.label(a) << ", " << A.mod.labels[i] << ", "
            << A.mod.labels[j] << ")";
          return {false, w.str()};
        }
      }
    Vec hunit = zero_vec(m, f);
    for (int t = 0; t < m; ++t) {
      if (A.unit[t].is_zero()) continue;
      for (int u = 0; u < m; ++u) hunit[u] += A.unit[t] * A.mod.act(u, a, t);
    }
    Vec target = A.unit;
    for (int u = 0; u < m; ++u) target[u] = target[u] * H.counit()[a];
    if (!vec_eq(hunit, target)) return {false, "h.1 != eps(h) 1 at " + H.label(a)};
  }
  // H^op-comodule algebra: chi(xy) = sum x0 y0 (x) y1 x1, chi(1) = 1 (x) 1
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Vec lhs = zero_vec(m * n, f), rhs = zero_vec(m * n, f);
      for (int t = 0; t < m; ++t) {
        const Scalar& c = A.mult(t, i, j);
        if (c.is_zero()) continue;
        for (int k = 0; k < m; ++k)
          for (int b = 0; b < n; ++b) {
            const Scalar& cc = A.mod.coact(k, b, t);
            if (!cc.is_zero()) lhs[static_cast<size_t>(k) * n + b] += c * cc;
          }
      }
      for (int i0 = 0; i0 < m; ++i0)
        for (int bi = 0; bi < n; ++bi) {
          const Scalar& ci = A.mod.coact(i0, bi, i);
          if (ci.is_zero()) continue;
          for (int j0 = 0; j0 < m; ++j0)
            for (int bj = 0; bj < n; ++bj) {
              const Scalar& cj = A.mod.coact(j0, bj, j);
              if (cj.is_zero()) continue;
              Scalar base = ci * cj;
              for (int k = 0; k < m; ++k) {
                const Scalar& cm = A.mult(k, i0, j0);
                if (cm.is_zero()) continue;
                for (const auto& [y, cy] : H.prod_terms(bj, bi))
                  rhs[static_cast<size_t>(k) * n + y] += base * cm * cy;
              }
            }
        }
      if (!vec_eq(lhs, rhs)) {
        w << "H^op-comodule-algebra law fails at (" << A.mod.labels[i] << ", " << A.mod.labels[j]
          << "): chi(xy)=" << vec_str(lhs) << " vs " << vec_str(rhs);
        return {false, w.str()};
      }
    }
  {
    Vec lhs = zero_vec(m * n, f);
    for (int t = 0; t < m; ++t) {
      if (A.unit[t].is_zero()) continue;
      for (int k = 0; k < m; ++k)
        for (int b = 0; b < n; ++b) {
          const Scalar& cc = A.mod.coact(k, b, t);
          if (!cc.is_zero()) lhs[static_cast<size_t>(k) * n + b] += A.unit[t] * cc;
        }
    }
    Vec rhs = zero_vec(m * n, f);
    for (int k = 0; k < m; ++k)
      for (int b = 0; b < n; ++b) rhs[static_cast<size_t>(k) * n + b] = A.unit[k] * H.unit()[b];
    if (!vec_eq(lhs, rhs)) return {false, "chi(1) != 1 (x) 1"};
  }
  return {true, ""};
}

CheckResult yd_morphism(const Matrix& fm, const YDModule& M, const YDModule& N) {
  if (fm.rows() != N.dim || fm.cols() != M.dim)
    throw dimension_mismatch("yd_morphism: map must be dim(N) x dim(M)");
  const FinHopf& H = *M.host;
  int n = H.dim();
  const Field& f = H.field();
  for (int a = 0; a < n; ++a) {
    Matrix lhs = fm * M.action_matrix(a);
    Matrix rhs = N.action_matrix(a) * fm;
    if (!(lhs == rhs)) return {false, "not H-linear at " + H.label(a)};
  }
  for (int i = 0; i < M.dim; ++i) {
    Vec lhs = zero_vec(N.dim * n, f), rhs = zero_vec(N.dim * n, f);
    for (int j = 0; j < N.dim; ++j)
      for (int b = 0; b < n; ++b) {
        Scalar s = Scalar::zero(f);
        for (int t = 0; t < N.dim; ++t)
          if (!fm.at(t, i).is_zero()) s += fm.at(t, i) * N.coact(j, b, t);
        lhs[static_cast<size_t>(j) * n + b] = s;
        Scalar s2 = Scalar::zero(f);
        for (int i0 = 0; i0 < M.dim; ++i0)
          if (!M.coact(i0, b, i).is_zero()) s2 += M.coact(i0, b, i) * fm.at(j, i0);
        rhs[static_cast<size_t>(j) * n + b] = s2;
      }
    if (!vec_eq(lhs, rhs)) return {false, "not H-colinear at " + M.labels[i]};
  }
  return {true, ""};
}

CheckResult algebra_map(const Matrix& fm, const YDAlgebra& A, const YDAlgebra& B) {
  int m = A.mod.dim;
  const Field& f = A.mod.host->field();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Vec prod = zero_vec(m, f);
      for (int k = 0; k < m; ++k) prod[k] = A.mult(k, i, j);
      Vec lhs = fm.apply(prod);
      Vec rhs = B.product(fm.column(i), fm.column(j));
      if (!vec_eq(lhs, rhs))
        return {false,
                "f(xy) != f(x) f(y) at (" + A.mod.labels[i] + ", " + A.mod.labels[j] + ")"};
    }
  if (!vec_eq(fm.apply(A.unit), B.unit)) return {false, "f(1) != 1"};
  return {true, ""};
}

// ------------------------------------------------------------ constructors

YDModule trivial_module(HopfPtr h) {
  YDModule M(h, 1, {"k"});
  int n = h->dim();
  for (int a = 0; a < n; ++a) M.act(0, a, 0) = h->counit()[a];
  for (int b = 0; b < n; ++b) M.coact(0, b, 0) = h->unit()[b];
  return M;
}

YDModule induce_yd_from_comodule(HopfPtr h, int dim, std::vector<std::string> labels,
                                 std::vector<Scalar> coact, const Functional& r, bool validate) {
  if (r.arity != 2) throw dimension_mismatch("R-form must have arity 2");
  if (validate) {
    RFormReport rep = check_rform(*h, r, false);
    if (!rep.all_pass())
      throw structure_invalid("induce_yd_from_comodule: r fails the R-form axioms:\n" +
                              rep.summary());
  }
  YDModule M(h, dim, std::move(labels));
  M.coact_ = std::move(coact);
  int n = h->dim();
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        Scalar s = Scalar::zero(h->field());
        for (int b = 0; b < n; ++b) {
          const Scalar& c = M.coact(j, b, i);
          if (!c.is_zero()) s += c * r.at(a, b);
        }
        M.act(j, a, i) = s;
      }
  if (validate) {
    CheckResult chk = check_yd(M);
    if (!chk.ok) throw structure_invalid("induce_yd_from_comodule: output is not YD: " + chk.witness);
  }
  return M;
}

YDModule induce_yd_from_module(HopfPtr h, int dim, std::vector<std::string> labels,
                               std::vector<Scalar> act, const RMatrix& R, bool validate) {
  if (validate) {
    CheckResult qt = check_quasitriangular(*h, R);
    if (!qt.ok)
      throw structure_invalid("induce_yd_from_module: R fails quasitriangularity: " + qt.witness);
  }
  YDModule M(h, dim, std::move(labels));
  M.act_ = std::move(act);
  int n = h->dim();
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int b = 0; b < n; ++b) {
        Scalar s = Scalar::zero(h->field());
        for (int q = 0; q < n; ++q) {
          const Scalar& c = R.at(b, q);
          if (!c.is_zero()) s += c * M.act(j, q, i);
        }
        M.coact(j, b, i) = s;
      }
  if (validate) {
    CheckResult chk = check_yd(M);
    if (!chk.ok) throw structure_invalid("induce_yd_from_module: output is not YD: " + chk.witness);
  }
  return M;
}

YDModule yd_tensor(const YDModule& M, const YDModule& N) {
  if (!same_host(M.host, N.host)) throw host_mismatch("yd_tensor");
  const FinHopf& H = *M.host;
  int n = H.dim(), mM = M.dim, mN = N.dim;
  std::vector<std::string> labels;
  for (int i = 0; i < mM; ++i)
    for (int j = 0; j < mN; ++j) labels.push_back(pair_label(M.labels[i], N.labels[j]));
  YDModule T(M.host, mM * mN, std::move(labels));
  for (int a = 0; a < n; ++a)
    for (const auto& [a1, a2, c] : H.cop_terms(a))
      for (int i = 0; i < mM; ++i)
        for (int ip = 0; ip < mM; ++ip) {
          const Scalar& cm = M.act(ip, a1, i);
          if (cm.is_zero()) continue;
          for (int j = 0; j < mN; ++j)
            for (int jp = 0; jp < mN; ++jp) {
              const Scalar& cn = N.act(jp, a2, j);
              if (cn.is_zero()) continue;
              T.act(ip * mN + jp, a, i * mN + j) += c * cm * cn;
            }
        }
  for (int i = 0; i < mM; ++i)
    for (int ip = 0; ip < mM; ++ip)
      for (int bM = 0; bM < n; ++bM) {
        const Scalar& cm = M.coact(ip, bM, i);
        if (cm.is_zero()) continue;
        for (int j = 0; j < mN; ++j)
          for (int jp = 0; jp < mN; ++jp)
            for (int bN = 0; bN < n; ++bN) {
              const Scalar& cn = N.coact(jp, bN, j);
              if (cn.is_zero()) continue;
              Scalar base = cm * cn;
              for (const auto& [y, cy] : H.prod_terms(bN, bM))
                T.coact(ip * mN + jp, y, i * mN + j) += base * cy;
            }
      }
  return T;
}

Matrix braiding(const YDModule& M, const YDModule& N) {
  if (!same_host(M.host, N.host)) throw host_mismatch("braiding");
  const FinHopf& H = *M.host;
  int n = H.dim(), mM = M.dim, mN = N.dim;
  Matrix phi(mN * mM, mM * mN, H.field());
  for (int i = 0; i < mM; ++i)
    for (int j = 0; j < mN; ++j)
      for (int jp = 0; jp < mN; ++jp)
        for (int b = 0; b < n; ++b) {
          const Scalar& cn = N.coact(jp, b, j);
          if (cn.is_zero()) continue;
          for (int ip = 0; ip < mM; ++ip) {
            const Scalar& cm = M.act(ip, b, i);
            if (!cm.is_zero()) phi.at(jp * mM + ip, i * mN + j) += cn * cm;
          }
        }
  return phi;
}

Matrix tau_matrix(int dimM, int dimN, const Field& f) {
  Matrix t(dimM * dimN, dimM * dimN, f);
  for (int i = 0; i < dimM; ++i)
    for (int j = 0; j < dimN; ++j) t.at(j * dimM + i, i * dimN + j) = Scalar::one(f);
  return t;
}

namespace {

Matrix kron_id_left(int id_dim, const Matrix& A, const Field& f) {
  return Matrix::identity(id_dim, f).kron(A);
}

Matrix kron_id_right(const Matrix& A, int id_dim, const Field& f) {
  return A.kron(Matrix::identity(id_dim, f));
}

}  // namespace

bool yang_baxter_holds(const YDModule& M, const YDModule& N, const YDModule& P) {
  const Field& f = M.host->field();
  Matrix pMN = braiding(M, N), pMP = braiding(M, P), pNP = braiding(N, P);
  Matrix lhs = kron_id_right(pNP, M.dim, f) * kron_id_left(N.dim, pMP, f) *
               kron_id_right(pMN, P.dim, f);
  Matrix rhs = kron_id_left(P.dim, pMN, f) * kron_id_right(pMP, N.dim, f) *
               kron_id_left(M.dim, pNP, f);
  return lhs == rhs;
}

bool hexagons_hold(const YDModule& M, const YDModule& N, const YDModule& P) {
  const Field& f = M.host->field();
  YDModule MN = yd_tensor(M, N);
  YDModule NP = yd_tensor(N, P);
  // phi_{M(x)N, P} = (phi_MP (x) id_N)(id_M (x) phi_NP)
  Matrix lhs1 = braiding(MN, P);
  Matrix rhs1 = kron_id_right(braiding(M, P), N.dim, f) * kron_id_left(M.dim, braiding(N, P), f);
  if (!(lhs1 == rhs1)) return false;
  // phi_{M, N(x)P} = (id_N (x) phi_MP)(phi_MN (x) id_P)
  Matrix lhs2 = braiding(M, NP);
  Matrix rhs2 = kron_id_left(N.dim, braiding(M, P), f) * kron_id_right(braiding(M, N), P.dim, f);
  return lhs2 == rhs2;
}

YDAlgebra smash(const YDAlgebra& A, const YDAlgebra& B) {
  if (!same_host(A.mod.host, B.mod.host)) throw host_mismatch("smash");
  const FinHopf& H = *A.mod.host;
  int n = H.dim(), mA = A.mod.dim, mB = B.mod.dim, m = mA * mB;
  const Field& f = H.field();
  YDAlgebra S;
  S.mod = yd_tensor(A.mod, B.mod);
  S.mult_ = zero_vec(m * m * m, f);
  // (a # c)(b # d) = sum a b0 # (b1 . c) d
  for (int j = 0; j < mA; ++j)
    for (int j0 = 0; j0 < mA; ++j0)
      for (int beta = 0; beta < n; ++beta) {
        const Scalar& cb = A.mod.coact(j0, beta, j);
        if (cb.is_zero()) continue;
        for (int c = 0; c < mB; ++c)
          for (int c0 = 0; c0 < mB; ++c0) {
            const Scalar& ca = B.mod.act(c0, beta, c);
            if (ca.is_zero()) continue;
            Scalar base = cb * ca;
            for (int i = 0; i < mA; ++i)
              for (int k = 0; k < mA; ++k) {
                const Scalar& cm = A.mult(k, i, j0);
                if (cm.is_zero()) continue;
                Scalar base2 = base * cm;
                for (int d = 0; d < mB; ++d)
                  for (int e = 0; e < mB; ++e) {
                    const Scalar& cmB = B.mult(e, c0, d);
                    if (!cmB.is_zero())
                      S.mult(k * mB + e, i * mB + c, j * mB + d) += base2 * cmB;
                  }
              }
          }
      }
  S.unit = zero_vec(m, f);
  for (int i = 0; i < mA; ++i)
    for (int j = 0; j < mB; ++j) S.unit[static_cast<size_t>(i) * mB + j] = A.unit[i] * B.unit[j];
  return S;
}

YDAlgebra yd_opposite(const YDAlgebra& A) {
  const FinHopf& H = *A.mod.host;
  int n = H.dim(), m = A.mod.dim;
  YDAlgebra O;
  O.mod = A.mod;
  O.unit = A.unit;
  O.mult_ = zero_vec(m * m * m, H.field());
  // x .bar y = m(phi(x (x) y)) = sum y0 (y1 . x)
  for (int j = 0; j < m; ++j)
    for (int j0 = 0; j0 < m; ++j0)
      for (int b = 0; b < n; ++b) {
        const Scalar& cb = A.mod.coact(j0, b, j);
        if (cb.is_zero()) continue;
        for (int i = 0; i < m; ++i)
          for (int i0 = 0; i0 < m; ++i0) {
            const Scalar& ca = A.mod.act(i0, b, i);
            if (ca.is_zero()) continue;
            Scalar base = cb * ca;
            for (int k = 0; k < m; ++k) {
              const Scalar& cm = A.mult(k, j0, i0);
              if (!cm.is_zero()) O.mult(k, i, j) += base * cm;
            }
          }
      }
  return O;
}

YDAlgebra end_algebra(const YDModule& P, EndSide side) {
  const FinHopf& H = *P.host;
  int n = H.dim(), m = P.dim, d = m * m;
  const Field& f = H.field();
  const Matrix& S = H.antipode();
  const Matrix& Sinv = H.antipode_inv();
  std::vector<std::string> labels;
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l)
      labels.push_back("E" + std::to_string(k) + "." + std::to_string(l));
  YDAlgebra E;
  E.mod = YDModule(P.host, d, std::move(labels));
  E.mult_ = zero_vec(d * d * d, f);
  E.unit = zero_vec(d, f);
  for (int k = 0; k < m; ++k) E.unit[static_cast<size_t>(k) * m + k] = Scalar::one(f);
  if (side == EndSide::standard) {
    // E_kl o E_pq = delta_{lp} E_kq
    for (int k = 0; k < m; ++k)
      for (int l = 0; l < m; ++l)
        for (int q = 0; q < m; ++q)
          E.mult(k * m + q, k * m + l, l * m + q) = Scalar::one(f);
  } else {
    for (int k = 0; k < m; ++k)
      for (int l = 0; l < m; ++l)
        for (int p = 0; p < m; ++p)
          E.mult(p * m + l, k * m + l, p * m + k) = Scalar::one(f);
  }
  std::vector<Matrix> act_mats;
  for (int a = 0; a < n; ++a) act_mats.push_back(P.action_matrix(a));
  // actions
  for (int a = 0; a < n; ++a)
    for (const auto& [a1, a2, c] : H.cop_terms(a))
      for (int s = 0; s < n; ++s) {
        Scalar sc = side == EndSide::standard ? S.at(s, a2) : Sinv.at(s, a1);
        if (sc.is_zero()) continue;
        const Matrix& left = side == EndSide::standard ? act_mats[a1] : act_mats[a2];
        const Matrix& right = act_mats[s];
        Scalar base = c * sc;
        for (int p = 0; p < m; ++p)
          for (int q = 0; q < m; ++q)
            for (int k = 0; k < m; ++k) {
              const Scalar& lk = left.at(k, p);
              if (lk.is_zero()) continue;
              for (int l = 0; l < m; ++l) {
                const Scalar& rl = right.at(q, l);
                if (!rl.is_zero()) E.mod.act(k * m + l, a, p * m + q) += base * lk * rl;
              }
            }
      }
  // coactions
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      for (int l = 0; l < m; ++l)
        for (int b = 0; b < n; ++b) {
          const Scalar& cl = P.coact(q, b, l);
          if (cl.is_zero()) continue;
          for (int p0 = 0; p0 < m; ++p0)
            for (int b1 = 0; b1 < n; ++b1) {
              const Scalar& cp = P.coact(p0, b1, p);
              if (cp.is_zero()) continue;
              Scalar base = cl * cp;
              for (int s = 0; s < n; ++s) {
                Scalar sc = side == EndSide::standard ? Sinv.at(s, b) : S.at(s, b);
                if (sc.is_zero()) continue;
                if (side == EndSide::standard) {
                  for (const auto& [y, cy] : H.prod_terms(s, b1))
                    E.mod.coact(p0 * m + l, y, p * m + q) += base * sc * cy;
                } else {
                  for (const auto& [y, cy] : H.prod_terms(b1, s))
                    E.mod.coact(p0 * m + l, y, p * m + q) += base * sc * cy;
                }
              }
            }
        }
  return E;
}

FGMaps map_FG(const YDAlgebra& A, bool certify) {
  const FinHopf& H = *A.mod.host;
  int n = H.dim(), m = A.mod.dim, d = m * m;
  const Field& f = H.field();
  Matrix F(d, d, f), G(d, d, f);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      // F(v_i # v_j bar): v_c |-> sum v_i . c0 . (c1 . v_j)
      for (int c = 0; c < m; ++c) {
        Vec out = zero_vec(m, f);
        for (int c0 = 0; c0 < m; ++c0)
          for (int b = 0; b < n; ++b) {
            const Scalar& cc = A.mod.coact(c0, b, c);
            if (cc.is_zero()) continue;
            Vec w = zero_vec(m, f);
            for (int q = 0; q < m; ++q) w[q] = A.mod.act(q, b, j);
            Vec ec0 = zero_vec(m, f);
            ec0[c0] = Scalar::one(f);
            Vec u = A.product(ec0, w);
            Vec ei = zero_vec(m, f);
            ei[i] = Scalar::one(f);
            Vec res = A.product(ei, u);
            for (int k = 0; k < m; ++k) out[k] += cc * res[k];
          }
        for (int k = 0; k < m; ++k) F.at(k * m + c, i * m + j) = out[k];
      }
      // G(v_i bar # v_j): v_c |-> sum (v_i)0 . ((v_i)1 . v_c) . v_j
      for (int c = 0; c < m; ++c) {
        Vec out = zero_vec(m, f);
        for (int i0 = 0; i0 < m; ++i0)
          for (int b = 0; b < n; ++b) {
            const Scalar& ci = A.mod.coact(i0, b, i);
            if (ci.is_zero()) continue;
            Vec w = zero_vec(m, f);
            for (int q = 0; q < m; ++q) w[q] = A.mod.act(q, b, c);
            Vec ei0 = zero_vec(m, f);
            ei0[i0] = Scalar::one(f);
            Vec u = A.product(ei0, w);
            Vec ej = zero_vec(m, f);
            ej[j] = Scalar::one(f);
            Vec res = A.product(u, ej);
            for (int k = 0; k < m; ++k) out[k] += ci * res[k];
          }
        for (int k = 0; k < m; ++k) G.at(k * m + c, i * m + j) = out[k];
      }
    }
  FGMaps maps{F, G, {}, {}, {}, {}};
  if (certify) {
    YDAlgebra Abar = yd_opposite(A);
    YDAlgebra AAbar = smash(A, Abar);
    YDAlgebra AbarA = smash(Abar, A);
    YDAlgebra EndA = end_algebra(A.mod, EndSide::standard);
    YDAlgebra EndAop = end_algebra(A.mod, EndSide::op);
    maps.F_algebra = algebra_map(F, AAbar, EndA);
    maps.G_algebra = algebra_map(G, AbarA, EndAop);
    maps.F_yd = yd_morphism(F, AAbar.mod, EndA.mod);
    maps.G_yd = yd_morphism(G, AbarA.mod, EndAop.mod);
  }
  return maps;
}

bool is_azumaya(const YDAlgebra& A) {
  if (A.mod.dim < 1) return false;
  FGMaps maps = map_FG(A, false);
  return invert_matrix(maps.F).has_value() && invert_matrix(maps.G).has_value();
}

bool has_unit_summand(const YDAlgebra& A) {
  const FinHopf& H = *A.mod.host;
  int n = H.dim(), m = A.mod.dim;
  const Field& f = H.field();
  // unknown pi: A -> k, YD-morphism with pi(1) = 1
  int rows = n * m + n * m + 1;
  Matrix C(rows, m, f);
  Matrix b(rows, 1, f);
  int r = 0;
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < m; ++i, ++r) {
      for (int j = 0; j < m; ++j) C.at(r, j) = A.mod.act(j, a, i);
      C.at(r, i) -= H.counit()[a];
    }
  for (int bb = 0; bb < n; ++bb)
    for (int i = 0; i < m; ++i, ++r) {
      for (int j = 0; j < m; ++j) C.at(r, j) = A.mod.coact(j, bb, i);
      C.at(r, i) -= H.unit()[bb];
    }
  for (int j = 0; j < m; ++j) C.at(r, j) = A.unit[j];
  b.at(r, 0) = Scalar::one(f);
  return solve_linear(C, b).has_value();
}

YDModule dualize_yd(const YDModule& M) {
  auto hd = std::make_shared<const FinHopf>(dual(*M.host, false));
  YDModule D(hd, M.dim, M.labels);
  int n = M.host->dim();
  for (int i = 0; i < M.dim; ++i)
    for (int j = 0; j < M.dim; ++j)
      for (int a = 0; a < n; ++a) {
        D.act(j, a, i) = M.coact(j, a, i);
        D.coact(j, a, i) = M.act(j, a, i);
      }
  return D;
}

YDAlgebra dualize_alg(const YDAlgebra& A) {
  YDAlgebra D;
  D.mod = dualize_yd(A.mod);
  D.unit = A.unit;
  int m = A.mod.dim;
  D.mult_ = zero_vec(m * m * m, A.mod.host->field());
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) D.mult(k, i, j) = A.mult(k, j, i);
  return D;
}

bool duality_braiding_compatible(const YDModule& M, const YDModule& N) {
  const Field& f = M.host->field();
  Matrix phi = braiding(M, N);
  Matrix psi = braiding(dualize_yd(N), dualize_yd(M));
  Matrix lhs = phi * tau_matrix(N.dim, M.dim, f);
  Matrix rhs = tau_matrix(M.dim, N.dim, f) * psi;
  return lhs == rhs;
}

TwistedAlgebra twist_alg(const YDAlgebra& A, const Functional& r, const Functional& sigma) {
  const FinHopf& H = *A.mod.host;
  int n = H.dim(), m = A.mod.dim;
  const Field& f = H.field();
  if (!same_structure(*r.host, H) || !same_structure(*sigma.host, H))
    throw host_mismatch("twist_alg: r or sigma lives on a different algebra");
  // the functor is defined on the comodule side: the action must be induced
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Scalar s = Scalar::zero(f);
        for (int b = 0; b < n; ++b) {
          const Scalar& c = A.mod.coact(j, b, i);
          if (!c.is_zero()) s += c * r.at(a, b);
        }
        if (s != A.mod.act(j, a, i))
          throw precondition_violated(
              "twist_alg: the action of A is not induced from its coaction by r");
      }
  auto nu = conv_inverse(sigma);
  if (!nu) throw not_invertible("twist_alg: sigma is not convolution invertible");
  auto Htw = std::make_shared<const FinHopf>(cocycle_twist(H, sigma));
  Functional r_sigma = twist_rform(r, sigma, Htw);

  YDAlgebra T;
  // coaction tensor is unchanged, read over the twisted host
  std::vector<Scalar> coact = A.mod.coact_;
  // product a.b = sum a0 b0 sigma^{-1}(b1 (x) a1)
  std::vector<Scalar> mult = zero_vec(m * m * m, f);
  auto midx = [m](int i, int j, int k) { return (static_cast<size_t>(i) * m + j) * m + k; };
  for (int i = 0; i < m; ++i)
    for (int i0 = 0; i0 < m; ++i0)
      for (int bi = 0; bi < n; ++bi) {
        const Scalar& ci = A.mod.coact(i0, bi, i);
        if (ci.is_zero()) continue;
        for (int j = 0; j < m; ++j)
          for (int j0 = 0; j0 < m; ++j0)
            for (int bj = 0; bj < n; ++bj) {
              const Scalar& cj = A.mod.coact(j0, bj, j);
              if (cj.is_zero()) continue;
              Scalar base = ci * cj * nu->at(bj, bi);
              if (base.is_zero()) continue;
              for (int k = 0; k < m; ++k) {
                const Scalar& cm = A.mult(k, i0, j0);
                if (!cm.is_zero()) mult[midx(i, j, k)] += base * cm;
              }
            }
      }
  YDModule modT = induce_yd_from_comodule(Htw, m, A.mod.labels, std::move(coact), r_sigma, false);
  T.mod = std::move(modT);
  T.mult_ = std::move(mult);
  T.unit = A.unit;
  CheckResult chk = check_yd_algebra(T);
  if (!chk.ok) throw axiom_failure("twist_alg: output fails the YD-algebra axioms: " + chk.witness);
  return TwistedAlgebra{Htw, std::move(T), std::move(r_sigma)};
}

std::vector<Matrix> yd_hom_basis(const YDModule& M, const YDModule& N) {
  if (!same_host(M.host, N.host)) throw host_mismatch("yd_hom_basis");
  const FinHopf& H = *M.host;
  int n = H.dim();
  const Field& f = H.field();
  int unknowns = N.dim * M.dim;  // f[j][i] at j*M.dim + i
  int rows = n * M.dim * N.dim + M.dim * N.dim * n;
  Matrix C(rows, unknowns, f);
  int r = 0;
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < M.dim; ++i)
      for (int j = 0; j < N.dim; ++j, ++r) {
        // sum_i0 act_M(i0,a,i) f[j][i0] - sum_j0 act_N(j,a,j0) f[j0][i] = 0
        for (int i0 = 0; i0 < M.dim; ++i0) C.at(r, j * M.dim + i0) += M.act(i0, a, i);
        for (int j0 = 0; j0 < N.dim; ++j0) C.at(r, j0 * M.dim + i) -= N.act(j, a, j0);
      }
  for (int i = 0; i < M.dim; ++i)
    for (int j = 0; j < N.dim; ++j)
      for (int b = 0; b < n; ++b, ++r) {
        for (int j0 = 0; j0 < N.dim; ++j0) C.at(r, j0 * M.dim + i) += N.coact(j, b, j0);
        for (int i0 = 0; i0 < M.dim; ++i0) C.at(r, j * M.dim + i0) -= M.coact(i0, b, i);
      }
  std::vector<Matrix> basis;
  for (const Vec& v : nullspace_basis(C)) {
    Matrix fm(N.dim, M.dim, f);
    for (int j = 0; j < N.dim; ++j)
      for (int i = 0; i < M.dim; ++i) fm.at(j, i) = v[static_cast<size_t>(j) * M.dim + i];
    basis.push_back(std::move(fm));
  }
  return basis;
}

}  // namespace hopf
